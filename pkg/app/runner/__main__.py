import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from app.infra.cli.common import EXIT_INPUT, run_command
from app.runner.setup import COMMANDS, setup


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args, config = setup(argv)
    except ValidationError as error:
        print(error, file=sys.stderr)
        return EXIT_INPUT
    return run_command(COMMANDS[args.command], args, config)


if __name__ == "__main__":
    sys.exit(main())
