import argparse
import logging
import sys
from typing import Optional, Sequence

from app.core.classes.verification_service import FAULTS
from app.infra.cli.common import Command
from app.infra.cli.compare import cmd_compare
from app.infra.cli.describe import cmd_describe
from app.infra.cli.enumerate import cmd_enumerate
from app.infra.cli.validate import cmd_validate
from app.infra.cli.verify import cmd_verify
from app.infra.config import ConfigFactory, RunConfig

COMMANDS: dict[str, Command] = {
    "validate": cmd_validate,
    "describe": cmd_describe,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "compare": cmd_compare,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgroups",
        description=(
            "2-generated p-groups with cyclic commutator subgroup: "
            "classification vectors, invariants and verification."
        ),
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument(
        "--vector", action="append", help="classifying vector as JSON; repeatable"
    )
    parser.add_argument("--file", help="file with one JSON vector per line")
    parser.add_argument("--p", type=int, help="odd prime")
    parser.add_argument("--max-order", type=int, help="bound on the group order")
    parser.add_argument("--group-cap", type=int)
    parser.add_argument("--algebra-cap", type=int)
    parser.add_argument("--basis-cap", type=int)
    parser.add_argument("--word-cap", type=int)
    parser.add_argument("--samples", type=int)
    parser.add_argument("--pair-samples", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--jobs", type=int)
    parser.add_argument("--out", help="write JSON lines here instead of stdout")
    parser.add_argument(
        "--suites", help="comma separated subset of the verification suites"
    )
    parser.add_argument("--inject-fault", choices=FAULTS)
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
    )
    return parser


def setup(argv: Optional[Sequence[str]] = None) -> tuple[argparse.Namespace, RunConfig]:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    config = ConfigFactory.create(
        group_cap=args.group_cap,
        algebra_cap=args.algebra_cap,
        basis_cap=args.basis_cap,
        word_cap=args.word_cap,
        samples=args.samples,
        pair_samples=args.pair_samples,
        seed=args.seed,
        jobs=args.jobs,
        out=args.out,
    )
    return args, config
