import argparse

from app.core.classes.enumeration import enumerate_vectors
from app.core.classes.errors import MalformedInputError
from app.infra.cli.common import EXIT_OK, Output, vector_json
from app.infra.config import RunConfig


def cmd_enumerate(args: argparse.Namespace, config: RunConfig, output: Output) -> int:
    if args.p is None or args.max_order is None:
        raise MalformedInputError("enumerate needs --p and --max-order")
    if args.p < 3:
        raise MalformedInputError(f"p must be an odd prime, got {args.p}")
    count = 0
    for vector in enumerate_vectors(args.p, args.max_order):
        output.emit(vector_json(vector))
        count += 1
    output.emit({"count": count, "p": args.p, "max_order": args.max_order})
    return EXIT_OK
