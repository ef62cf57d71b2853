import argparse

from app.core.classes.presentation import validate_params
from app.infra.cli.common import (
    EXIT_NEGATIVE,
    EXIT_OK,
    Output,
    read_vectors,
    vector_json,
)
from app.infra.config import RunConfig


def cmd_validate(args: argparse.Namespace, config: RunConfig, output: Output) -> int:
    all_valid = True
    for vector in read_vectors(args):
        report = validate_params(vector)
        all_valid = all_valid and report.valid
        output.emit(
            {
                "vector": vector_json(vector),
                "valid": report.valid,
                "violated": report.violated,
            }
        )
    return EXIT_OK if all_valid else EXIT_NEGATIVE
