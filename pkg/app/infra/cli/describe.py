import argparse

from app.core.classes.invariants import fingerprint_json
from app.core.classes.report_service import ReportService
from app.infra.cli.common import EXIT_OK, Output, read_vectors, to_json
from app.infra.config import RunConfig
from app.infra.in_memory_repositories.fingerprint_in_memory_repository import (
    FingerprintInMemoryRepository,
)


def cmd_describe(args: argparse.Namespace, config: RunConfig, output: Output) -> int:
    service = ReportService(
        FingerprintInMemoryRepository(), config.group_cap, config.basis_cap
    )
    for vector in read_vectors(args):
        description = service.describe(vector)
        output.emit(
            {
                "description": to_json(description),
                "fingerprint": fingerprint_json(description.fingerprint),
                **output.provenance(config),
            }
        )
    return EXIT_OK
