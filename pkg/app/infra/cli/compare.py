import argparse

from app.core.classes.errors import MalformedInputError
from app.core.classes.report_service import ReportService
from app.infra.cli.common import EXIT_OK, Output, read_vectors, to_json
from app.infra.config import RunConfig
from app.infra.in_memory_repositories.fingerprint_in_memory_repository import (
    FingerprintInMemoryRepository,
)


def cmd_compare(args: argparse.Namespace, config: RunConfig, output: Output) -> int:
    vectors = read_vectors(args)
    if len(vectors) != 2:
        raise MalformedInputError(f"compare needs two vectors, got {len(vectors)}")
    service = ReportService(
        FingerprintInMemoryRepository(), config.group_cap, config.basis_cap
    )
    comparison = service.compare(*vectors)
    output.emit({**to_json(comparison), **output.provenance(config)})
    return EXIT_OK
