import argparse

from app.core.classes.errors import MalformedInputError
from app.core.classes.verification_service import VerificationService
from app.core.Interfaces.verification_interface import SUITES
from app.infra.cli.common import EXIT_NEGATIVE, EXIT_OK, Output, to_json
from app.infra.config import RunConfig


def parse_suites(text: str | None) -> list[str]:
    if not text:
        return list(SUITES)
    suites = [name.strip() for name in text.split(",") if name.strip()]
    unknown = [name for name in suites if name not in SUITES]
    if unknown:
        raise MalformedInputError(f"unknown suites {unknown}, choose from {SUITES}")
    return suites


def cmd_verify(args: argparse.Namespace, config: RunConfig, output: Output) -> int:
    if args.p is None or args.max_order is None:
        raise MalformedInputError("verify needs --p and --max-order")
    service = VerificationService(
        group_cap=config.group_cap,
        algebra_cap=config.algebra_cap,
        basis_cap=config.basis_cap,
        word_cap=config.word_cap,
        samples=config.samples,
        pair_samples=config.pair_samples,
        seed=config.seed,
        jobs=config.jobs,
        fault=args.inject_fault,
    )
    reports = service.run(parse_suites(args.suites), args.p, args.max_order)
    for report in reports:
        output.emit({**to_json(report), "passed": report.passed})
    passed = all(report.passed for report in reports)
    output.emit(
        {
            "passed": passed,
            "p": args.p,
            "max_order": args.max_order,
            "fault": args.inject_fault,
            **output.provenance(config),
        }
    )
    return EXIT_OK if passed else EXIT_NEGATIVE
