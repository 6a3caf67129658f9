from __future__ import annotations
import argparse

from metriclab.api.output import audit, emit
from metriclab.core.container import get_repository, get_suite_service

DEFAULT_TRIALS = 20


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("suite", parents=[common], help="Run a randomized property suite")
    parser.add_argument("name", nargs="?", default=None, help="suite name (omit to list suites)")
    parser.set_defaults(handler=suite)


def suite(args: argparse.Namespace) -> int:
    service = get_suite_service()
    if args.name is None:
        emit([info.model_dump() for info in service.available()], args)
        return 0
    trials = args.trials if args.trials is not None else DEFAULT_TRIALS
    report = service.run(args.name, trials, args.seed)
    if args.report:
        get_repository().save(report, args.report)
    audit(f"suite:{args.name}", args.name, success=report.passed,
          trials=trials, seed=args.seed, failures=len(report.failures))
    emit(report, args)
    return 0 if report.passed else 1
