from __future__ import annotations
import argparse

from metriclab.api.output import audit, emit
from metriclab.core.container import get_distance_service, get_repository


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("validate", parents=[common], help="Validate a metric document and re-emit it")
    parser.add_argument("file")
    parser.set_defaults(handler=validate)


def validate(args: argparse.Namespace) -> int:
    doc = get_distance_service().canonical(get_repository().load(args.file))
    audit("validate", args.file, n=doc.n)
    emit(doc, args)
    return 0
