from __future__ import annotations
import argparse

from metriclab.api.output import emit
from metriclab.core.container import get_log_service


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("logs", parents=[common], help="Read the audit log")
    parser.add_argument("view", choices=("recent", "stats"))
    parser.add_argument("--limit", type=int, default=100)
    parser.set_defaults(handler=logs)


def logs(args: argparse.Namespace) -> int:
    """Entradas recientes del audit log o estadísticas agregadas."""
    service = get_log_service()
    if args.view == "stats":
        emit(service.get_stats(), args)
        return 0
    entries = service.get_recent_logs(max(1, min(args.limit, 500)))
    emit({"logs": [e.model_dump() for e in entries], "count": len(entries)}, args)
    return 0
