from __future__ import annotations
import argparse

from metriclab.api.output import audit, emit
from metriclab.core.container import get_reduction_service, get_repository
from metriclab.domain.gadget_provider import get_available_kinds


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("reduce", parents=[common], help="Build a reduction gadget")
    parser.add_argument("gadget", choices=get_available_kinds())
    parser.add_argument("input", help="metric document (or norm document for bm-gadget / kadets-gadget)")
    parser.add_argument("--params", default=None, help="JSON file with the gadget parameters")
    parser.add_argument("--p", default=None)
    parser.add_argument("--copies", type=int, default=None)
    parser.add_argument("--kmin", type=int, default=None)
    parser.add_argument("--kmax", type=int, default=None)
    parser.set_defaults(handler=reduce)


def _params(args: argparse.Namespace) -> dict:
    params = dict(get_repository().load(args.params)) if args.params else {}
    flags = {"p": args.p, "copies": args.copies, "kMin": args.kmin, "kMax": args.kmax}
    params.update({k: v for k, v in flags.items() if v is not None})
    return params


def reduce(args: argparse.Namespace) -> int:
    service = get_reduction_service()
    gadget = service.build(args.gadget, get_repository().load(args.input), _params(args))
    audit(f"reduce:{args.gadget}", args.input, points=gadget.n, source=gadget.provenance.get("sourceSize"))
    emit(service.document(gadget), args)
    return 0
