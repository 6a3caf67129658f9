from __future__ import annotations
import argparse

from metriclab.api.output import audit, emit, indices
from metriclab.core.container import get_distance_service, get_repository
from metriclab.domain.services.distance_service import DISTANCE_KINDS


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("dist", parents=[common], help="Distance certificate between metric documents")
    parser.add_argument("kind", choices=DISTANCE_KINDS)
    parser.add_argument("files", nargs="+")
    parser.add_argument("--a", dest="subset_a", default="", help="hausdorff: comma separated indices of A")
    parser.add_argument("--b", dest="subset_b", default="", help="hausdorff: comma separated indices of B")
    parser.add_argument("--eps", default=None, help="hl: closeness parameter")
    parser.set_defaults(handler=dist)


def dist(args: argparse.Namespace) -> int:
    service = get_distance_service()
    repo = get_repository()
    spaces = [service.load_space(repo.load(path)) for path in args.files[:2]]
    M = spaces[0]
    N = spaces[1] if len(spaces) > 1 else None
    result = service.distance(
        args.kind,
        M,
        N,
        subset_a=indices(args.subset_a),
        subset_b=indices(args.subset_b),
        eps=args.eps,
        require_exact=args.require_exact,
    )
    audit(f"dist:{args.kind}", ",".join(args.files[:2]), sizes=[S.n for S in spaces])
    emit(result, args)
    return 0
