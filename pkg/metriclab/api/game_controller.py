from __future__ import annotations
import argparse

from metriclab.api.output import audit, emit, indices
from metriclab.core.container import get_distance_service, get_game_service, get_repository


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("game", parents=[common], help="Finite distance game between two spaces")
    parser.add_argument("first")
    parser.add_argument("second")
    parser.add_argument("--depth", type=int, default=None, help="rounds left to play")
    parser.add_argument("--eps", default=None, help="threshold deciding the winner")
    parser.add_argument("--xs", default="", help="points already played in the first space")
    parser.add_argument("--ys", default="", help="points already played in the second space")
    parser.add_argument("--duality", action="store_true", help="values at every depth compared with gh")
    parser.set_defaults(handler=game)


def game(args: argparse.Namespace) -> int:
    loader = get_distance_service()
    repo = get_repository()
    M = loader.load_space(repo.load(args.first))
    N = loader.load_space(repo.load(args.second))
    service = get_game_service()
    if args.duality:
        result = service.duality(M, N)
    else:
        depth = args.depth if args.depth is not None else M.n + N.n
        result = service.play(M, N, depth, args.eps, indices(args.xs), indices(args.ys))
    audit("game", f"{args.first},{args.second}", sizes=[M.n, N.n], depth=args.depth)
    emit(result, args)
    return 0
