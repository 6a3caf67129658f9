"""
metriclab: distancias entre espacios métricos finitos, gadgets de reducción,
normas por coeficientes, juegos de distancia y suites de propiedades.

Códigos de salida: 0 ok, 1 la suite encontró fallos, 2 entrada inválida,
3 presupuesto agotado con --require-exact.
"""
from __future__ import annotations
import argparse
import json
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from metriclab.api import (
    dist_controller,
    game_controller,
    logs_controller,
    reduce_controller,
    suite_controller,
    validate_controller,
)
from metriclab.api.output import audit
from metriclab.core.container import configure
from metriclab.core.settings import Settings
from metriclab.domain.errors import BudgetExhausted, MetricLabError

logger = logging.getLogger("metriclab")

CONTROLLERS = (
    validate_controller,
    dist_controller,
    reduce_controller,
    game_controller,
    suite_controller,
    logs_controller,
)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="64-bit seed for every random choice")
    common.add_argument("--trials", type=int, default=None)
    common.add_argument("--budget", type=int, default=None, help="search node budget")
    common.add_argument("--require-exact", action="store_true", help="exit 3 when a search hits the budget")
    common.add_argument("--mode", choices=("rational", "float"), default=None)
    common.add_argument("--report", default=None, help="suite report path")
    common.add_argument("-o", "--output", default=None, help="write the emitted document here too")
    common.add_argument("-v", "--verbose", action="store_true")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="metriclab", description=__doc__.strip().splitlines()[0])
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()
    for controller in CONTROLLERS:
        controller.register(subparsers, common)
    return parser


def _fail(args: argparse.Namespace, payload: dict) -> None:
    audit(args.command, getattr(args, "name", None) or args.command, success=False, error=payload["error"])
    print(json.dumps(payload, default=str), file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    configure(Settings.resolve({"mode": args.mode, "budget": args.budget}))
    try:
        return args.handler(args)
    except BudgetExhausted as e:
        _fail(args, e.to_dict())
        return 3
    except MetricLabError as e:
        _fail(args, e.to_dict())
        return 2
    except ValidationError as e:
        _fail(args, {"error": "ValidationError", "message": str(e), "details": {"errors": e.errors(include_url=False)}})
        return 2
    except (ValueError, OSError) as e:
        _fail(args, {"error": type(e).__name__, "message": str(e), "details": {}})
        return 2


if __name__ == "__main__":
    sys.exit(main())
