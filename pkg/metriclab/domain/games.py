"""
Juegos de distancia de profundidad finita.

Una posición es el conjunto de pares (x, y) jugados hasta ahora: el costo
½·max |d(x,x') − p(y,y')| sólo depende de ese conjunto y el conjunto de
jugadas posibles no depende del historial, así que la tabla de valores se
indexa por (pares, profundidad). Los valores se guardan como rangos enteros
de la tabla de costos de distances, exactos en modo racional.
"""
from __future__ import annotations
import logging
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from metriclab.domain.distances import _aligned, _gap, _rank_tensor, gh_exact
from metriclab.domain.errors import DimensionMismatch, LengthMismatch, SizeLimit
from metriclab.domain.metric import FiniteMetricSpace
from metriclab.domain.numeric import Scalar, close, half, leq, to_mode
from metriclab.domain.schemas.games import DualityReport, GameMove, TransitivityCheck

logger = logging.getLogger(__name__)

DUALITY_MAX_POINTS = 8

Position = FrozenSet[int]


def _check_tuples(xs: Sequence[int], ys: Sequence[int], M: FiniteMetricSpace, N: FiniteMetricSpace) -> None:
    if len(xs) != len(ys):
        raise LengthMismatch(f"tuples of lengths {len(xs)} and {len(ys)}")
    if any(not 0 <= x < M.n for x in xs) or any(not 0 <= y < N.n for y in ys):
        raise DimensionMismatch("tuple index outside the space")


def partial_cost(xs: Sequence[int], ys: Sequence[int], M: FiniteMetricSpace, N: FiniteMetricSpace) -> Scalar:
    """½·max |d(x_p, x_q) − p(y_p, y_q)| sobre los pares de posiciones; 0 para tuplas vacías."""
    _check_tuples(xs, ys, M, N)
    A, B, mode = _aligned(M, N)
    worst = to_mode(0, mode)
    for p in range(len(xs)):
        for q in range(p + 1, len(xs)):
            worst = max(worst, abs(A[xs[p], xs[q]] - B[ys[p], ys[q]]))
    return half(worst)


def cost_transitivity(
    M: FiniteMetricSpace,
    N: FiniteMetricSpace,
    P: FiniteMetricSpace,
    xs: Sequence[int],
    ys: Sequence[int],
    zs: Sequence[int],
) -> TransitivityCheck:
    """f^{M,P}(xs, zs) ≤ f^{M,N}(xs, ys) + f^{N,P}(ys, zs)."""
    if not len(xs) == len(ys) == len(zs):
        raise LengthMismatch("composable tuples must share their length")
    composed = partial_cost(xs, zs, M, P)
    first = partial_cost(xs, ys, M, N)
    second = partial_cost(ys, zs, N, P)
    return TransitivityCheck(
        composed=composed, first=first, second=second, holds=leq(composed, first + second)
    )


class GameSolver:
    """Minimax con tabla de valores de escritura única.

    v(S, 0) = costo(S); v(S, k) = max sobre jugadas de I (un punto de M o de N)
    del min sobre respuestas de II (un punto del otro espacio) de v(S ∪ {(x,y)}, k−1).
    Los jugadores pueden repetir puntos.
    """

    def __init__(self, M: FiniteMetricSpace, N: FiniteMetricSpace):
        self.M, self.N = M, N
        A, B, self.mode = _aligned(M, N)
        self._cost, self._values = _rank_tensor(A, B, _gap)
        self._top = len(self._values) - 1
        self._costs: Dict[Position, int] = {frozenset(): 0}
        self._memo: Dict[Tuple[Position, int], int] = {}
        self._any_memo: Dict[Tuple[Position, int], int] = {}
        self.nodes = 0

    # --- posiciones -----------------------------------------------------------

    def _pair(self, pid: int) -> Tuple[int, int]:
        return divmod(pid, self.N.n)

    def _extend(self, S: Position, x: int, y: int) -> Position:
        pid = x * self.N.n + y
        if pid in S:
            return S
        child = S | {pid}
        if child not in self._costs:
            extra = max((int(self._cost[x, y, a, b]) for a, b in map(self._pair, S)), default=0)
            self._costs[child] = max(self._costs[S], extra)
        return child

    def position(self, xs: Sequence[int] = (), ys: Sequence[int] = ()) -> Position:
        _check_tuples(xs, ys, self.M, self.N)
        S: Position = frozenset()
        for x, y in zip(xs, ys):
            S = self._extend(S, x, y)
        return S

    def _moves(self, S: Position) -> Iterator[Tuple[str, int, Iterator[Tuple[int, Position]]]]:
        """Jugadas de I con la lista perezosa de respuestas de II (respuesta, posición)."""
        for x in range(self.M.n):
            yield "M", x, ((y, self._extend(S, x, y)) for y in range(self.N.n))
        for y in range(self.N.n):
            yield "N", y, ((x, self._extend(S, x, y)) for x in range(self.M.n))

    def _store(self, table: Dict[Tuple[Position, int], int], key: Tuple[Position, int], value: int) -> None:
        previous = table.setdefault(key, value)
        assert previous == value, "memo entries are write-once"

    def _scalar(self, rank: int) -> Scalar:
        return half(self._values[rank])

    # --- valores --------------------------------------------------------------

    def _value(self, S: Position, k: int) -> int:
        key = (S, k)
        if key in self._memo:
            return self._memo[key]
        self.nodes += 1
        floor = self._costs[S]
        best = floor
        if k > 0:
            for _, _, responses in self._moves(S):
                if best == self._top:
                    break
                move = None
                for _, child in responses:
                    v = self._value(child, k - 1)
                    move = v if move is None else min(move, v)
                    # la jugada ya no mejora el máximo, o II alcanzó el costo actual
                    if move <= best or move == floor:
                        break
                best = max(best, move)
        self._store(self._memo, key, best)
        return best

    def _any_value(self, S: Position, k: int) -> int:
        """Variante ordinal: I elige cualquier k' < k antes de jugar."""
        key = (S, k)
        if key in self._any_memo:
            return self._any_memo[key]
        floor = self._costs[S]
        best = floor
        for depth in range(k):
            for _, _, responses in self._moves(S):
                if best == self._top:
                    break
                move = None
                for _, child in responses:
                    v = self._any_value(child, depth)
                    move = v if move is None else min(move, v)
                    if move <= best or move == floor:
                        break
                best = max(best, move)
        self._store(self._any_memo, key, best)
        return best

    def value(self, xs: Sequence[int] = (), ys: Sequence[int] = (), depth: int = 0) -> Scalar:
        if depth < 0:
            raise ValueError("depth must be non-negative")
        return self._scalar(self._value(self.position(xs, ys), depth))

    def value_any_smaller(self, xs: Sequence[int] = (), ys: Sequence[int] = (), depth: int = 0) -> Scalar:
        if depth < 0:
            raise ValueError("depth must be non-negative")
        return self._scalar(self._any_value(self.position(xs, ys), depth))

    def principal_variation(self, xs: Sequence[int] = (), ys: Sequence[int] = (), depth: int = 0) -> List[GameMove]:
        """Una línea de juego que realiza el valor (mejor jugada de I, mejor respuesta de II)."""
        S = self.position(xs, ys)
        line: List[GameMove] = []
        for k in range(depth, 0, -1):
            target = self._value(S, k)
            chosen = None
            for side, point, responses in self._moves(S):
                scored = [(self._value(child, k - 1), r, child) for r, child in responses]
                v, response, child = min(scored, key=lambda t: t[0])
                if v == target:
                    chosen = (side, point, response, child)
                    break
            # alguna jugada siempre alcanza el valor: los hijos nunca bajan del costo actual
            side, point, response, child = chosen
            line.append(GameMove(side=side, point=point, response=response, value=self._scalar(target)))
            S = child
        return line

    def depth_monotonicity_violations(self) -> List[Dict[str, object]]:
        """Entradas de la tabla con v(S,k) > v(S,k+1) o v(S,k) < costo(S)."""
        out: List[Dict[str, object]] = []
        for (S, k), v in list(self._memo.items()):
            pairs = sorted(self._pair(p) for p in S)
            if v < self._costs[S]:
                out.append({"pairs": pairs, "depth": k, "kind": "below-cost"})
            following = self._memo.get((S, k + 1))
            if following is not None and following < v:
                out.append({"pairs": pairs, "depth": k, "kind": "not-monotone"})
        return out


def game_value(
    M: FiniteMetricSpace,
    N: FiniteMetricSpace,
    xs: Sequence[int] = (),
    ys: Sequence[int] = (),
    depth: int = 0,
) -> Scalar:
    return GameSolver(M, N).value(xs, ys, depth)


def game_value_any_smaller(
    M: FiniteMetricSpace,
    N: FiniteMetricSpace,
    xs: Sequence[int] = (),
    ys: Sequence[int] = (),
    depth: int = 0,
) -> Scalar:
    return GameSolver(M, N).value_any_smaller(xs, ys, depth)


def game_winner(M: FiniteMetricSpace, N: FiniteMetricSpace, eps, depth: int) -> bool:
    """True si el jugador II gana 𝓖(ε, depth): valor desde la posición vacía < ε."""
    solver = GameSolver(M, N)
    eps_v = to_mode(eps, solver.mode)
    if not eps_v > 0:
        raise ValueError("eps must be positive")
    return bool(solver.value(depth=depth) < eps_v)


def duality_check(M: FiniteMetricSpace, N: FiniteMetricSpace, solver: GameSolver = None) -> DualityReport:
    """Valores en profundidad 0..|M|+|N| comparados con ρ_GH.

    A profundidad |M|+|N| el jugador I puede nombrar todos los puntos, así que
    ese valor es el estabilizado; stabilizationDepth es la primera profundidad
    que lo alcanza.
    """
    total = M.n + N.n
    if total > DUALITY_MAX_POINTS:
        raise SizeLimit(f"duality check limited to |M|+|N| <= {DUALITY_MAX_POINTS}, got {total}")
    solver = solver if solver is not None else GameSolver(M, N)
    root = solver.position()
    ranks = [solver._value(root, k) for k in range(total + 1)]
    final = ranks[-1]
    first = next(k for k, r in enumerate(ranks) if r == final)
    gh = gh_exact(M, N).value
    stabilized = solver._scalar(final)
    violations = solver.depth_monotonicity_violations()
    if violations:
        logger.warning("%d depth-monotonicity violations in the game table", len(violations))
    return DualityReport(
        stabilized_value=stabilized,
        stabilization_depth=first,
        matches_gh=close(stabilized, gh),
        gh_value=gh,
        values=[solver._scalar(r) for r in ranks],
        monotone=not violations and all(a <= b for a, b in zip(ranks, ranks[1:])),
        nodes=solver.nodes,
    )
