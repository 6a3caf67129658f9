"""
Solvers de distancias entre espacios métricos finitos.

- Hausdorff entre subconjuntos de un mismo espacio.
- Gromov–Hausdorff como mitad de la mínima distorsión sobre correspondencias
  (ramificación y acotación sobre pares de funciones f: X->Y, g: Y->X).
- GH restringida a biyecciones y distancia de Lipschitz (cuello de botella
  sobre permutaciones, cota inferior por asignación de cuello de botella).
- HL(ε)-cercanía y la cadena de redes que acota ρ_HL.

Todas las búsquedas trabajan sobre rangos enteros de una tabla de costos, así
que son exactas en modo racional sin pagar aritmética de Fraction por nodo.
"""
from __future__ import annotations
import logging
import math
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from metriclab.domain.correspondence import Correspondence, total_relation_masks
from metriclab.domain.errors import (
    DimensionMismatch,
    EmptySubset,
    IndexOutOfRange,
    SizeLimitExceeded,
    SizeMismatch,
    WitnessInvalid,
)
from metriclab.domain.metric import FiniteMetricSpace
from metriclab.domain.numeric import TAU_EQ, NumericMode, Scalar, half, serialize_number, to_mode
from metriclab.domain.schemas.certificate import (
    BijectionWitness,
    BoundCheck,
    CorrespondenceWitness,
    DistanceCertificate,
    HLClosenessResult,
    HLUpperBound,
)

logger = logging.getLogger(__name__)

GH_EXHAUSTIVE_MAX = 7
BIJECTION_EXHAUSTIVE_MAX = 9
HL_EXHAUSTIVE_CELLS = 16
DEFAULT_BUDGET = 200_000
BRUTE_FORCE_MAX_CELLS = 16


# --- utilidades ---------------------------------------------------------

def _aligned(M: FiniteMetricSpace, N: FiniteMetricSpace) -> Tuple[np.ndarray, np.ndarray, NumericMode]:
    if M.mode is N.mode:
        return M.d, N.d, M.mode
    return M.d.astype(float), N.d.astype(float), NumericMode.FLOAT


def _rank_tensor(
    A: np.ndarray, B: np.ndarray, op: Callable[[Scalar, Scalar], Scalar]
) -> Tuple[np.ndarray, np.ndarray]:
    """C[x,y,x',y'] = rango de op(A[x,x'], B[y,y']) y los valores ordenados."""
    ua, ia = np.unique(A, return_inverse=True)
    ub, ib = np.unique(B, return_inverse=True)
    ia = ia.reshape(A.shape)
    ib = ib.reshape(B.shape)
    table = np.empty((len(ua), len(ub)), dtype=object)
    for ka, a in enumerate(ua):
        for kb, b in enumerate(ub):
            table[ka, kb] = op(a, b)
    values, rank = np.unique(table, return_inverse=True)
    rank = rank.reshape(table.shape)
    cost = rank[ia[:, None, :, None], ib[None, :, None, :]]
    return cost.astype(np.int64), values


def _gap(a: Scalar, b: Scalar) -> Scalar:
    return abs(a - b)


def _ratio(a: Scalar, b: Scalar) -> Scalar:
    if a == 0 and b == 0:
        return Fraction(1) if isinstance(a, Fraction) else 1.0
    if a == 0 or b == 0:
        return math.inf
    return max(b / a, a / b)


def _relation_rank(cost: np.ndarray, pairs: Sequence[Tuple[int, int]]) -> int:
    px = np.array([p[0] for p in pairs], dtype=int)
    py = np.array([p[1] for p in pairs], dtype=int)
    return int(cost[px[:, None], py[:, None], px[None, :], py[None, :]].max())


def _eccentricity(D: np.ndarray) -> np.ndarray:
    return np.array([float(v) for v in D.max(axis=1)])


def _subset(M: FiniteMetricSpace, indices: Sequence[int], name: str) -> List[int]:
    idx = sorted(set(int(i) for i in indices))
    if not idx:
        raise EmptySubset(f"subset {name} is empty")
    if idx[0] < 0 or idx[-1] >= M.n:
        raise DimensionMismatch(f"subset {name} has indices outside 0..{M.n - 1}")
    return idx


# --- Hausdorff / distorsión ------------------------------------------------

def hausdorff(M: FiniteMetricSpace, A: Sequence[int], B: Sequence[int]) -> Scalar:
    a = _subset(M, A, "A")
    b = _subset(M, B, "B")
    block = M.d[np.ix_(a, b)]
    return max(block.min(axis=1).max(), block.min(axis=0).max())


def distortion(R: Correspondence, M: FiniteMetricSpace, N: FiniteMetricSpace) -> Scalar:
    if R.n_a != M.n or R.n_b != N.n:
        raise DimensionMismatch(f"correspondence is {R.n_a}x{R.n_b}, spaces have {M.n} and {N.n} points")
    A, B, _ = _aligned(M, N)
    pa, pb = np.nonzero(R.rel)
    return np.abs(A[np.ix_(pa, pa)] - B[np.ix_(pb, pb)]).max()


def bijection_distortion(M: FiniteMetricSpace, N: FiniteMetricSpace, perm: Sequence[int]) -> Scalar:
    if M.n != N.n or len(perm) != M.n:
        raise SizeMismatch("bijection needs equal point counts")
    A, B, _ = _aligned(M, N)
    p = np.asarray(perm, dtype=int)
    return np.abs(A - B[np.ix_(p, p)]).max()


def simeq(M: FiniteMetricSpace, N: FiniteMetricSpace, perm: Sequence[int], eps) -> bool:
    """M ≃_ε N mediante perm: |d_N(perm i, perm j) - d_M(i, j)| ≤ ε para todo par."""
    gap = bijection_distortion(M, N, perm)
    if isinstance(gap, Fraction):
        return gap <= to_mode(eps, NumericMode.RATIONAL)
    return float(gap) <= float(eps) + TAU_EQ


def lipschitz_constants(M: FiniteMetricSpace, N: FiniteMetricSpace, perm: Sequence[int]) -> Tuple[Scalar, Scalar]:
    """(Lip(T), Lip(T⁻¹)) para la biyección T(i) = perm[i]."""
    if M.n != N.n or len(perm) != M.n:
        raise SizeMismatch("bijection needs equal point counts")
    A, B, mode = _aligned(M, N)
    one = Fraction(1) if mode is NumericMode.RATIONAL else 1.0
    forward, backward = one, one
    for i in range(M.n):
        for j in range(i + 1, M.n):
            a, b = A[i, j], B[perm[i], perm[j]]
            forward = max(forward, b / a)
            backward = max(backward, a / b)
    return forward, backward


def gh_lower_bound(M: FiniteMetricSpace, N: FiniteMetricSpace) -> Scalar:
    A, B, _ = _aligned(M, N)
    return half(abs(A.max() - B.max()))


# --- búsqueda sobre correspondencias --------------------------------------

class _RelationSearch:
    """Ramificación y acotación sobre las variables f(x) y g(y).

    Toda correspondencia contiene la unión de los grafos de un par (f, g) y la
    distorsión es monótona, así que basta recorrer esos pares. Dominio de cada
    variable: matriz booleana nA×nB de pares aún compatibles (< best).
    """

    def __init__(
        self,
        cost: np.ndarray,
        best: int,
        best_pairs: Optional[List[Tuple[int, int]]],
        lower: int,
        budget: Optional[int],
        spread_a: np.ndarray,
        spread_b: np.ndarray,
    ):
        self.cost = cost
        self.best = best
        self.best_pairs = best_pairs
        self.lower = lower
        self.budget = budget
        self.spread_a = spread_a
        self.spread_b = spread_b
        self.nodes = 0
        self.exhausted = False

    def run(self) -> None:
        n_a, n_b = self.cost.shape[:2]
        dom = np.ones((n_a, n_b), dtype=bool)
        self._visit(dom, dom.copy(), np.zeros(n_a, bool), np.zeros(n_b, bool), [], [], 0)

    def run_through(self, x: int, y: int) -> None:
        """Como run(), pero con el par (x, y) fijado en la relación."""
        n_a, n_b = self.cost.shape[:2]
        dom = self.cost[x, y] < self.best
        self._visit(dom.copy(), dom.copy(), np.zeros(n_a, bool), np.zeros(n_b, bool), [x], [y], int(self.cost[x, y, x, y]))

    def _visit(self, dom_f, dom_g, done_a, done_b, px, py, cur) -> None:
        if self.best <= self.lower or self.exhausted:
            return
        if self.budget is not None and self.nodes >= self.budget:
            self.exhausted = True
            return
        self.nodes += 1
        free_a = np.flatnonzero(~done_a)
        free_b = np.flatnonzero(~done_b)
        if not len(free_a) and not len(free_b):
            self.best = cur
            self.best_pairs = list(zip(px, py))
            return
        size_a = dom_f[free_a].sum(axis=1)
        size_b = dom_g[:, free_b].sum(axis=0)
        if (size_a == 0).any() or (size_b == 0).any():
            return

        sizes = np.concatenate([size_a, size_b])
        spreads = np.concatenate([self.spread_a[free_a], self.spread_b[free_b]])
        pick = int(np.lexsort((-spreads, sizes))[0])
        if pick < len(free_a):
            x = int(free_a[pick])
            values = np.flatnonzero(dom_f[x])
            rows = self.cost[x][values]
            moves = [(x, int(v)) for v in values]
        else:
            y = int(free_b[pick - len(free_a)])
            values = np.flatnonzero(dom_g[:, y])
            rows = self.cost[values, y]
            moves = [(int(v), y) for v in values]

        if px:
            inc = rows[:, px, py].max(axis=1)
            new = np.maximum(inc, cur)
        else:
            new = np.zeros(len(moves), dtype=np.int64)

        for k in np.argsort(new, kind="stable"):
            cost_k = int(new[k])
            if cost_k >= self.best:
                break
            a, b = moves[k]
            allowed = rows[k] < self.best
            na, nb = done_a.copy(), done_b.copy()
            if pick < len(free_a):
                na[a] = True
            else:
                nb[b] = True
            self._visit(dom_f & allowed, dom_g & allowed, na, nb, px + [a], py + [b], cost_k)
            if self.best <= self.lower or self.exhausted:
                return


def _resolve_budget(budget: Optional[int], size: int, threshold: int) -> Optional[int]:
    if budget is not None:
        return budget
    return None if size <= threshold else DEFAULT_BUDGET


def gh_exact(
    M: FiniteMetricSpace,
    N: FiniteMetricSpace,
    budget: Optional[int] = None,
    hint: Optional[Correspondence] = None,
    exhaustive_max: int = GH_EXHAUSTIVE_MAX,
) -> DistanceCertificate:
    """ρ_GH(M, N) = ½·min_R distorsión(R).

    Sin presupuesto explícito la búsqueda es completa hasta `exhaustive_max`
    puntos por lado; por encima se aplica DEFAULT_BUDGET y, si se agota, el
    resultado es una cota superior con exact=False.
    """
    A, B, _ = _aligned(M, N)
    cost, values = _rank_tensor(A, B, _gap)

    pairs = [(a, b) for a in range(M.n) for b in range(N.n)]
    best = _relation_rank(cost, pairs)
    if hint is not None:
        if hint.n_a != M.n or hint.n_b != N.n:
            raise DimensionMismatch("hint correspondence does not match the spaces")
        hinted = _relation_rank(cost, hint.pairs())
        if hinted < best:
            best, pairs = hinted, hint.pairs()

    lb_value = abs(A.max() - B.max())
    lower = min(int(np.searchsorted(values, lb_value, side="left")), len(values) - 1)

    search = _RelationSearch(
        cost, best, pairs, lower,
        _resolve_budget(budget, max(M.n, N.n), exhaustive_max),
        _eccentricity(A), _eccentricity(B),
    )
    search.run()
    if search.exhausted:
        logger.info("gh search budget exhausted after %d nodes (%dx%d)", search.nodes, M.n, N.n)
    R = Correspondence.from_pairs(M.n, N.n, search.best_pairs)
    return DistanceCertificate(
        distance="gh",
        value=half(values[search.best]),
        exact=not search.exhausted,
        witness=CorrespondenceWitness.of(R),
        nodes=search.nodes,
    )


def gh_brute_force(M: FiniteMetricSpace, N: FiniteMetricSpace) -> Scalar:
    """Oráculo: recorre todas las relaciones totales (nA·nB ≤ 16 celdas)."""
    cells = M.n * N.n
    if cells > BRUTE_FORCE_MAX_CELLS:
        raise SizeLimitExceeded(f"brute force limited to {BRUTE_FORCE_MAX_CELLS} cells, got {cells}")
    A, B, _ = _aligned(M, N)
    cost, values = _rank_tensor(A, B, _gap)
    flat = cost.reshape(cells, cells)
    masks = total_relation_masks(M.n, N.n)
    best = len(values) - 1
    for start in range(0, len(masks), 2048):
        chunk = masks[start:start + 2048]
        sel = chunk[:, :, None] & chunk[:, None, :]
        worst = np.where(sel, flat[None, :, :], -1).max(axis=(1, 2))
        best = min(best, int(worst.min()))
    return half(values[best])


def correspondence_through(
    M: FiniteMetricSpace,
    N: FiniteMetricSpace,
    pair: Tuple[int, int],
    below,
) -> Optional[Correspondence]:
    """Alguna correspondencia con distorsión < below que contenga `pair`, o None.

    La búsqueda es completa: None prueba que ninguna correspondencia tan cercana
    relaciona esos dos puntos.
    """
    A, B, _ = _aligned(M, N)
    x, y = pair
    if not (0 <= x < M.n and 0 <= y < N.n):
        raise IndexOutOfRange(f"pair {pair} is outside {M.n}x{N.n}")
    cost, values = _rank_tensor(A, B, _gap)
    limit = int(np.searchsorted(values, below, side="left"))
    if limit == 0:
        return None
    # se detiene en cuanto encuentra una relación por debajo de limit
    search = _RelationSearch(cost, limit, None, limit - 1, None, _eccentricity(A), _eccentricity(B))
    search.run_through(x, y)
    if search.best_pairs is None:
        return None
    return Correspondence.from_pairs(M.n, N.n, search.best_pairs)


# --- búsqueda sobre biyecciones --------------------------------------------

def _bottleneck(lb: np.ndarray) -> int:
    """Mínimo t tal que existe un emparejamiento perfecto con lb ≤ t."""
    levels = np.unique(lb)
    lo, hi = 0, len(levels) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        rows, cols = linear_sum_assignment((lb > levels[mid]).astype(np.int64))
        if (lb[rows, cols] <= levels[mid]).all():
            hi = mid
        else:
            lo = mid + 1
    return int(levels[lo])


class _BijectionSearch:
    """Ramificación y acotación sobre permutaciones con objetivo de cuello de botella."""

    def __init__(self, cost, best, best_perm, lower, budget, spread):
        self.cost = cost
        self.best = best
        self.best_perm = best_perm
        self.lower = lower
        self.budget = budget
        self.spread = spread
        self.nodes = 0
        self.exhausted = False

    def run(self) -> None:
        n = self.cost.shape[0]
        self._visit(np.full(n, -1, dtype=int), np.zeros(n, bool), 0)

    def _visit(self, perm, used, cur) -> None:
        if self.best <= self.lower or self.exhausted:
            return
        if self.budget is not None and self.nodes >= self.budget:
            self.exhausted = True
            return
        self.nodes += 1
        free = np.flatnonzero(perm < 0)
        if not len(free):
            self.best = cur
            self.best_perm = [int(v) for v in perm]
            return
        done = np.flatnonzero(perm >= 0)
        free_b = np.flatnonzero(~used)
        sub = self.cost[np.ix_(free, free_b)]
        if len(done):
            lb = np.maximum(sub[:, :, done, perm[done]].max(axis=2), cur)
        else:
            lb = np.zeros((len(free), len(free_b)), dtype=np.int64)
        if _bottleneck(lb) >= self.best:
            return

        counts = (lb < self.best).sum(axis=1)
        pick = int(np.lexsort((-self.spread[free], counts))[0])
        x = int(free[pick])
        row = lb[pick]
        for k in np.argsort(row, kind="stable"):
            cost_k = int(row[k])
            if cost_k >= self.best:
                break
            y = int(free_b[k])
            perm[x] = y
            used[y] = True
            self._visit(perm, used, cost_k)
            perm[x] = -1
            used[y] = False
            if self.best <= self.lower or self.exhausted:
                return


def _sorted_pairing(A: np.ndarray, B: np.ndarray) -> List[int]:
    """Empareja por excentricidad creciente; cota superior inicial."""
    order_a = np.argsort(_eccentricity(A), kind="stable")
    order_b = np.argsort(_eccentricity(B), kind="stable")
    perm = [0] * len(order_a)
    for a, b in zip(order_a, order_b):
        perm[int(a)] = int(b)
    return perm


def _perm_rank(cost: np.ndarray, perm: Sequence[int]) -> int:
    idx = np.arange(len(perm))
    p = np.asarray(perm, dtype=int)
    return int(cost[idx[:, None], p[:, None], idx[None, :], p[None, :]].max())


def _bijection_search(cost, A, B, budget, lower) -> _BijectionSearch:
    start = _sorted_pairing(A, B)
    search = _BijectionSearch(cost, _perm_rank(cost, start), start, lower, budget, _eccentricity(A))
    search.run()
    return search


def gh_bijection(
    M: FiniteMetricSpace,
    N: FiniteMetricSpace,
    budget: Optional[int] = None,
    exhaustive_max: int = BIJECTION_EXHAUSTIVE_MAX,
) -> DistanceCertificate:
    """½·min_π max |d_M(i,j) − d_N(π i, π j)|."""
    if M.n != N.n:
        raise SizeMismatch(f"gh_bijection needs equal sizes, got {M.n} and {N.n}")
    A, B, _ = _aligned(M, N)
    cost, values = _rank_tensor(A, B, _gap)
    lb_value = abs(A.max() - B.max())
    lower = min(int(np.searchsorted(values, lb_value, side="left")), len(values) - 1)
    search = _bijection_search(cost, A, B, _resolve_budget(budget, M.n, exhaustive_max), lower)
    return DistanceCertificate(
        distance="gh-bij",
        value=half(values[search.best]),
        exact=not search.exhausted,
        witness=BijectionWitness(perm=search.best_perm),
        nodes=search.nodes,
    )


def lipschitz_exact(
    M: FiniteMetricSpace,
    N: FiniteMetricSpace,
    budget: Optional[int] = None,
    exhaustive_max: int = BIJECTION_EXHAUSTIVE_MAX,
) -> DistanceCertificate:
    """min_T log max{Lip(T), Lip(T⁻¹)}; +inf si los tamaños difieren."""
    if M.n != N.n:
        return DistanceCertificate(distance="lip", value=math.inf, exact=True, witness=None)
    A, B, _ = _aligned(M, N)
    cost, values = _rank_tensor(A, B, _ratio)
    search = _bijection_search(cost, A, B, _resolve_budget(budget, M.n, exhaustive_max), 0)
    ratio = values[search.best]
    return DistanceCertificate(
        distance="lip",
        value=math.log(float(ratio)),
        exact=not search.exhausted,
        witness=BijectionWitness(perm=search.best_perm),
        nodes=search.nodes,
        details={"ratio": serialize_number(ratio)},
    )


# --- HL(ε)-cercanía -----------------------------------------------------------

def _hl_ok(eps: Scalar, tol: float) -> Callable[[Scalar, Scalar], int]:
    def ok(a: Scalar, b: Scalar) -> int:
        fits = b <= a + eps * max(1, a) + tol and a <= b + eps * max(1, b) + tol
        return 0 if fits else 1
    return ok


def hl_witnesses(M: FiniteMetricSpace, N: FiniteMetricSpace, eps, R: Correspondence) -> bool:
    """Comprueba las dos desigualdades de HL(ε) sobre todos los pares relacionados."""
    if R.n_a != M.n or R.n_b != N.n:
        raise DimensionMismatch("correspondence does not match the spaces")
    A, B, mode = _aligned(M, N)
    eps = to_mode(eps, mode)
    tol = 0 if mode is NumericMode.RATIONAL else TAU_EQ
    pa, pb = np.nonzero(R.rel)
    a = A[np.ix_(pa, pa)]
    b = B[np.ix_(pb, pb)]
    ok = _hl_ok(eps, tol)
    return all(ok(x, y) == 0 for x, y in zip(a.flat, b.flat))


def hl_close(
    M: FiniteMetricSpace,
    N: FiniteMetricSpace,
    eps,
    budget: Optional[int] = None,
    exhaustive_cells: int = HL_EXHAUSTIVE_CELLS,
) -> HLClosenessResult:
    """Busca una correspondencia que testimonie HL(ε)-cercanía.

    Completa si nA·nB ≤ exhaustive_cells; por encima la misma búsqueda corre
    con presupuesto (sólida: todo testigo devuelto es válido).
    """
    A, B, mode = _aligned(M, N)
    eps_v = to_mode(eps, mode)
    if not eps_v > 0:
        raise ValueError("eps must be positive")
    tol = 0 if mode is NumericMode.RATIONAL else TAU_EQ
    cost, values = _rank_tensor(A, B, _hl_ok(eps_v, tol))
    complete = M.n * N.n <= exhaustive_cells
    if budget is None and not complete:
        budget = DEFAULT_BUDGET
    # rango 1 = incompatible: sólo se aceptan asignaciones de costo 0
    search = _RelationSearch(cost, 1, None, 0, budget, _eccentricity(A), _eccentricity(B))
    search.run()
    witness = None
    if search.best_pairs is not None:
        witness = CorrespondenceWitness.of(Correspondence.from_pairs(M.n, N.n, search.best_pairs))
    return HLClosenessResult(
        eps=eps_v,
        witness=witness,
        complete=complete and not search.exhausted,
        regime="exhaustive" if budget is None else "budgeted",
        nodes=search.nodes,
    )


def max_separated_net(M: FiniteMetricSpace, delta, seed: int = 0) -> List[int]:
    """Red δ-separada maximal, greedy en orden aleatorio sembrado."""
    if not delta > 0:
        raise ValueError("delta must be positive")
    order = np.random.default_rng(seed).permutation(M.n)
    net: List[int] = []
    for i in order:
        if all(M.d[i, j] >= delta for j in net):
            net.append(int(i))
    return sorted(net)


def phi1(eps: float) -> float:
    e = float(eps)
    return math.exp(e) - 1 + 2 * e * math.exp(e) + 4 * e


def phi2(eps: float) -> float:
    e = float(eps)
    root = math.sqrt(e)
    return 2 * e + 2 * root + math.log(1 + max(e, root)) + e * max(1.0, e + root)


def _nearest_correspondence(D: np.ndarray, net: Sequence[int]) -> Correspondence:
    """{(i, punto de la red más cercano)} ∪ identidad en la red, entre el espacio y la red."""
    sub = D[:, list(net)].astype(float)
    pairs = [(i, int(np.argmin(sub[i]))) for i in range(D.shape[0])]
    pairs += [(p, k) for k, p in enumerate(net)]
    return Correspondence.from_pairs(D.shape[0], len(net), pairs)


def _half_distortion_to_net(S: FiniteMetricSpace, net: Sequence[int]) -> float:
    R = _nearest_correspondence(S.d, net)
    D = S.d.astype(float)
    pa, pb = np.nonzero(R.rel)
    idx = np.asarray(net, dtype=int)[pb]
    return float(np.abs(D[np.ix_(pa, pa)] - D[np.ix_(idx, idx)]).max()) / 2


def _check(name: str, observed: float, bound: float, strict: bool = False, at_least: bool = False) -> BoundCheck:
    if at_least:
        holds = observed >= bound - TAU_EQ
    else:
        holds = observed < bound if strict else observed <= bound + TAU_EQ
    return BoundCheck(name=name, observed=float(observed), bound=float(bound), holds=bool(holds))


def hl_upper_from_witness(
    M: FiniteMetricSpace,
    N: FiniteMetricSpace,
    eps,
    R: Correspondence,
    seed: int = 0,
) -> HLUpperBound:
    """Cota φ₂(ε) para ρ_HL(M, N) a partir de un testigo de HL(ε)-cercanía.

    Materializa la cadena M -> red N_d -> red N_e = r[N_d] -> N y comprueba
    cada desigualdad intermedia.
    """
    if not hl_witnesses(M, N, eps, R):
        raise WitnessInvalid(f"correspondence does not witness HL({eps})-closeness")
    e = float(eps)
    root = math.sqrt(e)
    delta = e + root
    A = M.d.astype(float)
    B = N.d.astype(float)
    checks: List[BoundCheck] = []

    net = max_separated_net(M, delta, seed)
    cover = float(A[:, net].min(axis=1).max())
    separation = min((A[i, j] for i in net for j in net if i < j), default=math.inf)
    checks.append(_check("source-net-covers", cover, delta, strict=True))
    checks.append(_check("source-net-separated", separation, delta, at_least=True))
    gh_source = _half_distortion_to_net(M, net)
    checks.append(_check("gh-source-net", gh_source, delta))

    selector: Dict[int, int] = {i: int(np.flatnonzero(R.rel[i])[0]) for i in net}
    image = [selector[i] for i in net]
    value = phi2(e)
    checks.append(_check("selector-injective", len(net) - len(set(image)), 0))
    if len(set(image)) != len(image):
        logger.warning("selector not injective on a net of %d points (eps=%s)", len(net), eps)
        return HLUpperBound(eps=e, value=value, delta=delta, net=net, image_net=image, selector=selector, checks=checks)

    target_bound = delta + e * max(1.0, delta)
    target_cover = float(B[:, image].min(axis=1).max())
    checks.append(_check("target-net-covers", target_cover, target_bound, strict=True))
    gh_target = _half_distortion_to_net(N, image)
    checks.append(_check("gh-target-net", gh_target, target_bound))

    lip_r, lip_inv = 1.0, 1.0
    for x in range(len(net)):
        for y in range(x + 1, len(net)):
            a = A[net[x], net[y]]
            b = B[image[x], image[y]]
            lip_r = max(lip_r, b / a)
            lip_inv = max(lip_inv, a / b)
    checks.append(_check("lip-selector", lip_r, max(1 + e, 1 + e / delta)))
    checks.append(_check("lip-selector-inverse", lip_inv, 1 + max(e, root)))
    log_lip = math.log(max(lip_r, lip_inv))
    checks.append(_check("lipschitz-nets", log_lip, math.log(1 + max(e, root))))

    checks.append(_check("chain-total", gh_source + log_lip + gh_target, value))
    return HLUpperBound(
        eps=e,
        value=value,
        delta=delta,
        net=net,
        image_net=image,
        selector=selector,
        checks=checks,
    )
