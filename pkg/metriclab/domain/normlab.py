"""
Geometría de las renormas por coeficientes de ℓ₂ⁿ.

- ‖·‖_f y los oráculos de norma (euclídea, por coeficientes, máximo de funcionales).
- Vectores e_{n,m} = (e_n + e_m)/√2 y conos P_{n,m}.
- Certificación de distorsión de permutaciones de coordenadas (cota superior
  de Banach–Mazur) y chequeo de sumas con signo para pares de la esfera.

Índices 0-based en todo el módulo.
"""
from __future__ import annotations
import itertools
import logging
import math
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from metriclab.domain.abstractions.norm import NormOracle
from metriclab.domain.errors import DimensionMismatch, IndexOutOfRange, NonUnitVector
from metriclab.domain.metric import FiniteMetricSpace, validate_metric
from metriclab.domain.numeric import TAU_EQ, NumericMode
from metriclab.domain.schemas.norms import (
    CoefficientNorm,
    EuclideanNormDocument,
    LemmsepEntry,
    MaxOfFunctionalsDocument,
    PermutationDistortion,
    SignedMembership,
)

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)
DEFAULT_SAMPLES = 1000


def _vector(x: Sequence[float], dim: int) -> np.ndarray:
    vec = np.asarray(x, dtype=float)
    if vec.shape != (dim,):
        raise DimensionMismatch(f"vector of length {vec.size} for dimension {dim}")
    return vec


def _pair_terms(h: np.ndarray, x: np.ndarray) -> np.ndarray:
    return h * np.abs(x[:, None] + x[None, :]) / SQRT2


def norm_eval(N: CoefficientNorm, x: Sequence[float]) -> float:
    vec = _vector(x, N.dim)
    euclid = float(np.linalg.norm(vec))
    if N.dim < 2:
        return euclid
    return max(euclid, float(_pair_terms(N.h, vec).max()))


def e_nm(n: int, m: int, dim: int) -> np.ndarray:
    if not 0 <= n < m < dim:
        raise IndexOutOfRange(f"e_nm needs 0 <= n < m < dim, got n={n}, m={m}, dim={dim}")
    out = np.zeros(dim)
    out[n] = out[m] = 1 / SQRT2
    return out


def pnm_radius(h: float) -> float:
    """Radio de P_{n,m} ∩ esfera alrededor de e_{n,m}: √(2(h−1)/h)."""
    return math.sqrt(2 * (h - 1) / h)


def pnm_member(x: Sequence[float], n: int, m: int, N: CoefficientNorm) -> bool:
    vec = _vector(x, N.dim)
    if not 0 <= n < m < N.dim:
        raise IndexOutOfRange(f"pair ({n},{m}) outside 0..{N.dim - 1}")
    return float(np.linalg.norm(vec)) <= N.h[n, m] / SQRT2 * (vec[n] + vec[m])


def pnm_signed_membership(x: Sequence[float], N: CoefficientNorm) -> List[SignedMembership]:
    """Los (n, m, s) con s·x ∈ P_{n,m}; a lo sumo uno para x ≠ 0."""
    vec = _vector(x, N.dim)
    size = float(np.linalg.norm(vec))
    out: List[SignedMembership] = []
    for n, m in itertools.combinations(range(N.dim), 2):
        for sign in (1, -1):
            if size > 0 and pnm_member(sign * vec, n, m, N):
                gap = float(np.linalg.norm(sign * vec / size - e_nm(n, m, N.dim)))
                out.append(SignedMembership(n=n, m=m, sign=sign, distance=gap))
    return out


def permute_vector(x: Sequence[float], perm: Sequence[int]) -> np.ndarray:
    """T e_i = e_{perm[i]}, es decir (Tx)[perm[i]] = x[i]."""
    vec = np.asarray(x, dtype=float)
    if len(perm) != vec.size or sorted(perm) != list(range(vec.size)):
        raise DimensionMismatch("perm must be a permutation of the coordinates")
    out = np.empty_like(vec)
    out[list(perm)] = vec
    return out


def coefficient_metric(N: CoefficientNorm) -> FiniteMetricSpace:
    """f visto como métrica sobre los índices (válida si f ⊂ [1/2, 1])."""
    if N.dim < 2:
        raise DimensionMismatch("a coefficient metric needs at least two indices")
    return validate_metric(N.matrix, mode=NumericMode.FLOAT)


def random_coefficient_norm(
    dim: int,
    rng: np.random.Generator,
    low: float = 0.5,
    high: float = 1.0,
    alpha: float = 1.004,
    delta: Optional[float] = None,
) -> CoefficientNorm:
    delta = (200 / 199 - alpha) if delta is None else delta
    f = np.zeros((dim, dim))
    for i, j in itertools.combinations(range(dim), 2):
        f[i, j] = f[j, i] = rng.uniform(low, high)
    return CoefficientNorm.from_matrix(f, alpha, delta)


def permutation_distortion(
    f: CoefficientNorm,
    g: CoefficientNorm,
    perm: Sequence[int],
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> PermutationDistortion:
    """Distorsión de T (permutación de coordenadas) entre ‖·‖_f y ‖·‖_g.

    maxPairGap = max |g(π n, π m) − f(n, m)|, bmUpperBound = 2·log(1 + δ·gap)
    y pointwiseCheck verifica |‖Tx‖_g − ‖x‖_f| ≤ δ·gap·‖x‖₂ sobre `samples`
    vectores sembrados.
    """
    if f.dim != g.dim or len(perm) != f.dim:
        raise DimensionMismatch("f, g and perm must share the dimension")
    F, G = f.matrix, g.matrix
    p = np.asarray(perm, dtype=int)
    pulled = G[np.ix_(p, p)]
    off = ~np.eye(f.dim, dtype=bool)
    gap = float(np.abs(pulled - F)[off].max()) if f.dim > 1 else 0.0
    delta = f.delta

    rng = np.random.default_rng(seed)
    worst = math.inf
    for x in rng.standard_normal((samples, f.dim)):
        size = float(np.linalg.norm(x))
        diff = abs(norm_eval(g, permute_vector(x, perm)) - norm_eval(f, x))
        worst = min(worst, delta * gap * size - diff)
    check = worst >= -TAU_EQ
    if not check:
        logger.warning("pointwise distortion check failed (slack %.3g)", worst)
    return PermutationDistortion(
        max_pair_gap=gap,
        bm_upper_bound=2 * math.log1p(delta * gap),
        pointwise_check=check,
        samples=samples,
        worst_slack=worst,
    )


def kadets_sum_check(
    X: NormOracle,
    Y: NormOracle,
    pairs: Sequence[Tuple[Sequence[float], Sequence[float]]],
    eps: float,
    max_subset: int = 4,
) -> bool:
    """|‖Σ_F s_i x_i‖_X − ‖Σ_F s_i y_i‖_Y| < 2|F|ε para todo F (|F| ≤ max_subset) y todo signo."""
    xs = [np.asarray(x, dtype=float) for x, _ in pairs]
    ys = [np.asarray(y, dtype=float) for _, y in pairs]
    for k, (x, y) in enumerate(zip(xs, ys)):
        if abs(X(x) - 1) > TAU_EQ or abs(Y(y) - 1) > TAU_EQ:
            raise NonUnitVector(f"pair {k} is not on the unit spheres", {"index": k})
    for size in range(1, min(max_subset, len(pairs)) + 1):
        for F in itertools.combinations(range(len(pairs)), size):
            for signs in itertools.product((1, -1), repeat=size):
                sx = sum(s * xs[i] for s, i in zip(signs, F))
                sy = sum(s * ys[i] for s, i in zip(signs, F))
                if not abs(X(sx) - Y(sy)) < 2 * size * eps:
                    return False
    return True


def lemmsep_table(dim: int, norm: Optional[NormOracle] = None) -> List[LemmsepEntry]:
    """‖e_{n,m} ± e_{n',m'}‖ para todos los pares distintos, con los valores esperados en ℓ₂."""
    if dim < 2:
        raise DimensionMismatch("lemmsep needs dim >= 2")
    measure = norm if norm is not None else EuclideanNorm(dim)
    pairs = list(itertools.combinations(range(dim), 2))
    table: List[LemmsepEntry] = []
    for a, b in itertools.combinations(pairs, 2):
        u, v = e_nm(*a, dim), e_nm(*b, dim)
        overlap = len(set(a) & set(b))
        minus, plus = measure(u - v), measure(u + v)
        exp_minus, exp_plus = (1.0, math.sqrt(3)) if overlap else (SQRT2, SQRT2)
        table.append(LemmsepEntry(
            first=a,
            second=b,
            overlap=overlap,
            minus=minus,
            plus=plus,
            expected_minus=exp_minus,
            expected_plus=exp_plus,
            deviation=max(abs(minus - exp_minus), abs(plus - exp_plus)),
        ))
    return table


# --- oráculos ---------------------------------------------------------------

class EuclideanNorm(NormOracle):
    kind = "euclidean"

    def evaluate(self, x: np.ndarray) -> float:
        return float(np.linalg.norm(x))

    def to_document(self) -> Dict[str, Any]:
        return EuclideanNormDocument(dim=self.dim).model_dump()


class CoefficientNormOracle(NormOracle):
    kind = "coeff_norm"

    def __init__(self, norm: CoefficientNorm, check_seed: int = 0):
        self._norm = norm
        self._h = norm.h
        super().__init__(norm.dim, check_seed)

    @property
    def norm(self) -> CoefficientNorm:
        return self._norm

    def evaluate(self, x: np.ndarray) -> float:
        euclid = float(np.linalg.norm(x))
        if self.dim < 2:
            return euclid
        return max(euclid, float(_pair_terms(self._h, x).max()))

    def to_document(self) -> Dict[str, Any]:
        return self._norm.model_dump()


class MaxOfFunctionalsNorm(NormOracle):
    """max(|φ_1(x)|, …, |φ_k(x)| [, ‖x‖₂])."""

    kind = "max_functionals"

    def __init__(self, functionals: Sequence[Sequence[float]], dim: int, euclidean: bool = True, check_seed: int = 0):
        self._functionals = np.asarray(functionals, dtype=float).reshape(-1, dim)
        self._euclidean = euclidean
        super().__init__(dim, check_seed)

    def evaluate(self, x: np.ndarray) -> float:
        value = float(np.abs(self._functionals @ x).max()) if len(self._functionals) else 0.0
        if self._euclidean:
            value = max(value, float(np.linalg.norm(x)))
        return value

    def to_document(self) -> Dict[str, Any]:
        return MaxOfFunctionalsDocument(
            dim=self.dim, functionals=self._functionals.tolist(), euclidean=self._euclidean
        ).model_dump()


def norm_from_document(doc: Any) -> NormOracle:
    if isinstance(doc, EuclideanNormDocument):
        return EuclideanNorm(doc.dim)
    if isinstance(doc, CoefficientNorm):
        return CoefficientNormOracle(doc)
    if isinstance(doc, MaxOfFunctionalsDocument):
        return MaxOfFunctionalsNorm(doc.functionals, doc.dim, doc.euclidean)
    raise TypeError(f"unsupported norm document {type(doc).__name__}")
