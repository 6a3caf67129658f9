"""
Gadget de la reducción Banach–Mazur -> Lipschitz.

Vértices: los vectores de V (a ≠ b a distancia 15), caminos p^{m,1..m}_{a,b}
de peso K^m_{a,b} = max{2, min{3, c_m·ν(a−b)}} para a ⪯ b y m = 7..L,
f-caminos a –7– f^1 –10– … –10– q·a que codifican la multiplicación por q,
y triángulos x^1, x^2, x^3 (aristas 5) que codifican a + b. El resto de
distancias es la métrica de grafo acotada por 15.
"""
from __future__ import annotations
import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from metriclab.domain.abstractions.gadget import Gadget, GadgetFactory, Tag, tag_permutation
from metriclab.domain.abstractions.norm import NormOracle
from metriclab.domain.builders import GadgetDirector, GraphMetricBuilder
from metriclab.domain.errors import (
    ClosureViolation,
    CoverageViolation,
    DimensionMismatch,
    InvalidGadgetParams,
    WitnessInvalid,
)
from metriclab.domain.numeric import NumericMode
from metriclab.domain.schemas.gadgets import BmGadgetParams

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]

VECTOR_GAP = 15
F_FIRST = 7
F_STEP = 10
TRIANGLE = 5
BM_CAP = 15
FIRST_INDEX = 7
C_START = Fraction(17, 8)
C_RATIO = Fraction(16, 15)
WINDOW = (2.0, 9 / 4)


def k_weight(c_m: float, r: float) -> float:
    return max(2.0, min(3.0, float(c_m) * float(r)))


def _hits(c: Sequence[float], r: float) -> bool:
    return any(WINDOW[0] < cm * r < WINDOW[1] for cm in c)


def c_sequence(distances: Iterable[float]) -> List[float]:
    """c_7, c_8, … = (17/8)(16/15)^(i−7), hasta cubrir (2/r, 9/(4r)) para cada r > 0."""
    rs = sorted({float(r) for r in distances if r > 0})
    if not rs:
        return [float(C_START)]
    if float(C_START) * rs[-1] >= WINDOW[1]:
        raise CoverageViolation(
            f"distance {rs[-1]:.6g} is too large for the grid starting at c_7 = 17/8; "
            "pass the c sequence explicitly (params.c) to cover it",
            {"distance": rs[-1]},
        )
    c = [float(C_START)]
    while c[-1] * rs[0] <= WINDOW[0]:
        c.append(float(C_START * C_RATIO ** len(c)))
    uncovered = [r for r in rs if not _hits(c, r)]
    if uncovered:
        raise CoverageViolation(
            f"no c_m lands in (2, 9/4) for distance {uncovered[0]:.6g}; pass the c sequence explicitly (params.c)",
            {"distance": uncovered[0]},
        )
    return c


def rational_index(rationals: Iterable[Fraction]) -> Dict[Fraction, int]:
    """q -> 2, 3, … en orden de |numerador| + denominador (y valor en caso de empate)."""
    ordered = sorted(set(rationals), key=lambda q: (abs(q.numerator) + q.denominator, q))
    return {q: 2 + k for k, q in enumerate(ordered)}


def _scale(q: Fraction, a: Vector) -> Vector:
    return tuple(q * x for x in a)


def _add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def _diff(a: Vector, b: Vector) -> List[float]:
    return [float(x - y) for x, y in zip(a, b)]


def _closed_rationals(V: Sequence[Vector]) -> List[Fraction]:
    """Todos los q con q·a ∈ V para todo a ∈ V."""
    members = set(V)
    a0 = V[0]
    lead = next(k for k, x in enumerate(a0) if x != 0)
    out = []
    for b in V:
        q = b[lead] / a0[lead]
        if _scale(q, a0) == b and all(_scale(q, a) in members for a in V):
            out.append(q)
    return out


class BanachMazurGadgetFactory(GadgetFactory):
    kind = "bm-gadget"
    source = "norm"

    def params_model(self) -> type:
        return BmGadgetParams

    def construct(self, source: NormOracle, params: BmGadgetParams) -> Gadget:
        raw = [tuple(Fraction(x) for x in v) for v in params.vectors]
        if len(raw[0]) != source.dim:
            raise DimensionMismatch(f"vectors live in dimension {len(raw[0])}, the norm in {source.dim}")
        if len(set(raw)) != len(raw):
            raise InvalidGadgetParams("vectors must be distinct")
        if any(all(x == 0 for x in v) for v in raw):
            raise InvalidGadgetParams("vectors must be non-zero")
        members = set(raw)
        for v in raw:
            if _scale(Fraction(-1), v) not in members:
                raise ClosureViolation("vector list is not symmetric", {"vector": [str(x) for x in v]})
        V = sorted(raw)
        nu = {(a, b): source(_diff(a, b)) for a in V for b in V}

        if params.c is not None:
            c = [float(x) for x in params.c]
            for a in V:
                for b in V:
                    if a != b and not _hits(c, nu[(a, b)]):
                        raise CoverageViolation("no c_m lands in (2, 9/4) for a vector pair")
        else:
            c = c_sequence(nu[(a, b)] for a in V for b in V if a != b)

        if params.rationals is not None:
            qs = [Fraction(q) for q in params.rationals]
            for q in qs:
                if any(_scale(q, a) not in members for a in V):
                    raise ClosureViolation(f"q·a leaves the vector list for q = {q}")
        else:
            qs = _closed_rationals(V)
        index = rational_index(qs)

        if params.sums is not None:
            sums = []
            for i, j in params.sums:
                a, b = sorted((raw[i], raw[j]))
                if _add(a, b) not in members:
                    raise ClosureViolation(f"a + b is missing for the pair ({i}, {j})")
                sums.append((a, b))
        else:
            sums = [(a, b) for x, a in enumerate(V) for b in V[x:] if _add(a, b) in members]

        points: List[Tag] = [("v", a) for a in V]
        edges: List[Tuple[Tag, Tag, float]] = [
            (("v", a), ("v", b), VECTOR_GAP) for x, a in enumerate(V) for b in V[x + 1:]
        ]
        for x, a in enumerate(V):
            for b in V[x:]:
                for m, cm in enumerate(c, start=FIRST_INDEX):
                    w = k_weight(cm, nu[(a, b)])
                    path = [("v", a)] + [("p", a, b, m, k) for k in range(1, m + 1)] + [("v", b)]
                    points.extend(path[1:-1])
                    edges.extend((s, t, w) for s, t in zip(path, path[1:]))
        for a in V:
            for q, length in index.items():
                chain = [("f", a, q, k) for k in range(1, length + 1)]
                points.extend(chain)
                edges.append((("v", a), chain[0], F_FIRST))
                edges.extend((s, t, F_STEP) for s, t in zip(chain, chain[1:]))
                edges.append((chain[-1], ("v", _scale(q, a)), F_STEP))
        for a, b in sums:
            x1, x2, x3 = (("x", a, b, i) for i in (1, 2, 3))
            points.extend((x1, x2, x3))
            edges.extend([
                (("v", a), x1, TRIANGLE),
                (("v", b), x2, TRIANGLE),
                (x1, x3, TRIANGLE),
                (x2, x3, TRIANGLE),
                (x3, ("v", _add(a, b)), TRIANGLE),
            ])

        logger.debug("bm gadget: %d vectors, c-grid up to m=%d, %d rationals", len(V), FIRST_INDEX + len(c) - 1, len(index))
        return GadgetDirector().construct(
            GraphMetricBuilder(cap=float(BM_CAP)),
            construction=self.kind,
            points=points,
            distances=edges,
            mode=NumericMode.FLOAT,
            params={
                "vectors": [[str(x) for x in a] for a in V],
                "c": c,
                "rationals": {str(q): k for q, k in index.items()},
                "sums": [[[str(x) for x in a], [str(x) for x in b]] for a, b in sums],
                "norm": source.to_document(),
            },
            source_size=len(V),
        )


def bm_gadget(norm: NormOracle, params: BmGadgetParams) -> Gadget:
    return BanachMazurGadgetFactory().construct(norm, params)


def bm_gadget_map(gadget_v: Gadget, gadget_w: Gadget, vector_map: Dict[Vector, Vector]) -> List[int]:
    """Biyección entre gadgets inducida por T: V -> W (los caminos se invierten si T cambia el orden)."""
    swap = {1: 2, 2: 1, 3: 3}
    image: Dict[Tag, Tag] = {}
    try:
        for tag in gadget_v.tags:
            kind = tag[0]
            if kind == "v":
                image[tag] = ("v", vector_map[tag[1]])
            elif kind == "p":
                _, a, b, m, k = tag
                ta, tb = vector_map[a], vector_map[b]
                image[tag] = ("p", ta, tb, m, k) if ta <= tb else ("p", tb, ta, m, m + 1 - k)
            elif kind == "f":
                _, a, q, k = tag
                image[tag] = ("f", vector_map[a], q, k)
            else:
                _, a, b, i = tag
                ta, tb = vector_map[a], vector_map[b]
                image[tag] = ("x", ta, tb, i) if ta <= tb else ("x", tb, ta, swap[i])
        perm: Optional[List[int]] = tag_permutation(gadget_v, gadget_w, image)
    except KeyError as exc:
        raise WitnessInvalid(f"vector map does not cover gadget point {exc}") from exc
    if perm is None:
        raise WitnessInvalid("vector map does not induce a bijection between the gadgets")
    return perm
