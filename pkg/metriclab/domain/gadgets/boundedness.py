"""
Reducción M_5 -> M^3.

Cada par de puntos originales m_i, m_j (i < j) se une por un camino de puntos
p_{i,j,k}, k ∈ I_{i,j} = {k ∈ Z : |k| < d(i,j)/2}, con
d'(m_i, p_{i,j,k}) = d(i,j)/2 + k y d'(m_j, p_{i,j,k}) = d(i,j)/2 − k.
El resto de distancias sale del cierre por caminos más cortos acotado por 3.
"""
from __future__ import annotations
import math
from typing import Dict, List, Sequence, Tuple

import numpy as np

from metriclab.domain.abstractions.gadget import Gadget, GadgetFactory, Tag
from metriclab.domain.builders import GadgetDirector, GraphMetricBuilder
from metriclab.domain.correspondence import Correspondence
from metriclab.domain.errors import DimensionMismatch, InputNotInM5, SizeMismatch
from metriclab.domain.metric import ClassBounds, FiniteMetricSpace, in_class
from metriclab.domain.numeric import NumericMode, Scalar, half, to_mode
from metriclab.domain.schemas.gadgets import BackwardRelations, BoundGadgetParams

BOUND_CAP = 3
SEPARATION = 5


def path_radius(d: Scalar) -> int:
    """Mayor k con |k| < d/2."""
    return math.ceil(half(d)) - 1


def _pair_edges(i: int, j: int, d: Scalar) -> List[Tuple[Tag, Tag, Scalar]]:
    K = path_radius(d)
    hd = half(d)
    ks = range(-K, K + 1)
    edges: List[Tuple[Tag, Tag, Scalar]] = [(("m", i), ("m", j), d)]
    for k in ks:
        p = ("p", i, j, k)
        edges.append((("m", i), p, hd + k))
        edges.append((("m", j), p, hd - k))
        for k2 in ks:
            if k2 > k:
                edges.append((p, ("p", i, j, k2), k2 - k))
    return edges


class BoundednessGadgetFactory(GadgetFactory):
    kind = "bound"

    def params_model(self) -> type:
        return BoundGadgetParams

    def construct(self, source: FiniteMetricSpace, params: BoundGadgetParams = None) -> Gadget:
        if not in_class(source, ClassBounds(p=SEPARATION)):
            raise InputNotInM5("input has a non-zero distance below 5")
        mode = source.mode
        n = source.n
        points: List[Tag] = [("m", i) for i in range(n)]
        edges: List[Tuple[Tag, Tag, Scalar]] = []
        for i in range(n):
            for j in range(i + 1, n):
                K = path_radius(source.dist(i, j))
                points.extend(("p", i, j, k) for k in range(-K, K + 1))
                edges.extend(_pair_edges(i, j, source.dist(i, j)))
        return GadgetDirector().construct(
            GraphMetricBuilder(cap=to_mode(BOUND_CAP, mode)),
            construction=self.kind,
            points=points,
            distances=edges,
            mode=mode,
            source_size=n,
        )


def bound(M: FiniteMetricSpace) -> Gadget:
    return BoundednessGadgetFactory().construct(M, BoundGadgetParams())


def bound_case_formula(M: FiniteMetricSpace, gadget: Gadget) -> np.ndarray:
    """Distancias del gadget por casos explícitos, sin cierre por grafos.

    min(d', 3) en las aristas dadas; para puntos de caminos distintos que
    comparten un extremo i, min(d'(x, m_i) + d'(m_i, y), 3); 3 en el resto.
    """
    cap = to_mode(BOUND_CAP, M.mode)
    direct: Dict[Tuple[Tag, Tag], Scalar] = {}
    for i in range(M.n):
        for j in range(i + 1, M.n):
            for a, b, w in _pair_edges(i, j, M.dist(i, j)):
                direct[(a, b)] = direct[(b, a)] = w

    def via(x: Tag, y: Tag) -> Scalar:
        shared = set(x[1:3]) & set(y[1:3])
        if x[0] != "p" or y[0] != "p" or x[1:3] == y[1:3] or not shared:
            return cap
        (i,) = shared
        return min(direct[(x, ("m", i))] + direct[(("m", i), y)], cap)

    tags = gadget.tags
    out = np.empty((len(tags), len(tags)), dtype=object if M.mode is NumericMode.RATIONAL else float)
    for a, x in enumerate(tags):
        for b, y in enumerate(tags):
            if a == b:
                out[a, b] = to_mode(0, M.mode)
            elif (x, y) in direct:
                out[a, b] = min(direct[(x, y)], cap)
            else:
                out[a, b] = via(x, y)
    return out


def _oriented(a: int, b: int, k: int) -> Tag:
    return ("p", a, b, k) if a < b else ("p", b, a, -k)


def bound_correspondence(
    M: FiniteMetricSpace,
    N: FiniteMetricSpace,
    perm: Sequence[int],
    gadget_m: Gadget = None,
    gadget_n: Gadget = None,
) -> Correspondence:
    """Correspondencia entre bound(M) y bound(N) inducida por la biyección perm.

    Originales con originales; en cada camino los índices comunes se emparejan
    uno a uno y los índices sobrantes se pegan al extremo más cercano.
    """
    if M.n != N.n or len(perm) != M.n:
        raise SizeMismatch("bound_correspondence needs a bijection between equal-size spaces")
    gm = gadget_m if gadget_m is not None else bound(M)
    gn = gadget_n if gadget_n is not None else bound(N)
    pairs: List[Tuple[Tag, Tag]] = [(("m", i), ("m", perm[i])) for i in range(M.n)]
    for i in range(M.n):
        for j in range(i + 1, M.n):
            a, b = perm[i], perm[j]
            km = path_radius(M.dist(i, j))
            kn = path_radius(N.dist(a, b))
            for k in range(-min(km, kn), min(km, kn) + 1):
                pairs.append((("p", i, j, k), _oriented(a, b, k)))
            for k in range(kn + 1, km + 1):
                pairs.append((("p", i, j, -k), ("m", a)))
                pairs.append((("p", i, j, k), ("m", b)))
            for k in range(km + 1, kn + 1):
                pairs.append((("m", i), _oriented(a, b, -k)))
                pairs.append((("m", j), _oriented(a, b, k)))
    return Correspondence.from_pairs(gm.n, gn.n, [(gm.index(s), gn.index(t)) for s, t in pairs])


def pi_from_gadget_witness(
    gadget_m: Gadget,
    gadget_n: Gadget,
    R: Correspondence,
    eps: float,
) -> BackwardRelations:
    """π = {(i, j) : ∃y, m_i R y y d(y, n_j) < 3ε}; τ análogo en sentido contrario."""
    if R.n_a != gadget_m.n or R.n_b != gadget_n.n:
        raise DimensionMismatch("correspondence does not match the gadgets")
    originals_m = gadget_m.indices("m")
    originals_n = gadget_n.indices("m")
    Dm = gadget_m.space.d.astype(float)
    Dn = gadget_n.space.d.astype(float)
    reach = 3 * float(eps)

    pi = []
    for i, gi in enumerate(originals_m):
        related = np.flatnonzero(R.rel[gi])
        for j, gj in enumerate(originals_n):
            if (Dn[related, gj] < reach).any():
                pi.append((i, j))
    tau = []
    for j, gj in enumerate(originals_n):
        related = np.flatnonzero(R.rel[:, gj])
        for i, gi in enumerate(originals_m):
            if (Dm[related, gi] < reach).any():
                tau.append((j, i))
    return BackwardRelations(eps=float(eps), pi=pi, tau=tau, n=len(originals_m))
