from __future__ import annotations
from typing import Dict, List, Sequence, Tuple

import numpy as np

from metriclab.domain.abstractions.gadget import Gadget, GadgetFactory, Tag, tag_permutation
from metriclab.domain.abstractions.norm import NormOracle
from metriclab.domain.builders import GadgetDirector, MatrixMetricBuilder
from metriclab.domain.correspondence import Correspondence
from metriclab.domain.errors import (
    ClosureViolation,
    DimensionMismatch,
    EmptyFamily,
    NonUnitVector,
    WitnessInvalid,
)
from metriclab.domain.numeric import TAU_EQ, NumericMode
from metriclab.domain.schemas.gadgets import KadetsGadgetParams

SPHERE_TO_PATH = 10
SAME_FAMILY = 15
OTHER_FAMILY = 20


def _families(params: KadetsGadgetParams, size: int) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = []
    for F in params.families:
        if not F:
            raise EmptyFamily("families must be non-empty")
        if any(not 0 <= k < size for k in F):
            raise DimensionMismatch(f"family {F} refers to a missing sphere point")
        key = tuple(sorted(set(F)))
        if key not in out:
            out.append(key)
    return out


class KadetsGadgetFactory(GadgetFactory):
    """
    Puntos de la esfera x_i más un punto p_{F,k} por familia F y k ∈ F:
    d(x_i,x_j) = ‖x_i−x_j‖, d(x_i,p_{F,k}) = 10 + ‖x_i−x_k‖,
    d(p_{F,i},p_{F,j}) = 15 + ‖Σ_F x‖/|F|, d(p_{F,·},p_{G,·}) = 20.
    """

    kind = "kadets-gadget"
    source = "norm"

    def params_model(self) -> type:
        return KadetsGadgetParams

    def construct(self, source: NormOracle, params: KadetsGadgetParams) -> Gadget:
        X = np.asarray(params.sphere_points, dtype=float)
        if X.ndim != 2 or X.shape[1] != source.dim:
            raise DimensionMismatch(f"sphere points must be vectors of R^{source.dim}")
        for i, x in enumerate(X):
            if abs(source(x) - 1.0) > TAU_EQ:
                raise NonUnitVector(f"sphere point {i} has norm {source(x):.12g}", {"index": i})
        for i, x in enumerate(X):
            if not any(np.allclose(-x, y, rtol=0, atol=TAU_EQ) for y in X):
                raise ClosureViolation(f"sphere point {i} has no opposite in the list", {"index": i})
        families = _families(params, len(X))

        n = len(X)
        between = np.array([[source(X[i] - X[j]) for j in range(n)] for i in range(n)])
        points: List[Tag] = [("x", i) for i in range(n)]
        for F in families:
            points.extend(("p", F, k) for k in F)
        spread = {F: source(X[list(F)].sum(axis=0)) / len(F) for F in families}

        def dist(s: Tag, t: Tag) -> float:
            if s[0] == "x" and t[0] == "x":
                return between[s[1], t[1]]
            if s[0] == "x" or t[0] == "x":
                x, p = (s, t) if s[0] == "x" else (t, s)
                return SPHERE_TO_PATH + between[x[1], p[2]]
            if s[1] == t[1]:
                return SAME_FAMILY + spread[s[1]]
            return float(OTHER_FAMILY)

        distances = [(s, t, dist(s, t)) for a, s in enumerate(points) for t in points[a + 1:]]
        return GadgetDirector().construct(
            MatrixMetricBuilder(),
            construction=self.kind,
            points=points,
            distances=distances,
            mode=NumericMode.FLOAT,
            params={
                "spherePoints": X.tolist(),
                "families": [list(F) for F in families],
                "norm": source.to_document(),
            },
            source_size=n,
        )


def kadets_gadget(norm: NormOracle, params: KadetsGadgetParams) -> Gadget:
    return KadetsGadgetFactory().construct(norm, params)


def kadets_pair_map(gadget_x: Gadget, gadget_y: Gadget, perm: Sequence[int]) -> List[int]:
    """φ(x_i) = y_perm(i), φ(p_{F,j}) = q_{perm[F], perm(j)} como permutación de índices."""
    image: Dict[Tag, Tag] = {}
    for tag in gadget_x.tags:
        if tag[0] == "x":
            image[tag] = ("x", perm[tag[1]])
        else:
            _, F, j = tag
            image[tag] = ("p", tuple(sorted(perm[k] for k in F)), perm[j])
    try:
        result = tag_permutation(gadget_x, gadget_y, image)
    except KeyError as exc:
        raise WitnessInvalid(f"permutation maps onto a missing gadget point {exc}") from exc
    if result is None:
        raise WitnessInvalid("permutation does not induce a bijection between the gadgets")
    return result


def preserves_point_kinds(gadget_x: Gadget, gadget_y: Gadget, R: Correspondence) -> bool:
    """R relaciona puntos de la esfera sólo con puntos de la esfera (y p con p)."""
    if R.n_a != gadget_x.n or R.n_b != gadget_y.n:
        raise DimensionMismatch("correspondence does not match the gadgets")
    return all(gadget_x.tags[a][0] == gadget_y.tags[b][0] for a, b in R.pairs())
