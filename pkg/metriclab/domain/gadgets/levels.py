"""
Gadgets por niveles: (puntos × {kMin..kMax}) ∪ {♣} con

    d((i,k),(j,l)) = |10k − 10l| + min{1, 2^min(k,l) · d(i,j)}
    d((i,k), ♣)    = |10k + 4| + 1

La variante HL usa sólo niveles no positivos (kMax = 0).
"""
from __future__ import annotations
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from metriclab.domain.abstractions.gadget import Gadget, GadgetFactory, Tag
from metriclab.domain.builders import GadgetDirector, MatrixMetricBuilder
from metriclab.domain.correspondence import Correspondence
from metriclab.domain.errors import DimensionMismatch, InvalidGadgetParams, SizeMismatch
from metriclab.domain.metric import FiniteMetricSpace
from metriclab.domain.numeric import NumericMode, Scalar, to_mode
from metriclab.domain.schemas.gadgets import LevelGadgetParams

CLUB: Tag = ("club",)
LEVEL_GAP = 10


def _scale(k: int, mode: NumericMode) -> Scalar:
    return Fraction(2) ** k if mode is NumericMode.RATIONAL else 2.0 ** k


def _level_distances(M: FiniteMetricSpace, points: Sequence[Tag]):
    mode = M.mode
    one = to_mode(1, mode)
    for x, s in enumerate(points):
        for t in points[x + 1:]:
            if t == CLUB:
                k = s[2]
                yield s, t, to_mode(abs(LEVEL_GAP * k + 4) + 1, mode)
                continue
            (_, i, k), (_, j, l) = s, t
            local = min(one, _scale(min(k, l), mode) * M.dist(i, j))
            yield s, t, to_mode(abs(LEVEL_GAP * (k - l)), mode) + local


class LevelGadgetFactory(GadgetFactory):
    kind = "lip-gadget"

    def params_model(self) -> type:
        return LevelGadgetParams

    def _check(self, params: LevelGadgetParams) -> None:
        if not params.k_min <= 0 <= params.k_max:
            raise InvalidGadgetParams("levels must satisfy kMin <= 0 <= kMax")

    def construct(self, source: FiniteMetricSpace, params: LevelGadgetParams) -> Gadget:
        self._check(params)
        points: List[Tag] = [("L", i, k) for k in params.levels for i in range(source.n)]
        points.append(CLUB)
        return GadgetDirector().construct(
            MatrixMetricBuilder(),
            construction=self.kind,
            points=points,
            distances=list(_level_distances(source, points)),
            mode=source.mode,
            params=params.model_dump(by_alias=True),
            source_size=source.n,
        )


class HLGadgetFactory(LevelGadgetFactory):
    kind = "hl-gadget"

    def _check(self, params: LevelGadgetParams) -> None:
        if params.k_max != 0 or params.k_min > 0:
            raise InvalidGadgetParams("the HL gadget uses levels kMin..0")


def lipschitz_gadget(M: FiniteMetricSpace, params: LevelGadgetParams) -> Gadget:
    return LevelGadgetFactory().construct(M, params)


def hl_gadget(M: FiniteMetricSpace, params: LevelGadgetParams) -> Gadget:
    return HLGadgetFactory().construct(M, params)


def level_correspondence(gadget_m: Gadget, gadget_n: Gadget, perm: Sequence[int]) -> Correspondence:
    """{(♣,♣)} ∪ {((i,k),(perm[i],k))} entre gadgets con los mismos niveles."""
    if gadget_m.n != gadget_n.n:
        raise SizeMismatch("level gadgets have different sizes")
    pairs = [(gadget_m.index(CLUB), gadget_n.index(CLUB))]
    for idx, tag in enumerate(gadget_m.tags):
        if tag != CLUB:
            _, i, k = tag
            pairs.append((idx, gadget_n.index(("L", perm[i], k))))
    return Correspondence.from_pairs(gadget_m.n, gadget_n.n, pairs)


def same_level(s: Tag, t: Tag) -> bool:
    if (s == CLUB) != (t == CLUB):
        return False
    return s == CLUB or s[2] == t[2]


def preserves_levels(gadget_m: Gadget, gadget_n: Gadget, R: Correspondence) -> bool:
    """♣ sólo con ♣ y (i,k) R (j,l) ⇒ k = l."""
    if R.n_a != gadget_m.n or R.n_b != gadget_n.n:
        raise DimensionMismatch("correspondence does not match the gadgets")
    return all(same_level(gadget_m.tags[a], gadget_n.tags[b]) for a, b in R.pairs())


def level_crossing_pairs(gadget_m: Gadget, gadget_n: Gadget) -> List[Tuple[int, int]]:
    """Pares de índices que una correspondencia que preserva niveles nunca contiene."""
    return [
        (a, b)
        for a, s in enumerate(gadget_m.tags)
        for b, t in enumerate(gadget_n.tags)
        if not same_level(s, t)
    ]


def level_slice(gadget: Gadget, k: int) -> List[int]:
    """Índices del gadget en el nivel k, ordenados por punto original."""
    return [idx for idx, t in enumerate(gadget.tags) if t != CLUB and t[2] == k]


def restrict_to_level(
    gadget_m: Gadget, gadget_n: Gadget, R: Correspondence, k: int
) -> Optional[Correspondence]:
    """Restricción de R al nivel k de ambos gadgets (None si no es total)."""
    rows = level_slice(gadget_m, k)
    cols = level_slice(gadget_n, k)
    rel = R.rel[np.ix_(rows, cols)]
    if not rel.any(axis=1).all() or not rel.any(axis=0).all():
        return None
    return Correspondence(rel)
