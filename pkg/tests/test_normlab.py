import math

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st
from pydantic import TypeAdapter, ValidationError

from metriclab.domain.errors import IndexOutOfRange, NonUnitVector
from metriclab.domain.metric import ClassBounds, in_class
from metriclab.domain.normlab import (
    SQRT2,
    CoefficientNormOracle,
    EuclideanNorm,
    MaxOfFunctionalsNorm,
    coefficient_metric,
    e_nm,
    kadets_sum_check,
    lemmsep_table,
    norm_eval,
    norm_from_document,
    permutation_distortion,
    permute_vector,
    pnm_member,
    pnm_radius,
    pnm_signed_membership,
    random_coefficient_norm,
)
from metriclab.domain.schemas.norms import UPPER_CONSTANT, CoefficientNorm, NormDocument


@pytest.fixture
def coeff():
    return CoefficientNorm(dim=4, f=[(0, 1, 0.5), (0, 2, 1.0), (1, 2, 0.75), (2, 3, 0.6)])


class TestCoefficientNorm:
    def test_pair_vectors_reach_their_coefficient(self, coeff):
        h = coeff.h
        for n, m in [(0, 1), (0, 2), (1, 2), (2, 3)]:
            assert norm_eval(coeff, e_nm(n, m, 4)) == pytest.approx(h[n, m])

    def test_missing_pairs_have_zero_coefficient(self, coeff):
        assert coeff.matrix[0, 3] == 0
        assert coeff.h[0, 3] == pytest.approx(coeff.alpha)

    def test_document_validation(self):
        with pytest.raises(ValidationError):
            CoefficientNorm(dim=3, alpha=1.1)
        with pytest.raises(ValidationError):
            CoefficientNorm(dim=3, f=[(0, 1, 2.0)])
        with pytest.raises(ValidationError):
            CoefficientNorm(dim=3, f=[(0, 1, 0.5), (1, 0, 0.5)])
        with pytest.raises(ValidationError):
            CoefficientNorm(dim=3, f=[(0, 3, 0.5)])

    @hyp_settings(max_examples=60, deadline=None)
    @given(st.lists(st.floats(-100, 100, allow_nan=False), min_size=4, max_size=4))
    def test_sandwich_between_euclidean_multiples(self, values):
        N = CoefficientNorm(dim=4, f=[(0, 1, 0.5), (0, 2, 1.0), (1, 2, 0.75), (2, 3, 0.6)])
        x = np.array(values)
        euclid = float(np.linalg.norm(x))
        value = norm_eval(N, x)
        assert euclid <= value + 1e-9
        assert value <= UPPER_CONSTANT * euclid + 1e-9

    def test_random_norms_are_seeded(self):
        a = random_coefficient_norm(5, np.random.default_rng(3))
        b = random_coefficient_norm(5, np.random.default_rng(3))
        assert a == b
        off = a.matrix[~np.eye(5, dtype=bool)]
        assert off.min() >= 0.5 and off.max() <= 1.0

    def test_coefficient_metric(self):
        N = random_coefficient_norm(4, np.random.default_rng(0))
        M = coefficient_metric(N)
        assert in_class(M, ClassBounds(p=0.5, q=1))


class TestPairVectors:
    def test_e_nm(self):
        assert np.linalg.norm(e_nm(0, 2, 3)) == pytest.approx(1)
        with pytest.raises(IndexOutOfRange):
            e_nm(1, 1, 3)
        with pytest.raises(IndexOutOfRange):
            e_nm(0, 3, 3)

    def test_lemmsep_values_in_euclidean_space(self):
        table = lemmsep_table(4)
        assert len(table) == 15
        assert max(entry.deviation for entry in table) < 1e-12
        overlapping = next(e for e in table if e.overlap == 1)
        assert overlapping.minus == pytest.approx(1)
        assert overlapping.plus == pytest.approx(math.sqrt(3))

    def test_cone_membership(self, coeff):
        assert pnm_member(e_nm(0, 1, 4), 0, 1, coeff)
        assert not pnm_member(e_nm(0, 2, 4), 0, 1, coeff)
        assert not pnm_member(-e_nm(0, 1, 4), 0, 1, coeff)

    def test_signed_membership(self, coeff):
        (hit,) = pnm_signed_membership(-e_nm(1, 2, 4), coeff)
        assert (hit.n, hit.m, hit.sign) == (1, 2, -1)
        assert hit.distance == pytest.approx(0, abs=1e-12)
        assert pnm_signed_membership(np.zeros(4), coeff) == []

    def test_radius(self):
        assert pnm_radius(1.0) == 0
        assert pnm_radius(UPPER_CONSTANT) < 0.1


class TestPermutations:
    def test_permute_vector(self):
        assert permute_vector([1, 2, 3], [2, 0, 1]).tolist() == [2, 3, 1]

    def test_identity_has_no_distortion(self, coeff):
        result = permutation_distortion(coeff, coeff, [0, 1, 2, 3], samples=50)
        assert result.max_pair_gap == 0
        assert result.bm_upper_bound == 0
        assert result.pointwise_check

    def test_relabelled_norm(self, coeff):
        perm = [3, 2, 1, 0]
        F = coeff.matrix
        G = np.zeros_like(F)
        G[np.ix_(perm, perm)] = F
        g = CoefficientNorm.from_matrix(G, coeff.alpha, coeff.delta)
        result = permutation_distortion(coeff, g, perm, samples=50)
        assert result.max_pair_gap == pytest.approx(0)
        assert result.pointwise_check

    def test_pointwise_bound_for_unrelated_norms(self):
        rng = np.random.default_rng(11)
        f, g = random_coefficient_norm(4, rng), random_coefficient_norm(4, rng)
        result = permutation_distortion(f, g, [0, 1, 2, 3], samples=200, seed=5)
        assert result.pointwise_check
        assert result.bm_upper_bound == pytest.approx(2 * math.log1p(f.delta * result.max_pair_gap))
        assert result.model_dump(by_alias=True)["bmUpperBound"] == result.bm_upper_bound


class TestSignedSums:
    def test_identical_pairs(self):
        E = EuclideanNorm(2)
        pairs = [([1, 0], [1, 0]), ([0, 1], [0, 1])]
        assert kadets_sum_check(E, E, pairs, eps=0.01)

    def test_rotation_keeps_sums(self):
        E = EuclideanNorm(2)
        s = 1 / SQRT2
        pairs = [([1, 0], [s, s]), ([0, 1], [-s, s])]
        assert kadets_sum_check(E, E, pairs, eps=0.01)

    def test_detects_far_pairs(self):
        E = EuclideanNorm(2)
        assert not kadets_sum_check(E, E, [([1, 0], [1, 0]), ([0, 1], [1, 0])], eps=0.01)

    def test_requires_unit_vectors(self):
        E = EuclideanNorm(2)
        with pytest.raises(NonUnitVector):
            kadets_sum_check(E, E, [([2, 0], [1, 0])], eps=0.1)


class TestOracles:
    def test_documents(self, coeff):
        adapter = TypeAdapter(NormDocument)
        oracle = norm_from_document(adapter.validate_python(coeff.model_dump()))
        assert isinstance(oracle, CoefficientNormOracle)
        assert oracle(e_nm(0, 2, 4)) == pytest.approx(coeff.h[0, 2])
        assert isinstance(norm_from_document(adapter.validate_python({"kind": "euclidean", "dim": 2})), EuclideanNorm)

    def test_max_of_functionals(self):
        N = MaxOfFunctionalsNorm([[2, 0]], dim=2)
        assert N([1, 0]) == 2
        assert N([0, 1]) == 1
        assert N.to_document()["kind"] == "max_functionals"
