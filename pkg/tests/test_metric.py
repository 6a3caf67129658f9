from fractions import Fraction

import networkx as nx
import numpy as np
import pytest

from metriclab.domain.correspondence import Correspondence, enumerate_correspondences
from metriclab.domain.errors import (
    NonPositiveOffDiagonal,
    NonZeroDiagonal,
    NotSquare,
    NotSymmetric,
    SizeLimitExceeded,
    TriangleViolation,
    WitnessInvalid,
)
from metriclab.domain.instances import RandomInstanceSpec, perturb, random_metric
from metriclab.domain.metric import (
    ClassBounds,
    WeightedGraph,
    diameter,
    graph_metric,
    in_class,
    min_distance,
    rescale_to_class,
    scale,
    submetric,
    validate_metric,
)
from metriclab.domain.numeric import NumericMode


class TestValidateMetric:
    def test_integers_read_as_rationals(self, line3):
        assert line3.mode is NumericMode.RATIONAL
        assert line3.dist(0, 2) == Fraction(3)

    def test_floats_switch_to_float_mode(self):
        M = validate_metric([[0, 0.5], [0.5, 0]])
        assert M.mode is NumericMode.FLOAT

    @pytest.mark.parametrize(
        "rows, error",
        [
            ([[0, 1], [1, 0], [1, 1]], NotSquare),
            ([], NotSquare),
            ([[0, 1], [2, 0]], NotSymmetric),
            ([[0, 0], [0, 0]], NonPositiveOffDiagonal),
            ([[1, 1], [1, 0]], NonZeroDiagonal),
            ([[0, 1, 5], [1, 0, 1], [5, 1, 0]], TriangleViolation),
        ],
    )
    def test_rejects_invalid_matrices(self, rows, error):
        with pytest.raises(error):
            validate_metric(rows)

    def test_triangle_violation_names_the_points(self):
        with pytest.raises(TriangleViolation) as info:
            validate_metric([[0, 1, 5], [1, 0, 1], [5, 1, 0]])
        assert info.value.j == 1
        assert {info.value.i, info.value.k} == {0, 2}

    def test_float_tolerance_on_symmetry(self):
        M = validate_metric([[0, 1.0], [1.0 + 1e-12, 0]])
        assert M.dist(0, 1) == M.dist(1, 0)

    def test_size_limit(self):
        rows = (np.ones((5, 5)) - np.eye(5)).tolist()
        with pytest.raises(SizeLimitExceeded):
            validate_metric(rows, max_points=4)

    def test_matrix_is_read_only(self, line3):
        with pytest.raises(ValueError):
            line3.d[0, 1] = 7


class TestOperations:
    def test_class_membership(self, line3):
        assert in_class(line3, ClassBounds(p=1, q=3))
        assert not in_class(line3, ClassBounds(p=2))
        assert not in_class(line3, ClassBounds(q=2))

    def test_class_bounds_order(self):
        with pytest.raises(ValueError):
            ClassBounds(p=3, q=2)

    def test_scale_and_rescale(self, line3):
        assert scale(line3, 2).dist(0, 2) == 6
        rescaled = rescale_to_class(line3, ClassBounds(p=1), ClassBounds(p=5))
        assert min_distance(rescaled) == 5
        assert in_class(rescaled, ClassBounds(p=5))

    def test_diameter_min_distance_submetric(self, line3):
        assert diameter(line3) == 3
        assert min_distance(line3) == 1
        sub = submetric(line3, [0, 2])
        assert sub.n == 2 and sub.dist(0, 1) == 3


class TestGraphMetric:
    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    @pytest.mark.parametrize("mode", [NumericMode.RATIONAL, NumericMode.FLOAT])
    def test_matches_networkx_shortest_paths(self, seed, mode):
        rng = np.random.default_rng(seed)
        n, cap = 7, 6
        edges = []
        G = nx.Graph()
        G.add_nodes_from(range(n))
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.4:
                    w = int(rng.integers(1, 5))
                    edges.append((i, j, w))
                    G.add_edge(i, j, weight=w)
        M = graph_metric(WeightedGraph(n=n, edges=edges), cap, mode)
        lengths = dict(nx.all_pairs_dijkstra_path_length(G))
        for i in range(n):
            for j in range(n):
                expected = 0 if i == j else min(lengths[i].get(j, cap), cap)
                assert float(M.dist(i, j)) == pytest.approx(expected)

    def test_rejects_bad_graphs(self):
        with pytest.raises(ValueError):
            WeightedGraph(n=2, edges=[(0, 0, 1)])
        with pytest.raises(ValueError):
            WeightedGraph(n=2, edges=[(0, 1, 1), (1, 0, 2)])
        with pytest.raises(ValueError):
            WeightedGraph(n=2, edges=[(0, 2, 1)])
        with pytest.raises(ValueError):
            graph_metric(WeightedGraph(n=2), 0)


class TestCorrespondence:
    def test_must_be_total(self):
        with pytest.raises(WitnessInvalid):
            Correspondence.from_pairs(2, 2, [(0, 0)])

    def test_compose_and_transpose(self):
        R = Correspondence.from_pairs(2, 3, [(0, 0), (1, 1), (1, 2)])
        S = Correspondence.from_pairs(3, 1, [(0, 0), (1, 0), (2, 0)])
        assert R.compose(S) == Correspondence.full(2, 1)
        assert R.transpose().n_a == 3

    def test_bijection(self):
        assert Correspondence.from_permutation([1, 0]).is_bijection()
        assert not Correspondence.full(2, 2).is_bijection()

    def test_enumeration_counts_total_relations(self):
        # relaciones totales en 2×2: 7
        assert sum(1 for _ in enumerate_correspondences(2, 2)) == 7


class TestInstances:
    def test_random_metric_stays_in_class(self):
        spec = RandomInstanceSpec(point_count=5, distance_range=(1, 2), seed=4)
        M = random_metric(spec)
        assert in_class(M, ClassBounds(p=1, q=2))
        assert random_metric(spec).rows() == M.rows()

    def test_perturb_keeps_bounds(self):
        rng = np.random.default_rng(9)
        M = random_metric(RandomInstanceSpec(point_count=4, distance_range=(5, 8)), rng=rng)
        N = perturb(M, Fraction(1, 2), rng, bounds=(5, 8))
        assert in_class(N, ClassBounds(p=5, q=8))
        assert np.abs((M.d - N.d).astype(float)).max() <= 0.5
