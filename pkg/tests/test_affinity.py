"""Affinity functions: formulas on small graphs plus structural invariants."""

import random

import numpy as np
import pytest

from semnet import (
    AffinityMatrix,
    AlignmentError,
    Graph,
    best_common_friend,
    best_friend,
    convex_combine,
    machiavelli,
    mixed_affinity,
    tnorm_combine,
    write_affinity_tsv,
)

from oracles import random_graph


def two_node() -> Graph:
    g = Graph()
    g.add_edge("x", "y", 3.0)
    return g


def triangle() -> Graph:
    g = Graph()
    g.add_edge("a", "b", 1.0)
    g.add_edge("a", "c", 3.0)
    g.add_edge("b", "c", 2.0)
    g.add_edge("c", "a", 2.0)
    return g


class TestBestFriend:
    def test_shares_of_outgoing_weight(self):
        f = best_friend(triangle())
        assert f.value("a", "b") == pytest.approx(0.25)
        assert f.value("a", "c") == pytest.approx(0.75)
        assert f.value("b", "c") == 1.0
        assert f.value("c", "a") == 1.0

    def test_sink_row_is_zero(self):
        f = best_friend(two_node())
        assert np.all(f.row("y") == 0.0)

    def test_rows_stochastic_or_zero(self):
        rng = random.Random(11)
        for _ in range(20):
            g = random_graph(rng, max_nodes=9)
            f = best_friend(g)
            sums = f.values.sum(axis=1)
            for lab, s in zip(f.labels, sums):
                if g.degree(lab).out_degree:
                    assert s == pytest.approx(1.0, abs=1e-9)
                else:
                    assert s == 0.0


class TestBestCommonFriend:
    def test_strongest_shared_contact(self):
        # x and y both point at m (weights 1 vs 2) and x also at z (3).
        g = Graph()
        g.add_edge("x", "m", 1.0)
        g.add_edge("x", "z", 3.0)
        g.add_edge("y", "m", 2.0)
        f = best_common_friend(g)
        # max_a min(C(x,a), C(y,a)) = min(1, 2) = 1, over total 4.
        assert f.value("x", "y") == pytest.approx(0.25)
        # From y's side the denominator is its own total, 2.
        assert f.value("y", "x") == pytest.approx(0.5)

    def test_no_shared_contact_is_zero(self):
        g = Graph()
        g.add_edge("x", "a", 1.0)
        g.add_edge("y", "b", 1.0)
        f = best_common_friend(g)
        assert f.value("x", "y") == 0.0

    def test_bounds_hold(self):
        rng = random.Random(13)
        for _ in range(20):
            f = best_common_friend(random_graph(rng, max_nodes=8))
            assert np.all(f.values >= 0.0)
            assert np.all(f.values <= 1.0 + 1e-12)


class TestMachiavelli:
    def test_influence_gap_on_path(self):
        # a->b->c: influence of a is total degree of b (2), of b is degree
        # of c (1), of c is 0.
        g = Graph()
        g.add_edge("a", "b", 1.0)
        g.add_edge("b", "c", 1.0)
        f = machiavelli(g)
        assert f.value("a", "b") == pytest.approx(0.5)
        assert f.value("b", "a") == pytest.approx(0.5)
        # b vs c: |1 - 0| / 1 -> 0.
        assert f.value("b", "c") == 0.0

    def test_zero_influence_pair_scores_one(self):
        g = Graph()
        g.add_edge("a", "b", 1.0)
        g.add_edge("a", "c", 1.0)
        f = machiavelli(g)
        # b and c both have zero influence: the 0/0 corner reads as 1.
        assert f.value("b", "c") == 1.0

    def test_symmetric_off_diagonal(self):
        rng = random.Random(17)
        for _ in range(20):
            f = machiavelli(random_graph(rng, max_nodes=9))
            assert np.array_equal(f.values, f.values.T)
            assert np.all(np.diag(f.values) == 0.0)


class TestCombinators:
    def test_convex_blend_value(self):
        g = triangle()
        bf = best_friend(g)
        mach = machiavelli(g)
        mixed = convex_combine(bf, mach, 0.4)
        expected = 0.4 * bf.value("a", "b") + 0.6 * mach.value("a", "b")
        assert mixed.value("a", "b") == pytest.approx(expected)

    def test_alpha_bounds(self):
        g = triangle()
        bf = best_friend(g)
        with pytest.raises(ValueError):
            convex_combine(bf, bf, 1.5)

    def test_alignment_enforced(self):
        bf1 = best_friend(triangle())
        bf2 = best_friend(two_node())
        with pytest.raises(AlignmentError):
            convex_combine(bf1, bf2, 0.5)

    def test_tnorm_minimum_and_product(self):
        labels = ("p", "q")
        a = AffinityMatrix(labels, np.array([[0.0, 0.7], [0.2, 0.0]]))
        b = AffinityMatrix(labels, np.array([[0.0, 0.3], [0.9, 0.0]]))
        assert tnorm_combine([a, b], "minimum").value("p", "q") == pytest.approx(0.3)
        assert tnorm_combine([a, b], "product").value("p", "q") == pytest.approx(0.21)

    def test_tnorm_lukasiewicz_clips_at_zero(self):
        labels = ("p", "q")
        a = AffinityMatrix(labels, np.array([[0.0, 0.7], [0.8, 0.0]]))
        b = AffinityMatrix(labels, np.array([[0.0, 0.3], [0.5, 0.0]]))
        out = tnorm_combine([a, b], "lukasiewicz")
        assert out.value("p", "q") == 0.0
        assert out.value("q", "p") == pytest.approx(0.3)

    def test_tnorm_needs_two(self):
        a = best_friend(triangle())
        with pytest.raises(ValueError):
            tnorm_combine([a], "minimum")
        with pytest.raises(ValueError):
            tnorm_combine([a, a], "median")


class TestMixedAffinity:
    def test_two_node_value(self):
        # Best friend 1, influence similarity 0: blend is 0.9.
        f = mixed_affinity(two_node())
        assert f.value("x", "y") == pytest.approx(0.9)

    def test_support_matches_best_friend(self):
        rng = random.Random(23)
        for _ in range(20):
            g = random_graph(rng, max_nodes=9)
            bf = best_friend(g)
            mixed = mixed_affinity(g)
            assert np.array_equal(mixed.values == 0.0, bf.values == 0.0)

    def test_values_within_unit_interval(self):
        rng = random.Random(29)
        for _ in range(10):
            f = mixed_affinity(random_graph(rng, max_nodes=9))
            assert np.all(f.values >= 0.0)
            assert np.all(f.values <= 1.0 + 1e-12)


class TestAffinityMatrixType:
    def test_shape_checked(self):
        with pytest.raises(ValueError):
            AffinityMatrix(("a", "b"), np.zeros((3, 3)))

    def test_row_lookup(self):
        f = best_friend(triangle())
        row = f.row("a")
        assert row[f.index_of("c")] == pytest.approx(0.75)

    def test_tsv_export_sorted_nonzero(self, tmp_path):
        f = best_friend(two_node())
        out = tmp_path / "aff.tsv"
        write_affinity_tsv(f, str(out))
        assert out.read_text() == "x\ty\t1.0\n"
