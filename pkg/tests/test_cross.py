import numpy as np
import pytest

from planardiam.cross import (
    RoundedInstance,
    TripartiteInstance,
    build_tripartite,
    cross_diameter,
    maxmin_engine,
    maxmin_reference,
    round_instance,
    unrounded_value,
)
from planardiam.errors import EmptySide, NoPortals, ZeroScale
from planardiam.graph import triangulate
from planardiam.harness.generators import gen_grid, gen_path
from planardiam.oracle import distance_matrix, exact_set_diameter
from planardiam.paths import bootstrap_x
from planardiam.portals import Epsilon, regular_spacing, select_on_separator
from planardiam.separator import find_separator


def rounded(left, right):
    return RoundedInstance(np.array(left), np.array(right), 1.0, 1.0)


class TestEngine:
    def test_hand_example(self):
        r = rounded([[1, 3], [2, 2]], [[3, 1]])
        value, (i, j) = maxmin_engine(r)
        assert value == 4 and (i, j) == (0, 0)
        assert maxmin_reference(r) == 4

    def test_single_portal(self):
        r = rounded([[1]], [[1]])
        assert maxmin_engine(r)[0] == 2 == maxmin_reference(r)

    def test_random_matches_reference(self):
        rng = np.random.default_rng(11)
        for _ in range(30):
            a = rng.integers(1, 11, (200, 8))
            b = rng.integers(1, 11, (200, 8))
            r = rounded(a, b)
            value, (i, j) = maxmin_engine(r)
            assert value == maxmin_reference(r) == (a[i] + b[j]).min()

    def test_duplicates_do_not_matter(self):
        a = np.array([[1, 4], [3, 2]])
        b = np.array([[2, 2], [4, 1]])
        base = maxmin_engine(rounded(a, b))[0]
        assert maxmin_engine(rounded(np.repeat(a, 5, 0)[::-1], np.repeat(b, 3, 0)))[0] == base

    def test_empty_side(self):
        r = RoundedInstance(np.zeros((0, 2), int), np.ones((3, 2), int), 1.0, 1.0)
        with pytest.raises(EmptySide):
            maxmin_engine(r)
        with pytest.raises(EmptySide):
            maxmin_reference(r)


class TestRounding:
    def test_arithmetic(self):
        t = TripartiteInstance(np.arange(1), np.array([[7.2]]), np.arange(1), np.array([[10.0]]),
                               10.0, 5)
        r = round_instance(t)
        assert r.left[0, 0] == 4 and r.right[0, 0] == 5

    def test_zero_rounds_to_one_unit(self):
        t = TripartiteInstance(np.arange(1), np.array([[0.0]]), np.arange(1), np.array([[3.0]]),
                               3.0, 3)
        assert round_instance(t).left[0, 0] == 1

    def test_zero_scale(self):
        t = TripartiteInstance(np.arange(1), np.zeros((1, 1)), np.arange(1), np.zeros((1, 1)), 0.0, 4)
        with pytest.raises(ZeroScale):
            round_instance(t)

    def test_bounds_hold_on_awkward_values(self):
        rng = np.random.default_rng(5)
        vals = rng.random((50, 6)) * 37.3
        vals[0, 0] = vals.max()
        t = TripartiteInstance(np.arange(50), vals, np.arange(0), np.zeros((0, 6)),
                               float(vals.max()), 7)
        r = round_instance(t)
        assert r.left.min() >= 1 and r.left.max() <= 7
        err = r.left * r.unit - vals
        assert np.all(err >= 0) and np.all(err < r.unit + 1e-12)


class TestTripartite:
    def test_single_portal_path(self):
        g = gen_path(1)
        t = build_tripartite(g, [0], [1], [0], 10)
        assert t.left.tolist() == [[1.0]] and t.right.tolist() == [[0.0]]

    def test_two_portals(self):
        g = gen_path(2)
        t = build_tripartite(g, [1, 0], [2], [0], 10)
        assert t.left.tolist() == [[1.0, 2.0]]

    def test_grid_columns(self):
        g = gen_grid(3, 3)
        middle = [1, 4, 7]
        t = build_tripartite(g, middle, [0, 3, 6], [2, 5, 8], 10)
        for row, v in zip(t.left, t.left_ids):
            assert row.tolist() == [abs(v // 3 - p // 3) + 1 for p in middle]

    def test_marked_separator_on_both_sides(self):
        g = gen_grid(3, 3)
        t = build_tripartite(g, [4], [0, 4], [4, 8], 10)
        assert 4 in t.left_ids and 4 in t.right_ids

    def test_no_portals(self):
        with pytest.raises(NoPortals):
            build_tripartite(gen_path(2), [], [0], [1], 10)


class TestCrossDiameter:
    def test_path_single_portal(self):
        # a - v1 - b with v1 = 1 the only portal
        g = gen_path(2)
        res = cross_diameter(g, [1], [0, 1], [1, 2], x=1.0, k=10)
        assert 2.0 <= res.value <= (1 + 0.2) ** 2 * 2.0

    def test_only_zero_distances(self):
        g = gen_path(1).with_marks([0])
        res = cross_diameter(g, [0], [0], [0], x=0.5, k=10)
        assert res.value == 0.0

    def test_separator_rounding_floor(self):
        g = gen_path(2, length=2.0).with_marks([0, 2])
        res = cross_diameter(g, [0, 2], [0], [0, 2], x=1.0, k=4)
        unit = 4.0 / 4
        assert 0 < res.value <= 4.0 + 2 * unit

    def test_large_x_skips(self):
        g = gen_path(2)
        assert cross_diameter(g, [1], [0], [2], x=100.0, k=10).value == 0.0

    def test_grid_sandwich(self):
        g = gen_grid(6, 6, (1, 20), 4)
        eps = Epsilon.from_user(0.7)
        x = bootstrap_x(g)
        t, _ = triangulate(g)
        dec = find_separator(t, 0)
        ps = select_on_separator(dec.tree.dist, dec.P, dec.Q, regular_spacing(eps, x), 8 * x)
        inside = np.flatnonzero(dec.side != 1)
        outside = np.flatnonzero(dec.side != 0)
        res = cross_diameter(t, ps.portals, inside, outside, x, eps.k)
        d = exact_set_diameter(g, inside, outside)
        assert d <= res.value + 1e-9
        assert res.value <= (1 + 2 * eps.eff) ** 2 * max(d, x) + 1e-9
        tri = build_tripartite(t, ps.portals, inside, outside, eps.k)
        raw = unrounded_value(tri)
        dm = distance_matrix(g)
        assert raw >= d - 1e-9
        i, j = res.witness
        assert dm[i, j] <= res.value
