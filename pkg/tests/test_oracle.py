import numpy as np
import pytest

from planardiam.errors import EmptySet, NotConnected
from planardiam.graph import build
from planardiam.harness.generators import gen_face_split, gen_grid, gen_path
from planardiam.oracle import distance_matrix, exact_diameter, exact_set_diameter
from planardiam.paths import sssp

from conftest import mixed_corpus, square_with_chord


def test_grid3():
    assert exact_diameter(gen_grid(3, 3)) == 4


@pytest.mark.parametrize("m", [1, 2, 7])
def test_path(m):
    assert exact_diameter(gen_path(m)) == m


def test_agrees_with_main_search():
    g = gen_face_split(100, (1, 100), 4)
    best = max(sssp(g, v).dist.max() for v in range(g.n))
    assert exact_diameter(g) == pytest.approx(best)


@pytest.mark.parametrize("g", mixed_corpus(8, seed=21), ids=lambda g: f"n{g.n}")
def test_methods_agree(g):
    assert np.allclose(distance_matrix(g), distance_matrix(g, "label-correcting"))


def test_matrix_properties():
    g = gen_face_split(40, (1, 9), 2)
    d = distance_matrix(g)
    assert np.all(np.diag(d) == 0) and np.allclose(d, d.T)
    assert np.all(d[:, :, None] <= d[:, None, :] + d.T[None, :, :] + 1e-9)


def test_set_diameter_consistency():
    g = gen_face_split(30, (1, 50), 6)
    everything = range(g.n)
    assert exact_set_diameter(g, everything, everything) == exact_diameter(g)
    assert exact_set_diameter(g, [3], [3]) == 0
    s, t = [0, 4, 9], [1, 20]
    assert exact_set_diameter(g, s, t) == exact_set_diameter(g, t, s)


def test_grid_split_by_middle_column():
    g = gen_grid(5, 4)
    left = [v for v in range(g.n) if v % 5 < 2]
    right = [v for v in range(g.n) if v % 5 > 2]
    manhattan = max(abs(a % 5 - b % 5) + abs(a // 5 - b // 5) for a in left for b in right)
    assert exact_set_diameter(g, left, right) == manhattan == 7


def test_zero_lengths_use_queue():
    g = build(3, [(0, 1, 0), (1, 2, 2)], [[0], [1, 2], [3]])
    assert exact_diameter(g) == 2


def test_parallel_edges_take_minimum():
    g = build(2, [(0, 1, 5), (0, 1, 2)], [[0, 2], [3, 1]])
    assert exact_diameter(g) == 2


def test_marks_respected():
    g = gen_path(6).with_marks([1, 3])
    assert exact_diameter(g) == 2


def test_errors():
    g = square_with_chord()
    with pytest.raises(EmptySet):
        exact_set_diameter(g, [], [1])
    two = build(2, [], [[], []])
    with pytest.raises(NotConnected):
        exact_diameter(two)
