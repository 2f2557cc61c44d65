import json

import numpy as np
import pytest

from planardiam import RunConfig, approximate_diameter
from planardiam.errors import BadEpsilon, NotConnected
from planardiam.graph import build
from planardiam.harness.generators import gen_face_split, gen_grid, gen_path, gen_star
from planardiam.harness.sweep import within
from planardiam.oracle import distance_matrix, exact_diameter
from planardiam.paths import apsp_marked

from conftest import mixed_corpus


def small(**kw):
    # tiny halt size forces several recursion levels on small graphs
    return RunConfig(halt_size=8, **kw)


def test_single_vertex():
    assert approximate_diameter(build(1, [], [[]])).d_prime == 0


@pytest.mark.parametrize("m", [1, 5, 40])
def test_path_envelope(m):
    d = approximate_diameter(gen_path(m), small(eps_user=0.7)).d_prime
    assert m <= d <= 1.7 * m


def test_one_marked_vertex():
    assert approximate_diameter(gen_grid(6, 6).with_marks([5]), small()).d_prime == 0


def test_below_halt_is_exact():
    g = gen_face_split(50, (1, 100), 3)
    rep = approximate_diameter(g)
    assert rep.d_prime == exact_diameter(g) and rep.node_count == 1


def test_halt_apsp_examples():
    assert apsp_marked(gen_grid(3, 3)) == 4
    g = gen_face_split(30, (1, 20), 1).with_marks([2, 17])
    assert apsp_marked(g) == distance_matrix(g)[2, 17]


@pytest.mark.parametrize("eps", [0.7, 0.35, 0.1])
def test_sandwich_small_corpus(eps):
    for g in mixed_corpus(15, seed=31, n_max=200):
        rep = approximate_diameter(g, small(eps_user=eps))
        assert within(exact_diameter(g), rep.d_prime, eps)


def test_report_envelope_and_depth():
    g = gen_grid(20, 20, (1, 100), 5)
    cfg = small()
    rep = approximate_diameter(g, cfg)
    assert rep.x <= rep.d_prime <= 1.7 * 2 * rep.x
    assert rep.max_depth <= cfg.resolved_depth_cap(g.n)
    assert rep.node_count > 1 and len(rep.level_sizes) == rep.max_depth + 1
    assert rep.winner != "none"


def test_node_audit():
    """Every marked pair at every node keeps its distance within the budget."""
    g = gen_face_split(300, (1, 100), 12)
    d0 = distance_matrix(g)
    eps = 0.35
    seen = []

    def observer(event, graph, depth, **_):
        if event != "node":
            return
        mk = np.flatnonzero(graph.marked)
        if mk.size < 2:
            return
        lab = graph.label[mk]
        here = distance_matrix(graph)[np.ix_(mk, mk)]
        base = d0[np.ix_(lab, lab)]
        assert np.all(here >= base - 1e-9)
        assert np.all(here <= (1 + eps) * base + 1e-9)
        seen.append(set(lab.tolist()))

    approximate_diameter(g, small(eps_user=eps), observer)
    assert len(seen) > 3


def test_unmarking_discipline():
    g = gen_grid(15, 15, (1, 50), 2)

    def observer(event, graph, depth, **kw):
        if event == "reduced":
            parent = kw["parent"]
            allowed = set(parent.label[parent.marked].tolist())
            assert set(graph.label[graph.marked].tolist()) <= allowed

    approximate_diameter(g, small(), observer)


def test_guard_and_depth_cap():
    g = gen_grid(12, 12, (1, 9), 0)
    rep = approximate_diameter(g, RunConfig(halt_size=4, depth_cap=1))
    assert rep.depth_cap_hits > 0 and rep.max_depth == 1
    assert within(exact_diameter(g), rep.d_prime, 0.7)
    rep = approximate_diameter(g, RunConfig(halt_size=4, progress_ratio=0.0))
    assert rep.guard_trips > 0 and within(exact_diameter(g), rep.d_prime, 0.7)


def test_star_and_zero():
    assert approximate_diameter(gen_star(9), small()).d_prime == 2
    g = build(3, [(0, 1, 0), (1, 2, 0)], [[0], [1, 2], [3]])
    assert approximate_diameter(g).d_prime == 0


def test_perturbation_and_debug():
    g = gen_face_split(150, (1, 100), 8)
    rep = approximate_diameter(g, small(perturbation=True, seed=3, debug=True))
    assert within(exact_diameter(g), rep.d_prime, 0.7 + 1e-9)


def test_literal_halt_threshold_collapses_to_apsp():
    g = gen_grid(10, 10, (1, 9), 1)
    rep = approximate_diameter(g, RunConfig(paper_halt_rule=True))
    assert rep.node_count == 1 and rep.d_prime == exact_diameter(g)


def test_deterministic_report():
    g = gen_face_split(400, (1, 100), 9)
    a = approximate_diameter(g, small(seed=4)).to_dict()
    b = approximate_diameter(g, small(seed=4)).to_dict()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert "timings" not in a


def test_errors():
    with pytest.raises(BadEpsilon):
        approximate_diameter(gen_path(3), RunConfig(eps_user=0.8))
    with pytest.raises(NotConnected):
        approximate_diameter(build(2, [], [[], []]))
