import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from planardiam.errors import (
    MalformedRotation,
    NegativeLength,
    NonPlanarEmbedding,
    NotConnected,
)
from planardiam.graph import (
    EmbeddedGraph,
    MutableGraph,
    build,
    contract_degree2,
    embed_by_coordinates,
    extract_induced,
    faces,
    restrict,
    simplify,
    triangulate,
    validate,
)
from planardiam.harness.generators import gen_face_split, gen_grid, gen_path, gen_star
from planardiam.oracle import distance_matrix

from conftest import mixed_corpus, path3, square, square_with_chord, triangle


class TestBuild:
    def test_triangle_has_two_faces(self):
        cert = validate(triangle())
        assert cert.ok and cert.faces == 2

    def test_single_vertex_has_one_face(self):
        g = build(1, [], [[]])
        cert = validate(g)
        assert cert.ok and cert.faces == 1 and cert.components == 1

    def test_square_with_chord_has_three_faces(self):
        assert len(faces(square_with_chord())) == 3

    def test_rejects_negative_length(self):
        with pytest.raises(NegativeLength):
            build(2, [(0, 1, -1)], [[0], [1]])

    def test_rejects_dart_at_wrong_vertex(self):
        with pytest.raises(MalformedRotation):
            build(2, [(0, 1, 1)], [[1], [0]])

    def test_rejects_missing_dart(self):
        with pytest.raises(MalformedRotation):
            build(3, [(0, 1, 1), (1, 2, 1)], [[0], [1], [3]])

    def test_rejects_self_loop(self):
        with pytest.raises(MalformedRotation):
            build(1, [(0, 0, 1)], [[0, 1]])

    def test_k5_with_any_rotation_fails_euler(self):
        edges = [(u, v, 1) for u in range(5) for v in range(u + 1, 5)]
        rot = [[] for _ in range(5)]
        for i, (u, v, _) in enumerate(edges):
            rot[u].append(2 * i)
            rot[v].append(2 * i + 1)
        with pytest.raises(NonPlanarEmbedding):
            build(5, edges, rot)

    def test_coordinates_match_explicit_rotation(self):
        g = embed_by_coordinates(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (0, 2, 1)],
                                 [(0, 0), (1, 0), (1, 1), (0, 1)])
        assert validate(g).ok and len(faces(g)) == 3

    def test_crossing_coordinates_fail(self):
        # K4 drawn with both diagonals of a square crossing, plus a fifth vertex
        # joined to all: K5 has no crossing-free drawing
        pts = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 3)]
        edges = [(u, v, 1) for u in range(5) for v in range(u + 1, 5)]
        with pytest.raises(NonPlanarEmbedding):
            embed_by_coordinates(5, edges, pts)


class TestFaces:
    def test_triangle_faces(self):
        assert sorted(len(f) for f in faces(triangle())) == [3, 3]

    def test_square_faces(self):
        assert sorted(len(f) for f in faces(square())) == [4, 4]

    def test_single_square_grid(self):
        assert len(faces(gen_grid(2, 2))) == 2

    def test_every_dart_in_one_face(self, corpus):
        for g in corpus:
            darts = [d for f in faces(g) for d in f]
            assert sorted(darts) == list(range(g.num_darts))

    def test_face_successor(self):
        g = gen_grid(3, 3)
        for f in faces(g):
            for a, b in zip(f, f[1:] + f[:1]):
                assert g.nxt[g.twin[a]] == b


class TestTriangulate:
    def test_triangle_unchanged(self):
        t, added = triangulate(triangle())
        assert added == set() and t.num_darts == 6

    def test_square_gets_two_chords(self):
        t, added = triangulate(square())
        assert len(added) == 4
        assert all(len(f) == 3 for f in faces(t))

    def test_path_becomes_triangle(self):
        t, added = triangulate(path3())
        assert len(added) == 2
        assert sorted(len(f) for f in faces(t)) == [3, 3]

    def test_star_is_triangulated(self):
        t, _ = triangulate(gen_star(5))
        assert validate(t).ok
        assert all(len(f) <= 3 for f in faces(t))

    def test_original_darts_preserved(self, corpus):
        for g in corpus:
            t, added = triangulate(g)
            m = g.num_darts
            assert np.array_equal(t.origin[:m], g.origin)
            assert np.array_equal(t.length[:m], g.length)
            assert not t.artificial[:m].any() and t.artificial[m:].all()
            assert added == set(range(m, t.num_darts))
            # rotation among original darts is kept
            for v in range(g.n):
                rot = [d for d in t.rotation(v) if d < m]
                ref = g.rotation(v)
                i = rot.index(ref[0])
                assert rot[i:] + rot[:i] == ref

    def test_faces_are_triangles(self, corpus):
        for g in corpus:
            t, _ = triangulate(g)
            assert validate(t).ok
            assert all(len(f) == 3 for f in faces(t))

    def test_distances_unchanged(self, corpus):
        for g in corpus[:8]:
            t, _ = triangulate(g)
            assert np.array_equal(distance_matrix(g), distance_matrix(t))

    def test_needs_connected(self):
        g = build(4, [(0, 1, 1), (2, 3, 1)], [[0], [1], [2], [3]])
        with pytest.raises(NotConnected):
            triangulate(g)


class TestContractDegree2:
    def test_path_chain(self):
        g = contract_degree2(path3(), keep={0, 2})
        assert g.n == 2 and g.edges() == [(0, 1, 2.0)]

    def test_triangle_collapses_to_two_vertex_multigraph(self):
        g = contract_degree2(triangle())
        assert g.n == 2 and g.num_edges == 2 and validate(g).ok
        assert sorted(w for _, _, w in g.edges()) == [1.0, 2.0]

    def test_kept_middle(self):
        g = contract_degree2(path3(), keep={1})
        assert g.n == 3 and g.num_edges == 2

    def test_distances_between_kept(self, corpus):
        for g in corpus[:10]:
            sub = extract_induced(g, range(0, g.n, 1))
            keep = set(range(0, g.n, 3))
            c = contract_degree2(sub, keep)
            assert validate(c).ok
            assert not np.any((c.degree == 2) & ~np.isin(c.label, list(keep)) & _contractible(c))
            d0 = distance_matrix(sub)
            d1 = distance_matrix(c)
            ids = [int(np.flatnonzero(c.label == k)[0]) for k in sorted(keep)]
            assert np.allclose(d0[np.ix_(sorted(keep), sorted(keep))], d1[np.ix_(ids, ids)])

    def test_marks_preserved(self):
        g = gen_path(4).with_marks([0, 2])
        c = contract_degree2(g, keep={0, 4})
        assert c.marked.sum() == 1 and c.label[c.marked][0] == 0


def _contractible(g):
    out = np.zeros(g.n, bool)
    for v in range(g.n):
        rot = g.rotation(v)
        if len(rot) == 2:
            a, b = g.head[rot[0]], g.head[rot[1]]
            out[v] = a != b
    return out


class TestExtractInduced:
    def test_triangle_two_vertices(self):
        g = extract_induced(triangle(), {0, 1})
        assert g.n == 2 and g.num_edges == 1

    def test_grid_middle_row(self):
        g = extract_induced(gen_grid(3, 3), {3, 4, 5})
        assert g.n == 3 and sorted((u, v) for u, v, _ in g.edges()) == [(0, 1), (1, 2)]

    def test_all_vertices_is_identity(self, corpus):
        for g in corpus:
            h = extract_induced(g, range(g.n))
            for name in ("origin", "twin", "nxt", "length", "marked"):
                assert np.array_equal(getattr(g, name), getattr(h, name))

    def test_idempotent(self, corpus):
        for g in corpus:
            h = extract_induced(g, range(0, g.n, 2))
            k = extract_induced(h, range(h.n))
            assert np.array_equal(h.nxt, k.nxt) and validate(k).ok

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            extract_induced(triangle(), set())


class TestValidate:
    def test_valid_triangle(self):
        c = validate(triangle())
        assert c.twin_ok and c.rotation_ok and c.euler_ok and c.lengths_ok

    def test_broken_twin(self):
        g = triangle()
        twin = g.twin.copy()
        twin[0] = 2
        bad = EmbeddedGraph(g.n, g.origin.copy(), twin, g.nxt.copy(), g.length.copy(),
                            g.artificial.copy(), g.marked.copy(), g.label.copy())
        c = validate(bad)
        assert not c.twin_ok and not c.ok

    def test_bad_length(self):
        g = triangle()
        bad = g.with_lengths(np.r_[-1.0, -1.0, g.length[2:]])
        c = validate(bad)
        assert not c.lengths_ok


class TestMutableGraph:
    def test_contract_adds_length(self):
        mg = MutableGraph(path3())
        mg.contract(2)  # merge vertex 2 into 1
        g, vmap, _ = mg.freeze()
        assert g.n == 2 and g.edges() == [(0, 1, 1.0)]
        assert list(vmap) == [0, 1]

    def test_simplify_keeps_shortest(self):
        g = contract_degree2(triangle((1, 5, 1)))
        s, _ = simplify(g)
        assert s.num_edges == 1 and s.edges()[0][2] == 2.0


@settings(max_examples=40, deadline=None)
@given(n=st.integers(4, 60), seed=st.integers(0, 10**6), lo=st.integers(0, 5))
def test_restrict_random_subsets_stay_planar(n, seed, lo):
    g = gen_face_split(n, (lo, lo + 10), seed)
    rng = np.random.default_rng(seed)
    keep_e = rng.random(g.num_edges) < 0.6
    r = restrict(g, np.repeat(keep_e, 2))
    assert validate(r.graph).ok


@settings(max_examples=30, deadline=None)
@given(w=st.integers(1, 8), h=st.integers(1, 8), seed=st.integers(0, 1000))
def test_triangulated_grids_keep_distances(w, h, seed):
    g = gen_grid(w, h, (1, 9), seed)
    t, _ = triangulate(g)
    assert validate(t).ok
    assert np.array_equal(distance_matrix(g), distance_matrix(t))
