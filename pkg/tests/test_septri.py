from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from helpers import mixed, octahedron, stacked
from triflip.embedding import build
from triflip.errors import NoSeparatingTriangle
from triflip.generators import gen_canonical, gen_sierpinski, gen_stacked
from triflip.septri import (build_containment_index, deepest_triangle,
                            enumerate_separating_triangles, free_edges_at,
                            has_separating_triangle, scan, shared_edge_profile)

def brute(tri):
    faces = {frozenset(f) for f in tri.faces()}
    out = set()
    for t in combinations(range(tri.n), 3):
        a, b, c = t
        if tri.has_edge(a, b) and tri.has_edge(b, c) and tri.has_edge(a, c):
            if frozenset(t) not in faces:
                out.add(t)
    return out


def test_sierpinski_one_has_four():
    t = gen_sierpinski(1)
    assert len(enumerate_separating_triangles(t)) == 4


def test_octahedron_has_none():
    assert enumerate_separating_triangles(octahedron()) == []
    assert not has_separating_triangle(octahedron())


def test_canonical_ten_has_six():
    t = gen_canonical(10)
    tris = enumerate_separating_triangles(t)
    assert [s.vertices for s in tris] == [(0, 1, i) for i in range(3, 9)]
    assert {s.vertices for s in tris} == brute(t)


def test_interiors_are_nonempty_and_closed():
    for seed in range(10):
        t = mixed(30, seed)
        for s in scan(t).triangles:
            inside = s.interior
            assert inside
            assert not inside & set(t.outer)
            for v in inside:
                for x in t.rot[v]:
                    assert x in inside or x in s.vertices


def test_sierpinski_depths():
    idx = scan(gen_sierpinski(1))
    by_depth = sorted(zip(idx.depth, idx.triples()))
    assert by_depth[0][0] == 0
    assert [d for d, _ in by_depth[1:]] == [1, 1, 1]
    idx = scan(gen_sierpinski(2))
    assert max(idx.depth) == 2
    assert idx.depth.count(2) == 9


def test_zero_or_one_triangle_has_empty_relation():
    assert scan(octahedron()).pairs() == []
    assert scan(gen_stacked(5)).pairs() == []


def test_build_containment_index_matches_scan():
    t = gen_stacked(40, 3)
    idx = scan(t)
    again = build_containment_index(t, idx.triangles, check=True)
    assert again.depth == idx.depth


def test_deepest_prefers_lexicographic_among_deepest():
    t = gen_sierpinski(1)
    idx = scan(t)
    d = deepest_triangle(t, idx)
    top = max(idx.depth)
    cands = sorted(s.vertices for s, k in zip(idx.triangles, idx.depth) if k == top)
    assert d.vertices == cands[0]


def test_deepest_with_outer_edge_when_unavoidable():
    for face in gen_stacked(5).faces():
        t = build(5, gen_stacked(5).rot, face)
        idx = scan(t)
        assert len(idx) == 1
        assert deepest_triangle(t, idx) is idx.triangles[0]


def test_deepest_on_canonical():
    # the triangles (0, 1, i) are nested: (0, 1, i) holds i + 1 .. 9 inside
    t = gen_canonical(10)
    idx = scan(t)
    assert idx.depth == [0, 1, 2, 3, 4, 5]
    assert deepest_triangle(t, idx).vertices == (0, 1, 8)


def test_deepest_empty_raises():
    with pytest.raises(NoSeparatingTriangle):
        deepest_triangle(octahedron(), scan(octahedron()))


def test_free_edges_on_stacked_six():
    t = stacked(6, [(1, 3, 2), (1, 3, 4)])
    idx = scan(t)
    on = idx.triangle_edges()
    for D in idx.triangles:
        free = free_edges_at(t, D, idx)
        for v, es in free.items():
            assert es
            for e in es:
                assert e not in on
                assert D.inside(e[0]) or D.inside(e[1])


def test_free_edges_of_sierpinski_outer_triangle():
    t = gen_sierpinski(1)
    idx = scan(t)
    outer = next(s for s, d in zip(idx.triangles, idx.depth) if d == 0)
    assert outer.vertices == (0, 1, 2)
    free = free_edges_at(t, outer, idx)
    # edges to the inverted triangle lie on corner triangles, so the only
    # free edge inside goes to the vertex stacked in that corner
    for v in outer.vertices:
        (e,) = free[v]
        other = e[0] if e[1] == v else e[1]
        assert t.degree(other) == 3


def test_sierpinski_edges_unshared():
    for k in (1, 2, 3):
        t = gen_sierpinski(k)
        idx = scan(t)
        for D in idx.triangles:
            prof = shared_edge_profile(t, D, idx)
            assert all(p.kind == "unshared" for p in prof.values())


def test_profile_tags():
    # 4 into (0,2,3), 5 into (0,3,1): they share edge (0,3);
    # 6 into (0,2,4) sits inside (0,2,3) and shares (0,2) with it
    t = stacked(7, [(0, 2, 3), (0, 3, 1), (0, 2, 4)])
    idx = scan(t)
    assert set(idx.triples()) == {(0, 2, 3), (0, 1, 3), (0, 2, 4)}
    D = idx.triangles[idx.triples().index((0, 1, 3))]
    prof = shared_edge_profile(t, D, idx)
    assert prof[(0, 3)].kind == "non-containing"
    inner = idx.triangles[idx.triples().index((0, 2, 4))]
    prof = shared_edge_profile(t, inner, idx)
    assert prof[(0, 2)].kind == "containing"
    assert prof[(0, 4)].kind == "unshared"


@settings(max_examples=30, deadline=None)
@given(n=st.integers(5, 40), seed=st.integers(0, 5000))
def test_scan_matches_brute_force(n, seed):
    t = mixed(n, seed)
    idx = scan(t)
    assert set(idx.triples()) == brute(t)
    idx.check_partial_order()
    for i, A in enumerate(idx.triangles):
        for j, B in enumerate(idx.triangles):
            # operational containment: B's triple lies in A's closure and B is smaller
            closure = A.interior | set(A.vertices)
            op = i != j and set(B.vertices) <= closure and B.size < A.size
            assert op == A.contains(B)
