import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import k4, octahedron
from triflip.embedding import (FlipSequence, build, canonical_code,
                               deserialize, edge, isomorphism, serialize)
from triflip.errors import (AsymmetricAdjacency, BadOuterFace, Disconnected,
                            IllegalFlip, NonSimple, NonTriangularFace,
                            NotAnEdge, ParseError, TooSmall, WrongEdgeCount)
from triflip.generators import gen_canonical, gen_random, gen_stacked

K4_ROT = [[1, 3, 2], [0, 2, 3], [0, 3, 1], [0, 1, 2]]

K4_TEXT = """tri 1
n 4
0: 1 3 2
1: 0 2 3
2: 0 3 1
3: 0 1 2
outer 0 1 2
"""


def test_k4_builds():
    t = build(4, K4_ROT, (0, 1, 2))
    assert t.m == 6
    assert len(t.faces()) == 4


def test_octahedron_builds_with_any_outer_face():
    o = octahedron()
    assert o.m == 12
    faces = o.faces()
    assert len(faces) == 8
    for f in faces:
        assert build(6, o.rot, f).outer == f


def test_outer_face_given_in_any_vertex_order():
    a = build(4, K4_ROT, (2, 1, 0))
    b = build(4, K4_ROT, (0, 1, 2))
    assert a.outer == b.outer


@pytest.mark.parametrize("rot, n, exc", [
    ([[1, 3, 2], [0, 2], [0, 3, 1], [0, 1, 2]], 4, AsymmetricAdjacency),
    ([[1, 3, 3], [0, 2, 3], [0, 3, 1], [0, 1, 2]], 4, NonSimple),
    ([[0, 3, 2], [0, 2, 3], [0, 3, 1], [0, 1, 2]], 4, NonSimple),
    ([[1, 2], [0, 2], [0, 1]], 3, TooSmall),
])
def test_build_rejects(rot, n, exc):
    with pytest.raises(exc):
        build(n, rot, (0, 1, 2))


def test_wrong_edge_count():
    # a 5-cycle plus a hub: planar but not maximal
    rot = [[1, 4, 5], [2, 0, 5], [3, 1, 5], [4, 2, 5], [0, 3, 5], [0, 1, 2, 3, 4]]
    with pytest.raises(WrongEdgeCount):
        build(6, rot, (0, 1, 5))


def test_non_triangular_face():
    # K4 edge count but inconsistent orientation at one vertex
    rot = [[1, 2, 3], [0, 2, 3], [0, 3, 1], [0, 1, 2]]
    with pytest.raises(NonTriangularFace):
        build(4, rot, (0, 1, 2))


def test_disconnected():
    # a K7 torus triangulation next to a K4 passes the edge and face counts
    torus = [[(i + d) % 7 for d in (1, 3, 2, 6, 4, 5)] for i in range(7)]
    rot = torus + [[x + 7 for x in r] for r in K4_ROT]
    with pytest.raises(Disconnected):
        build(11, rot, (7, 8, 9))


def test_bad_outer_face():
    with pytest.raises(BadOuterFace):
        deserialize(serialize(octahedron()).replace("outer 0 1 2", "outer 0 1 5"))
    with pytest.raises(BadOuterFace):
        build(6, octahedron().rot, (0, 1, 3))


def test_canonical_path_edge_not_flippable():
    t = gen_canonical(10)
    assert not t.is_flippable(3, 4)
    with pytest.raises(IllegalFlip):
        t.flip(3, 4)


def test_flip_not_an_edge():
    o = octahedron()
    with pytest.raises(NotAnEdge):
        o.flip(0, 5)
    with pytest.raises(NotAnEdge):
        o.is_flippable(1, 3)


def test_k4_nothing_flippable():
    t = build(4, K4_ROT, (0, 1, 2))
    assert not any(t.is_flippable(a, b) for a, b in t.edges())


def test_octahedron_every_flip_gives_the_other_class():
    o = octahedron()
    other = canonical_code(gen_stacked(6, 0))
    assert other != canonical_code(o)
    for a, b in o.edges():
        assert o.is_flippable(a, b)
        t = o.copy()
        rec = t.flip(a, b)
        c, d = rec.inserted
        assert {c, d} in ({0, 5}, {1, 3}, {2, 4})
        assert canonical_code(t) == other


def test_flip_faces_and_outer_update():
    t = gen_canonical(8)
    rec = t.flip(0, 1)
    assert rec.removed == (0, 1)
    assert rec.inserted == (2, 7)
    assert rec.new_outer is not None
    faces = {frozenset(f) for f in t.faces()}
    assert frozenset(rec.new_outer) in faces
    assert {frozenset((0, 2, 7)), frozenset((1, 2, 7))} <= faces
    assert 0 in rec.new_outer


def test_flip_back_restores():
    t = gen_random(20, 40, 3)
    code = canonical_code(t)
    rot_before = [sorted(r) for r in t.rot]
    for a, b in t.edges()[:10]:
        if t.is_flippable(a, b):
            rec = t.flip(a, b)
            t.flip(*rec.inserted)
            assert canonical_code(t) == code
            assert [sorted(r) for r in t.rot] == rot_before


def test_serialize_roundtrip_exact():
    t = gen_random(15, 30, 9)
    s = serialize(t)
    assert serialize(deserialize(s)) == s
    assert deserialize(K4_TEXT).m == 6
    assert serialize(deserialize(K4_TEXT)) == K4_TEXT


def test_deserialize_ignores_comments():
    assert deserialize("# hello\n" + K4_TEXT).n == 4


@pytest.mark.parametrize("text, line", [
    ("tri 2\n", 1),
    ("tri 1\nn x\n", 2),
    ("tri 1\nn 4\n0: 1 3 2\nzz\n", 4),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        deserialize(text)
    assert info.value.line == line


def test_fliplog_roundtrip():
    t = gen_stacked(12, 1)
    seq = FlipSequence(canonical_code(t))
    work = t.copy()
    for a, b in work.edges():
        if work.has_edge(a, b) and work.is_flippable(a, b):
            seq.records.append(work.flip(a, b))
    again = FlipSequence.from_text(seq.to_text())
    assert again.records == seq.records
    assert again.initial_hash == seq.initial_hash
    replayed = again.replay(t.copy())
    assert serialize(replayed) == serialize(work)


def test_fliplog_bad_line():
    with pytest.raises(ParseError):
        FlipSequence.from_text("flip 1 2 3 4\n")


def test_codes_distinguish_and_identify():
    assert canonical_code(octahedron()) != canonical_code(gen_stacked(6, 3))
    t = gen_random(14, 50, 2)
    assert canonical_code(t) == canonical_code(t.mirror())


def test_isomorphism_map():
    t = gen_random(16, 60, 5)
    perm = list(range(16))
    random.Random(1).shuffle(perm)
    u = t.relabel(perm)
    phi = isomorphism(t, u)
    assert phi is not None
    for a, b in t.edges():
        assert u.has_edge(phi[a], phi[b])
    assert isomorphism(t, gen_canonical(16)) is None


def test_k4_helper_is_k4():
    assert canonical_code(k4()) == canonical_code(build(4, K4_ROT, (0, 1, 2)))


@settings(max_examples=40, deadline=None)
@given(n=st.integers(6, 30), steps=st.integers(0, 80), seed=st.integers(0, 10_000))
def test_random_flips_keep_validity(n, steps, seed):
    t = gen_random(n, steps, seed)
    again = build(n, t.rot, t.outer)
    assert again.m == 3 * n - 6
    assert len(again.faces()) == 2 * n - 4


@settings(max_examples=40, deadline=None)
@given(n=st.integers(4, 25), seed=st.integers(0, 10_000), pseed=st.integers(0, 10_000))
def test_code_invariant_under_relabel_and_mirror(n, seed, pseed):
    t = gen_stacked(n, seed)
    perm = list(range(n))
    random.Random(pseed).shuffle(perm)
    c = canonical_code(t)
    assert canonical_code(t.relabel(perm)) == c
    assert canonical_code(t.relabel(perm).mirror()) == c


def test_edge_normalises():
    assert edge(5, 2) == (2, 5)
