import networkx as nx
import pytest

from helpers import k4, mixed, octahedron
from triflip.embedding import canonical_code
from triflip.errors import SizeMismatch, TooLarge, Unremovable
from triflip.four_connect import make_4_connected
from triflip.generators import gen_canonical, gen_random, gen_stacked
from triflip.oracle import (class_graph, enumerate_all, exact_flip_distance,
                            exact_min_flips_to_4connected, flip_graph_diameter,
                            lemma_suite, representatives, shortest_flip_sequence,
                            vertex_connectivity)

COUNTS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50, 10: 233}


@pytest.mark.parametrize("n", sorted(COUNTS))
def test_class_counts(n):
    assert len(enumerate_all(n)) == COUNTS[n]


def test_limits():
    with pytest.raises(TooLarge):
        enumerate_all(11)
    with pytest.raises(TooLarge):
        exact_flip_distance(gen_canonical(10), gen_canonical(10))
    with pytest.raises(TooLarge):
        lemma_suite(9)


def test_generated_instances_are_enumerated():
    for n in (7, 8, 9):
        codes = set(enumerate_all(n))
        for seed in range(25):
            assert canonical_code(gen_stacked(n, seed)) in codes
            assert canonical_code(gen_random(n, 3 * n, seed)) in codes


def test_distances():
    assert exact_flip_distance(octahedron(), octahedron()) == 0
    assert exact_flip_distance(octahedron(), gen_stacked(6, 0)) == 1
    with pytest.raises(SizeMismatch):
        exact_flip_distance(octahedron(), gen_canonical(7))


@pytest.mark.parametrize("n, diameter", [(6, 1), (7, 2), (8, 4)])
def test_diameters(n, diameter):
    # regression constants, cross-checked on the class graph with networkx
    assert flip_graph_diameter(n) == diameter
    g = nx.Graph()
    for c, ds in class_graph(n).items():
        g.add_node(c)
        g.add_edges_from((c, d) for d in ds)
    assert nx.diameter(g) == diameter


def test_distance_is_a_metric():
    reps = representatives(7)
    for a in reps:
        for b in reps:
            dab = exact_flip_distance(a, b)
            assert dab == exact_flip_distance(b, a)
            assert (dab == 0) == (canonical_code(a) == canonical_code(b))
            for c in reps:
                assert exact_flip_distance(a, c) <= dab + exact_flip_distance(b, c)


def test_class_graph_edges_are_single_flips():
    adj = class_graph(8)
    for rep in representatives(8):
        c = canonical_code(rep)
        for d in adj[c]:
            assert exact_flip_distance(rep, next(r for r in representatives(8)
                                                 if canonical_code(r) == d)) == 1


def test_shortest_sequence_replays():
    a, b = mixed(9, 1), mixed(9, 4)
    target = canonical_code(b)
    seq = shortest_flip_sequence(a, lambda t: canonical_code(t) == target)
    assert len(seq) == exact_flip_distance(a, b)
    assert canonical_code(seq.replay(a.copy())) == target


def test_min_flips_to_4connected():
    assert exact_min_flips_to_4connected(octahedron()) == 0
    for seed in range(6):
        assert exact_min_flips_to_4connected(gen_stacked(6, seed)) == 1
    with pytest.raises(Unremovable):
        exact_min_flips_to_4connected(gen_stacked(5))


def test_min_flips_below_algorithm_at_eight():
    for seed in range(20):
        t = mixed(8, seed)
        best = exact_min_flips_to_4connected(t)
        seq, _ = make_4_connected(t.copy())
        assert best <= len(seq)


def test_vertex_connectivity():
    assert vertex_connectivity(octahedron()) == 4
    assert vertex_connectivity(gen_canonical(10)) == 3
    assert vertex_connectivity(k4()) == 3
    for seed in range(10):
        t = mixed(15, seed)
        make_4_connected(t)
        assert vertex_connectivity(t) >= 4


@pytest.mark.parametrize("n, classes", [(6, 2), (7, 5)])
def test_lemma_suite(n, classes):
    report = lemma_suite(n)
    assert report.classes == classes
    assert report.configurations == classes * (2 * n - 4)
    assert report.ok, report.violations[:5]
    assert report.checked["safe_flip"] > 0
