"""Brute-force ground truth for small triangulations.

Everything here works on the flip graph of isomorphism classes, found by
breadth-first search from the canonical triangulation.  That graph is
connected, so the search reaches every class.  Class counts for n = 4..10
are 1, 1, 2, 5, 14, 50, 233.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import networkx as nx

from .embedding import FlipSequence, build, canonical_code, edge
from .errors import (InternalInconsistency, SizeMismatch, TooLarge, TooSmall,
                     Unremovable)
from .generators import gen_canonical
from .septri import has_separating_triangle, scan

ENUMERATE_MAX_N = 10
DISTANCE_MAX_N = 9
LEMMA_MAX_N = 8


def _check_n(n, limit):
    if n < 4:
        raise TooSmall(f"need n >= 4, got {n}")
    if n > limit:
        raise TooLarge(f"n = {n} exceeds the oracle limit {limit}")


def _neighbours(tri):
    """(record, flipped copy) for every legal flip of ``tri``."""
    out = []
    for a, b in tri.edges():
        if tri.is_flippable(a, b):
            t = tri.copy()
            out.append((t.flip(a, b), t))
    return out


@lru_cache(maxsize=None)
def _flip_graph(n):
    """Representatives and class adjacency, keyed by canonical code."""
    start = gen_canonical(n)
    c0 = canonical_code(start)
    reps = {c0: start}
    adj = {c0: set()}
    queue = deque([c0])
    while queue:
        c = queue.popleft()
        for _, t in _neighbours(reps[c]):
            d = canonical_code(t)
            if d not in reps:
                reps[d] = t
                adj[d] = set()
                queue.append(d)
            if d != c:
                adj[c].add(d)
                adj[d].add(c)
    return reps, adj


def enumerate_all(n):
    """Canonical codes of all triangulation classes on ``n`` vertices, sorted."""
    _check_n(n, ENUMERATE_MAX_N)
    reps, _ = _flip_graph(n)
    return sorted(reps)


def representatives(n):
    """One triangulation per class, in :func:`enumerate_all` order (copies)."""
    _check_n(n, ENUMERATE_MAX_N)
    reps, _ = _flip_graph(n)
    return [reps[c].copy() for c in sorted(reps)]


def class_graph(n):
    """Adjacency of the class-level flip graph as ``{code: set(codes)}``."""
    _check_n(n, ENUMERATE_MAX_N)
    _, adj = _flip_graph(n)
    return {c: set(s) for c, s in adj.items()}


def _bfs_distances(adj, source):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        c = queue.popleft()
        for d in adj[c]:
            if d not in dist:
                dist[d] = dist[c] + 1
                queue.append(d)
    return dist


def exact_flip_distance(t1, t2):
    """Shortest flip distance between the classes of ``t1`` and ``t2``."""
    if t1.n != t2.n:
        raise SizeMismatch(f"{t1.n} != {t2.n}")
    _check_n(t1.n, DISTANCE_MAX_N)
    _, adj = _flip_graph(t1.n)
    a, b = canonical_code(t1), canonical_code(t2)
    if a == b:
        return 0
    # bidirectional: grow the smaller frontier one full layer at a time
    da, db = {a: 0}, {b: 0}
    fa, fb = [a], [b]
    while fa and fb:
        if len(fa) > len(fb):
            da, db, fa, fb = db, da, fb, fa
        nxt = []
        best = None
        for c in fa:
            for d in adj[c]:
                if d in db:
                    cand = da[c] + 1 + db[d]
                    if best is None or cand < best:
                        best = cand
                if d not in da:
                    da[d] = da[c] + 1
                    nxt.append(d)
        if best is not None:
            return best
        fa = nxt
    raise InternalInconsistency("flip graph is disconnected")


def flip_graph_diameter(n):
    _check_n(n, DISTANCE_MAX_N)
    _, adj = _flip_graph(n)
    return max(max(_bfs_distances(adj, c).values()) for c in adj)


def shortest_flip_sequence(tri, goal):
    """Shortest flip sequence from labelled ``tri`` to a triangulation satisfying ``goal``.

    ``goal`` must depend only on the isomorphism class.  The search keeps
    one labelled triangulation per class, so the returned records replay
    on ``tri`` directly.  ``tri`` is not modified.
    """
    _check_n(tri.n, DISTANCE_MAX_N)
    seq = FlipSequence(canonical_code(tri))
    if goal(tri):
        return seq
    c0 = seq.initial_hash
    states = {c0: tri.copy()}
    parent = {c0: None}
    queue = deque([c0])
    while queue:
        c = queue.popleft()
        for rec, t in _neighbours(states[c]):
            d = canonical_code(t)
            if d in parent:
                continue
            parent[d] = (c, rec)
            states[d] = t
            if goal(t):
                records = []
                while parent[d] is not None:
                    d, r = parent[d]
                    records.append(r)
                seq.records = records[::-1]
                return seq
            queue.append(d)
    raise Unremovable("no reachable triangulation satisfies the goal")


def exact_min_flips_to_4connected(tri):
    """Fewest flips after which no separating triangle remains."""
    _check_n(tri.n, DISTANCE_MAX_N)
    reps, adj = _flip_graph(tri.n)
    good = {c for c, t in reps.items() if not has_separating_triangle(t)}
    if not good:
        raise Unremovable(f"no {tri.n}-vertex triangulation is 4-connected")
    dist = _bfs_distances(adj, canonical_code(tri))
    return min(dist[c] for c in good)


def distance_to_canonical(tri):
    _check_n(tri.n, DISTANCE_MAX_N)
    _, adj = _flip_graph(tri.n)
    dist = _bfs_distances(adj, canonical_code(gen_canonical(tri.n)))
    return dist[canonical_code(tri)]


def vertex_connectivity(tri):
    """Minimum vertex cut size, computed by max-flow on the plain graph.

    For n >= 5 the result is cross-checked against the separating-triangle
    test: connectivity >= 4 exactly when there is no separating triangle.
    """
    g = nx.Graph()
    g.add_nodes_from(range(tri.n))
    g.add_edges_from(tri.edges())
    k = nx.node_connectivity(g)
    if tri.n >= 5 and (k >= 4) == has_separating_triangle(tri):
        raise InternalInconsistency(
            f"connectivity {k} disagrees with the separating-triangle test")
    return k


# -- exhaustive structural checks --------------------------------------

LEMMA_CHECKS = (
    "interior",            # container holds a vertex of B, no vertex of B outside it
    "interior_vertex",     # a vertex of B inside A forces A to contain B
    "one_containing_edge", # at most one edge shared with containing triangles
    "one_containing_vertex",
    "unshared_vertex",
    "containing_shared",   # C contains A but not B (A, B share e) => C uses e
    "outer_edge",          # a triangle on an outer edge is only contained via that edge
    "free_edge",
    "safe_flip",
    "scan_matches_brute_force",
    "containment_order",
)


@dataclass
class LemmaReport:
    n: int
    classes: int = 0
    configurations: int = 0
    checked: dict = field(default_factory=lambda: dict.fromkeys(LEMMA_CHECKS, 0))
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def lines(self):
        out = [f"lemmas n {self.n} classes {self.classes} configurations {self.configurations}"]
        for name in LEMMA_CHECKS:
            out.append(f"check {name} {self.checked[name]}")
        out.extend(f"violation {v}" for v in self.violations)
        out.append(f"violations {len(self.violations)}")
        return out


def _brute_separating(tri):
    """Non-facial triangles and their interiors via component search."""
    faces = {frozenset(f) for f in tri.faces()}
    g = nx.Graph()
    g.add_nodes_from(range(tri.n))
    g.add_edges_from(tri.edges())
    out = {}
    for a, b, c in combinations(range(tri.n), 3):
        if tri.has_edge(a, b) and tri.has_edge(b, c) and tri.has_edge(a, c):
            if frozenset((a, b, c)) in faces:
                continue
            h = g.subgraph(set(range(tri.n)) - {a, b, c})
            anchor = next(x for x in tri.outer if x not in (a, b, c))
            outside = nx.node_connected_component(h, anchor)
            inside = frozenset(h.nodes) - outside
            out[(a, b, c)] = inside
    return out


def _check_configuration(tri, report):
    v = report.violations
    tag = f"{canonical_code(tri).hex()[:16]} outer {tri.outer}"
    idx = scan(tri)
    T = idx.triangles
    c = report.checked

    brute = _brute_separating(tri)
    c["scan_matches_brute_force"] += 1
    if {t.vertices: t.interior for t in T} != brute:
        v.append(f"{tag}: scan disagrees with brute force")
    c["containment_order"] += 1
    try:
        idx.check_partial_order()
    except InternalInconsistency as exc:
        v.append(f"{tag}: {exc}")

    on = idx.triangle_edges()
    outer = tri.outer_edges()
    cont = {i: set(idx.containing(i)) for i in range(len(T))}

    for i, A in enumerate(T):
        for j, B in enumerate(T):
            if i == j:
                continue
            inside_b = [x for x in B.vertices if A.inside(x)]
            if A.contains(B):
                c["interior"] += 1
                outside_b = [x for x in B.vertices
                             if not A.inside(x) and x not in A.vertices]
                if not inside_b or outside_b:
                    v.append(f"{tag}: interior {A.vertices} {B.vertices}")
            if inside_b:
                c["interior_vertex"] += 1
                if not A.contains(B):
                    v.append(f"{tag}: interior_vertex {A.vertices} {B.vertices}")
            shared = [e for e in A.edges() if B.uses(e)]
            if shared:
                (e,) = shared
                for k, C in enumerate(T):
                    if k in (i, j):
                        continue
                    if C.contains(A) and not C.contains(B):
                        c["containing_shared"] += 1
                        if not C.uses(e):
                            v.append(f"{tag}: containing_shared {A.vertices} {B.vertices} {C.vertices}")

    for i, D in enumerate(T):
        containers = [T[k] for k in cont[i]]
        edges_c = [e for e in D.edges() if any(A.uses(e) for A in containers)]
        c["one_containing_edge"] += 1
        if len(edges_c) > 1:
            v.append(f"{tag}: one_containing_edge {D.vertices}")
        if not edges_c:
            c["one_containing_vertex"] += 1
            verts = {x for x in D.vertices if any(x in A.vertices for A in containers)}
            if len(verts) > 1:
                v.append(f"{tag}: one_containing_vertex {D.vertices}")
        else:
            for e in edges_c:
                z = D.third(e)
                c["unshared_vertex"] += 1
                if any(z in A.vertices for A in containers):
                    v.append(f"{tag}: unshared_vertex {D.vertices}")
        for e in D.edges():
            if e in outer:
                c["outer_edge"] += 1
                if any(not A.uses(e) for A in containers):
                    v.append(f"{tag}: outer_edge {D.vertices}")
        for x in D.vertices:
            c["free_edge"] += 1
            if not any(D.inside(y) and edge(x, y) not in on for y in tri.rot[x]):
                v.append(f"{tag}: free_edge {D.vertices} at {x}")

    if tri.n >= 6:
        before = set(idx.triples())
        for D in T:
            multi = [e for e in D.edges() if len(idx.triangles_on(e)) > 1]
            for e in D.edges():
                if not (e in multi or not multi):
                    continue
                c["safe_flip"] += 1
                t = tri.copy()
                if not t.is_flippable(*e):
                    v.append(f"{tag}: safe_flip {e} of {D.vertices} is illegal")
                    continue
                t.flip(*e)
                after = set(scan(t).triples())
                if D.vertices in after or not after <= before:
                    v.append(f"{tag}: safe_flip {e} of {D.vertices}")


def lemma_suite(n):
    """Check the containment lemmas on every class and every outer face."""
    _check_n(n, LEMMA_MAX_N)
    report = LemmaReport(n)
    for rep in representatives(n):
        report.classes += 1
        for face in rep.faces():
            t = build(n, [list(r) for r in rep.rot], face)
            report.configurations += 1
            _check_configuration(t, report)
    return report
