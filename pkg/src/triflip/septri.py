"""Separating triangles, their containment order, and free edges.

A separating triangle is a non-facial 3-cycle.  Its interior is the side
that does not contain the outer face.  Triangle A contains triangle B when
the interior of B is a proper subset of the interior of A; the depth of a
triangle is the number of triangles containing it.

Interiors are stored as integer bitmasks (bit ``v`` set iff ``v`` is
inside).  The whole index is rebuilt from scratch whenever it is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .embedding import edge
from .errors import InternalInconsistency, NoSeparatingTriangle


@dataclass(frozen=True)
class SeparatingTriangle:
    vertices: tuple
    mask: int

    @property
    def interior(self):
        m = self.mask
        return frozenset(v for v in range(m.bit_length()) if (m >> v) & 1)

    @property
    def size(self):
        return self.mask.bit_count()

    def inside(self, v):
        return (self.mask >> v) & 1 == 1

    def edges(self):
        a, b, c = self.vertices
        return [(a, b), (a, c), (b, c)]

    def uses(self, e):
        return e[0] in self.vertices and e[1] in self.vertices

    def contains(self, other):
        """True iff ``other``'s interior is a proper subset of this interior."""
        return (other.mask & ~self.mask) == 0 and other.mask != self.mask

    def third(self, e):
        """The vertex of this triangle not on edge ``e``."""
        for v in self.vertices:
            if v not in e:
                return v
        raise ValueError(f"{e} is not an edge of {self.vertices}")


class ContainmentIndex:
    """All separating triangles of a triangulation with their depths."""

    def __init__(self, triangles, depth):
        self.triangles = triangles
        self.depth = depth
        self._by_vertices = {t.vertices: i for i, t in enumerate(triangles)}
        by_edge = {}
        for i, t in enumerate(triangles):
            for e in t.edges():
                by_edge.setdefault(e, []).append(i)
        self._by_edge = by_edge

    def __len__(self):
        return len(self.triangles)

    def __bool__(self):
        return bool(self.triangles)

    def index_of(self, tri):
        return self._by_vertices[tri.vertices]

    def triples(self):
        return [t.vertices for t in self.triangles]

    def triangles_on(self, e):
        """Indices of triangles using edge ``e``."""
        return self._by_edge.get(edge(*e), [])

    def triangle_edges(self):
        """Set of edges lying on at least one separating triangle."""
        return set(self._by_edge)

    def containing(self, i):
        t = self.triangles[i]
        return [j for j, s in enumerate(self.triangles) if j != i and s.contains(t)]

    def contains(self, i, j):
        return self.triangles[i].contains(self.triangles[j])

    def pairs(self):
        """All (A, B) index pairs with A containing B."""
        ts = self.triangles
        return [(i, j) for i in range(len(ts)) for j in range(len(ts))
                if i != j and ts[i].contains(ts[j])]

    def check_partial_order(self):
        """Irreflexive, antisymmetric, transitive, and depth-consistent."""
        ts = self.triangles
        rel = set(self.pairs())
        for i, j in rel:
            if (j, i) in rel:
                raise InternalInconsistency(f"containment not antisymmetric: {i}, {j}")
            for k in range(len(ts)):
                if (j, k) in rel and (i, k) not in rel:
                    raise InternalInconsistency("containment not transitive")
            if self.depth[j] < self.depth[i] + 1:
                raise InternalInconsistency("depth not monotone")
        for j in range(len(ts)):
            if self.depth[j] != sum(1 for i in range(len(ts)) if (i, j) in rel):
                raise InternalInconsistency("depth disagrees with containment")


def scan(tri):
    """Enumerate separating triangles and build their containment index."""
    triples, masks, depth = kernels.septri_scan(tri.n, tri.rot, tri.outer)
    tris = [SeparatingTriangle(t, m) for t, m in zip(triples, masks)]
    return ContainmentIndex(tris, depth)


def enumerate_separating_triangles(tri):
    return scan(tri).triangles


def build_containment_index(tri, triangles, check=False):
    depth = kernels.containment_depths([t.mask for t in triangles])
    index = ContainmentIndex(list(triangles), depth)
    if check:
        index.check_partial_order()
    return index


def has_separating_triangle(tri):
    """Cheap test: some edge has more than two common neighbours."""
    adj = tri.adj
    for u in range(tri.n):
        au = adj[u]
        for v in au:
            if v > u and len(au & adj[v]) > 2:
                return True
    return False


def deepest_triangle(tri, index):
    """Maximum depth, preferring triangles without an outer-face edge, then lexicographic."""
    if not index:
        raise NoSeparatingTriangle("triangulation has no separating triangle")
    top = max(index.depth)
    outer = tri.outer_edges()

    def key(i):
        t = index.triangles[i]
        uses_outer = any(e in outer for e in t.edges())
        return (uses_outer, t.vertices)

    cands = [i for i, d in enumerate(index.depth) if d == top]
    return index.triangles[min(cands, key=key)]


def free_edges_at(tri, D, index=None):
    """For each vertex of ``D``, the free edges at it with the other end inside ``D``."""
    if index is None:
        index = scan(tri)
    on_tri = index.triangle_edges()
    out = {}
    for v in D.vertices:
        found = set()
        for x in tri.rot[v]:
            if D.inside(x):
                e = edge(v, x)
                if e not in on_tri:
                    found.add(e)
        if not found:
            raise InternalInconsistency(
                f"vertex {v} of {D.vertices} has no free edge inside")
        out[v] = found
    return out


@dataclass
class EdgeProfile:
    edge: tuple
    containing: list
    non_containing: list

    @property
    def kind(self):
        if self.containing and self.non_containing:
            return "both"
        if self.containing:
            return "containing"
        if self.non_containing:
            return "non-containing"
        return "unshared"

    @property
    def shared(self):
        return bool(self.containing or self.non_containing)


def shared_edge_profile(tri, D, index):
    """Classify each edge of ``D`` by the other separating triangles using it."""
    i = index.index_of(D)
    profile = {}
    for e in D.edges():
        cont, other = [], []
        for j in index.triangles_on(e):
            if j == i:
                continue
            s = index.triangles[j]
            (cont if s.contains(D) else other).append(s)
        profile[e] = EdgeProfile(e, cont, other)
    n_cont = sum(1 for p in profile.values() if p.containing)
    if n_cont > 1:
        raise InternalInconsistency(
            f"{D.vertices} shares {n_cont} edges with containing triangles")
    return profile
