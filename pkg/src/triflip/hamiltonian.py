"""Hamiltonian cycles in 4-connected triangulations.

Sides of a cycle
----------------
For a cycle ``c0, c1, ..., ck-1`` the *inside* is the region swept at each
``ci`` clockwise from its predecessor to its successor.  A facial triangle
listed in face-walk order therefore has an empty inside.  Equivalently,
the inside contains the face traced from the directed edge ``c0 -> c1``.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass

from .embedding import edge
from .errors import (HypothesisViolated, InternalInconsistency, NotAnEdge,
                     NotFound, NotFourConnected, NoValidPair, TooSmall)
from .septri import has_separating_triangle

INSIDE, OUTSIDE = "inside", "outside"

# search nodes before whitney_path gives up and reports a bug
NODE_LIMIT = 2_000_000


@dataclass
class CycleDecomposition:
    cycle: list
    inside_edges: set
    outside_edges: set
    u: int = None
    v: int = None

    def cycle_edges(self):
        c = self.cycle
        return {edge(c[i - 1], c[i]) for i in range(len(c))}

    def side(self, name):
        return self.inside_edges if name == INSIDE else self.outside_edges


def _check_side(side):
    if side not in (INSIDE, OUTSIDE):
        raise ValueError(f"side must be {INSIDE!r} or {OUTSIDE!r}, got {side!r}")


def _wedge(tri, prev, v, nxt, side):
    r = tri.rot[v]
    start, stop = (prev, nxt) if side == INSIDE else (nxt, prev)
    i = r.index(start)
    out = []
    while True:
        i = (i + 1) % len(r)
        x = r[i]
        if x == stop:
            return out
        out.append(x)


def side_of_cycle(tri, cycle, side):
    """Vertices strictly on ``side`` of ``cycle`` and the non-cycle edges there."""
    _check_side(side)
    on = set(cycle)
    k = len(cycle)
    inner = set()
    edges = set()
    stack = []
    for i, v in enumerate(cycle):
        for x in _wedge(tri, cycle[i - 1], v, cycle[(i + 1) % k], side):
            edges.add(edge(v, x))
            if x not in on and x not in inner:
                inner.add(x)
                stack.append(x)
    while stack:
        x = stack.pop()
        for y in tri.rot[x]:
            edges.add(edge(x, y))
            if y not in on and y not in inner:
                inner.add(y)
                stack.append(y)
    return inner, edges


def _check_cycle(tri, cycle):
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise ValueError("cycle must list at least three distinct vertices")
    for i in range(len(cycle)):
        if not tri.has_edge(cycle[i - 1], cycle[i]):
            raise NotAnEdge(f"({cycle[i - 1]}, {cycle[i]}) is not an edge")


def _propagate(nbrs, visited, cur, b):
    """Usable adjacency of the remaining graph after forcing required edges.

    The remaining graph holds the unvisited vertices and ``cur``.  Interior
    path vertices need two path edges, ``cur`` and ``b`` one each; a vertex
    with exactly that many usable edges must use all of them, and a vertex
    whose requirement is met loses its other edges.  Returns ``(adj, req)``
    or None when a contradiction (too few edges, a closed cycle of required
    edges, or a premature cur-b connection) shows no path exists.
    """
    adj = {}
    for w in nbrs:
        if w not in visited:
            adj[w] = {x for x in nbrs[w] if x not in visited or x == cur}
    adj[cur] = {x for x in nbrs[cur] if x not in visited}
    size = len(adj)
    need = dict.fromkeys(adj, 2)
    need[cur] = 1
    need[b] = 1
    req = {w: set() for w in adj}
    root = {w: w for w in adj}
    count = dict.fromkeys(adj, 1)

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    queue = list(adj)
    while queue:
        w = queue.pop()
        aw = adj[w]
        k = need[w]
        if len(aw) < k:
            return None
        rw = req[w]
        if len(rw) == k:
            if len(aw) > k:
                for x in aw - rw:
                    adj[x].discard(w)
                    queue.append(x)
                adj[w] = set(rw)
        elif len(aw) == k:
            for x in aw - rw:
                fw, fx = find(w), find(x)
                if fw == fx:
                    return None
                root[fw] = fx
                count[fx] += count[fw]
                rw.add(x)
                req[x].add(w)
                if len(req[x]) > need[x]:
                    return None
                queue.append(x)
            queue.append(w)
    fc = find(cur)
    if fc == find(b) and count[fc] != size:
        return None
    return adj, req


def _remaining_ok(adj, cur, b):
    """Necessary condition for a Hamiltonian cur-b path in the graph ``adj``.

    Every cut vertex must split the graph into exactly two parts, one
    holding ``cur`` and one holding ``b``, and ``cur`` must not be a cut
    vertex.  One iterative DFS from ``cur`` computes low-points and
    subtree intervals.
    """
    disc = {cur: 0}
    low = {cur: 0}
    last = {}
    parent = {cur: None}
    t = 1
    root_children = 0
    stack = [(cur, iter(adj[cur]))]
    while stack:
        x, it = stack[-1]
        advanced = False
        for y in it:
            if y not in disc:
                disc[y] = low[y] = t
                t += 1
                parent[y] = x
                if x == cur:
                    root_children += 1
                stack.append((y, iter(adj[y])))
                advanced = True
                break
            if y != parent[x] and disc[y] < low[x]:
                low[x] = disc[y]
        if not advanced:
            stack.pop()
            last[x] = t - 1
            p = parent[x]
            if p is not None and low[x] < low[p]:
                low[p] = low[x]
    if len(disc) != len(adj) or root_children > 1:
        return False
    db = disc[b]
    splits = {}
    for y, p in parent.items():
        if p is None or p == cur:
            continue
        if low[y] >= disc[p]:
            if p in splits:
                return False
            splits[p] = y
    for p, y in splits.items():
        if not disc[y] <= db <= last[y]:
            return False
    return True


class _OutOfBudget(Exception):
    pass


def _hamiltonian_path(nbrs, a, b):
    """Depth-first search for a Hamiltonian a-b path with pruning and restarts.

    Each node first forces required edges (:func:`_propagate`) and then
    checks the cut-vertex structure of what is left (:func:`_remaining_ok`).
    Moves are tried fewest-onward-options first.  The search tree has a
    heavy tail, so it is restarted with a doubling node budget,
    alternating between the two ends and using seeded random tie-breaking
    after the first two attempts; the last attempt is exhaustive up to
    ``NODE_LIMIT``.
    """
    total = len(nbrs)
    if total == 1:
        return [a] if a == b else None
    rng = random.Random(total)
    budget = 4 * total
    spent = 0
    attempt = 0
    while True:
        last = spent + budget >= NODE_LIMIT
        cap = NODE_LIMIT - spent if last else budget
        tie = None if attempt < 2 else {v: rng.random() for v in nbrs}
        reverse = attempt % 2 == 1
        try:
            if reverse:
                found, used = _dfs(nbrs, b, a, cap, tie)
                if found is not None:
                    found.reverse()
            else:
                found, used = _dfs(nbrs, a, b, cap, tie)
        except _OutOfBudget:
            if last:
                raise NotFound("Hamiltonian path search exceeded its node budget") from None
            spent += budget
            budget *= 2
            attempt += 1
            continue
        return found


def _dfs(nbrs, a, b, cap, tie):
    total = len(nbrs)
    visited = {a}
    path = [a]
    nodes = [0]

    def extend(cur):
        nodes[0] += 1
        if nodes[0] > cap:
            raise _OutOfBudget
        if len(visited) == total:
            return cur == b
        if cur == b:
            return False
        state = _propagate(nbrs, visited, cur, b)
        if state is None:
            return False
        adj, req = state
        if not _remaining_ok(adj, cur, b):
            return False
        if req[cur]:
            moves = list(req[cur])
        else:
            def key(x):
                return (x == b, len(adj[x]), x if tie is None else tie[x])
            moves = sorted(adj[cur], key=key)
        for x in moves:
            visited.add(x)
            path.append(x)
            if extend(x):
                return True
            path.pop()
            visited.discard(x)
        return False

    limit = sys.getrecursionlimit()
    if limit < total + 100:
        sys.setrecursionlimit(total + 100)
    try:
        ok = extend(a)
    finally:
        sys.setrecursionlimit(limit)
    return (list(path) if ok else None), nodes[0]


def whitney_path(tri, cycle, a, b, side=INSIDE):
    """Path from ``a`` to ``b`` through every vertex on and strictly on ``side`` of ``cycle``.

    Uses only cycle edges and edges on ``side``.  Requires that no edge on
    ``side`` joins two vertices of the same arc of the cycle between ``a``
    and ``b``; such a path then always exists in a 4-connected
    triangulation.
    """
    _check_side(side)
    _check_cycle(tri, cycle)
    if a == b or a not in cycle or b not in cycle:
        raise ValueError("a and b must be distinct vertices of the cycle")
    inner, side_edges = side_of_cycle(tri, cycle, side)
    k = len(cycle)
    ia, ib = cycle.index(a), cycle.index(b)
    arc1 = {cycle[(ia + j) % k] for j in range((ib - ia) % k + 1)}
    arc2 = {cycle[(ib + j) % k] for j in range((ia - ib) % k + 1)}
    on = set(cycle)
    for x, y in side_edges:
        if x in on and y in on:
            if (x in arc1 and y in arc1) or (x in arc2 and y in arc2):
                raise HypothesisViolated(f"chord ({x}, {y}) joins two vertices of one arc")
    nbrs = {v: [] for v in on | inner}
    allowed = side_edges | {edge(cycle[i - 1], cycle[i]) for i in range(k)}
    for x, y in sorted(allowed):
        nbrs[x].append(y)
        nbrs[y].append(x)
    path = _hamiltonian_path(nbrs, a, b)
    if path is None:
        raise NotFound(f"no Hamiltonian {a}-{b} path on the {side} of the cycle")
    return path


def _face_regions(tri, cycle):
    """Faces on the inside of ``cycle``: flood from the face of ``c0 -> c1``."""
    cyc = {edge(cycle[i - 1], cycle[i]) for i in range(len(cycle))}

    def face_of(x, y):
        z = tri.succ(y, x)
        return frozenset((x, y, z)), (x, y, z)

    start, walk = face_of(cycle[0], cycle[1])
    inside = {start}
    stack = [walk]
    while stack:
        x, y, z = stack.pop()
        for p, q in ((x, y), (y, z), (z, x)):
            if edge(p, q) in cyc:
                continue
            key, w = face_of(q, p)
            if key not in inside:
                inside.add(key)
                stack.append(w)
    return inside


def validate_whitney_path(tri, cycle, a, b, side, path):
    """Independent check of a :func:`whitney_path` result via face regions."""
    _check_side(side)
    inside_faces = _face_regions(tri, cycle)
    on = set(cycle)
    if side == INSIDE:
        faces = inside_faces
    else:
        faces = {frozenset(f) for f in tri.faces()} - inside_faces
    region = set().union(*faces) if faces else set()
    allowed = {edge(cycle[i - 1], cycle[i]) for i in range(len(cycle))}
    for f in faces:
        p, q, r = sorted(f)
        allowed |= {(p, q), (p, r), (q, r)}
    expected = on | region
    if not path or path[0] != a or path[-1] != b:
        return False
    if len(set(path)) != len(path) or set(path) != expected:
        return False
    return all(edge(path[i], path[i + 1]) in allowed for i in range(len(path) - 1))


def neighbour_ring(tri, u, v):
    """The cycle x, u1..uk, y, v1..vm around edge (u, v) and the side away from it.

    Returns ``(ring, x, y, side)`` where x and y are the apexes of (u, v)
    and ``side`` is the side of ``ring`` not containing u and v.
    """
    if tri.n < 6:
        raise TooSmall("needs n >= 6")
    if not tri.has_edge(u, v):
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    if has_separating_triangle(tri):
        raise NotFourConnected("triangulation has a separating triangle")
    ru = tri.rot[u]
    i = ru.index(v)
    around_u = [ru[(i + j) % len(ru)] for j in range(1, len(ru))]   # x, u1..uk, y
    rv = tri.rot[v]
    i = rv.index(u)
    around_v = [rv[(i + j) % len(rv)] for j in range(1, len(rv))]   # y, v1..vm, x
    x, y = around_u[0], around_u[-1]
    if around_v[0] != y or around_v[-1] != x:
        raise InternalInconsistency("apexes of (u, v) disagree")
    shared = (set(around_u) & set(around_v)) - {x, y}
    if shared:
        raise InternalInconsistency(f"{sorted(shared)} adjacent to both ends of ({u}, {v})")
    for ring in (around_u, around_v):
        for p in range(len(ring)):
            for q in range(p + 2, len(ring)):
                if tri.has_edge(ring[p], ring[q]):
                    raise InternalInconsistency(
                        f"chord ({ring[p]}, {ring[q]}) among neighbours of one endpoint")
    ring = around_u + around_v[1:-1]
    inner, _ = side_of_cycle(tri, ring, INSIDE)
    side = OUTSIDE if u in inner else INSIDE
    return ring, x, y, side


def hamiltonian_cycle_through(tri, u, v):
    """Hamiltonian cycle using edge (u, v) with u's other edges inside and v's outside.

    Built from the cycle through the neighbours of u and v, a Whitney path
    between the two apexes of (u, v) on the side away from u and v, and
    the edges y-u, u-v, v-x.
    """
    ring, x, y, side = neighbour_ring(tri, u, v)
    path = whitney_path(tri, ring, x, y, side)
    return decompose(tri, path + [u, v], u, v)


def decompose(tri, cycle, u, v):
    """Split non-cycle edges by side, orienting the cycle so u's edges are inside."""
    _check_cycle(tri, cycle)
    cyc = {edge(cycle[i - 1], cycle[i]) for i in range(len(cycle))}
    _, ins = side_of_cycle(tri, cycle, INSIDE)
    _, outs = side_of_cycle(tri, cycle, OUTSIDE)
    ins -= cyc
    outs -= cyc
    if any(e[0] == u or e[1] == u for e in outs):
        cycle = [cycle[0]] + cycle[:0:-1]
        ins, outs = outs, ins
    return CycleDecomposition(cycle, ins, outs, u, v)


def validate_decomposition(tri, dec):
    """Independent check: Hamiltonicity, partition, face-consistent sides, u/v separation."""
    c = dec.cycle
    if sorted(c) != list(range(tri.n)):
        return False
    cyc = set()
    for i in range(len(c)):
        if not tri.has_edge(c[i - 1], c[i]):
            return False
        cyc.add(edge(c[i - 1], c[i]))
    rest = set(tri.edges()) - cyc
    if dec.inside_edges & dec.outside_edges or dec.inside_edges | dec.outside_edges != rest:
        return False
    inside_faces = _face_regions(tri, c)
    for e in rest:
        a, b = e
        f1 = frozenset((a, b, tri.succ(b, a)))
        f2 = frozenset((a, b, tri.succ(a, b)))
        if (f1 in inside_faces) != (f2 in inside_faces):
            return False
        if (f1 in inside_faces) != (e in dec.inside_edges):
            return False
    for e in cyc:
        a, b = e
        f1 = frozenset((a, b, tri.succ(b, a)))
        f2 = frozenset((a, b, tri.succ(a, b)))
        if (f1 in inside_faces) == (f2 in inside_faces):
            return False
    if dec.u is not None:
        if not tri.has_edge(dec.u, dec.v) or edge(dec.u, dec.v) not in cyc:
            return False
        if any(dec.u in e for e in dec.outside_edges):
            return False
        if any(dec.v in e for e in dec.inside_edges):
            return False
    return True


def _flip_keeps_4connected(tri, a, b):
    t = tri.copy()
    t.flip(a, b)
    return not has_separating_triangle(t)


def apex_flip_candidates(tri):
    """Preparatory flips in the order they are tried, as ``(x, y, edge)``.

    With maximum degree 6 these are the flips joining two degree-6
    vertices; otherwise the flips joining a maximum-degree ``x`` to a
    vertex ``y`` of degree >= 5.  4-connectivity is not checked here.
    """
    n = tri.n
    deg = [len(r) for r in tri.rot]
    delta = max(deg)
    out = []
    if delta == 6:
        for a, b in tri.edges():
            c, d = tri.apexes(a, b)
            if deg[c] == 6 and deg[d] == 6 and not tri.has_edge(c, d):
                out.append((min(c, d), max(c, d), (a, b)))
        return out
    for x in range(n):
        if deg[x] != delta:
            continue
        cands = []
        r = tri.rot[x]
        for i in range(len(r)):
            a, b = r[i], r[(i + 1) % len(r)]
            p, q = tri.apexes(a, b)
            w = q if p == x else p
            if deg[w] >= 5 and not tri.has_edge(x, w):
                cands.append((w, edge(a, b)))
        out.extend((x, w, e) for w, e in sorted(cands))
    return out


def pick_apex_pair(tri, strict=True):
    """Choose the pair (x, y) whose fans finish the canonical transformation.

    * maximum degree 6: flip an edge whose apexes both have degree 6, so
      both reach degree 7;
    * otherwise x of maximum degree with a neighbour y of degree >= 6, or
      failing that a flip joining x to a vertex y of degree >= 5.

    Only flips after which the triangulation is still 4-connected are
    accepted.  Returns ``(x, y, FlipRecord | None)`` and performs the flip.
    With ``strict`` the size thresholds n >= 13 (n >= 19 when the maximum
    degree is 6) are enforced.
    """
    n = tri.n
    delta = tri.max_degree()
    if strict and (n < 13 or (delta == 6 and n < 19)):
        raise TooSmall(f"degree lemmas need n >= {19 if delta == 6 else 13}, got {n}")
    if has_separating_triangle(tri):
        raise NotFourConnected("triangulation has a separating triangle")
    if delta != 6:
        for x in range(n):
            if len(tri.rot[x]) == delta:
                for y in sorted(tri.adj[x]):
                    if len(tri.rot[y]) >= 6:
                        return x, y, None
    for x, y, (a, b) in apex_flip_candidates(tri):
        if _flip_keeps_4connected(tri, a, b):
            return x, y, tri.flip(a, b)
    if delta == 6:
        raise NoValidPair("no 4-connectivity-preserving flip joins two degree-6 vertices")
    raise NoValidPair("no neighbour of degree >= 6 and no usable flip")


def good_cycle_by_search(tri, u, v):
    """Side-separating Hamiltonian cycle through (u, v) without assuming 4-connectivity.

    With p and q the apexes of (u, v), any Hamiltonian p-q path avoiding u
    and v closes to a cycle p ... q, v, u in which u and v each have one
    cycle neighbour at a face of (u, v), so each keeps its other edges on
    one side, and the two sides differ.  Raises NotFound when no such
    path exists.
    """
    if not tri.has_edge(u, v):
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    p, q = tri.apexes(u, v)
    nbrs = {w: [x for x in tri.rot[w] if x != u and x != v]
            for w in range(tri.n) if w != u and w != v}
    path = _hamiltonian_path(nbrs, p, q)
    if path is None:
        raise NotFound(f"no Hamiltonian {p}-{q} path avoiding {u} and {v}")
    dec = decompose(tri, path + [v, u], u, v)
    if not validate_decomposition(tri, dec):
        raise InternalInconsistency("searched cycle failed validation")
    return dec
