"""Flipping a 4-connected triangulation into the canonical form.

The canonical triangulation has two adjacent dominant vertices (degree
n - 1).  The pipeline picks an apex pair (x, y), takes a Hamiltonian cycle
through (x, y) with x's other edges inside and y's outside, then fans x
inside and y outside.  Fanning v costs exactly n - 1 - deg(v) flips, so
with deg(x) = Δ and deg(y) >= 6 the total is at most 2n - Δ - 8.
"""

from __future__ import annotations

from .embedding import FlipRecord, FlipSequence, canonical_code, edge, isomorphism
from .errors import (BoundViolation, NotFound, NoValidPair, NotFourConnected,
                     PreconditionViolated, SizeMismatch, TooSmall)
from .four_connect import make_4_connected
from .hamiltonian import (INSIDE, OUTSIDE, apex_flip_candidates,
                          good_cycle_by_search, hamiltonian_cycle_through,
                          pick_apex_pair)
from .septri import has_separating_triangle

ORACLE_MAX_N = 9
STRICT_MIN_N = 19


def is_canonical(tri):
    """True iff at least two vertices have degree n - 1."""
    n = tri.n
    return sum(1 for r in tri.rot if len(r) == n - 1) >= 2


def canonical_budget(n, delta0):
    """Flip budget for :func:`to_canonical` given the initial maximum degree."""
    bound = 2 * n - delta0 - 8
    if delta0 == 6:
        bound = min(bound, 2 * n - 15)
    return bound


def distance_budget(n):
    """Integer form of the 5.2 n - 33.6 bound on the composed sequence."""
    return (52 * n - 336) // 10


def make_dominant_in_side(tri, decomp, v, side):
    """Fan ``v`` on one side of the decomposition until it is adjacent to everything.

    Each flip takes a side edge (a, b) with faces (v, a, b) and (a, b, c)
    and replaces it by (v, c).  ``decomp``'s edge set for ``side`` is
    updated in place.  Returns the list of flip records.
    """
    n = tri.n
    cycle = decomp.cycle
    if side == INSIDE:
        edges, other = decomp.inside_edges, decomp.outside_edges
    elif side == OUTSIDE:
        edges, other = decomp.outside_edges, decomp.inside_edges
    else:
        raise ValueError(f"side must be {INSIDE!r} or {OUTSIDE!r}")
    if v not in cycle:
        raise PreconditionViolated(f"{v} is not on the cycle")
    if any(v in e for e in other):
        raise PreconditionViolated(f"{v} has edges on the other side")
    i = cycle.index(v)
    start = cycle[(i + 1) % n]
    records = []
    target = n - 1 - tri.degree(v)
    while tri.degree(v) < n - 1:
        r = tri.rot[v]
        k = r.index(start)
        d = len(r)
        for j in range(d):
            a, b = r[(k + j) % d], r[(k + j + 1) % d]
            if edge(a, b) in edges:
                break
        else:
            raise PreconditionViolated(f"no side edge opposite {v} to flip")
        c, w = tri.apexes(a, b)
        c = w if c == v else c
        if c in tri.adj[v]:
            raise PreconditionViolated(f"apex {c} of ({a}, {b}) already adjacent to {v}")
        before = tri.degree(v)
        rec = tri.flip(a, b)
        if tri.degree(v) != before + 1:
            raise PreconditionViolated("fanning flip did not raise the degree by one")
        edges.discard(rec.removed)
        edges.add(rec.inserted)
        records.append(rec)
    if len(records) != target:
        raise PreconditionViolated(f"{len(records)} fanning flips, expected {target}")
    return records


def _prepare(tri, strict):
    """Apex pair, optional preparatory flip (applied), and the good cycle.

    When every preparatory flip breaks 4-connectivity, the flips are
    retried with the cycle found by direct search instead.
    """
    try:
        x, y, rec = pick_apex_pair(tri, strict=strict)
        return x, y, rec, hamiltonian_cycle_through(tri, x, y)
    except NoValidPair as exc:
        err = exc
    for x, y, (a, b) in apex_flip_candidates(tri):
        t = tri.copy()
        t.flip(a, b)
        try:
            dec = good_cycle_by_search(t, x, y)
        except NotFound:
            continue
        return x, y, tri.flip(a, b), dec
    if strict:
        raise err
    x = max(range(tri.n), key=lambda v: (tri.degree(v), -v))
    y = max(tri.adj[x], key=lambda v: (tri.degree(v), -v))
    return x, y, None, hamiltonian_cycle_through(tri, x, y)


def to_canonical(tri):
    """Flip a 4-connected ``tri`` into the canonical triangulation (in place).

    Up to 9 vertices the exact shortest sequence is found by search.  From
    19 vertices on the result is guaranteed to respect
    :func:`canonical_budget` and :class:`BoundViolation` is raised
    otherwise.  In between the same pipeline runs with relaxed apex-pair
    selection and no budget guarantee.
    """
    n = tri.n
    if n < 4:
        raise TooSmall(f"need n >= 4, got {n}")
    if has_separating_triangle(tri):
        raise NotFourConnected("triangulation has a separating triangle")
    delta0 = tri.max_degree()
    seq = FlipSequence(canonical_code(tri))
    if is_canonical(tri):
        return seq
    if n <= ORACLE_MAX_N:
        from .oracle import shortest_flip_sequence
        path = shortest_flip_sequence(tri, is_canonical)
        path.replay(tri)
        seq.extend(path.records)
        return seq
    strict = n >= STRICT_MIN_N
    x, y, rec, dec = _prepare(tri, strict)
    if rec is not None:
        seq.records.append(rec)
    seq.extend(make_dominant_in_side(tri, dec, x, INSIDE))
    seq.extend(make_dominant_in_side(tri, dec, y, OUTSIDE))
    if not is_canonical(tri):
        raise PreconditionViolated("pipeline finished without reaching the canonical form")
    if strict and len(seq) > canonical_budget(n, delta0):
        raise BoundViolation(
            f"{len(seq)} flips exceed the budget {canonical_budget(n, delta0)}")
    return seq


def _reverse_mapped(records, phi):
    out = []
    for rec in reversed(records):
        (a, b), (c, d) = rec.inserted, rec.removed
        out.append(FlipRecord(edge(phi[a], phi[b]), edge(phi[c], phi[d])))
    return out


def flip_distance_via_canonical(t1, t2):
    """Flip sequence taking ``t1`` to a triangulation isomorphic to ``t2``.

    Both sides are made 4-connected and canonical; the second half is
    reversed and relabelled through an isomorphism between the two
    canonical triangulations.  Inputs are not modified.  Up to 9 vertices
    an exact shortest sequence is returned instead.
    """
    if t1.n != t2.n:
        raise SizeMismatch(f"{t1.n} != {t2.n}")
    n = t1.n
    if n < 4:
        raise TooSmall(f"need n >= 4, got {n}")
    target = canonical_code(t2)
    if n <= ORACLE_MAX_N:
        from .oracle import shortest_flip_sequence
        return shortest_flip_sequence(t1, lambda t: canonical_code(t) == target)
    a, b = t1.copy(), t2.copy()
    seq = FlipSequence(canonical_code(t1))
    s1, _ = make_4_connected(a)
    seq.extend(s1.records)
    seq.extend(to_canonical(a).records)
    s2, _ = make_4_connected(b)
    c2 = to_canonical(b)
    phi = isomorphism(b, a)
    if phi is None:
        raise PreconditionViolated("canonical forms are not isomorphic")
    seq.extend(_reverse_mapped(c2.records, phi))
    seq.extend(_reverse_mapped(s2.records, phi))
    return seq
