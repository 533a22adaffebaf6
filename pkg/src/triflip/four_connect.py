"""Removing all separating triangles with at most floor((3n - 9) / 5) flips.

Each round flips one edge of a deepest separating triangle ``D``:

* case 1, ``D`` shares no edge: flip an edge of ``D`` that is not on the
  outer face;
* case 2, ``D`` shares edges only with non-containing triangles: flip the
  smallest shared edge;
* case 3, ``D`` shares exactly one edge, with a containing triangle: flip it;
* cases 4 and 5, ``D`` shares an edge with a containing triangle and one or
  two more with non-containing triangles: flip the smallest of the latter.

With ``audit=True`` a :class:`ChargeLedger` starts with one coin per edge
and removes five per flip following the charging argument for the bound.
After every flip it checks that every edge of a separating triangle holds
a coin, that every vertex of a separating triangle has a coin-holding free
edge inside that triangle, and that the outer face edges kept their coins.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .embedding import FlipSequence, canonical_code, edge, serialize
from .errors import (AuditFailure, InternalInconsistency, TooSmall,
                     Unremovable)
from .septri import (deepest_triangle, has_separating_triangle, scan,
                     shared_edge_profile)


def flip_bound(n):
    """Upper bound on flips needed to make an ``n``-vertex triangulation 4-connected."""
    return (3 * n - 9) // 5


def is_4connected(tri):
    """True iff there is no separating triangle.

    K4 counts as 4-connected here even though its vertex connectivity is 3.
    """
    return not has_separating_triangle(tri)


def select_flip_edge(tri, D, profile):
    """Edge of the deepest triangle ``D`` to flip, and the case number 1-5."""
    shared = sorted(e for e, p in profile.items() if p.shared)
    if not shared:
        outer = tri.outer_edges()
        cands = sorted(e for e in D.edges() if e not in outer)
        if not cands:
            raise InternalInconsistency(f"{D.vertices} is the outer face")
        return cands[0], 1
    with_containing = [e for e in shared if profile[e].containing]
    if len(with_containing) > 1:
        raise InternalInconsistency(
            f"{D.vertices} shares several edges with containing triangles")
    if not with_containing:
        return shared[0], 2
    eA = with_containing[0]
    others = [e for e in shared if e != eA]
    if not others:
        return eA, 3
    return others[0], 4 if len(others) == 1 else 5


@dataclass
class ChargeLedger:
    coins: dict
    initial: int = 0
    charges: list = field(default_factory=list)  # (flip index, case, [(edge, type)])
    moves: list = field(default_factory=list)    # (flip index, from edge, to edge)

    @classmethod
    def start(cls, tri):
        coins = {e: 1 for e in tri.edges()}
        return cls(coins, len(coins))

    @property
    def total(self):
        return sum(self.coins.values())

    def log_lines(self):
        moves = {}
        for k, src, dst in self.moves:
            moves.setdefault(k, []).append((src, dst))
        lines = []
        for k, case, items in self.charges:
            for (a, b), typ in items:
                lines.append(f"charge {case} {a} {b} type{typ}")
            for (a, b), (c, d) in moves.get(k, []):
                lines.append(f"move {a} {b} -> {c} {d}")
        return lines


class _Auditor:
    """Plans the five charges for one flip and checks the invariants."""

    def __init__(self, tri, ledger, history):
        self.tri = tri
        self.ledger = ledger
        self.history = history

    def fail(self, message):
        dump = [serialize(self.tri), "# flips so far"]
        dump.extend(r.to_line() for r in self.history)
        dump.append("# ledger")
        dump.extend(self.ledger.log_lines())
        raise AuditFailure(message, "\n".join(dump))

    def pick(self, S, v, index, taken):
        """Smallest coin-holding free edge at ``v`` whose other end is inside ``S``."""
        on = index.triangle_edges()
        coins = self.ledger.coins
        best = None
        for x in self.tri.rot[v]:
            if S.inside(x):
                e = edge(v, x)
                if e not in on and coins[e] == 1 and e not in taken:
                    if best is None or e < best:
                        best = e
        if best is None:
            self.fail(f"no charged-free edge at {v} inside {S.vertices}")
        taken.add(best)
        return best

    def plan(self, index, D, profile, e, case):
        tri = self.tri
        iD = index.index_of(D)
        containers = [index.triangles[j] for j in index.containing(iD)]
        taken = set()
        charged = []
        move_src = None

        def add(f, typ):
            charged.append((f, typ))

        def free(S, v, typ):
            add(self.pick(S, v, index, taken), typ)

        def touched(tris):
            return {v for S in tris for v in S.vertices}

        if case == 1:
            outer = tri.outer_edges()
            add(e, 1)
            for f in D.edges():
                if f != e and f not in outer:
                    add(f, 2)
            shared_v = touched(containers)
            cands = [v for v in D.vertices if v not in shared_v]
            need = 5 - len(charged)
            if len(cands) < need:
                self.fail(f"case 1: only {len(cands)} unshared vertices on {D.vertices}")
            for v in cands[:need]:
                free(D, v, 3)
        elif case == 2:
            p, q = e
            z = D.third(e)
            B = min(profile[e].non_containing, key=lambda s: s.vertices)
            r = B.third(e)
            add(e, 1)
            free(D, p, 4)
            free(D, q, 4)
            survivors = [S for S in index.triangles
                         if not S.uses(e) and (S.contains(D) or S.contains(B))]
            shared_v = touched(survivors)
            cands = [v for v in sorted((p, q, z, r)) if v not in shared_v]
            if len(cands) < 2:
                self.fail(f"case 2: quadrilateral {p, q, z, r} has <2 unshared vertices")
            for v in cands[:2]:
                free(D if v == z else B, v, 3)
        elif case == 3:
            p, q = e
            z = D.third(e)
            on_outer = tri.is_outer_edge(p, q)
            if not on_outer:
                add(e, 1)
            for f in D.edges():
                if f != e:
                    add(f, 2)
            shared_v = touched(A for A in containers if not A.uses(e))
            if z in shared_v:
                self.fail(f"case 3: unshared vertex {z} lies on a containing triangle")
            free(D, z, 3)
            cands = [v for v in (p, q) if v not in shared_v]
            need = 5 - len(charged)
            if len(cands) < need:
                self.fail(f"case 3: endpoints of {e} lie on containing triangles")
            for v in cands[:need]:
                free(D, v, 3)
            if on_outer:
                for A in containers:
                    if not A.uses(e):
                        self.fail("case 3: outer triangle contained by one not sharing its outer edge")
                A = max(containers,
                        key=lambda s: (index.depth[index.index_of(s)], [-x for x in s.vertices]))
                move_src = self.pick(A, A.third(e), index, taken)
        else:
            eA = next(f for f, p in profile.items() if p.containing)
            v = D.third(eA)
            w = e[0] if e[1] == v else e[1]
            if v not in e:
                self.fail(f"case {case}: flipped edge {e} misses vertex {v}")
            B = min(profile[e].non_containing, key=lambda s: s.vertices)
            add(e, 1)
            if case == 4:
                eU = next(f for f in D.edges() if f != eA and f != e)
                add(eU, 2)
            free(D, v, 4)
            free(D, w, 4)
            free(B, v, 3)
            if case == 5:
                free(D, D.third(e), 3)
        return charged, move_src

    def settle(self, k, case, rec, charged, move_src, old_outer_edges):
        coins = self.ledger.coins
        coins[rec.inserted] = coins.pop(rec.removed)
        seen = set()
        for f, typ in charged:
            key = rec.inserted if f == rec.removed else f
            if key in seen:
                self.fail(f"edge {f} charged twice")
            seen.add(key)
            if coins.get(key) != 1:
                self.fail(f"charged edge {f} (type {typ}) holds no coin")
            coins[key] = 0
        if len(charged) != 5:
            self.fail(f"{len(charged)} edges charged, expected 5")
        self.ledger.charges.append((k, case, charged))
        if move_src is not None:
            new_edges = self.tri.outer_edges() - old_outer_edges - {rec.inserted}
            (dst,) = new_edges
            if coins[dst] == 0:
                if coins.get(move_src) != 1:
                    self.fail(f"coin source {move_src} is empty")
                coins[move_src] = 0
                coins[dst] = 1
                self.ledger.moves.append((k, move_src, dst))

    def verify(self, index, flips):
        tri = self.tri
        coins = self.ledger.coins
        on = index.triangle_edges()
        for e in on:
            if coins[e] != 1:
                self.fail(f"separating-triangle edge {e} has no coin")
        for S in index.triangles:
            mask = S.mask
            for v in S.vertices:
                for x in tri.rot[v]:
                    if (mask >> x) & 1:
                        e = (v, x) if v < x else (x, v)
                        if e not in on and coins[e]:
                            break
                else:
                    self.fail(f"vertex {v} of {S.vertices} has no coin-holding free edge inside")
        for e in tri.outer_edges():
            if coins[e] != 1:
                self.fail(f"outer edge {e} lost its coin")
        if self.ledger.total != self.ledger.initial - 5 * flips:
            self.fail("coin total does not match 5 per flip")


def make_4_connected(tri, audit=False):
    """Flip edges of deepest separating triangles until none remain.

    Mutates ``tri``.  Returns ``(FlipSequence, ChargeLedger | None)``.
    Every flip is checked to remove at least one separating triangle and
    to create none.
    """
    n = tri.n
    if n < 4:
        raise TooSmall(f"need n >= 4, got {n}")
    seq = FlipSequence(canonical_code(tri))
    ledger = ChargeLedger.start(tri) if audit else None
    if n == 4:
        return seq, ledger
    if n == 5:
        raise Unremovable("the 5-vertex triangulation always keeps a separating triangle")
    index = scan(tri)
    auditor = _Auditor(tri, ledger, seq.records) if audit else None
    if auditor:
        auditor.verify(index, 0)
    while index:
        D = deepest_triangle(tri, index)
        profile = shared_edge_profile(tri, D, index)
        e, case = select_flip_edge(tri, D, profile)
        if not (len(index.triangles_on(e)) > 1
                or not any(p.shared for p in profile.values())):
            raise InternalInconsistency(f"edge {e} violates the safe-flip condition")
        if auditor:
            charged, move_src = auditor.plan(index, D, profile, e, case)
            old_outer = tri.outer_edges()
        before = set(index.triples())
        rec = tri.flip(*e)
        seq.records.append(rec)
        index = scan(tri)
        after = set(index.triples())
        if D.vertices in after or not after < before:
            raise InternalInconsistency(
                f"flip {rec.to_line()} did not strictly shrink the separating triangles")
        if auditor:
            auditor.settle(len(seq.records) - 1, case, rec, charged, move_src, old_outer)
            auditor.verify(index, len(seq.records))
    return seq, ledger


def min_flips_approx(tri):
    """Hitting-set style heuristic: take any separating triangle, flip all its shared edges.

    If it shares no edge, one of its edges is flipped instead.  Mutates ``tri``.
    """
    n = tri.n
    if n < 4:
        raise TooSmall(f"need n >= 4, got {n}")
    seq = FlipSequence(canonical_code(tri))
    if n == 4:
        return seq
    if n == 5:
        raise Unremovable("the 5-vertex triangulation always keeps a separating triangle")
    index = scan(tri)
    while index:
        D = index.triangles[0]
        shared = [e for e in D.edges() if len(index.triangles_on(e)) > 1]
        if not shared:
            shared = [min(D.edges())]
        for e in shared:
            if tri.has_edge(*e) and tri.is_flippable(*e):
                seq.records.append(tri.flip(*e))
        index = scan(tri)
    return seq
