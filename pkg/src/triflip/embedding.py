"""Combinatorial triangulations stored as rotation systems.

Orientation convention
----------------------
``rot[v]`` lists the neighbours of ``v`` in clockwise order.  Faces are
traced with one fixed rule: from the directed edge ``u -> v`` the next
directed edge of the same face is ``v -> w`` where ``w`` is the neighbour
immediately clockwise after ``u`` in ``rot[v]``.  Every face orbit of a
valid triangulation has length three, and the outer face is stored as one
such orbit, rotated to start at its smallest vertex.

Whether "clockwise" rotations correspond to clockwise or counter-clockwise
face traversal in a drawing is a convention; nothing here depends on it.

Isomorphism
-----------
:func:`canonical_code` ignores the outer face and identifies embeddings
that differ by relabelling or by reflection.  A maximal planar graph on at
least four vertices is 3-connected, so its embedding on the sphere is
unique up to reflection, and the code therefore decides plain graph
isomorphism as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .errors import (AsymmetricAdjacency, BadOuterFace, Disconnected,
                     IllegalFlip, NonSimple, NonTriangularFace, NotAnEdge,
                     ParseError, TooSmall, WrongEdgeCount)


def edge(a, b):
    """Normalised undirected edge."""
    return (a, b) if a < b else (b, a)


def _norm_face(face):
    i = face.index(min(face))
    return face[i:] + face[:i]


@dataclass(frozen=True)
class FlipRecord:
    removed: tuple
    inserted: tuple
    new_outer: tuple | None = None

    def reversed(self):
        return FlipRecord(self.inserted, self.removed)

    def to_line(self):
        a, b = self.removed
        c, d = self.inserted
        line = f"flip {a} {b} -> {c} {d}"
        if self.new_outer is not None:
            line += " outer {} {} {}".format(*self.new_outer)
        return line


@dataclass
class FlipSequence:
    initial_hash: bytes
    records: list = field(default_factory=list)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def extend(self, records):
        self.records.extend(records)

    def replay(self, tri):
        """Apply the flips to ``tri`` in place; every flip must be legal."""
        for rec in self.records:
            got = tri.flip(*rec.removed)
            if got.inserted != rec.inserted:
                raise IllegalFlip(
                    f"replay mismatch: {rec.to_line()} produced {got.to_line()}")
        return tri

    def to_text(self):
        lines = [f"# initial {self.initial_hash.hex()}"]
        lines.extend(r.to_line() for r in self.records)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        initial = b""
        records = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                parts = line[1:].split()
                if len(parts) == 2 and parts[0] == "initial":
                    initial = bytes.fromhex(parts[1])
                continue
            tok = line.split()
            try:
                if tok[0] != "flip" or tok[3] != "->":
                    raise ValueError
                removed = edge(int(tok[1]), int(tok[2]))
                inserted = edge(int(tok[4]), int(tok[5]))
                outer = None
                if len(tok) > 6:
                    if tok[6] != "outer" or len(tok) != 10:
                        raise ValueError
                    outer = tuple(int(x) for x in tok[7:10])
                elif len(tok) != 6:
                    raise ValueError
            except (ValueError, IndexError):
                raise ParseError(f"bad flip line {raw!r}", lineno) from None
            records.append(FlipRecord(removed, inserted, outer))
        return cls(initial, records)


class Triangulation:
    """A maximal planar simple graph with a designated outer face.

    Construct through :func:`build` (validating) or :meth:`copy`.
    """

    __slots__ = ("n", "rot", "adj", "outer")

    def __init__(self, n, rot, outer):
        self.n = n
        self.rot = rot
        self.adj = [set(r) for r in rot]
        self.outer = outer

    def copy(self):
        t = Triangulation.__new__(Triangulation)
        t.n = self.n
        t.rot = [list(r) for r in self.rot]
        t.adj = [set(a) for a in self.adj]
        t.outer = self.outer
        return t

    def __repr__(self):
        return f"<Triangulation n={self.n} outer={self.outer}>"

    def __eq__(self, other):
        if not isinstance(other, Triangulation):
            return NotImplemented
        return self.rot == other.rot and self.outer == other.outer

    # -- basic queries -------------------------------------------------

    @property
    def m(self):
        return sum(len(r) for r in self.rot) // 2

    def degree(self, v):
        return len(self.rot[v])

    def max_degree(self):
        return max(len(r) for r in self.rot)

    def has_edge(self, a, b):
        return b in self.adj[a]

    def edges(self):
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def succ(self, v, u):
        """Neighbour of ``v`` immediately clockwise after ``u``."""
        r = self.rot[v]
        return r[(r.index(u) + 1) % len(r)]

    def pred(self, v, u):
        r = self.rot[v]
        return r[r.index(u) - 1]

    def apexes(self, a, b):
        """Third vertices of the faces ``a->b->c`` and ``b->a->d``."""
        return self.succ(b, a), self.succ(a, b)

    def faces(self):
        """All face orbits, each rotated to start at its smallest vertex."""
        return face_orbits(self.rot)

    def outer_edges(self):
        a, b, c = self.outer
        return {edge(a, b), edge(b, c), edge(a, c)}

    def is_outer_edge(self, a, b):
        o = self.outer
        return a in o and b in o

    # -- flips ---------------------------------------------------------

    def is_flippable(self, a, b):
        if b not in self.adj[a]:
            raise NotAnEdge(f"({a}, {b}) is not an edge")
        c, d = self.apexes(a, b)
        return d not in self.adj[c]

    def flip(self, a, b):
        """Replace edge (a, b) by the edge joining the apexes of its two faces.

        If (a, b) lies on the outer face, the new outer face is the new
        face containing the smaller of a and b.
        """
        if b not in self.adj[a]:
            raise NotAnEdge(f"({a}, {b}) is not an edge")
        c, d = self.apexes(a, b)
        if d in self.adj[c]:
            raise IllegalFlip(f"flipping ({a}, {b}) would duplicate ({c}, {d})")
        rot = self.rot
        rot[a].remove(b)
        rot[b].remove(a)
        rc = rot[c]
        rc.insert(rc.index(a), d)
        rd = rot[d]
        rd.insert(rd.index(b), c)
        adj = self.adj
        adj[a].discard(b)
        adj[b].discard(a)
        adj[c].add(d)
        adj[d].add(c)
        new_outer = None
        o = self.outer
        if a in o and b in o:
            x = min(a, b)
            # faces after the flip, in walk order: (c, d, b) and (d, c, a)
            new_outer = _norm_face((c, d, b) if x == b else (d, c, a))
            self.outer = new_outer
        return FlipRecord(edge(a, b), edge(c, d), new_outer)

    # -- misc ----------------------------------------------------------

    def relabel(self, perm):
        """Copy with vertex ``v`` renamed ``perm[v]``."""
        n = self.n
        rot = [None] * n
        for v in range(n):
            rot[perm[v]] = [perm[x] for x in self.rot[v]]
        outer = _norm_face(tuple(perm[x] for x in self.outer))
        return Triangulation(n, rot, outer)

    def mirror(self):
        """Copy with every rotation reversed (the reflected embedding)."""
        rot = [list(reversed(r)) for r in self.rot]
        a, b, c = self.outer
        return Triangulation(self.n, rot, _norm_face((a, c, b)))

    def to_dot(self):
        lines = ["graph T {"]
        lines.extend(f"  {u} -- {v};" for u, v in self.edges())
        lines.append("}")
        return "\n".join(lines) + "\n"


def face_orbits(rot):
    """Orbits of directed edges under the face-walk rule, as vertex tuples."""
    seen = set()
    faces = []
    for u in range(len(rot)):
        for v in rot[u]:
            if (u, v) in seen:
                continue
            orbit = []
            x, y = u, v
            while (x, y) not in seen:
                seen.add((x, y))
                orbit.append(x)
                r = rot[y]
                x, y = y, r[(r.index(x) + 1) % len(r)]
                if len(orbit) > len(rot) * 3:
                    break
            faces.append(_norm_face(tuple(orbit)))
    return faces


def build(n, rotations, outer):
    """Validate a rotation system and return a :class:`Triangulation`."""
    if n < 4:
        raise TooSmall(f"need at least 4 vertices, got {n}")
    if len(rotations) != n:
        raise NonSimple(f"expected {n} rotation lists, got {len(rotations)}")
    rot = [list(r) for r in rotations]
    for v, r in enumerate(rot):
        for x in r:
            if not isinstance(x, int) or not 0 <= x < n:
                raise NonSimple(f"vertex {v}: neighbour {x!r} out of range")
            if x == v:
                raise NonSimple(f"vertex {v}: loop")
        if len(set(r)) != len(r):
            raise NonSimple(f"vertex {v}: repeated neighbour")
    adj = [set(r) for r in rot]
    for v in range(n):
        for x in rot[v]:
            if v not in adj[x]:
                raise AsymmetricAdjacency(f"{x} is listed at {v} but not {v} at {x}")
    m = sum(len(r) for r in rot) // 2
    if m != 3 * n - 6:
        raise WrongEdgeCount(f"m = {m}, expected {3 * n - 6}")
    faces = face_orbits(rot)
    for f in faces:
        if len(f) != 3:
            raise NonTriangularFace(f"face {f} has length {len(f)}")
    if len(faces) != 2 * n - 4:
        raise NonTriangularFace(f"{len(faces)} faces, expected {2 * n - 4}")
    seen = {0}
    stack = [0]
    while stack:
        for y in rot[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != n:
        raise Disconnected("graph is not connected")
    outer = tuple(outer)
    if len(outer) != 3:
        raise BadOuterFace(f"outer face must be a vertex triple, got {outer}")
    key = frozenset(outer)
    match = [f for f in faces if frozenset(f) == key]
    if not match:
        raise BadOuterFace(f"{outer} is not a face")
    return Triangulation(n, rot, match[0])


def from_faces(n, faces, outer=None):
    """Build from consistently oriented faces given in face-walk order."""
    succ = [dict() for _ in range(n)]
    for a, b, c in faces:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            # walking x -> y -> z means z follows x clockwise at y
            if x in succ[y]:
                raise NonTriangularFace(f"inconsistent orientation at {y}")
            succ[y][x] = z
    rot = []
    for v in range(n):
        s = succ[v]
        if not s:
            raise NonSimple(f"vertex {v} is isolated")
        start = min(s)
        r = [start]
        x = s[start]
        while x != start:
            r.append(x)
            x = s[x]
            if len(r) > len(s):
                raise NonTriangularFace(f"rotation at {v} is not a single cycle")
        if len(r) != len(s):
            raise NonTriangularFace(f"rotation at {v} is not a single cycle")
        rot.append(r)
    if outer is None:
        outer = faces[0]
    return build(n, rot, outer)


def canonical_code(tri):
    """Isomorphism-class key: equal iff isomorphic up to relabelling and reflection."""
    return kernels.canonical_code(tri.rot)


def canonical_labeling(tri):
    """``order`` such that ``order[i]`` is the vertex given canonical label ``i``."""
    _, order = kernels.canonical_form(tri.rot)
    return order


def isomorphism(src, dst):
    """Vertex map ``phi`` with ``phi[v]`` in ``dst`` for ``v`` in ``src``, or None."""
    if src.n != dst.n or canonical_code(src) != canonical_code(dst):
        return None
    a = canonical_labeling(src)
    b = canonical_labeling(dst)
    phi = [0] * src.n
    for i in range(src.n):
        phi[a[i]] = b[i]
    return phi


def serialize(tri):
    lines = ["tri 1", f"n {tri.n}"]
    for v, r in enumerate(tri.rot):
        lines.append(f"{v}: " + " ".join(str(x) for x in r))
    lines.append("outer {} {} {}".format(*tri.outer))
    return "\n".join(lines) + "\n"


def deserialize(text):
    """Parse the ``.tri`` text format.  Lines starting with ``#`` are ignored."""
    n = None
    rows = {}
    outer = None
    header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            if not header:
                if line.split() != ["tri", "1"]:
                    raise ParseError("expected header 'tri 1'", lineno)
                header = True
                continue
            if line.startswith("n "):
                if n is not None:
                    raise ParseError("duplicate 'n' line", lineno)
                n = int(line[2:])
                continue
            if line.startswith("outer"):
                vals = [int(x) for x in line.split()[1:]]
                if len(vals) != 3:
                    raise ParseError("outer needs three vertices", lineno)
                outer = tuple(vals)
                continue
            head, sep, tail = line.partition(":")
            if not sep:
                raise ParseError(f"unrecognised line {raw!r}", lineno)
            v = int(head)
            if v in rows:
                raise ParseError(f"vertex {v} listed twice", lineno)
            rows[v] = [int(x) for x in tail.split()]
        except ValueError:
            raise ParseError(f"bad integer in {raw!r}", lineno) from None
    if not header:
        raise ParseError("empty input", 1)
    if n is None:
        raise ParseError("missing 'n' line")
    if outer is None:
        raise ParseError("missing 'outer' line")
    if sorted(rows) != list(range(n)):
        raise ParseError(f"expected rotation lines for vertices 0..{n - 1}")
    return build(n, [rows[v] for v in range(n)], outer)
