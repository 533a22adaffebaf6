"""Instance generators: canonical, lower-bound family, random and stacked.

All generators build oriented face lists and hand them to
:func:`~triflip.embedding.from_faces`, so every output is fully validated.

Random instances use :class:`random.Random` (Mersenne Twister, MT19937)
seeded explicitly; :data:`RNG_NAME` is recorded in CLI output.
"""

import random

from .embedding import from_faces
from .errors import BadParameter, TooSmall

RNG_NAME = "mt19937-python-random"


def gen_canonical(n):
    """Two adjacent dominant vertices 0 and 1 over the path 2, 3, ..., n-1.

    The outer face is (0, 1, 2).
    """
    if n < 4:
        raise TooSmall(f"need n >= 4, got {n}")
    u, w = 0, 1
    path = list(range(2, n))
    faces = [(path[0], u, w), (u, path[-1], w)]
    for p, q in zip(path, path[1:]):
        faces.append((u, p, q))
        faces.append((w, q, p))
    return from_faces(n, faces, (u, w, path[0]))


def lower_bound_size(k, partial=0):
    """Vertex count of the lower-bound instance: 10 + 5 (3 + 9 + ... + 3^(k-1)) + 5 partial."""
    leaves = 1
    n = 10
    for _ in range(2, k + 1):
        leaves *= 3
        n += 5 * leaves
    return n + 5 * partial


def gen_sierpinski(k, partial=0):
    """The Sierpinski-style family whose separating triangles are edge-disjoint.

    ``k`` levels of "insert an inverted triangle, recurse on the three
    corner triangles", then one stacked vertex per corner triangle and one
    vertex outside the original triangle.  With ``partial = p`` the first
    ``p`` final-level corner triangles get one more level, adding 5
    vertices and 3 separating triangles each.
    """
    if k < 1:
        raise BadParameter(f"k must be >= 1, got {k}")
    if partial is None:
        partial = 0
    if not 0 <= partial <= 3 ** k:
        raise BadParameter(f"partial must lie in [0, {3 ** k}], got {partial}")

    faces = []
    counter = [3]

    def new_vertex():
        counter[0] += 1
        return counter[0] - 1

    def subdivide(tri):
        # returns the three corner triangles; emits the four other faces
        A, B, C = tri
        a, b, c = new_vertex(), new_vertex(), new_vertex()  # opposite A, B, C
        faces.extend([(A, B, c), (B, C, a), (C, A, b), (a, b, c)])
        return [(A, c, b), (B, a, c), (C, b, a)]

    def stack(tri):
        A, B, C = tri
        s = new_vertex()
        faces.extend([(A, B, s), (B, C, s), (C, A, s)])

    level = [(0, 1, 2)]
    for _ in range(k):
        level = [corner for t in level for corner in subdivide(t)]
    for i, t in enumerate(level):
        if i < partial:
            for corner in subdivide(t):
                stack(corner)
        else:
            stack(t)
    e = new_vertex()
    outside = [(0, 2, e), (2, 1, e), (1, 0, e)]
    faces.extend(outside)
    n = counter[0]
    outer = min(outside, key=lambda f: tuple(sorted(f)))
    return from_faces(n, faces, outer)


def gen_random(n, steps, seed=0):
    """Canonical triangulation followed by ``steps`` uniformly random legal flips.

    A random edge is drawn and redrawn while its flip is illegal, which is
    uniform over legal flips.  The walk is not a uniform sampler of
    triangulations.
    """
    if steps < 0:
        raise BadParameter("steps must be >= 0")
    tri = gen_canonical(n)
    rng = random.Random(seed)
    edges = tri.edges()
    for _ in range(steps):
        while True:
            i = rng.randrange(len(edges))
            a, b = edges[i]
            c, d = tri.apexes(a, b)
            if d not in tri.adj[c]:
                break
        rec = tri.flip(a, b)
        edges[i] = rec.inserted
    return tri


def gen_stacked(n, seed=0):
    """Start from K4 and repeatedly stack a vertex into a uniformly random face.

    A vertex stacked into the outer face makes the old outer face
    separating; the new outer face is then the lexicographically smallest
    of the three new faces.
    """
    if n < 4:
        raise TooSmall(f"need n >= 4, got {n}")
    rng = random.Random(seed)
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]
    outer = 0
    for s in range(4, n):
        i = rng.randrange(len(faces))
        A, B, C = faces[i]
        new = [(A, B, s), (B, C, s), (C, A, s)]
        faces[i] = new[0]
        faces.extend(new[1:])
        if i == outer:
            best = min(new, key=lambda f: tuple(sorted(f)))
            outer = i if best == new[0] else len(faces) - (2 if best == new[1] else 1)
    return from_faces(n, faces, faces[outer])
