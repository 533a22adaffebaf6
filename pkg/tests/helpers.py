import random

from triflip.embedding import from_faces
from triflip.four_connect import is_4connected, make_4_connected
from triflip.generators import gen_random, gen_stacked


def octahedron():
    # 0 on top, 5 at the bottom, equator 1 2 3 4
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1),
             (5, 2, 1), (5, 3, 2), (5, 4, 3), (5, 1, 4)]
    return from_faces(6, faces, (0, 1, 2))


def k4():
    return gen_stacked(4)


def mixed(n, seed):
    """Alternate between the random-flip and stacked generators."""
    if seed % 2:
        return gen_random(n, 2 * n, seed)
    return gen_stacked(n, seed)


def four_connected(n, seed):
    tri = mixed(n, seed)
    make_4_connected(tri)
    return tri


def low_degree(n, seed):
    """A 4-connected triangulation with maximum degree 6.

    Random walk over flips that keep 4-connectivity and rarely increase
    the total excess degree above 6.
    """
    tri = gen_random(n, 3 * n, seed)
    make_4_connected(tri)
    rng = random.Random(seed)

    def excess(x):
        return max(0, tri.degree(x) - 6)

    for _ in range(2000 * n):
        if tri.max_degree() <= 6:
            return tri
        a, b = rng.choice(tri.edges())
        c, d = tri.apexes(a, b)
        if tri.has_edge(c, d) or (tri.adj[c] & tri.adj[d]) - {a, b}:
            continue
        if min(tri.degree(a), tri.degree(b)) <= 4:
            continue
        gain = (excess(a) > 0) + (excess(b) > 0) - (tri.degree(c) >= 6) - (tri.degree(d) >= 6)
        if gain >= 0 or (gain == -1 and rng.random() < 0.02):
            tri.flip(a, b)
    raise RuntimeError(f"no degree-6 instance for n={n}, seed={seed}")


K4_FACES = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]


def stacked(n, placements):
    """K4 with vertex 4, 5, ... stacked into the given faces in turn."""
    faces = list(K4_FACES)
    for s, face in enumerate(placements, start=4):
        i = faces.index(face)
        A, B, C = face
        faces[i] = (A, B, s)
        faces += [(B, C, s), (C, A, s)]
    return from_faces(n, faces, (0, 1, 2))


# one line per acceptance criterion, printed by conftest at the end of the run
ACCEPTANCE = []
