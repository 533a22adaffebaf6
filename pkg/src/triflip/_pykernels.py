"""Pure-Python implementations of the hot kernels.

These are the reference versions; ``_ckernels`` must return identical
results.  Interiors are Python ints used as vertex bitsets.
"""

from array import array

BACKEND = "python"


def septri_scan(n, rot, outer):
    """Enumerate separating triangles with their interiors and depths.

    Returns ``(triples, masks, depth)``: sorted vertex triples in
    lexicographic order, the interior of each as a bitmask, and for each
    triangle the number of other triangles whose interior strictly
    contains its interior.
    """
    adj = [set(r) for r in rot]
    triples = []
    for u in range(n):
        ru = rot[u]
        du = len(ru)
        for i in range(du):
            v = ru[i]
            if v <= u:
                continue
            # apexes of edge (u, v): the two faces on it
            rv = rot[v]
            a1 = rv[(rv.index(u) + 1) % len(rv)]
            a2 = ru[(i + 1) % du]
            for w in adj[u] & adj[v]:
                if w > v and w != a1 and w != a2:
                    triples.append((u, v, w))
    triples.sort()

    masks = []
    for t in triples:
        start = -1
        for o in outer:
            if o not in t:
                start = o
                break
        blocked = (1 << t[0]) | (1 << t[1]) | (1 << t[2])
        seen = blocked | (1 << start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in rot[x]:
                if not (seen >> y) & 1:
                    seen |= 1 << y
                    stack.append(y)
        masks.append(((1 << n) - 1) & ~seen)

    return triples, masks, containment_depths(masks)


def containment_depths(masks):
    """Depth of each interior: how many other interiors strictly contain it."""
    t = len(masks)
    depth = [0] * t
    sizes = [m.bit_count() if hasattr(m, "bit_count") else bin(m).count("1")
             for m in masks]
    order = sorted(range(t), key=lambda i: -sizes[i])
    for pos, i in enumerate(order):
        mi = masks[i]
        si = sizes[i]
        for j in order[pos + 1:]:
            if sizes[j] < si and masks[j] & ~mi == 0:
                depth[j] += 1
    return depth


def _code_from(rot, start, first, direction, best):
    # returns the code list, or None as soon as it exceeds ``best``
    n = len(rot)
    label = [-1] * n
    ref = [0] * n
    label[start] = 0
    ref[start] = first
    queue = [start]
    out = []
    nxt = 1
    pos = 0
    k = 0
    better = best is None
    while pos < len(queue):
        w = queue[pos]
        pos += 1
        r = rot[w]
        d = len(r)
        p = r.index(ref[w])
        for j in range(d):
            x = r[(p + direction * j) % d]
            if label[x] < 0:
                label[x] = nxt
                nxt += 1
                ref[x] = w
                queue.append(x)
            val = label[x] + 1
            if not better:
                b = best[k]
                if val > b:
                    return None, None
                if val < b:
                    better = True
            out.append(val)
            k += 1
        if not better:
            if best[k] != 0:
                # best has a value here, 0 is smaller
                better = True
        out.append(0)
        k += 1
    if not better:
        return None, None
    return out, queue


def start_candidates(rot):
    """Directed edges maximising (deg u, deg v); isomorphism and reflection invariant."""
    deg = [len(r) for r in rot]
    key = max((deg[u], deg[v]) for u in range(len(rot)) for v in rot[u])
    return [(u, v) for u in range(len(rot)) for v in rot[u]
            if deg[u] == key[0] and deg[v] == key[1]]


def canonical_form(rot):
    """Lexicographically minimal BFS code and the vertex order realising it."""
    best = None
    best_order = None
    for u, v in start_candidates(rot):
        for direction in (1, -1):
            code, order = _code_from(rot, u, v, direction, best)
            if code is not None:
                best = code
                best_order = order
    return best, best_order


def encode(n, code):
    return array("H", [n] + code).tobytes()


def canonical_code(rot):
    code, _ = canonical_form(rot)
    return encode(len(rot), code)
