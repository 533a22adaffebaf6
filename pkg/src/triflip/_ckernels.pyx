# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: separating-triangle scan and canonical codes.

Mirrors ``_pykernels`` exactly; the test-suite checks both agree.
"""

from array import array

from libc.stdlib cimport malloc, free
from libc.string cimport memset
from libc.stdint cimport uint64_t

BACKEND = "cython"


cdef int _csr(list rot, int n, int* off, int* nb):
    cdef int v, k = 0
    for v in range(n):
        off[v] = k
        for x in rot[v]:
            nb[k] = x
            k += 1
    off[n] = k
    return k


cdef inline int _pos(int* nb, int lo, int hi, int x):
    cdef int i
    for i in range(lo, hi):
        if nb[i] == x:
            return i - lo
    return -1


def septri_scan(int n, list rot, outer):
    cdef int m2 = 0
    cdef int v
    for v in range(n):
        m2 += len(rot[v])
    cdef int* off = <int*>malloc((n + 1) * sizeof(int))
    cdef int* nb = <int*>malloc(m2 * sizeof(int))
    cdef int* mark = <int*>malloc(n * sizeof(int))
    cdef int* stack = <int*>malloc(n * sizeof(int))
    cdef int W = (n + 63) // 64
    cdef int u, w, i, j, du, dv, a1, a2, lo, hi, x, y, sp, start, t, cap
    cdef int o0 = outer[0], o1 = outer[1], o2 = outer[2]
    cdef list triples = []
    cdef uint64_t* words = NULL
    cdef int* tri = NULL
    cdef int* sizes = NULL
    cdef int* depth_c = NULL
    cdef uint64_t acc
    cdef bint sub
    try:
        _csr(rot, n, off, nb)
        memset(mark, 0, n * sizeof(int))
        # common neighbours via a stamp array
        for u in range(n):
            du = off[u + 1] - off[u]
            for j in range(off[u], off[u + 1]):
                mark[nb[j]] = u + 1
            for i in range(du):
                v = nb[off[u] + i]
                if v <= u:
                    continue
                dv = off[v + 1] - off[v]
                a2 = nb[off[u] + (i + 1) % du]
                a1 = nb[off[v] + (_pos(nb, off[v], off[v + 1], u) + 1) % dv]
                for j in range(off[v], off[v + 1]):
                    w = nb[j]
                    if w > v and mark[w] == u + 1 and w != a1 and w != a2:
                        triples.append((u, v, w))
            for j in range(off[u], off[u + 1]):
                mark[nb[j]] = 0
        triples.sort()
        t = len(triples)
        words = <uint64_t*>malloc((t * W + 1) * sizeof(uint64_t))
        tri = <int*>malloc((3 * t + 1) * sizeof(int))
        sizes = <int*>malloc((t + 1) * sizeof(int))
        depth_c = <int*>malloc((t + 1) * sizeof(int))
        for i in range(t):
            tri[3 * i] = triples[i][0]
            tri[3 * i + 1] = triples[i][1]
            tri[3 * i + 2] = triples[i][2]
        masks = []
        for i in range(t):
            for x in range(n):
                mark[x] = 0
            mark[tri[3 * i]] = 1
            mark[tri[3 * i + 1]] = 1
            mark[tri[3 * i + 2]] = 1
            if mark[o0] == 0:
                start = o0
            elif mark[o1] == 0:
                start = o1
            else:
                start = o2
            mark[start] = 1
            sp = 0
            stack[sp] = start
            sp += 1
            while sp > 0:
                sp -= 1
                x = stack[sp]
                for j in range(off[x], off[x + 1]):
                    y = nb[j]
                    if mark[y] == 0:
                        mark[y] = 1
                        stack[sp] = y
                        sp += 1
            sizes[i] = 0
            for j in range(W):
                words[i * W + j] = 0
            for x in range(n):
                if mark[x] == 0:
                    words[i * W + (x >> 6)] |= (<uint64_t>1) << (x & 63)
                    sizes[i] += 1
            masks.append(int.from_bytes(
                (<char*>&words[i * W])[:W * 8], "little"))
        for i in range(t):
            depth_c[i] = 0
        for i in range(t):
            for j in range(t):
                if sizes[j] >= sizes[i]:
                    continue
                sub = True
                for x in range(W):
                    if words[j * W + x] & ~words[i * W + x]:
                        sub = False
                        break
                if sub:
                    depth_c[j] += 1
        depth = [depth_c[i] for i in range(t)]
        return triples, masks, depth
    finally:
        free(off)
        free(nb)
        free(mark)
        free(stack)
        if words != NULL:
            free(words)
        if tri != NULL:
            free(tri)
        if sizes != NULL:
            free(sizes)
        if depth_c != NULL:
            free(depth_c)


cdef int _code_from(int n, int* off, int* nb, int start, int first, int direction,
                    int* best, int have_best, int* out, int* label, int* ref,
                    int* queue):
    # writes into ``out``; returns 1 if strictly smaller than best (or no best)
    cdef int i, w, d, p, j, x, val, k = 0, head = 0, tail = 1, nxt = 1
    cdef int better = 0 if have_best else 1
    for i in range(n):
        label[i] = -1
    label[start] = 0
    ref[start] = first
    queue[0] = start
    while head < tail:
        w = queue[head]
        head += 1
        d = off[w + 1] - off[w]
        p = _pos(nb, off[w], off[w + 1], ref[w])
        for j in range(d):
            x = nb[off[w] + ((p + direction * j) % d + d) % d]
            if label[x] < 0:
                label[x] = nxt
                nxt += 1
                ref[x] = w
                queue[tail] = x
                tail += 1
            val = label[x] + 1
            if not better:
                if val > best[k]:
                    return 0
                if val < best[k]:
                    better = 1
            out[k] = val
            k += 1
        if not better and best[k] != 0:
            better = 1
        out[k] = 0
        k += 1
    return better


def canonical_code(list rot):
    cdef int n = len(rot)
    cdef int m2 = 0
    cdef int v, u, j, du, dv, key0 = -1, key1 = -1, direction, L
    for v in range(n):
        m2 += len(rot[v])
    L = m2 + n
    cdef int* off = <int*>malloc((n + 1) * sizeof(int))
    cdef int* nb = <int*>malloc(m2 * sizeof(int))
    cdef int* best = <int*>malloc(L * sizeof(int))
    cdef int* cur = <int*>malloc(L * sizeof(int))
    cdef int* label = <int*>malloc(n * sizeof(int))
    cdef int* ref = <int*>malloc(n * sizeof(int))
    cdef int* queue = <int*>malloc(n * sizeof(int))
    cdef int* tmp
    cdef int have = 0
    try:
        _csr(rot, n, off, nb)
        for u in range(n):
            du = off[u + 1] - off[u]
            for j in range(off[u], off[u + 1]):
                dv = off[nb[j] + 1] - off[nb[j]]
                if du > key0 or (du == key0 and dv > key1):
                    key0 = du
                    key1 = dv
        for u in range(n):
            du = off[u + 1] - off[u]
            if du != key0:
                continue
            for j in range(off[u], off[u + 1]):
                v = nb[j]
                if off[v + 1] - off[v] != key1:
                    continue
                for direction in (1, -1):
                    if _code_from(n, off, nb, u, v, direction, best, have,
                                  cur, label, ref, queue):
                        tmp = best
                        best = cur
                        cur = tmp
                        have = 1
        return array("H", [n] + [best[j] for j in range(L)]).tobytes()
    finally:
        free(off)
        free(nb)
        free(best)
        free(cur)
        free(label)
        free(ref)
        free(queue)
