# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel; same algorithm and node counts as ``_pykernel``."""

from libc.stdlib cimport calloc, free

cdef enum:
    PROPER = 0
    ODD = 1
    CF = 2


cdef struct State:
    int n
    int k
    int code
    int* off
    int* nb
    int* order
    int* col
    int* cnt
    int* unc
    int* good
    long long nodes


cdef bint rec(State* s, int i, int maxused) nogil:
    cdef int v, c, w, x, j, top, k1
    cdef bint alive
    cdef bint proper = s.code != CF
    cdef bint odd = s.code == ODD
    cdef bint watch = s.code != PROPER
    if i == s.n:
        return True
    v = s.order[i]
    k1 = s.k + 1
    top = maxused + 1 if maxused < s.k else s.k
    for c in range(1, top + 1):
        if proper and s.cnt[v * k1 + c]:
            continue
        s.nodes += 1
        s.col[v] = c
        alive = True
        for j in range(s.off[v], s.off[v + 1]):
            w = s.nb[j]
            x = s.cnt[w * k1 + c]
            s.cnt[w * k1 + c] = x + 1
            s.unc[w] -= 1
            if odd:
                s.good[w] += -1 if x & 1 else 1
            elif x == 0:
                s.good[w] += 1
            elif x == 1:
                s.good[w] -= 1
            if watch and s.unc[w] == 0 and s.good[w] == 0:
                alive = False
        if alive and rec(s, i + 1, c if c > maxused else maxused):
            return True
        for j in range(s.off[v], s.off[v + 1]):
            w = s.nb[j]
            x = s.cnt[w * k1 + c] - 1
            s.cnt[w * k1 + c] = x
            s.unc[w] += 1
            if odd:
                s.good[w] += 1 if x & 1 else -1
            elif x == 0:
                s.good[w] -= 1
            elif x == 1:
                s.good[w] += 1
        s.col[v] = 0
    return False


def search(adj, order, int k, int code):
    """Return ``(colors or None, nodes_explored)``; see ``_pykernel.search``."""
    cdef int n = len(adj)
    cdef int i, j, total
    cdef State s
    cdef bint found
    if n == 0:
        return [], 0
    if k <= 0:
        return None, 0
    total = 0
    for a in adj:
        total += len(a)
    s.n = n
    s.k = k
    s.code = code
    s.nodes = 0
    s.off = <int*> calloc(n + 1, sizeof(int))
    s.nb = <int*> calloc(total + 1, sizeof(int))
    s.order = <int*> calloc(n, sizeof(int))
    s.col = <int*> calloc(n, sizeof(int))
    s.cnt = <int*> calloc(n * (k + 1), sizeof(int))
    s.unc = <int*> calloc(n, sizeof(int))
    s.good = <int*> calloc(n, sizeof(int))
    if not (s.off and s.nb and s.order and s.col and s.cnt and s.unc and s.good):
        _release(&s)
        raise MemoryError()
    try:
        j = 0
        for i in range(n):
            s.off[i] = j
            s.unc[i] = len(adj[i])
            for w in adj[i]:
                s.nb[j] = w
                j += 1
            s.order[i] = order[i]
        s.off[n] = j
        with nogil:
            found = rec(&s, 0, 0)
        colors = [s.col[i] for i in range(n)] if found else None
        return colors, s.nodes
    finally:
        _release(&s)


cdef void _release(State* s):
    free(s.off)
    free(s.nb)
    free(s.order)
    free(s.col)
    free(s.cnt)
    free(s.unc)
    free(s.good)
