# cython: boundscheck=False, wraparound=False, language_level=3
"""Cython hamiltonian (a,b)-path kernel; same algorithm and neighbour
order as the pure-Python fallback, restricted to n <= 64 vertices."""

from libc.string cimport memset

DEF MAXN = 64


cdef int _popcount(unsigned long long x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef int _lowbit_index(unsigned long long x) nogil:
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


cdef bint _prune(unsigned long long *adj, int n, int cur, int b,
                 unsigned long long rem) nogil:
    cdef unsigned long long allowed = rem | (<unsigned long long>1 << cur)
    cdef unsigned long long seen = <unsigned long long>1 << cur
    cdef unsigned long long frontier = seen
    cdef unsigned long long nxt, f, avail
    cdef int v, cnt
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = _lowbit_index(f & (~f + 1))
            f &= f - 1
            nxt |= adj[v] & allowed
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    if rem & ~seen:
        return True
    f = rem
    while f:
        v = _lowbit_index(f & (~f + 1))
        f &= f - 1
        avail = adj[v] & allowed & ~(<unsigned long long>1 << v)
        cnt = _popcount(avail)
        if v == b:
            if cnt < 1:
                return True
        elif cnt < 2:
            return True
    return False


cdef bint _dfs(unsigned long long *adj, int n, int cur, int b,
               unsigned long long visited, unsigned long long full,
               int *path, int depth) nogil:
    cdef unsigned long long rem, nbrs, bbit
    cdef int v
    if visited == full:
        return cur == b
    rem = full & ~visited
    if _prune(adj, n, cur, b, rem):
        return False
    bbit = <unsigned long long>1 << b
    nbrs = adj[cur] & rem
    if rem != bbit:
        nbrs &= ~bbit
    while nbrs:
        v = _lowbit_index(nbrs & (~nbrs + 1))
        nbrs &= nbrs - 1
        path[depth] = v
        if _dfs(adj, n, v, b, visited | (<unsigned long long>1 << v),
                full, path, depth + 1):
            return True
    return False


def hampath(int n, adj_list, int a, int b):
    if a == b:
        raise ValueError("endpoints must differ")
    if n > MAXN:
        raise OverflowError("cython kernel limited to 64 vertices")
    if n == 1:
        return None
    cdef unsigned long long adj[MAXN]
    cdef int path[MAXN]
    cdef int i
    memset(path, 0, sizeof(path))
    for i in range(n):
        adj[i] = adj_list[i]
    path[0] = a
    cdef unsigned long long full = (<unsigned long long>1 << n) - 1 \
        if n < 64 else <unsigned long long>0xFFFFFFFFFFFFFFFF
    if _dfs(adj, n, a, b, <unsigned long long>1 << a, full, path, 1):
        return [path[i] for i in range(n)]
    return None
