"""Pure-Python hamiltonian (a,b)-path kernel on adjacency bitmasks.

Backtracking with two prunings: the unvisited region (plus the current
vertex) must stay connected with b reachable, and every unvisited vertex
other than b must keep >= 2 available connections (entry + exit).
Neighbour order is fixed ascending, so results are reproducible.
"""

from __future__ import annotations

from typing import List, Optional


def hampath(n: int, adj: List[int], a: int, b: int) -> Optional[List[int]]:
    if a == b:
        raise ValueError("endpoints must differ")
    if n == 1:
        return None
    full = (1 << n) - 1
    bbit = 1 << b
    path = [a]

    def prune(cur: int, rem: int) -> bool:
        allowed = rem | (1 << cur)
        seen = 1 << cur
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= adj[v] & allowed
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        if rem & ~seen:
            return True
        f = rem
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            avail = adj[v] & allowed & ~(1 << v)
            cnt = bin(avail).count("1")
            if cnt < (1 if v == b else 2):
                return True
        return False

    def dfs(cur: int, visited: int) -> bool:
        if visited == full:
            return cur == b
        rem = full & ~visited
        if prune(cur, rem):
            return False
        nbrs = adj[cur] & rem
        if rem != bbit:
            nbrs &= ~bbit
        while nbrs:
            v = (nbrs & -nbrs).bit_length() - 1
            nbrs &= nbrs - 1
            path.append(v)
            if dfs(v, visited | (1 << v)):
                return True
            path.pop()
        return False

    if dfs(a, 1 << a):
        return path
    return None
