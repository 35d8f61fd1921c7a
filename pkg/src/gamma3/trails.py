"""Trail existence by cycle-space enumeration.

A trail's edge set is exactly an edge-copy subset with prescribed
degree-parity vector (odd precisely at the trail ends) that is
edge-connected; subsets with a given parity vector form a coset of the
cycle space, so we enumerate 2^(|E|-|V|+c) combinations instead of 2^|E|
subsets.  First/last-edge forcing for (e,f)-trails reduces to
Eulerian-trail existence on T minus {e, f}.

Subsets are bitmasks over h.edge_copies() indices.
"""

from __future__ import annotations

from typing import FrozenSet, Iterator, List, Optional, Tuple

from .multigraph import Multigraph, MultigraphError


class TrailSpace:
    def __init__(self, h: Multigraph):
        self.h = h
        self.copies = h.edge_copies()
        self.m = len(self.copies)
        # parity masks (XOR toggles both endpoints) and vertex masks
        self.pmask = [(1 << u) ^ (1 << v) for u, v in self.copies]
        self.vmask = [(1 << u) | (1 << v) for u, v in self.copies]
        incident: List[List[int]] = [[] for _ in range(h.n)]
        for i, (u, v) in enumerate(self.copies):
            incident[u].append(i)
            incident[v].append(i)
        self.incident = incident
        # BFS spanning forest
        self.tree_edge = [-1] * h.n  # copy index linking v to its parent
        order: List[int] = []
        seen = [False] * h.n
        self.comp = [-1] * h.n
        tree_set = set()
        for root in range(h.n):
            if seen[root]:
                continue
            seen[root] = True
            self.comp[root] = root
            queue = [root]
            while queue:
                u = queue.pop(0)
                order.append(u)
                for i in incident[u]:
                    a, b = self.copies[i]
                    w = b if a == u else a
                    if not seen[w]:
                        seen[w] = True
                        self.comp[w] = root
                        self.tree_edge[w] = i
                        tree_set.add(i)
                        queue.append(w)
        self.order = order  # BFS order; roots have tree_edge -1
        self.nontree = [i for i in range(self.m) if i not in tree_set]

    def subsets_with_parity(self, odd: FrozenSet[int]) -> Iterator[int]:
        """All edge-copy subsets whose odd-degree vertex set is `odd`."""
        target = 0
        for v in odd:
            target |= 1 << v
        # per-component parity must be even
        comp_par = {}
        for v in odd:
            r = self.comp[v]
            comp_par[r] = comp_par.get(r, 0) ^ 1
        if any(comp_par.values()):
            return
        rev = list(reversed(self.order))
        for combo in range(1 << len(self.nontree)):
            s = 0
            par = 0
            c = combo
            for j, i in enumerate(self.nontree):
                if (c >> j) & 1:
                    s |= 1 << i
                    par ^= self.pmask[i]
            for v in rev:
                i = self.tree_edge[v]
                if i < 0:
                    continue
                if ((par ^ target) >> v) & 1:
                    s |= 1 << i
                    par ^= self.pmask[i]
            assert par == target
            yield s

    def vertices_of(self, s: int) -> int:
        out = 0
        i = 0
        t = s
        while t:
            if t & 1:
                out |= self.vmask[i]
            t >>= 1
            i += 1
        return out

    def degree_in(self, s: int, v: int) -> int:
        return sum(1 for i in self.incident[v] if (s >> i) & 1)

    def edges_connected(self, s: int, with_vertices: Tuple[int, ...] = ()) -> bool:
        """All copies of s lie in one component, which contains the given
        vertices.  Empty s counts as connected iff no vertices demanded
        or they coincide."""
        if s == 0:
            return len(set(with_vertices)) <= 1
        start = with_vertices[0] if with_vertices else None
        if start is None:
            i = (s & -s).bit_length() - 1
            start = self.copies[i][0]
        seen = 1 << start
        stack = [start]
        while stack:
            u = stack.pop()
            for i in self.incident[u]:
                if (s >> i) & 1:
                    a, b = self.copies[i]
                    w = b if a == u else a
                    if not (seen >> w) & 1:
                        seen |= 1 << w
                        stack.append(w)
        if any(not (seen >> v) & 1 for v in with_vertices):
            return False
        t = s
        i = 0
        while t:
            if t & 1 and not (seen >> self.copies[i][0]) & 1:
                return False
            t >>= 1
            i += 1
        return True

    def dominates(self, vset: int) -> bool:
        return all(vm & vset for vm in self.vmask)


def _copy_index(h: Multigraph, e) -> int:
    """Accept an edge-copy index or an (u, v) pair (first copy)."""
    if isinstance(e, int):
        return e
    u, v = e
    key = (u, v) if u < v else (v, u)
    for i, c in enumerate(h.edge_copies()):
        if c == key:
            return i
    raise MultigraphError(f"no edge {e}")


def find_dct(h: Multigraph) -> Optional[int]:
    """Edge set of a dominating closed trail, or None."""
    if h.num_edge_copies() < 3:
        raise MultigraphError("DCT search requires at least 3 edge copies")
    ts = TrailSpace(h)
    for s in ts.subsets_with_parity(frozenset()):
        if s == 0:
            continue
        if ts.edges_connected(s) and ts.dominates(ts.vertices_of(s)):
            return s
    return None


def dct_exists(h: Multigraph) -> bool:
    return find_dct(h) is not None


def idt_exists(h: Multigraph, e, f) -> bool:
    """Internally dominating (e,f)-trail: first edge e, last edge f,
    interior vertices dominate every edge of h.  e = f admits only the
    single-edge trail with empty interior."""
    if h.num_edge_copies() < 3:
        raise MultigraphError("IDT search requires at least 3 edge copies")
    ei, fi = _copy_index(h, e), _copy_index(h, f)
    ts = TrailSpace(h)
    if ei == fi:
        return ts.dominates(0)  # never, on >= 3 edges
    u1, v1 = ts.copies[ei]
    u2, v2 = ts.copies[fi]
    need = (1 << ei) | (1 << fi)
    seen_targets = set()
    for x, w1 in ((u1, v1), (v1, u1)):
        for y, w2 in ((u2, v2), (v2, u2)):
            odd = frozenset({x, y} if x != y else set())
            key = (odd, w1, w2)
            if key in seen_targets:
                continue
            seen_targets.add(key)
            for s in ts.subsets_with_parity(odd):
                if s & need != need:
                    continue
                body = s & ~need
                if not ts.edges_connected(body, (w1, w2)):
                    continue
                # interior: every trail vertex except non-revisited ends
                vset = ts.vertices_of(s)
                interior = vset
                lo = 3 if x != y else 4
                if ts.degree_in(s, x) < lo:
                    interior &= ~(1 << x)
                if y != x and ts.degree_in(s, y) < 3:
                    interior &= ~(1 << y)
                if ts.dominates(interior):
                    return True
    return False


def spanning_trail_exists(h: Multigraph, s_v: int, t_v: int) -> bool:
    """A trail from s_v to t_v visiting every vertex of h."""
    if s_v == t_v:
        raise MultigraphError("spanning trail endpoints must differ")
    ts = TrailSpace(h)
    full = (1 << h.n) - 1
    for s in ts.subsets_with_parity(frozenset({s_v, t_v})):
        if ts.vertices_of(s) == full and ts.edges_connected(s, (s_v,)):
            return True
    return False
