"""Loop-free undirected multigraphs with integer edge multiplicities.

Vertices are 0..n-1.  An edge class is an unordered pair {u, v} together
with its multiplicity mu(u,v) >= 1; "edge copies" are the individual
parallel edges.  Degrees count copies; neighbourhoods count classes.
Instances are treated as immutable: every editing operation returns a
new graph.
"""

from __future__ import annotations

import itertools
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

Edge = Tuple[int, int]


class MultigraphError(ValueError):
    pass


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Multigraph:
    __slots__ = ("n", "_mult", "_adj", "_canon_cache")

    def __init__(self, n: int, mult: Dict[Edge, int]):
        if n < 0:
            raise MultigraphError("order must be non-negative")
        adj: List[Dict[int, int]] = [dict() for _ in range(n)]
        for (u, v), m in mult.items():
            if not (0 <= u < n and 0 <= v < n):
                raise MultigraphError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise MultigraphError(f"loop at vertex {u} rejected")
            if u > v:
                raise MultigraphError("edge keys must be normalised (u < v)")
            if m < 1:
                raise MultigraphError(f"multiplicity {m} on ({u},{v}) rejected")
            adj[u][v] = m
            adj[v][u] = m
        self.n = n
        self._mult = dict(mult)
        self._adj = adj
        self._canon_cache: Optional[bytes] = None

    # -- construction ------------------------------------------------

    @classmethod
    def build(cls, n: int, edges: Iterable[Tuple[int, int, int]]) -> "Multigraph":
        """Build from (u, v, mult) triples; repeated pairs accumulate."""
        mult: Dict[Edge, int] = {}
        for u, v, m in edges:
            if u == v:
                raise MultigraphError(f"loop at vertex {u} rejected")
            if m < 1:
                raise MultigraphError(f"multiplicity {m} on ({u},{v}) rejected")
            k = _key(u, v)
            mult[k] = mult.get(k, 0) + m
        return cls(n, mult)

    @classmethod
    def from_simple_edges(cls, n: int, pairs: Iterable[Tuple[int, int]]) -> "Multigraph":
        return cls.build(n, ((u, v, 1) for u, v in pairs))

    @classmethod
    def cycle(cls, k: int) -> "Multigraph":
        return cls.from_simple_edges(k, ((i, (i + 1) % k) for i in range(k)))

    @classmethod
    def complete(cls, k: int) -> "Multigraph":
        return cls.from_simple_edges(k, itertools.combinations(range(k), 2))

    # -- basic accessors ----------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def edge_classes(self) -> List[Edge]:
        return sorted(self._mult)

    def edge_items(self) -> List[Tuple[Edge, int]]:
        return sorted(self._mult.items())

    def edge_copies(self) -> List[Edge]:
        """Parallel copies listed separately, sorted."""
        out: List[Edge] = []
        for e, m in self.edge_items():
            out.extend([e] * m)
        return out

    def mult(self, u: int, v: int) -> int:
        if u == v:
            return 0
        return self._adj[u].get(v, 0)

    def has_edge(self, u: int, v: int) -> bool:
        return self.mult(u, v) > 0

    def adj(self, v: int) -> Dict[int, int]:
        return self._adj[v]

    def neighbors(self, v: int) -> List[int]:
        return sorted(self._adj[v])

    def degree(self, v: int) -> int:
        """Number of edge copies at v."""
        return sum(self._adj[v].values())

    def simple_degree(self, v: int) -> int:
        """Number of distinct neighbours |N(v)|."""
        return len(self._adj[v])

    def num_edge_classes(self) -> int:
        return len(self._mult)

    def num_edge_copies(self) -> int:
        return sum(self._mult.values())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Multigraph)
            and self.n == other.n
            and self._mult == other._mult
        )

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self._mult.items()))))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={self.edge_items()})"

    # -- edge classification -------------------------------------------

    def pendant_edges(self) -> List[Edge]:
        """Simple edges with an endpoint of degree 1."""
        return [
            (u, v)
            for (u, v), m in self.edge_items()
            if m == 1 and (self.degree(u) == 1 or self.degree(v) == 1)
        ]

    def simple_nonpendant_edges(self) -> List[Edge]:
        """E_S: simple edges with both endpoints of degree >= 2."""
        return [
            (u, v)
            for (u, v), m in self.edge_items()
            if m == 1 and self.degree(u) >= 2 and self.degree(v) >= 2
        ]

    def multiple_edges(self) -> List[Edge]:
        """E_M: edge classes of multiplicity >= 2."""
        return [e for e, m in self.edge_items() if m >= 2]

    def is_simple(self) -> bool:
        return all(m == 1 for m in self._mult.values())

    def are_twins(self, x: int, y: int) -> bool:
        """mu(x,u) == mu(y,u) for every vertex u.

        Taking u in {x, y} forces twins to be nonadjacent.
        """
        if x == y:
            return True
        return self.mult(x, y) == 0 and self._adj[x] == self._adj[y]

    # -- editing (all return new graphs) --------------------------------

    def with_edge(self, u: int, v: int, add: int = 1) -> "Multigraph":
        if u == v:
            raise MultigraphError("loop rejected")
        mult = dict(self._mult)
        k = _key(u, v)
        mult[k] = mult.get(k, 0) + add
        if mult[k] <= 0:
            del mult[k]
        return Multigraph(self.n, mult)

    def without_edge_class(self, u: int, v: int) -> "Multigraph":
        mult = dict(self._mult)
        mult.pop(_key(u, v), None)
        return Multigraph(self.n, mult)

    def with_vertex(self, nbrs: Iterable[int]) -> "Multigraph":
        """Append vertex n joined by simple edges to nbrs."""
        mult = dict(self._mult)
        w = self.n
        for u in nbrs:
            mult[_key(u, w)] = 1
        return Multigraph(self.n + 1, mult)

    def with_pendant(self, v: int) -> "Multigraph":
        return self.with_vertex([v])

    def without_vertices(self, drop: Iterable[int]) -> "Multigraph":
        """Delete vertices and relabel the rest, preserving order."""
        ds = set(drop)
        keep = [v for v in range(self.n) if v not in ds]
        new_id = {v: i for i, v in enumerate(keep)}
        mult = {
            _key(new_id[u], new_id[v]): m
            for (u, v), m in self._mult.items()
            if u not in ds and v not in ds
        }
        return Multigraph(len(keep), mult)

    def subdivide(self, u: int, v: int) -> "Multigraph":
        """Replace one copy of uv by a path u-w-v through a new vertex w."""
        if self.mult(u, v) < 1:
            raise MultigraphError(f"no edge ({u},{v}) to subdivide")
        g = self.with_edge(u, v, -1)
        mult = dict(g._mult)
        w = self.n
        mult[_key(u, w)] = 1
        mult[_key(v, w)] = 1
        return Multigraph(self.n + 1, mult)

    def suppress(self, x: int) -> "Multigraph":
        """Remove a degree-2 vertex x with two distinct simple neighbours,
        joining them by one extra edge copy."""
        if self.degree(x) != 2:
            raise MultigraphError(f"vertex {x} has degree {self.degree(x)}, not 2")
        nbrs = self.neighbors(x)
        if len(nbrs) != 2:
            raise MultigraphError(
                f"vertex {x} has a double edge; suppression would create a loop"
            )
        a, b = nbrs
        g = self.with_edge(a, b, 1)
        return g.without_vertices([x])

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """perm maps old vertex id -> new vertex id."""
        mult = {
            _key(perm[u], perm[v]): m for (u, v), m in self._mult.items()
        }
        return Multigraph(self.n, mult)

    def disjoint_union(self, other: "Multigraph") -> "Multigraph":
        mult = dict(self._mult)
        off = self.n
        for (u, v), m in other._mult.items():
            mult[(u + off, v + off)] = m
        return Multigraph(self.n + other.n, mult)

    # -- connectivity ----------------------------------------------------

    def components(self) -> List[Set[int]]:
        seen: Set[int] = set()
        comps: List[Set[int]] = []
        for s in range(self.n):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def _components_without_classes(self, removed: FrozenSet[Edge]) -> List[Set[int]]:
        seen: Set[int] = set()
        comps: List[Set[int]] = []
        for s in range(self.n):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if w not in comp and _key(u, w) not in removed:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(comp)
        return comps

    def _component_has_edge(self, comp: Set[int], removed: FrozenSet[Edge]) -> bool:
        for u in comp:
            for w, _m in self._adj[u].items():
                if w > u and w in comp and _key(u, w) not in removed:
                    return True
        return False

    def essential_edge_cuts_below(self, k: int) -> List[Tuple[Edge, ...]]:
        """All essential edge cuts of fewer than k edge copies.

        A cut here is given as a set of edge classes whose copies total
        under k; removing them must leave at least two components that
        each still contain an edge.  Minimal cuts always consist of full
        classes, so searching over classes loses nothing.
        """
        cuts: List[Tuple[Edge, ...]] = []
        classes = self.edge_items()
        small = [(e, m) for e, m in classes if m < k]
        for r in range(1, k + 1):
            for combo in itertools.combinations(small, r):
                if sum(m for _e, m in combo) >= k:
                    continue
                removed = frozenset(e for e, _m in combo)
                comps = self._components_without_classes(removed)
                nontrivial = sum(
                    1 for c in comps if self._component_has_edge(c, removed)
                )
                if nontrivial >= 2:
                    cuts.append(tuple(sorted(removed)))
        return cuts

    def is_essentially_k_edge_connected(self, k: int) -> bool:
        """Connected and free of essential edge cuts of < k copies."""
        return self.is_connected() and not self.essential_edge_cuts_below(k)

    def edge_cuts_below(self, k: int) -> List[Tuple[Edge, ...]]:
        """All edge cuts (class sets, < k copies) that disconnect the graph."""
        cuts: List[Tuple[Edge, ...]] = []
        small = [(e, m) for e, m in self.edge_items() if m < k]
        for r in range(1, k + 1):
            for combo in itertools.combinations(small, r):
                if sum(m for _e, m in combo) >= k:
                    continue
                removed = frozenset(e for e, _m in combo)
                if len(self._components_without_classes(removed)) > len(
                    self.components()
                ):
                    cuts.append(tuple(sorted(removed)))
        return cuts

    def is_k_edge_connected(self, k: int) -> bool:
        return self.n >= 2 and self.is_connected() and not self.edge_cuts_below(k)

    def essential_cutvertices(self) -> List[int]:
        """Vertices whose removal leaves >= 2 components each containing
        an edge."""
        out = []
        for x in range(self.n):
            g = self.without_vertices([x])
            nontrivial = sum(
                1 for c in g.components() if g._component_has_edge(c, frozenset())
            )
            if nontrivial >= 2:
                out.append(x)
        return out

    def is_essentially_2_connected(self) -> bool:
        return self.is_connected() and not self.essential_cutvertices()

    # -- core -------------------------------------------------------------

    def core(self) -> "Multigraph":
        """Strip pendant edges, then suppress every vertex that has
        degree 2 in the original graph.

        Vertices reduced to degree 2 by the pendant stripping itself are
        kept.  Raises on degenerate inputs (adjacent degree-2 vertices,
        double edges to degree-2 vertices, or residues that are not
        3-edge-connected on >= 3 vertices).
        """
        deg2_orig = {x for x in range(self.n) if self.degree(x) == 2}
        pend = self.pendant_edges()
        drop = {u if self.degree(u) == 1 else v for u, v in pend}
        g = self.without_vertices(drop)
        if g.n < 3:
            raise MultigraphError(
                f"pendant-stripped residue has only {g.n} vertices"
            )
        keep = [x for x in range(self.n) if x not in drop]
        deg2 = [i for i, x in enumerate(keep) if x in deg2_orig]
        if any(g.degree(i) != 2 for i in deg2):
            raise MultigraphError(
                "degree-2 vertex lost an edge during pendant stripping"
            )
        for x in deg2:
            for y in g.neighbors(x):
                if y in deg2 and y != x:
                    raise MultigraphError(
                        "adjacent degree-2 vertices after pendant stripping"
                    )
            if len(g.neighbors(x)) == 1:
                raise MultigraphError(
                    "double edge at a degree-2 vertex; cannot suppress"
                )
        for x in sorted(deg2, reverse=True):
            g = g.suppress(x)
        if g.n < 3:
            raise MultigraphError("core residue has fewer than 3 vertices")
        return g

    # -- cycles -------------------------------------------------------------

    def find_cycle(self, k: int) -> Optional[Tuple[int, ...]]:
        """A cycle subgraph on exactly k distinct vertices, or None.

        Uses single edge copies only (a double edge is not a 2-cycle here);
        returns the vertex sequence.
        """
        if k < 3 or self.n < k:
            return None
        for s in range(self.n):
            path = [s]
            onpath = {s}

            def extend() -> Optional[Tuple[int, ...]]:
                u = path[-1]
                if len(path) == k:
                    return tuple(path) if self.has_edge(u, s) else None
                for w in self.neighbors(u):
                    if w <= s or w in onpath:
                        continue
                    path.append(w)
                    onpath.add(w)
                    got = extend()
                    if got:
                        return got
                    onpath.discard(w)
                    path.pop()
                return None

            got = extend()
            if got:
                return got
        return None

    def chordless_cycles(self, k: int) -> Iterator[Tuple[int, ...]]:
        """All chordless k-cycles (no edge between non-consecutive cycle
        vertices), one orientation/rotation each."""
        for s in range(self.n):
            path = [s]
            onpath = {s}

            def extend() -> Iterator[Tuple[int, ...]]:
                u = path[-1]
                if len(path) == k:
                    if self.has_edge(u, s):
                        yield tuple(path)
                    return
                for w in self.neighbors(u):
                    if w <= s or w in onpath:
                        continue
                    # chordless: w may touch only its predecessor (and s
                    # when closing)
                    ok = True
                    for i, p in enumerate(path):
                        if p == u:
                            continue
                        if self.has_edge(w, p) and not (i == 0 and len(path) == k - 1):
                            ok = False
                            break
                    if not ok:
                        continue
                    path.append(w)
                    onpath.add(w)
                    yield from extend()
                    onpath.discard(w)
                    path.pop()

            # fix orientation: second vertex smaller than last
            for cyc in extend():
                if cyc[1] < cyc[-1]:
                    yield cyc

    def chordless_cycles_through(self, k: int, s: int) -> Iterator[Tuple[int, ...]]:
        """All chordless k-cycles containing vertex s (may repeat a cycle
        in both orientations)."""
        path = [s]
        onpath = {s}

        def extend() -> Iterator[Tuple[int, ...]]:
            u = path[-1]
            if len(path) == k:
                if self.has_edge(u, s):
                    yield tuple(path)
                return
            for w in self.neighbors(u):
                if w in onpath:
                    continue
                ok = True
                for i, p in enumerate(path):
                    if p == u:
                        continue
                    if self.has_edge(w, p) and not (i == 0 and len(path) == k - 1):
                        ok = False
                        break
                if not ok:
                    continue
                path.append(w)
                onpath.add(w)
                yield from extend()
                onpath.discard(w)
                path.pop()

        yield from extend()
