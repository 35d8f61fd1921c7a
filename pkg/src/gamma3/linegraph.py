"""Line graphs of multigraphs: construction, recognition, preimage,
and the fast Gamma3-freeness gate.

The line graph has one vertex per edge copy (parallel copies are distinct
vertices); two vertices are adjacent iff the copies share an endpoint.
The preimage of a connected line graph is the unique H with L(H) = G
whose pendant edges correspond exactly to the simplicial vertices of G.
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Optional, Set, Tuple

from . import patterns
from .canon import is_isomorphic
from .match import find_embedding, find_embeddings
from .multigraph import Edge, Multigraph, MultigraphError


def line_graph_with_map(h: Multigraph) -> Tuple[Multigraph, List[Edge]]:
    """(L(H), copies): vertex i of L(H) is the edge copy copies[i]."""
    copies = h.edge_copies()
    pairs = []
    for i, (u1, v1) in enumerate(copies):
        for j in range(i + 1, len(copies)):
            u2, v2 = copies[j]
            if u1 in (u2, v2) or v1 in (u2, v2):
                pairs.append((i, j))
    return Multigraph.from_simple_edges(len(copies), pairs), copies


def line_graph(h: Multigraph) -> Multigraph:
    return line_graph_with_map(h)[0]


def is_simplicial(g: Multigraph, v: int) -> bool:
    nbrs = g.neighbors(v)
    return all(g.has_edge(a, b) for a, b in itertools.combinations(nbrs, 2))


def simplicial_vertices(g: Multigraph) -> Set[int]:
    return {v for v in g.vertices() if is_simplicial(g, v)}


def is_line_graph_of_multigraph(g: Multigraph) -> Tuple[bool, Optional[Tuple[str, Dict[int, int]]]]:
    """True iff g (simple) has none of the seven minimal obstructions as
    an induced subgraph; returns the obstruction witness otherwise."""
    if not g.is_simple():
        raise MultigraphError("line graphs are simple; input is not")
    for pat in patterns.line_graph_obstructions():
        emb = find_embedding(g, pat, "induced")
        if emb is not None:
            return False, (pat.name, emb)
    return True, None


# -- preimage ----------------------------------------------------------------


def preimage(g: Multigraph) -> Multigraph:
    """L^{-1}(g) for a connected line graph of a multigraph.

    Searches for an edge clique cover with every vertex in at most two
    cliques, restricted so that a vertex sits in a single clique iff it
    is simplicial (that is exactly the pendant-edge correspondence).
    """
    if not g.is_simple():
        raise MultigraphError("preimage input must be a simple graph")
    if not g.is_connected():
        raise MultigraphError("preimage input must be connected")
    simp = simplicial_vertices(g)
    edges = [e for e, _m in g.edge_items()]

    cliques: List[Set[int]] = []
    membership: List[List[int]] = [[] for _ in range(g.n)]
    covered: Set[Edge] = set()

    def uncovered() -> Optional[Edge]:
        for e in edges:
            if e not in covered:
                return e
        return None

    def cover_with(ci: int, v: int) -> Optional[List[Edge]]:
        """Add v to clique ci if legal; return newly covered edges."""
        c = cliques[ci]
        if v in c or len(membership[v]) >= 2 or (v in simp and membership[v]):
            return None
        if any(not g.has_edge(v, u) for u in c):
            return None
        new = [tuple(sorted((v, u))) for u in c]
        new = [e for e in new if e not in covered]
        c.add(v)
        membership[v].append(ci)
        covered.update(new)
        return new

    def uncover(ci: int, v: int, new: List[Edge]) -> None:
        cliques[ci].discard(v)
        membership[v].remove(ci)
        covered.difference_update(new)

    def solve() -> bool:
        e = uncovered()
        if e is None:
            return True
        u, v = e
        # extend an existing clique at u or at v
        for a, b in ((u, v), (v, u)):
            for ci in membership[a]:
                got = cover_with(ci, b)
                if got is not None:
                    if solve():
                        return True
                    uncover(ci, b, got)
        # or open a new clique {u, v}
        if (
            len(membership[u]) < 2
            and len(membership[v]) < 2
            and not (u in simp and membership[u])
            and not (v in simp and membership[v])
        ):
            ci = len(cliques)
            cliques.append({u, v})
            membership[u].append(ci)
            membership[v].append(ci)
            covered.add(e)
            if solve():
                return True
            cliques.pop()
            membership[u].pop()
            membership[v].pop()
            covered.discard(e)
        return False

    if not solve():
        raise MultigraphError("no multigraph preimage exists")
    # non-simplicial vertices must have ended with two cliques
    for v in range(g.n):
        want = 1 if v in simp else 2
        if g.simple_degree(v) > 0 and len(membership[v]) != want:
            raise MultigraphError("no preimage with the pendant correspondence")

    # build H: one vertex per clique, plus a leaf endpoint per
    # single-clique vertex
    n = len(cliques)
    triples = []
    for v in range(g.n):
        ms = membership[v]
        if len(ms) == 2:
            triples.append((ms[0], ms[1], 1))
        elif len(ms) == 1:
            triples.append((ms[0], n, 1))
            n += 1
        else:  # isolated vertex of g: a lone edge component
            triples.append((n, n + 1, 1))
            n += 2
    h = Multigraph.build(n, triples)
    assert is_isomorphic(line_graph(h), g)
    return h


# -- Gamma3 gate -------------------------------------------------------------


def _path_witness(h: Multigraph, emb) -> Optional[Tuple[str, Dict[str, int]]]:
    """Decoration check for one oriented 5-path: F-witness using this
    path as its spine, or None.  Both ends are treated symmetrically."""
    v0, v1, v2, v3, v4 = emb
    on = set(emb)
    a0 = [s for s in h.adj(v0) if s not in on]
    a4 = [t for t in h.adj(v4) if t not in on]
    d0 = [s for s in a0 if h.mult(v0, s) >= 2]
    d4 = [t for t in a4 if h.mult(v4, t) >= 2]
    base = {"q1": v0, "q2": v1, "q3": v2, "q4": v3, "q5": v4}
    for s in d0:
        for t in d4:
            if s != t:
                return "F3", {**base, "s12": s, "s34": t}
    for s in d0:
        rest = [t for t in a4 if t != s]
        if len(rest) >= 2:
            return "F2", {**base, "s12": s, "s3": rest[0], "s4": rest[1]}
    for t in d4:
        rest = [s for s in a0 if s != t]
        if len(rest) >= 2:
            rev = {"q1": v4, "q2": v3, "q3": v2, "q4": v1, "q5": v0}
            return "F2", {**rev, "s12": t, "s3": rest[0], "s4": rest[1]}
    if len(a0) >= 2 and len(a4) >= 2 and len(set(a0) | set(a4)) >= 4:
        # pick four distinct decorations
        s1, s2 = a0[0], a0[1]
        rest = [t for t in a4 if t not in (s1, s2)]
        if len(rest) >= 2:
            t1, t2 = rest[0], rest[1]
        else:
            # one of s1, s2 must move to the other end
            for s1, s2 in itertools.permutations(a0, 2):
                rest = [t for t in a4 if t not in (s1, s2)]
                if len(rest) >= 2:
                    t1, t2 = rest[0], rest[1]
                    break
            else:
                return None
        return "F1", {**base, "s1": s1, "s2": s2, "s3": t1, "s4": t2}
    return None


def gamma3_witness(h: Multigraph) -> Optional[Tuple[str, Dict[str, int]]]:
    """A subgraph of h whose line graph is Gamma3, as (kind, role map),
    or None.  Kinds: F1 (two simple decorations at each path end), F2
    (double edge at one end), F3 (double edges at both ends).
    """
    for p0 in h.vertices():
        for emb in _simple_paths_5(h, p0):
            if emb[0] > emb[4]:
                continue
            w = _path_witness(h, emb)
            if w is not None:
                return w
    return None


def _paths_5_through(h: Multigraph, v: int):
    """Oriented 5-paths containing v (each path seen at least once)."""
    # left arm of length i from v, then right arm of length 4 - i
    for i in range(5):
        for left in _simple_arms(h, v, i, frozenset([v])):
            used = frozenset(left) | {v}
            for right in _simple_arms(h, v, 4 - i, used):
                yield tuple(reversed(left)) + (v,) + tuple(right)


def _simple_arms(h: Multigraph, v: int, length: int, used: frozenset):
    if length == 0:
        yield ()
        return
    for w in h.adj(v):
        if w not in used:
            for rest in _simple_arms(h, w, length - 1, used | {w}):
                yield (w,) + rest


def gamma3_witness_near(
    h: Multigraph, v: int
) -> Optional[Tuple[str, Dict[str, int]]]:
    """Gamma3 witness whose spine contains v or whose spine has an end
    adjacent to v.  If h minus any witness structure touching v is
    witness-free (e.g. h arose by adding v to a witness-free graph),
    this is a complete gate check."""
    for emb in _paths_5_through(h, v):
        w = _path_witness(h, emb)
        if w is not None:
            return w
    for u in h.adj(v):
        for emb in _simple_paths_5(h, u):
            if v in emb:
                continue  # covered above
            w = _path_witness(h, emb)
            if w is not None:
                return w
    return None


def gamma3_witness_doubled(
    h: Multigraph, x: int, y: int
) -> Optional[Tuple[str, Dict[str, int]]]:
    """Gamma3 witness that can use the doubled edge xy as an end
    decoration: spines ending at x (avoiding y) or at y (avoiding x).
    Complete when h arose from a witness-free graph by raising the
    multiplicity of xy from 1 to 2 (F1 ignores multiplicities and any
    new F2/F3 must use xy as its doubled decoration)."""
    for a, b in ((x, y), (y, x)):
        for emb in _simple_paths_5(h, a):
            if b in emb:
                continue
            w = _path_witness(h, emb)
            if w is not None:
                return w
    return None


def _simple_paths_5(h: Multigraph, start: int):
    path = [start]
    on = {start}

    def extend():
        if len(path) == 5:
            yield tuple(path)
            return
        for w in h.adj(path[-1]):
            if w not in on:
                path.append(w)
                on.add(w)
                yield from extend()
                on.discard(w)
                path.pop()

    yield from extend()


def gamma3_free(h: Multigraph) -> bool:
    """No subgraph of h has Gamma3 as its line graph; equivalently L(h)
    has no induced Gamma3."""
    return gamma3_witness(h) is None


def gamma3_free_via_subgraphs(h: Multigraph) -> bool:
    """Cross-check oracle: match F1/F2/F3 with the generic matcher."""
    return all(
        find_embedding(h, pat, "subgraph") is None
        for pat in patterns.gamma3_preimages()
    )


def gamma3_free_via_line_graph(h: Multigraph) -> bool:
    """Cross-check oracle: induced Gamma3 search on L(h)."""
    g = line_graph(h)
    return find_embedding(g, patterns.gamma(3), "induced") is None
