"""Closure primitives for claw-free simple graphs: local completion,
eligible vertices, the closure fixpoint, local k-connectivity, and
feasibility (local completion keeps the graph non-Hamilton-connected)."""

from __future__ import annotations

import itertools
from typing import List, Optional, Set, Tuple

from . import patterns
from .hamilton import hamilton_connected
from .linegraph import is_simplicial
from .match import find_embedding
from .multigraph import Multigraph, MultigraphError


def claw_witness(g: Multigraph) -> Optional[Tuple[int, ...]]:
    for c in g.vertices():
        nbrs = g.neighbors(c)
        for a, b, d in itertools.combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return (c, a, b, d)
    return None


def _require_claw_free(g: Multigraph) -> None:
    w = claw_witness(g)
    if w is not None:
        raise MultigraphError(f"graph has an induced claw at {w}")


def local_completion(g: Multigraph, x: int) -> Multigraph:
    """Add every missing edge inside N(x); x is simplicial afterwards."""
    if not g.is_simple():
        raise MultigraphError("local completion is defined on simple graphs")
    nbrs = g.neighbors(x)
    out = g
    for a, b in itertools.combinations(nbrs, 2):
        if not out.has_edge(a, b):
            out = out.with_edge(a, b)
    return out


def _induced_neighborhood(g: Multigraph, x: int) -> Multigraph:
    nbrs = g.neighbors(x)
    idx = {v: i for i, v in enumerate(nbrs)}
    pairs = [
        (idx[a], idx[b])
        for a, b in itertools.combinations(nbrs, 2)
        if g.has_edge(a, b)
    ]
    return Multigraph.from_simple_edges(len(nbrs), pairs)


def is_eligible(g: Multigraph, x: int) -> bool:
    """Neighbourhood induces a connected noncomplete graph."""
    nb = _induced_neighborhood(g, x)
    if nb.n == 0:
        return False
    complete = nb.num_edge_classes() == nb.n * (nb.n - 1) // 2
    return nb.is_connected() and not complete


def eligible_vertices(g: Multigraph) -> Set[int]:
    _require_claw_free(g)
    return {x for x in g.vertices() if is_eligible(g, x)}


def ryjacek_closure(g: Multigraph) -> Tuple[Multigraph, List[int]]:
    """Iterated local completion at eligible vertices until none remain;
    returns (cl(g), completed-vertex sequence)."""
    _require_claw_free(g)
    trace: List[int] = []
    cur = g
    while True:
        elig = sorted(x for x in cur.vertices() if is_eligible(cur, x))
        if not elig:
            return cur, trace
        x = elig[0]
        cur = local_completion(cur, x)
        trace.append(x)


def is_k_connected(g: Multigraph, k: int) -> bool:
    """Simple vertex connectivity >= k, by exhaustive small-cut search."""
    if g.n <= k:
        return False
    if not g.is_connected():
        return k <= 0
    for cut in itertools.combinations(range(g.n), k - 1) if k >= 1 else []:
        rest = g.without_vertices(cut)
        if rest.n > 0 and not rest.is_connected():
            return False
    return True


def locally_k_connected(g: Multigraph, x: int, k: int) -> bool:
    return is_k_connected(_induced_neighborhood(g, x), k)


def is_feasible(g: Multigraph, x: int, workers: int = 1) -> bool:
    """x nonsimplicial and local completion at x leaves g
    non-Hamilton-connected.  Defined only for non-Hamilton-connected g."""
    _require_claw_free(g)
    ok, _cert, _pair = hamilton_connected(g, workers)
    if ok:
        raise MultigraphError("feasibility undefined: graph is Hamilton-connected")
    if is_simplicial(g, x):
        raise MultigraphError("feasibility undefined at a simplicial vertex")
    ok, _cert, _pair = hamilton_connected(local_completion(g, x), workers)
    return not ok


def closure_obstruction_free(g: Multigraph) -> Tuple[bool, Optional[str]]:
    """Freeness check used on claimed closed graphs: no induced claw, W5,
    W4, P6^2 or P6^2+."""
    for pat in (
        patterns.claw(),
        patterns.wheel(5),
        patterns.wheel(4),
        patterns.p6_squared(),
        patterns.p6_squared_plus(),
    ):
        if find_embedding(g, pat, "induced") is not None:
            return False, pat.name
    return True, None
