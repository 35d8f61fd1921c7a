"""Canonical forms for multigraphs.

Individualisation-refinement: colour vertices by degree/multiplicity
profiles, refine to a stable partition, branch on the first non-singleton
cell, and take the lexicographically smallest edge encoding over all
leaves.  Multiplicities act as edge colours throughout, so two graphs get
the same form iff there is a multiplicity-preserving isomorphism.
"""

from __future__ import annotations

import hashlib
from typing import Dict, List, Optional, Sequence, Tuple

from .multigraph import Multigraph


def _refine(g: Multigraph, colors: List[int]) -> List[int]:
    n = g.n
    while True:
        sigs = []
        for v in range(n):
            nbr = tuple(sorted((colors[w], m) for w, m in g.adj(v).items()))
            sigs.append((colors[v], nbr))
        order = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(order)}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _cells(colors: List[int]) -> List[List[int]]:
    by: Dict[int, List[int]] = {}
    for v, c in enumerate(colors):
        by.setdefault(c, []).append(v)
    return [by[c] for c in sorted(by)]


def _encode(g: Multigraph, colors: List[int]) -> bytes:
    # colors discrete: colors[v] is the new label of v
    edges = sorted(
        (min(colors[u], colors[v]), max(colors[u], colors[v]), m)
        for (u, v), m in g.edge_items()
    )
    parts = [g.n.to_bytes(2, "big")]
    for a, b, m in edges:
        parts.append(a.to_bytes(2, "big") + b.to_bytes(2, "big") + m.to_bytes(2, "big"))
    return b"".join(parts)


def _search(g: Multigraph, colors: List[int], best: List[Optional[bytes]]) -> None:
    colors = _refine(g, colors)
    cells = _cells(colors)
    target = None
    for cell in cells:
        if len(cell) > 1:
            target = cell
            break
    if target is None:
        enc = _encode(g, colors)
        if best[0] is None or enc < best[0]:
            best[0] = enc
        return
    for v in target:
        child = list(colors)
        # individualise v: give it a colour just below its cell
        child[v] = child[v] * 2
        for w in range(g.n):
            if w != v:
                child[w] = child[w] * 2 + 1
        _search(g, child, best)


def canonical_form(g: Multigraph) -> bytes:
    """Bytes identical across isomorphic multigraphs."""
    cached = g._canon_cache
    if cached is not None:
        return cached
    init = [0] * g.n
    best: List[Optional[bytes]] = [None]
    _search(g, init, best)
    form = best[0] if best[0] is not None else g.n.to_bytes(2, "big")
    g._canon_cache = form
    return form


def canonical_hash(g: Multigraph) -> str:
    return hashlib.sha256(canonical_form(g)).hexdigest()[:16]


def is_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    if g.n != h.n or g.num_edge_copies() != h.num_edge_copies():
        return False
    return canonical_form(g) == canonical_form(h)


def canonical_relabel(g: Multigraph) -> Multigraph:
    """The representative graph realising canonical_form(g)."""
    # recover a labelling whose encoding equals the canonical form
    form = canonical_form(g)
    perm = _find_perm(g, form)
    return g.relabel(perm)


def _find_perm(g: Multigraph, form: bytes) -> Sequence[int]:
    best: List[Optional[Tuple[bytes, Tuple[int, ...]]]] = [None]

    def search(colors: List[int]) -> None:
        colors2 = _refine(g, colors)
        cells = _cells(colors2)
        target = None
        for cell in cells:
            if len(cell) > 1:
                target = cell
                break
        if target is None:
            enc = _encode(g, colors2)
            if enc == form and best[0] is None:
                best[0] = (enc, tuple(colors2))
            return
        for v in target:
            if best[0] is not None:
                return
            child = list(colors2)
            child[v] = child[v] * 2
            for w in range(g.n):
                if w != v:
                    child[w] = child[w] * 2 + 1
            search(child)

    search([0] * g.n)
    assert best[0] is not None
    return list(best[0][1])
