"""Backtracking multigraph pattern matcher.

Three match modes:

- subgraph: mu_P(uv) <= mu_H(phi u, phi v) for all pattern pairs;
- flat: subgraph, plus every host edge between embedded vertices is
  present in the pattern with multiplicity 1 or the full host
  multiplicity;
- induced: exact adjacency match (simple graphs only).
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterator, List, Optional, Union

from .multigraph import Multigraph, MultigraphError
from .patterns import Pattern

MODES = ("subgraph", "flat", "induced")


def _as_pattern(p: Union[Pattern, Multigraph]) -> Pattern:
    if isinstance(p, Pattern):
        return p
    return Pattern("anon", p)


def _pair_ok(mode: str, mp: int, mh: int) -> bool:
    if mode == "subgraph":
        return mp <= mh
    if mode == "flat":
        if mp == 0:
            return mh == 0
        return mp <= mh and (mp == 1 or mp == mh)
    # induced
    return (mp > 0) == (mh > 0)


def _order_vertices(p: Multigraph) -> List[int]:
    """Connected-first ordering: start at a max-degree vertex, always
    prefer vertices adjacent to the placed prefix."""
    remaining = set(p.vertices())
    order: List[int] = []
    placed = set()
    while remaining:
        adjacent = [v for v in remaining if any(w in placed for w in p.adj(v))]
        pool = adjacent or sorted(remaining)
        v = max(pool, key=lambda x: (sum(1 for w in p.adj(x) if w in placed),
                                     p.degree(x), -x))
        order.append(v)
        placed.add(v)
        remaining.discard(v)
    return order


def find_embeddings(
    host: Multigraph,
    pattern: Union[Pattern, Multigraph],
    mode: str = "subgraph",
) -> Iterator[Dict[int, int]]:
    """Generate embeddings (injective maps pattern vertex -> host vertex),
    without symmetry dedup."""
    if mode not in MODES:
        raise MultigraphError(f"unknown match mode {mode!r}")
    pat = _as_pattern(pattern)
    p = pat.graph
    if mode == "induced" and not (p.is_simple() and host.is_simple()):
        raise MultigraphError("induced mode requires simple pattern and host")
    if p.n > host.n:
        return
    order = _order_vertices(p)
    emb: Dict[int, int] = {}
    used = [False] * host.n

    def candidates(pv: int) -> Iterator[int]:
        anchors = [q for q in p.adj(pv) if q in emb]
        if anchors:
            a = anchors[0]
            for hv in host.adj(emb[a]):
                if not used[hv]:
                    yield hv
        else:
            for hv in range(host.n):
                if not used[hv]:
                    yield hv

    def feasible(pv: int, hv: int) -> bool:
        if host.degree(hv) < p.degree(pv) or host.simple_degree(hv) < p.simple_degree(pv):
            return False
        for q, hq in emb.items():
            if not _pair_ok(mode, p.mult(pv, q), host.mult(hv, hq)):
                return False
        return True

    def extend(i: int) -> Iterator[Dict[int, int]]:
        if i == len(order):
            yield dict(emb)
            return
        pv = order[i]
        for hv in candidates(pv):
            if feasible(pv, hv):
                emb[pv] = hv
                used[hv] = True
                yield from extend(i + 1)
                used[hv] = False
                del emb[pv]

    yield from extend(0)


def _dedup_key(pat: Pattern, emb: Dict[int, int]):
    grouped = set(itertools.chain.from_iterable(pat.role_groups))
    fixed = tuple(
        sorted((r, emb[v]) for r, v in pat.roles.items() if r not in grouped)
    )
    groups = tuple(
        frozenset(emb[pat.roles[r]] for r in grp) for grp in pat.role_groups
    )
    return (frozenset(emb.values()), fixed, groups)


def find_all(
    host: Multigraph,
    pattern: Union[Pattern, Multigraph],
    mode: str = "subgraph",
) -> List[Dict[int, int]]:
    """All embeddings, deduplicated by image set + role assignment (role
    groups are interchangeable)."""
    pat = _as_pattern(pattern)
    seen = set()
    out = []
    for emb in find_embeddings(host, pat, mode):
        key = _dedup_key(pat, emb)
        if key not in seen:
            seen.add(key)
            out.append(emb)
    return out


def find_embedding(
    host: Multigraph,
    pattern: Union[Pattern, Multigraph],
    mode: str = "subgraph",
) -> Optional[Dict[int, int]]:
    for emb in find_embeddings(host, pattern, mode):
        return emb
    return None


def has_embedding(
    host: Multigraph,
    pattern: Union[Pattern, Multigraph],
    mode: str = "subgraph",
) -> bool:
    return find_embedding(host, pattern, mode) is not None


def brute_force_embeddings(
    host: Multigraph,
    pattern: Union[Pattern, Multigraph],
    mode: str = "subgraph",
) -> List[Dict[int, int]]:
    """Oracle: try every injective map.  Exponential; tests only."""
    pat = _as_pattern(pattern)
    p = pat.graph
    if mode == "induced" and not (p.is_simple() and host.is_simple()):
        raise MultigraphError("induced mode requires simple pattern and host")
    out = []
    pvs = list(p.vertices())
    for images in itertools.permutations(range(host.n), p.n):
        emb = dict(zip(pvs, images))
        ok = True
        for u, v in itertools.combinations(pvs, 2):
            if not _pair_ok(mode, p.mult(u, v), host.mult(emb[u], emb[v])):
                ok = False
                break
        if ok:
            out.append(emb)
    return out
