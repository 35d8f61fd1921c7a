"""Decorated Wagner-variant enumeration.

For each base M in {W, W1, W2} and each subset E of its simple edges,
build N: subdivide every E-edge once, then attach one pendant edge to
every vertex incident to neither an E-edge nor a multiedge.  Survivors
are the N without any subgraph whose line graph is Gamma3; the claim
under test is that the only survivor is W3.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, List, Tuple

from . import patterns
from .canon import canonical_form
from .linegraph import gamma3_free
from .multigraph import Edge, Multigraph, MultigraphError


def build_n(m: Multigraph, e_set: Iterable[Edge]) -> Multigraph:
    e_list = sorted(set(tuple(sorted(e)) for e in e_set))
    for e in e_list:
        if m.mult(*e) == 0:
            raise MultigraphError(f"{e} is not an edge of the base graph")
        if m.mult(*e) >= 2:
            raise MultigraphError(f"{e} is a multiedge; not subdividable here")
    chosen = set(itertools.chain.from_iterable(e_list))
    multi = set(itertools.chain.from_iterable(m.multiple_edges()))
    pend = [v for v in m.vertices() if v not in chosen and v not in multi]
    out = m
    for e in e_list:
        out = out.subdivide(*e)
    for v in pend:
        out = out.with_pendant(v)
    return out


def bases() -> List[Tuple[str, Multigraph]]:
    return [
        ("W", patterns.wagner().graph),
        ("W1", patterns.wagner1().graph),
        ("W2", patterns.wagner2().graph),
    ]


def enumerate_claim2() -> Tuple[List[Multigraph], int, Dict[str, int]]:
    """(survivors up to isomorphism, number of cases processed,
    per-base case counts)."""
    survivors: Dict[bytes, Multigraph] = {}
    cases = 0
    per_base: Dict[str, int] = {}
    for name, m in bases():
        simple = [e for e, mult in m.edge_items() if mult == 1]
        count = 0
        for r in range(len(simple) + 1):
            for combo in itertools.combinations(simple, r):
                n = build_n(m, combo)
                count += 1
                if gamma3_free(n):
                    survivors[canonical_form(n)] = n
        per_base[name] = count
        cases += count
    return list(survivors.values()), cases, per_base


def survivor_is_w3() -> bool:
    survivors, _cases, _per = enumerate_claim2()
    w3 = canonical_form(patterns.wagner3().graph)
    return len(survivors) == 1 and canonical_form(survivors[0]) == w3
