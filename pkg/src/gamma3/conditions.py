"""Membership gate and conditions (1)-(14).

The gate: L(M) Gamma3-free, no diamond subgraph, no flat C9M subgraph.
Conditions (1)-(8) are global structure checks; (9)-(14) quantify over
all subgraph embeddings of a fixed pattern (K3, D1, K2,4, D2, the K^M
families).  Neighbour counts |N(.)| count distinct neighbours; degrees
count edge copies.

Each check returns (ok, witness); `violations(M, k)` lists every witness
of a violated condition in the structured form the search engine needs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import patterns
from .linegraph import gamma3_witness, gamma3_witness_doubled, gamma3_witness_near
from .match import find_all
from .multigraph import Multigraph

Witness = Tuple
Verdict = Tuple[bool, Optional[Witness]]


@dataclass
class ConditionReport:
    gate: Verdict
    conditions: Dict[int, Verdict] = field(default_factory=dict)

    def all_pass(self) -> bool:
        return self.gate[0] and all(ok for ok, _w in self.conditions.values())


# -- gate ---------------------------------------------------------------


def diamond_witness(m: Multigraph) -> Optional[Witness]:
    """D subgraph = an adjacent pair with two common neighbours."""
    for (a, b), _mult in m.edge_items():
        common = [c for c in m.adj(a) if c != b and m.has_edge(b, c)]
        if len(common) >= 2:
            return ("D", a, b, common[0], common[1])
    return None


def _c9m_pattern(m: Multigraph, cyc) -> Optional[Witness]:
    for seq in (cyc, tuple(reversed(cyc))):
        mults = [m.mult(seq[i], seq[(i + 1) % 9]) for i in range(9)]
        for r in range(9):
            if all(mults[(r + o) % 9] == 2 for o in (0, 3, 6)):
                rot = tuple(seq[(r + i) % 9] for i in range(9))
                return ("C9M", rot)
    return None


def c9m_flat_witness(m: Multigraph) -> Optional[Witness]:
    """Flat C9M = chordless 9-cycle whose edges at three positions spaced
    by 3 have host multiplicity exactly 2."""
    for cyc in m.chordless_cycles(9):
        w = _c9m_pattern(m, cyc)
        if w is not None:
            return w
    return None


def c9m_flat_witness_through(m: Multigraph, v: int) -> Optional[Witness]:
    """Flat C9M whose cycle contains v (complete when m arose from a
    flat-C9M-free graph by a change local to v)."""
    for cyc in m.chordless_cycles_through(9, v):
        w = _c9m_pattern(m, cyc)
        if w is not None:
            return w
    return None


def _diamond_witness_at(m: Multigraph, v: int) -> Optional[Witness]:
    """D witness containing v: v in the adjacent pair or v a common
    neighbour of one."""
    for b in m.adj(v):
        common = [c for c in m.adj(v) if c != b and m.has_edge(b, c)]
        if len(common) >= 2:
            return ("D", v, b, common[0], common[1])
    for a, b in itertools.combinations(m.adj(v), 2):
        if not m.has_edge(a, b):
            continue
        common = [c for c in m.adj(a) if c != b and m.has_edge(b, c)]
        if len(common) >= 2:
            return ("D", a, b, common[0], common[1])
    return None


def check_gate_child(child: Multigraph, action: Tuple) -> Verdict:
    """Gate for a child of a gate-passing graph: any new witness must
    involve the added vertex or the newly doubled edge, so only local
    structures are scanned.  Sound and complete under that premise."""
    kind, data = action
    if kind == "add":
        v = child.n - 1
        w = gamma3_witness_near(child, v)
        if w is not None:
            return False, ("gamma3",) + w
        w = _diamond_witness_at(child, v)
        if w is not None:
            return False, w
        w = c9m_flat_witness_through(child, v)
        if w is not None:
            return False, w
        return True, None
    x, y = data
    if child.mult(x, y) != 2:
        # raising multiplicity past 2 cannot create any gate witness
        return True, None
    w = gamma3_witness_doubled(child, x, y)
    if w is not None:
        return False, ("gamma3",) + w
    w = c9m_flat_witness_through(child, x)
    if w is not None:
        return False, w
    return True, None


def check_gate(m: Multigraph) -> Verdict:
    w = gamma3_witness(m)
    if w is not None:
        return False, ("gamma3",) + w
    w = diamond_witness(m)
    if w is not None:
        return False, w
    w = c9m_flat_witness(m)
    if w is not None:
        return False, w
    return True, None


# -- helper enumerations ---------------------------------------------------


def triangles(m: Multigraph) -> List[Tuple[int, int, int]]:
    out = []
    for u, v, w in itertools.combinations(m.vertices(), 3):
        if m.has_edge(u, v) and m.has_edge(u, w) and m.has_edge(v, w):
            out.append((u, v, w))
    return out


def _common_neighbors(m: Multigraph, x: int, y: int) -> List[int]:
    return [w for w in m.adj(x) if w != y and m.has_edge(w, y)]


def _k4p4_candidates(m: Multigraph, x: int, y: int) -> List[Tuple[int, int]]:
    """Directed middle pairs (w, z) of x-w-z-y paths carrying a double
    edge somewhere."""
    out = []
    for w in m.adj(x):
        if w in (x, y):
            continue
        for z in m.adj(w):
            if z in (x, y, w) or not m.has_edge(z, y):
                continue
            if m.mult(x, w) >= 2 or m.mult(w, z) >= 2 or m.mult(z, y) >= 2:
                out.append((w, z))
    return out


def _disjoint_quadruples(cands: List[Tuple[int, int]]):
    """4-subsets of candidate paths with pairwise-disjoint interiors."""
    def extend(start: int, chosen: List[Tuple[int, int]], used: set):
        if len(chosen) == 4:
            yield tuple(chosen)
            return
        for i in range(start, len(cands)):
            w, z = cands[i]
            if w in used or z in used:
                continue
            chosen.append(cands[i])
            used.update((w, z))
            yield from extend(i + 1, chosen, used)
            used.difference_update((w, z))
            chosen.pop()

    yield from extend(0, [], set())


# -- the fourteen conditions -------------------------------------------------


def violations(m: Multigraph, k: int) -> List[Witness]:
    """All witnesses of condition k being violated (empty = condition
    holds)."""
    if k == 1:
        out = []
        for v in m.vertices():
            leaves = tuple(w for w in m.neighbors(v) if m.degree(w) == 1)
            if len(leaves) > 2:
                out.append(("leaves", v, leaves))
        return out
    if k == 2:
        return [
            ("multiedge", e, mult) for e, mult in m.edge_items() if mult > 2
        ]
    if k == 3:
        if any(m.find_cycle(c) for c in range(7, 11)):
            return []
        return [("no-cycle", (7, 8, 9, 10))]
    if k == 4:
        w = diamond_witness(m)
        return [w] if w is not None else []
    if k == 5:
        w = c9m_flat_witness(m)
        return [w] if w is not None else []
    if k == 6:
        big = [v for v in m.vertices() if m.degree(v) >= 3]
        if len(big) >= 10:
            return []
        return [("degree3-count", len(big), tuple(big))]
    if k == 7:
        return [
            ("cut", cut) for cut in m.essential_edge_cuts_below(3)
        ] if m.is_connected() else [("disconnected",)]
    if k == 8:
        return [("cutvertex", u) for u in m.essential_cutvertices()]
    if k == 9:
        out = []
        for tri in triangles(m):
            for u in tri:
                if m.simple_degree(u) == 2:
                    out.append(("K3", tri, u))
        return out
    if k == 10:
        out = []
        for emb in find_all(m, patterns.diamond1(), "subgraph"):
            for u in sorted(set(emb.values())):
                if m.simple_degree(u) == 2:
                    out.append(("D1", tuple(sorted(emb.items())), u))
        return out
    if k == 11:
        out = []
        for x, y in itertools.combinations(m.vertices(), 2):
            small = [w for w in _common_neighbors(m, x, y)
                     if m.simple_degree(w) == 2]
            for ws in itertools.combinations(small, 4):
                out.append(("K24", (x, y), ws))
        return out
    if k == 12:
        out = []
        for emb in find_all(m, patterns.diamond2(), "subgraph"):
            pat = patterns.diamond2()
            img = {r: emb[v] for r, v in pat.roles.items()}
            if m.simple_degree(img["c1"]) + m.simple_degree(img["c2"]) <= 4:
                out.append(("D2", tuple(sorted(img.items())), (img["c1"], img["c2"])))
            if m.simple_degree(img["d1"]) + m.simple_degree(img["d2"]) <= 4:
                out.append(("D2", tuple(sorted(img.items())), (img["d1"], img["d2"])))
        return out
    if k == 13:
        out = []
        for x, y in itertools.combinations(m.vertices(), 2):
            cands = [
                (w, z) for (w, z) in _k4p4_candidates(m, x, y)
                if m.simple_degree(w) == 2 and m.simple_degree(z) == 2
            ]
            for quad in _disjoint_quadruples(cands):
                out.append(("K4P4", (x, y), quad))
        return out
    if k == 14:
        out = []
        for x, y in itertools.combinations(m.vertices(), 2):
            spokes = [
                w for w in _common_neighbors(m, x, y)
                if m.mult(w, x) >= 2 or m.mult(w, y) >= 2
            ]
            for ws in itertools.combinations(spokes, 4):
                u_set = sorted(
                    {u for w in ws for u in m.adj(w)} - {x, y}
                )
                if not any(m.degree(u) >= 2 for u in u_set):
                    out.append(("K24M", (x, y), ws, tuple(u_set)))
        return out
    raise ValueError(f"no condition {k}")


def check(m: Multigraph, k: int) -> Verdict:
    vio = violations(m, k)
    return (True, None) if not vio else (False, vio[0])


def check_all(m: Multigraph) -> ConditionReport:
    return ConditionReport(
        gate=check_gate(m),
        conditions={k: check(m, k) for k in range(1, 15)},
    )


def violated_conditions(m: Multigraph, lo: int = 6, hi: int = 14) -> Dict[int, List[Witness]]:
    """Violated conditions in [lo, hi] with their full witness lists."""
    out = {}
    for k in range(lo, hi + 1):
        vio = violations(m, k)
        if vio:
            out[k] = vio
    return out


def format_witness(w: Optional[Witness]) -> str:
    if w is None:
        return "-"
    return " ".join(str(part).replace(" ", "") for part in w)
