"""Seed generation, extension families, and the recursive investigation
that emits the family archive.

Extensions: A(M,U) adds one vertex joined by simple edges, meeting U,
with the degree-1 twin restriction; M(M,R) multiplies one simple
nonpendant edge of R.  The engine explores seeds (k-vertex graphs
containing C_k and no shorter cycle of length >= 7, k = 7..10), checks
the gate, records gate+condition-clean graphs, and otherwise branches on
the solution attempts of one violated condition.

Visited states are memoized by canonical form: investigation is a pure
function of the multigraph, so revisits are skipped.  The flat-subgraph
solved-case cache is available behind a flag but is off by default (its
soundness has no independent proof here; the canonical memo suffices
for archive completeness and keeps policy invariance provable).
"""

from __future__ import annotations

import itertools
import os
import random
import sys
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from . import conditions
from .canon import canonical_form, canonical_hash, canonical_relabel
from .match import find_embedding
from .multigraph import Edge, Multigraph, MultigraphError


# -- extension families --------------------------------------------------


def _twin_rule_ok(m_plus: Multigraph, v: int) -> bool:
    """If the added vertex has degree 1, it may have at most one twin."""
    if m_plus.degree(v) != 1:
        return True
    twins = [
        z for z in m_plus.vertices()
        if z != v and m_plus.are_twins(z, v)
    ]
    return len(twins) <= 1


def extensions_add(m: Multigraph, u_set: Sequence[int]) -> List[Multigraph]:
    """A(M,U): all one-vertex extensions, deduplicated up to isomorphism."""
    u_set = set(u_set)
    out: Dict[bytes, Multigraph] = {}
    for r in range(1, m.n + 1):
        for s in itertools.combinations(range(m.n), r):
            if not u_set.intersection(s):
                continue
            child = m.with_vertex(s)
            if not _twin_rule_ok(child, m.n):
                continue
            out.setdefault(canonical_form(child), child)
    return list(out.values())


def _add_attachment_sets(m: Multigraph, u_set: Set[int]):
    """Attachment sets for A(M,U) whose child stays diamond-free.

    A set with two common neighbours of one vertex, or an adjacent pair
    with a common neighbour, yields a diamond and dies at the gate;
    skipping those is a pure speed-up.
    """
    if not u_set:
        return
    nbr = [set(m.adj(v)) for v in range(m.n)]
    chosen: List[int] = []
    cnt = [0] * m.n  # chosen neighbours of each vertex
    # region vertices first, so subtrees that cannot intersect the
    # region any more are pruned instead of filtered at the leaves
    order = sorted(u_set) + [v for v in range(m.n) if v not in u_set]
    n_u = len(u_set)

    def ok_with(a: int) -> bool:
        # the new vertex and a chosen a share >= 2 neighbours in S
        if cnt[a] >= 2:
            return False
        for b in chosen:
            if b in nbr[a]:
                # b would get a second chosen neighbour (a), or the
                # adjacent pair (a, b) has a common neighbour in M
                if cnt[b] >= 1 or nbr[a] & nbr[b]:
                    return False
        return True

    def rec(i: int, have_u: bool):
        if i >= n_u and not have_u:
            return
        if i == m.n:
            yield tuple(sorted(chosen))
            return
        v = order[i]
        yield from rec(i + 1, have_u)
        if ok_with(v):
            chosen.append(v)
            for w in nbr[v]:
                cnt[w] += 1
            yield from rec(i + 1, have_u or i < n_u)
            for w in nbr[v]:
                cnt[w] -= 1
            chosen.pop()

    yield from rec(0, False)


def _add_actions(m: Multigraph, u_set) -> List[Tuple]:
    """Engine branch actions for A(M,U): cheap (kind, data) tuples; the
    child graph is only built when the action is applied."""
    return [("add", s) for s in _add_attachment_sets(m, set(u_set))]


# -- lazy branch specs (engine path) ----------------------------------------
#
# A spec is a tuple of parts ("A", vertex-tuple) / ("M", edge-tuple);
# actions are regenerated deterministically instead of being stored, so
# a branch over a large attachment region never materializes.


def _attachment_sets_by_size(m: Multigraph, u_set: Set[int],
                             dead: Optional[List[frozenset]] = None):
    """Attachment sets in increasing-size order, skipping any set that
    contains a member of `dead` (which may grow while iterating).

    Yields (s, live) pairs where live sets of the current size exist but
    may miss the region; only s with s & u_set nonempty are yielded,
    while `live` reports that the size class was inhabited at all.
    """
    if not u_set:
        return
    if dead is None:
        dead = []
    nbr = [set(m.adj(v)) for v in range(m.n)]
    order = sorted(u_set) + [v for v in range(m.n) if v not in u_set]
    n_u = len(u_set)
    chosen: List[int] = []
    cnt = [0] * m.n

    def ok_with(a: int) -> bool:
        if cnt[a] >= 2:
            return False
        for b in chosen:
            if b in nbr[a]:
                if cnt[b] >= 1 or nbr[a] & nbr[b]:
                    return False
        return True

    def rec(start: int, k: int, have_u: bool):
        if len(chosen) == k:
            yield tuple(sorted(chosen))
            return
        stop = m.n - (k - len(chosen)) + 1
        if not have_u:
            stop = min(stop, n_u)  # sets must meet the region
        for i in range(start, stop):
            a = order[i]
            if not ok_with(a):
                continue
            cs = set(chosen)
            cs.add(a)
            if any(d <= cs for d in dead):
                continue
            chosen.append(a)
            for w in nbr[a]:
                cnt[w] += 1
            yield from rec(i + 1, k, have_u or i < n_u)
            for w in nbr[a]:
                cnt[w] -= 1
            chosen.pop()

    for k in range(1, m.n + 1):
        alive = False
        for s in rec(0, k, False):
            alive = True
            yield s
        if not alive:
            return


def _spec_actions(m: Multigraph, spec: Tuple) -> "Iterator[Tuple]":
    for kind, data in spec:
        if kind == "A":
            for s in _attachment_sets_by_size(m, set(data)):
                yield ("add", s)
        else:
            for e in data:
                yield ("mult", tuple(sorted(e)))


def _spec_width(spec: Tuple) -> int:
    """Attachment-region size plus multipliable-edge count: a cheap
    monotone proxy for the branch size."""
    return sum(len(data) for _kind, data in spec)


def _spec_count(m: Multigraph, spec: Tuple, limit: Optional[int] = None) -> int:
    """Number of actions in the spec, aborting at `limit` (the return
    value is then >= limit)."""
    count = 0
    for _a in _spec_actions(m, spec):
        count += 1
        if limit is not None and count >= limit:
            break
    return count


def _mult_actions(m: Multigraph, r_set: Sequence[Edge]) -> List[Tuple]:
    es = set(m.simple_nonpendant_edges())
    out = []
    for e in r_set:
        e = tuple(sorted(e))
        if e not in es:
            raise MultigraphError(f"edge {e} is not simple nonpendant")
        out.append(("mult", e))
    return out


def _apply_action(m: Multigraph, action: Tuple) -> Optional[Multigraph]:
    kind, data = action
    if kind == "add":
        child = m.with_vertex(data)
        return child if _twin_rule_ok(child, m.n) else None
    return m.with_edge(*data)


def _add_children_raw(m: Multigraph, u_set) -> List[Multigraph]:
    out = []
    for s in _add_attachment_sets(m, set(u_set)):
        child = m.with_vertex(s)
        if _twin_rule_ok(child, m.n):
            out.append(child)
    return out


def extensions_add_pruned(m: Multigraph, u_set: Sequence[int]) -> List[Multigraph]:
    """A(M,U) restricted to children that do not acquire a diamond,
    deduplicated up to isomorphism."""
    out: Dict[bytes, Multigraph] = {}
    for child in _add_children_raw(m, u_set):
        out.setdefault(canonical_form(child), child)
    return list(out.values())


def _mult_children_raw(m: Multigraph, r_set: Sequence[Edge]) -> List[Multigraph]:
    es = set(m.simple_nonpendant_edges())
    out = []
    for e in r_set:
        e = tuple(sorted(e))
        if e not in es:
            raise MultigraphError(f"edge {e} is not simple nonpendant")
        out.append(m.with_edge(*e))
    return out


def extensions_multiply(m: Multigraph, r_set: Sequence[Edge]) -> List[Multigraph]:
    """M(M,R): multiply one edge of R (which must be simple nonpendant),
    deduplicated up to isomorphism."""
    out: Dict[bytes, Multigraph] = {}
    for child in _mult_children_raw(m, r_set):
        out.setdefault(canonical_form(child), child)
    return list(out.values())


# -- solution attempts per violated condition --------------------------------


def _nontrivial_components_without(m: Multigraph, cut) -> List[Set[int]]:
    removed = frozenset(cut)
    comps = m._components_without_classes(removed)
    return [c for c in comps if m._component_has_edge(c, removed)]


def _leaf_free(m: Multigraph, u_set) -> bool:
    return all(m.degree(u) >= 2 for u in u_set)


def _pendant_closure(m: Multigraph, u_set) -> Set[int]:
    """Close an attachment region under degree-1 neighbors of its members.

    The twin rule discards a new vertex that duplicates an existing
    pendant; that is only safe when every pendant hanging off the region
    is itself part of the region, so we enlarge the region accordingly.
    """
    u = set(u_set)
    u.update(w for v in u_set for w in m.adj(v) if m.degree(w) == 1)
    return u


def attempt_options(
    m: Multigraph, p: int, witnesses: List, raw: bool = False
) -> List[Tuple[Tuple, List[Multigraph]]]:
    """All (refined witness, branch set) choices for violated condition p,
    mirroring the per-condition solution attempts.  With raw=True the
    branch sets are lazy specs (see _spec_actions), not deduplicated up
    to isomorphism (engine path; the visited memo catches duplicates)."""
    if raw:
        def add(g, u):
            return (("A", tuple(sorted(_pendant_closure(g, u)))),)

        def mult(g, r):
            es = set(g.simple_nonpendant_edges())
            edges = []
            for e in r:
                e = tuple(sorted(e))
                if e not in es:
                    raise MultigraphError(f"edge {e} is not simple nonpendant")
                edges.append(e)
            return (("M", tuple(edges)),)

        def merge(*bs):
            return tuple(part for b in bs for part in b)
    else:
        def add(g, u):
            return extensions_add_pruned(g, sorted(_pendant_closure(g, u)))

        mult = extensions_multiply
        merge = _merge
    opts: List[Tuple[Tuple, List[Multigraph]]] = []
    if p == 6:
        r_set = [
            e for e in m.simple_nonpendant_edges()
            if m.degree(e[0]) == 2 or m.degree(e[1]) == 2
        ]
        b = merge(add(m, range(m.n)), mult(m, r_set))
        opts.append((witnesses[0], b, _leaf_free(m, range(m.n))))
    elif p == 7:
        es = set(m.simple_nonpendant_edges())
        fell_through = False
        for wit in witnesses:
            cut = wit[1]
            if not all(e in es for e in cut):
                fell_through = True
                continue
            for comp in _nontrivial_components_without(m, cut):
                b = merge(add(m, comp), mult(m, cut))
                opts.append((("cut", cut, tuple(sorted(comp))), b,
                             _leaf_free(m, comp)))
        if fell_through and not opts:
            cvs = m.essential_cutvertices()
            if not cvs:
                raise MultigraphError(
                    "condition (7) cut outside E_S but no essential cutvertex"
                )
            opts = attempt_options(m, 8, [("cutvertex", u) for u in cvs], raw=raw)
    elif p == 8:
        for wit in witnesses:
            u = wit[1]
            rest = m.without_vertices([u])
            relabel = [v for v in range(m.n) if v != u]
            for comp in rest.components():
                orig = {relabel[v] for v in comp}
                if not rest._component_has_edge(comp, frozenset()):
                    continue
                b = add(m, orig)
                opts.append((("cutvertex", u, tuple(sorted(orig))), b,
                             _leaf_free(m, orig)))
    elif p in (9, 10):
        for wit in witnesses:
            u = wit[2]
            opts.append((wit, add(m, [u]), _leaf_free(m, [u])))
    elif p == 11:
        for wit in witnesses:
            ws = wit[2]
            opts.append((wit, add(m, ws), _leaf_free(m, ws)))
    elif p == 12:
        for wit in witnesses:
            pair = wit[2]
            opts.append((wit, add(m, pair), _leaf_free(m, pair)))
    elif p == 13:
        for wit in witnesses:
            quad = wit[2]
            inner = [v for wz in quad for v in wz]
            opts.append((wit, add(m, inner), _leaf_free(m, inner)))
    elif p == 14:
        for wit in witnesses:
            ws, u_set = wit[2], wit[3]
            u_full = set(ws) | set(u_set)
            opts.append((wit, add(m, u_full), _leaf_free(m, u_full)))
    else:
        raise MultigraphError(f"no solution attempts for condition {p}")
    return opts


def get_all_solution_attempts(m: Multigraph, p: int) -> List[Multigraph]:
    """Branch set for the lexicographically best witness of condition p."""
    wits = conditions.violations(m, p)
    if not wits:
        raise MultigraphError(f"condition ({p}) is not violated")
    opts = attempt_options(m, p, wits)
    _wit, b, _lf = min(
        opts, key=lambda o: (len(o[1]) > 0, not o[2], len(o[1]), repr(o[0]))
    )
    return b


def _merge(*branch_sets: List[Multigraph]) -> List[Multigraph]:
    out: Dict[bytes, Multigraph] = {}
    for bs in branch_sets:
        for g in bs:
            out.setdefault(canonical_form(g), g)
    return list(out.values())


# -- seeds -------------------------------------------------------------


def _allowed_chords(k: int) -> List[Edge]:
    """Chords of C_k that do not immediately close a cycle of length in
    [7, k-1] with the rim."""
    chords = []
    for u, v in itertools.combinations(range(k), 2):
        gap = min(v - u, k - (v - u))
        if gap < 2:
            continue
        arcs = (gap + 1, k - gap + 1)  # cycle lengths through the chord
        if any(7 <= a <= k - 1 for a in arcs):
            continue
        chords.append((u, v))
    return chords


_SEEDS: Optional[List[Multigraph]] = None


def seeds() -> List[Multigraph]:
    """For k = 7..10: every k-vertex graph containing C_k but no C_l,
    7 <= l < k, up to isomorphism."""
    global _SEEDS
    if _SEEDS is not None:
        return list(_SEEDS)
    out: Dict[bytes, Multigraph] = {}
    for k in range(7, 11):
        rim = [(i, (i + 1) % k) for i in range(k)]
        chords = _allowed_chords(k)
        for r in range(len(chords) + 1):
            for combo in itertools.combinations(chords, r):
                g = Multigraph.from_simple_edges(k, rim + list(combo))
                if any(g.find_cycle(length) for length in range(7, k)):
                    continue
                out.setdefault(canonical_form(g), g)
    _SEEDS = [out[c] for c in sorted(out)]
    return list(_SEEDS)


# -- the engine ----------------------------------------------------------


class BudgetExceeded(Exception):
    pass


@dataclass
class SearchConfig:
    policy: str = "lexmin"
    seed: int = 0
    budget: Optional[float] = None
    workers: int = 1
    trace: bool = False
    flat_cache: bool = False


@dataclass
class FamilyArchive:
    members: Dict[bytes, Multigraph] = field(default_factory=dict)
    complete: bool = True
    stats: Dict[str, int] = field(default_factory=dict)
    trace_lines: List[str] = field(default_factory=list)

    def sorted_members(self) -> List[Multigraph]:
        return [canonical_relabel(self.members[c]) for c in sorted(self.members)]


class _Context:
    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg
        self.rng = random.Random(cfg.seed)
        self.visited: Set[bytes] = set()
        self.archive: Dict[bytes, Multigraph] = {}
        self.trace: List[str] = []
        self.flat_solved: List[Multigraph] = []
        self.stats = {"open": 0, "gate-fail": 0, "record": 0, "cache-hit": 0,
                      "close": 0, "max-depth": 0, "max-n": 0}
        self.depth = 0
        self.progress_every = int(os.environ.get("GAMMA3_PROGRESS", "0") or 0)
        self.full_gate = bool(os.environ.get("GAMMA3_FULL_GATE"))
        self.deadline = (
            time.monotonic() + cfg.budget if cfg.budget is not None else None
        )

    def log(self, event: str, m: Multigraph, extra: str = "") -> None:
        self.stats[event] += 1
        if self.cfg.trace:
            line = f"{event} {canonical_hash(m)}"
            if extra:
                line += f" {extra}"
            self.trace.append(line)


def _choose_violation(
    m: Multigraph, violated: Dict[int, List], ctx: _Context
) -> Tuple:
    # Preference order shared by both policies (each is sound: the
    # closure claims hold for any single witness choice, and an empty
    # branch set proves no valid completion exists):
    #   1. zero-branch witnesses close the branch outright;
    #   2. witnesses whose attachment region has no degree-1 vertex
    #      (otherwise a bare pendant chain can regrow forever);
    #   3. small attachment regions (cheap deterministic proxy for
    #      small branch sets; exact sizes would cost a full enumeration
    #      per candidate just to lose the comparison).
    all_opts: List[Tuple[int, Tuple, Tuple, bool]] = []
    for p in sorted(violated):
        for wit, spec, lf in attempt_options(m, p, violated[p], raw=True):
            all_opts.append((p, wit, spec, lf))
    zeros = [
        o for o in all_opts if next(_spec_actions(m, o[2]), None) is None
    ]
    if zeros:
        if ctx.cfg.policy == "lexmin":
            return min(zeros, key=lambda o: (o[0], repr(o[1])))[2]
        return ctx.rng.choice(zeros)[2]
    pool = [o for o in all_opts if o[3]] or all_opts
    if ctx.cfg.policy == "lexmin":
        return min(
            pool, key=lambda o: (_spec_width(o[2]), o[0], repr(o[1]))
        )[2]
    weights = [1.0 / (1 + _spec_width(o[2])) for o in pool]
    return ctx.rng.choices(pool, weights=weights, k=1)[0][2]


def _investigate(m: Multigraph, ctx: _Context, action: Optional[Tuple] = None) -> bool:
    """Explore m; returns True iff m failed the gate (callers may then
    skip supersets of the same attachment set, since a gate witness
    survives adding more simple edges at the new vertex)."""
    # gate first: most children die here and never pay for a canonical
    # form (revisited gate-failures are recomputed, which is cheaper
    # than canonicalizing everything).  Children of a gate-passing
    # parent only need the local gate around the modification.
    if ctx.deadline is not None and time.monotonic() > ctx.deadline:
        raise BudgetExceeded
    if action is not None and not ctx.full_gate:
        ok, wit = conditions.check_gate_child(m, action)
    else:
        ok, wit = conditions.check_gate(m)
    if not ok:
        ctx.log("gate-fail", m, conditions.format_witness(wit))
        return True
    c = canonical_form(m)
    if c in ctx.visited:
        ctx.log("cache-hit", m)
        return False
    ctx.visited.add(c)
    ctx.log("open", m, f"n={m.n} e={m.num_edge_copies()}")
    ctx.depth += 1
    if ctx.depth > ctx.stats["max-depth"]:
        ctx.stats["max-depth"] = ctx.depth
    if m.n > ctx.stats["max-n"]:
        ctx.stats["max-n"] = m.n
    if ctx.progress_every and ctx.stats["open"] % ctx.progress_every == 0:
        print(
            f"# open={ctx.stats['open']} visited={len(ctx.visited)} "
            f"depth={ctx.depth} max-depth={ctx.stats['max-depth']} "
            f"max-n={ctx.stats['max-n']} records={ctx.stats['record']} "
            f"gate-fail={ctx.stats['gate-fail']}",
            file=sys.stderr, flush=True,
        )
    if ctx.cfg.flat_cache and any(
        find_embedding(m, g, "flat") is not None for g in ctx.flat_solved
    ):
        ctx.log("cache-hit", m, "flat")
        ctx.depth -= 1
        ctx.log("close", m)
        return False
    violated = conditions.violated_conditions(m)
    if not violated:
        ctx.archive[c] = m
        ctx.log("record", m)
        spec = (("A", tuple(range(m.n))),
                ("M", tuple(m.simple_nonpendant_edges())))
    else:
        spec = _choose_violation(m, violated, ctx)
    del violated, wit, c  # witness lists dominate per-frame memory
    for kind, data in spec:
        if kind == "M":
            for e in data:
                child_action = ("mult", tuple(sorted(e)))
                child = _apply_action(m, child_action)
                if child is not None:
                    _investigate(child, ctx, child_action)
        else:
            # Attachment sets are explored smallest-first.  When the
            # child for attachment set s fails the gate, every superset
            # s' can be skipped: the graph attached via s' contains the
            # one attached via s as a flat subgraph (drop the extra
            # edges at the new vertex; multiplicities are unchanged),
            # so the same gate witness survives.  Gate-passing children
            # must NOT prune supersets: extensions never join existing
            # vertices, so a vertex attached below its full target
            # neighbourhood can never recover the missing edges.
            dead: List[frozenset] = []
            for s in _attachment_sets_by_size(m, set(data), dead):
                child = _apply_action(m, ("add", s))
                if child is None:
                    continue  # rejected by the twin rule; supersets differ
                if _investigate(child, ctx, ("add", s)):
                    dead.append(frozenset(s))
    if ctx.cfg.flat_cache:
        ctx.flat_solved.append(m)
    ctx.depth -= 1
    ctx.log("close", m)
    return False


def investigate(m: Multigraph, cfg: Optional[SearchConfig] = None) -> FamilyArchive:
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 100000))
    ctx = _Context(cfg or SearchConfig())
    arch = FamilyArchive()
    try:
        _investigate(m, ctx)
    except BudgetExceeded:
        arch.complete = False
    arch.members = ctx.archive
    arch.stats = ctx.stats
    arch.trace_lines = ctx.trace
    return arch


def _seed_job(args) -> Tuple[Dict[bytes, Multigraph], List[str], Dict[str, int], bool]:
    m, cfg = args
    arch = investigate(m, cfg)
    return arch.members, arch.trace_lines, arch.stats, arch.complete


def run_search(cfg: Optional[SearchConfig] = None) -> FamilyArchive:
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 100000))
    cfg = cfg or SearchConfig()
    seed_graphs = seeds()
    arch = FamilyArchive()
    if cfg.workers > 1:
        with Pool(cfg.workers) as pool:
            results = pool.map(_seed_job, [(s, cfg) for s in seed_graphs])
        for members, tlines, stats, complete in results:
            arch.members.update(members)
            arch.trace_lines.extend(tlines)
            for k, v in stats.items():
                arch.stats[k] = arch.stats.get(k, 0) + v
            arch.complete = arch.complete and complete
    else:
        ctx = _Context(cfg)
        try:
            for s in seed_graphs:
                _investigate(s, ctx)
        except BudgetExceeded:
            arch.complete = False
        arch.members = ctx.archive
        arch.stats = ctx.stats
        arch.trace_lines = ctx.trace
    return arch
