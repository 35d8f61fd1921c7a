"""Extension families, seed generation, and the investigation engine."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gamma3 import conditions, patterns
from gamma3.canon import canonical_form
from gamma3.multigraph import Multigraph, MultigraphError
from gamma3.search import (
    SearchConfig,
    _add_attachment_sets,
    _attachment_sets_by_size,
    _pendant_closure,
    attempt_options,
    extensions_add,
    extensions_add_pruned,
    extensions_multiply,
    get_all_solution_attempts,
    investigate,
    seeds,
)


def _path(k):
    return Multigraph.from_simple_edges(k, [(i, i + 1) for i in range(k - 1)])


def _cycle(k):
    return Multigraph.from_simple_edges(k, [(i, (i + 1) % k) for i in range(k)])


# -- one-vertex extensions ----------------------------------------------


def test_extensions_add_k2():
    k2 = Multigraph.from_simple_edges(2, [(0, 1)])
    out = extensions_add(k2, [0, 1])
    forms = {canonical_form(g) for g in out}
    p3 = _path(3)
    k3 = _cycle(3)
    assert forms == {canonical_form(p3), canonical_form(k3)}


def test_extensions_add_twin_rule_blocks_second_pendant_twin():
    # star with two leaves at the centre: a third pendant twin is excluded
    star2 = Multigraph.from_simple_edges(3, [(0, 1), (0, 2)])
    out = extensions_add(star2, [0])
    star3 = Multigraph.from_simple_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert all(
        canonical_form(g) != canonical_form(star3) for g in out
    )


def test_extensions_add_one_pendant_twin_allowed():
    # triangle with one pendant at 0: a second pendant at 0 (one twin) is
    # allowed, a third would not be
    host = Multigraph.from_simple_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    out = extensions_add(host, [0])
    twice = Multigraph.from_simple_edges(
        5, [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)]
    )
    assert any(canonical_form(g) == canonical_form(twice) for g in out)
    thrice = twice.with_vertex([0])
    out2 = extensions_add(twice, [0])
    assert all(canonical_form(g) != canonical_form(thrice) for g in out2)


def test_extensions_add_requires_region_intersection():
    c4 = _cycle(4)
    out = extensions_add(c4, [0])
    # every child's new vertex meets the region
    assert out
    assert all(0 in g.adj(g.n - 1) for g in out)


def test_extensions_multiply_rejects_pendant_edge():
    p3 = _path(3)  # both edges pendant
    with pytest.raises(MultigraphError):
        extensions_multiply(p3, [(0, 1)])


def test_extensions_multiply_rejects_existing_multiedge():
    m = Multigraph.from_simple_edges(3, [(0, 1), (0, 1), (1, 2), (2, 0)])
    with pytest.raises(MultigraphError):
        extensions_multiply(m, [(0, 1)])


def test_extensions_multiply_c4():
    c4 = _cycle(4)
    out = extensions_multiply(c4, list(c4.simple_nonpendant_edges()))
    assert len(out) == 1  # all four doublings are isomorphic
    assert out[0].mult(*next(iter(out[0].edge_items()))[0]) in (1, 2)
    assert any(out[0].mult(x, y) == 2 for (x, y), _ in out[0].edge_items())


def test_pruned_subset_of_full_and_complement_gate_dead():
    for m in (_cycle(7), _cycle(8)):
        full = {canonical_form(g): g for g in extensions_add(m, range(m.n))}
        pruned = {canonical_form(g) for g in extensions_add_pruned(m, range(m.n))}
        assert pruned <= set(full)
        for c, g in full.items():
            if c not in pruned:
                ok, wit = conditions.check_gate(g)
                assert not ok, "pruned child must be gate-dead"


# -- attachment-set enumeration ------------------------------------------


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_attachment_sets_by_size_matches_unordered(data):
    n = data.draw(st.integers(min_value=3, max_value=7))
    pairs = list(itertools.combinations(range(n), 2))
    edges = data.draw(st.sets(st.sampled_from(pairs), min_size=n - 1))
    m = Multigraph.from_simple_edges(n, sorted(edges))
    u = data.draw(st.sets(st.integers(min_value=0, max_value=n - 1), min_size=1))
    by_size = list(_attachment_sets_by_size(m, set(u)))
    unordered = set(_add_attachment_sets(m, set(u)))
    assert set(by_size) == unordered
    sizes = [len(s) for s in by_size]
    assert sizes == sorted(sizes), "sets must come in increasing-size order"


def test_attachment_sets_dead_pruning_skips_supersets():
    c6 = _cycle(6)
    dead = []
    seen = []
    for s in _attachment_sets_by_size(c6, set(range(6)), dead):
        seen.append(s)
        if s == (0,):
            dead.append(frozenset([0]))
    assert (0,) in seen
    for s in seen[seen.index((0,)) + 1:]:
        assert 0 not in s, "supersets of a dead set must be skipped"


def test_pendant_closure():
    # path 0-1-2 with pendant 3 at 1
    m = Multigraph.from_simple_edges(4, [(0, 1), (1, 2), (1, 3)])
    assert _pendant_closure(m, {1}) == {0, 1, 2, 3}
    assert _pendant_closure(m, {2}) == {2}


# -- seeds ----------------------------------------------------------------


def test_seed_counts():
    s = seeds()
    assert len(s) == 426
    by_n = {}
    for m in s:
        by_n[m.n] = by_n.get(m.n, 0) + 1
    assert by_n == {7: 383, 8: 35, 9: 5, 10: 3}


def test_seeds_distinct_with_min_degree_two():
    s = seeds()
    forms = {canonical_form(m) for m in s}
    assert len(forms) == len(s)
    for m in s:
        assert all(m.degree(v) >= 2 for v in range(m.n))
        assert m.is_simple()


def test_seeds_no_intermediate_length_cycles():
    # seeds are C_n plus chords; no cycle of length 7..n-1 may appear
    for m in seeds()[:60]:
        for length in range(7, m.n):
            assert not m.chordless_cycles(length)


# -- solution attempts ----------------------------------------------------


def test_attempt_options_smoke_condition_6():
    c7 = _cycle(7)
    viol = conditions.violated_conditions(c7)
    assert 6 in viol
    opts = attempt_options(c7, 6, viol[6])
    assert len(opts) == 1
    _wit, branch, leaf_free = opts[0]
    assert leaf_free
    assert branch, "C7 has nonempty solution attempts for condition (6)"


def test_get_all_solution_attempts_errors_when_not_violated():
    c7 = _cycle(7)
    viol = conditions.violated_conditions(c7)
    missing = next(p for p in range(6, 15) if p not in viol)
    with pytest.raises(MultigraphError):
        get_all_solution_attempts(c7, missing)


def test_attempt_options_raw_specs_regenerate_children():
    c7 = _cycle(7)
    viol = conditions.violated_conditions(c7)
    opts = attempt_options(c7, 6, viol[6], raw=True)
    from gamma3.search import _apply_action, _spec_actions

    _wit, spec, _lf = opts[0]
    children = [
        _apply_action(c7, a)
        for a in _spec_actions(c7, spec)
    ]
    children = [c for c in children if c is not None]
    lazy = {canonical_form(c) for c in children}
    eager = {canonical_form(g) for g in get_all_solution_attempts(c7, 6)}
    assert eager <= lazy


# -- the engine ------------------------------------------------------------


def test_investigate_gate_dead_seed_closes_immediately():
    arch = investigate(seeds()[0], SearchConfig())
    assert arch.complete
    assert not arch.members
    assert arch.stats["open"] == 0 and arch.stats["gate-fail"] == 1


def test_investigate_small_seed_terminates():
    s = seeds()
    live = next(m for m in s if conditions.check_gate(m)[0])
    arch = investigate(live, SearchConfig(budget=300.0))
    assert arch.complete
    assert arch.stats["open"] == arch.stats["close"]
    for g in arch.members.values():
        assert conditions.check_gate(g)[0]
        assert not conditions.violated_conditions(g)


def test_investigate_policy_invariance_single_seed():
    s = seeds()
    live = [m for m in s if conditions.check_gate(m)[0]]
    a = investigate(live[0], SearchConfig(policy="lexmin", budget=300.0))
    b = investigate(live[0], SearchConfig(policy="random", seed=42, budget=300.0))
    assert a.complete and b.complete
    assert set(a.members) == set(b.members)


def test_investigate_trace_lines():
    arch = investigate(seeds()[0], SearchConfig(trace=True))
    assert any("gate-fail" in ln for ln in arch.trace_lines)
