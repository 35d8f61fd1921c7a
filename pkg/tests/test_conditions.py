"""Gate and conditions (1)-(14): witnesses, known verdicts, incremental gate."""
import random

from hypothesis import given, settings, strategies as st

from gamma3.multigraph import Multigraph
from gamma3 import conditions, patterns
from gamma3.conditions import (check, check_all, check_gate, check_gate_child,
                               violations)

from conftest import random_multigraph


def test_gate_witnesses():
    # diamond
    d = patterns.diamond().graph
    ok, wit = check_gate(d)
    assert not ok and wit[0] == "D"
    # flat C9M
    c9m = patterns.c9m().graph
    ok, wit = check_gate(c9m)
    assert not ok and wit[0] == "C9M"
    # Gamma3 preimages
    for pat in patterns.gamma3_preimages():
        ok, wit = check_gate(pat.graph)
        assert not ok and wit[0] == "gamma3"
    # clean hosts pass
    assert check_gate(Multigraph.cycle(9))[0]
    assert check_gate(patterns.wagner().graph)[0]


def test_c9m_gate_needs_exact_multiplicities():
    # tripling one of the doubled edges breaks the flat pattern
    g = patterns.c9m().graph.with_edge(0, 1)
    assert g.mult(0, 1) == 3
    assert conditions.c9m_flat_witness(g) is None


def test_condition_violation_examples():
    w = patterns.wagner().graph
    # W passes the gate and all conditions except (6) (only 8 vertices
    # of degree >= 3)
    assert check_gate(w)[0]
    report = check_all(w)
    failing = [k for k, (ok, _w) in report.conditions.items() if not ok]
    assert failing == [6]

    # (1): three leaves at one vertex
    g = Multigraph.build(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)])
    assert violations(g, 1)
    # (2): multiplicity > 2
    assert violations(Multigraph.build(2, [(0, 1, 3)]), 2)
    # (3): no C7..C10
    assert violations(Multigraph.cycle(6), 3)
    assert not violations(Multigraph.cycle(7), 3)
    # (4)/(5) mirror the gate
    assert violations(patterns.diamond().graph, 4)
    assert violations(patterns.c9m().graph, 5)
    # (9): triangle vertex with simple degree 2
    tri = Multigraph.complete(3)
    assert violations(tri, 9)
    # (11): K2,4 with all spokes of simple degree 2
    k24 = patterns.complete_bipartite(2, 4).graph
    assert violations(k24, 11)


def test_condition_14_needs_doubled_spokes():
    # K2,4 with every spoke doubled on one side and no outside neighbours
    g = patterns.k2r_multi([(i, 0) for i in range(4)]).graph
    wits = violations(g, 14)
    assert wits
    # attaching an edge between two spokes gives a degree >= 2 vertex in
    # the union of outside neighbourhoods
    g2 = g.with_vertex([2, 3]).with_vertex([g.n])
    assert not violations(g2, 14)


def test_membership_report_is_pure():
    g = patterns.wagner().graph
    r1 = check_all(g)
    r2 = check_all(g)
    assert r1.gate == r2.gate and r1.conditions == r2.conditions


def _random_gate_passing(rng):
    while True:
        m = random_multigraph(rng, n_max=7, mu_max=2, connected=True)
        if check_gate(m)[0]:
            return m


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 9))
def test_incremental_gate_matches_full(seed):
    # children of a gate-passing graph: the local child gate must agree
    # with the global gate
    rng = random.Random(seed)
    m = _random_gate_passing(rng)
    if rng.random() < 0.5:
        k = rng.randint(1, min(3, m.n))
        s = tuple(rng.sample(range(m.n), k))
        action = ("add", s)
        child = m.with_vertex(s)
    else:
        edges = m.simple_nonpendant_edges() or [e for e, _ in m.edge_items()]
        e = rng.choice(edges)
        action = ("mult", tuple(sorted(e)))
        child = m.with_edge(*e)
    assert check_gate_child(child, action)[0] == check_gate(child)[0]
