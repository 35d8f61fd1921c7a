"""Local completion, eligibility, closure fixpoint, feasibility."""
import pytest

from gamma3.multigraph import Multigraph, MultigraphError
from gamma3.canon import is_isomorphic
from gamma3 import closure, patterns
from gamma3.closure import (claw_witness, eligible_vertices, is_eligible,
                            is_feasible, local_completion, locally_k_connected,
                            ryjacek_closure)


def test_claw_witness():
    assert claw_witness(patterns.claw().graph) is not None
    assert claw_witness(Multigraph.complete(4)) is None
    assert claw_witness(Multigraph.cycle(5)) is None


def test_local_completion():
    # completing the hub of a wheel yields hub + complete rim
    w5 = patterns.wheel(5)
    hub = w5.role_vertex("hub")
    g = local_completion(w5.graph, hub)
    rim = [v for v in g.vertices() if v != hub]
    assert all(g.has_edge(a, b) for i, a in enumerate(rim) for b in rim[i + 1:])
    # already-simplicial vertex: no change
    k4 = Multigraph.complete(4)
    assert local_completion(k4, 0) == k4
    with pytest.raises(MultigraphError):
        local_completion(Multigraph.build(2, [(0, 1, 2)]), 0)


def test_eligibility():
    # C5: every neighbourhood is two nonadjacent vertices -> disconnected
    c5 = Multigraph.cycle(5)
    assert eligible_vertices(c5) == set()
    # K4 minus an edge is claw-free; the two degree-3 vertices have a
    # connected noncomplete neighbourhood (P3)
    d = patterns.diamond().graph
    a, b = patterns.diamond().role_vertex("a"), patterns.diamond().role_vertex("b")
    assert eligible_vertices(d) == {a, b}
    assert is_eligible(d, a) and not is_eligible(d, 2)


def test_closure_fixpoint():
    d = patterns.diamond().graph
    closed, trace = ryjacek_closure(d)
    assert trace  # at least one completion happened
    assert is_isomorphic(closed, Multigraph.complete(4))
    # closure of a closed graph is itself
    again, trace2 = ryjacek_closure(closed)
    assert trace2 == [] and again == closed
    # closure rejects graphs with claws
    with pytest.raises(MultigraphError):
        ryjacek_closure(patterns.claw().graph)


def test_closure_preserves_vertex_count_and_grows_edges():
    g = patterns.p6_squared().graph
    closed, _trace = ryjacek_closure(g)
    assert closed.n == g.n
    assert closed.num_edge_copies() >= g.num_edge_copies()


def test_locally_k_connected():
    k5 = Multigraph.complete(5)
    assert locally_k_connected(k5, 0, 2)
    c5 = Multigraph.cycle(5)
    assert not locally_k_connected(c5, 0, 1)


def test_feasibility():
    # C6^2-ish: take C5 (not Hamilton-connected); vertex 0 has
    # neighbourhood {1, 4}, nonadjacent -> nonsimplicial; completing adds
    # edge (1,4); the result is still not Hamilton-connected
    c5 = Multigraph.cycle(5)
    assert is_feasible(c5, 0)
    # feasibility is undefined on Hamilton-connected graphs
    with pytest.raises(MultigraphError):
        is_feasible(Multigraph.complete(4), 0)
    # and at simplicial vertices (C6 vertex 0 stays nonsimplicial after
    # adding the chord, so make vertex 1 simplicial instead)
    c6 = Multigraph.cycle(6).with_edge(0, 2)
    with pytest.raises(MultigraphError):
        is_feasible(c6, 1)


def test_closure_obstruction_free():
    ok, name = closure.closure_obstruction_free(Multigraph.complete(5))
    assert ok and name is None
    ok, name = closure.closure_obstruction_free(patterns.p6_squared().graph)
    assert not ok and name == "P6^2"
