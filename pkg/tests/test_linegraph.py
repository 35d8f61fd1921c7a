"""Line graph construction, recognition, preimage, and the Gamma3 scan."""
import random

import pytest
from hypothesis import given, settings, strategies as st

from gamma3.multigraph import Multigraph, MultigraphError
from gamma3.canon import is_isomorphic
from gamma3 import linegraph, patterns
from gamma3.linegraph import (gamma3_free, gamma3_free_via_line_graph,
                              gamma3_free_via_subgraphs, gamma3_witness,
                              line_graph, preimage)

from conftest import random_multigraph


def test_line_graph_examples():
    # L(K3) = K3 = L(K1,3)
    k3 = Multigraph.complete(3)
    claw = patterns.claw().graph
    assert is_isomorphic(line_graph(k3), k3)
    assert is_isomorphic(line_graph(claw), k3)
    # L(P4) = P3; L(C5) = C5
    assert is_isomorphic(line_graph(Multigraph.build(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)])),
                         Multigraph.build(3, [(0, 1, 1), (1, 2, 1)]))
    assert is_isomorphic(line_graph(Multigraph.cycle(5)), Multigraph.cycle(5))
    # a double edge becomes an adjacent vertex pair
    d = Multigraph.build(2, [(0, 1, 2)])
    assert is_isomorphic(line_graph(d), Multigraph.build(2, [(0, 1, 1)]))


def test_line_graph_invariants(rng):
    for _ in range(25):
        h = random_multigraph(rng, n_max=7, mu_max=2, connected=True)
        g, copies = linegraph.line_graph_with_map(h)
        assert g.n == h.num_edge_copies()
        # handshake: |E(L(H))| = sum_v C(deg v, 2) - multiplicity corrections
        expect = 0
        for i, (u1, v1) in enumerate(copies):
            for j in range(i + 1, len(copies)):
                u2, v2 = copies[j]
                if u1 in (u2, v2) or v1 in (u2, v2):
                    expect += 1
        assert g.num_edge_copies() == expect
        assert g.is_simple()


def test_recognition(rng):
    # every line graph is recognized; the claw never is
    for _ in range(15):
        h = random_multigraph(rng, n_max=6, mu_max=2, connected=True)
        g = line_graph(h)
        ok, _w = linegraph.is_line_graph_of_multigraph(g)
        assert ok
    ok, wit = linegraph.is_line_graph_of_multigraph(patterns.claw().graph)
    assert not ok and wit is not None


def test_preimage_round_trip(rng):
    done = 0
    while done < 20:
        h = random_multigraph(rng, n_max=6, mu_max=2, connected=True)
        if h.num_edge_copies() < 1:
            continue
        g = line_graph(h)
        back = preimage(g)
        assert is_isomorphic(line_graph(back), g)
        done += 1


def test_preimage_rejects_claw():
    with pytest.raises(MultigraphError):
        preimage(patterns.claw().graph)


def test_gamma3_known_hosts():
    # the three obstruction preimages themselves fail the scan
    for pat in patterns.gamma3_preimages():
        assert not gamma3_free(pat.graph)
        kind, _roles = gamma3_witness(pat.graph)
        assert kind in ("F1", "F2", "F3")
    # small graphs without a decorated 5-path pass
    assert gamma3_free(Multigraph.cycle(9))
    assert gamma3_free(patterns.wagner().graph)
    assert not gamma3_free(patterns.wagner_plus().graph)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 9))
def test_gamma3_scan_vs_oracles(seed):
    rng = random.Random(seed)
    h = random_multigraph(rng, n_max=7, mu_max=2, connected=True)
    fast = gamma3_free(h)
    assert fast == gamma3_free_via_subgraphs(h)
    assert fast == gamma3_free_via_line_graph(h)


def test_simplicial_pendant_correspondence(rng):
    for _ in range(15):
        h = random_multigraph(rng, n_max=6, mu_max=2, connected=True)
        g, copies = linegraph.line_graph_with_map(h)
        pend = set(h.pendant_edges())
        for i, e in enumerate(copies):
            if tuple(sorted(e)) in pend and h.mult(*e) == 1:
                assert linegraph.is_simplicial(g, i)
