"""Pattern matcher vs brute-force oracle; flat-mode multiplicity semantics."""
import random

from hypothesis import given, settings, strategies as st

from gamma3.multigraph import Multigraph
from gamma3 import match, patterns

from conftest import random_multigraph


def _emb_keyset(pat, embs):
    return {match._dedup_key(match._as_pattern(pat), e) for e in embs}


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 9),
       st.sampled_from(["subgraph", "flat", "induced"]))
def test_matcher_agrees_with_brute_force(seed, mode):
    rng = random.Random(seed)
    host = random_multigraph(rng, n_max=6, mu_max=1 if mode == "induced" else 2,
                             connected=False)
    pat = rng.choice([patterns.claw(), patterns.path(3), patterns.triangle(),
                      patterns.path(4), patterns.diamond()])
    fast = list(match.find_embeddings(host, pat, mode))
    slow = match.brute_force_embeddings(host, pat, mode)
    key = lambda e: tuple(sorted(e.items()))
    assert sorted(map(key, fast)) == sorted(map(key, slow))


def test_flat_mode_multiplicities():
    # flat: a multiplicity-1 pattern edge matches any host multiplicity >= 1,
    # a multiplicity-k (k >= 2) pattern edge matches exactly k copies
    host = Multigraph.build(2, [(0, 1, 3)])
    single = Multigraph.build(2, [(0, 1, 1)])
    dbl = Multigraph.build(2, [(0, 1, 2)])
    tpl = Multigraph.build(2, [(0, 1, 3)])
    assert match.has_embedding(host, single, "flat")
    assert not match.has_embedding(host, dbl, "flat")
    assert match.has_embedding(host, tpl, "flat")
    # subgraph mode only needs <=
    assert match.has_embedding(host, dbl, "subgraph")


def test_flat_is_transitive_on_examples():
    # if P flat-embeds in Q and Q flat-embeds in H then P flat-embeds in H
    rng = random.Random(7)
    found = 0
    while found < 10:
        h = random_multigraph(rng, n_max=6, mu_max=3, connected=True)
        q = random_multigraph(rng, n_max=4, mu_max=3, connected=True)
        p = random_multigraph(rng, n_max=3, mu_max=3, connected=True)
        if match.has_embedding(q, p, "flat") and match.has_embedding(h, q, "flat"):
            assert match.has_embedding(h, p, "flat")
            found += 1


def test_induced_differs_from_subgraph():
    k4 = Multigraph.complete(4)
    c4 = Multigraph.cycle(4)
    assert match.has_embedding(k4, c4, "subgraph")
    assert not match.has_embedding(k4, c4, "induced")


def test_find_all_symmetry_dedup():
    # K1,3 in K1,3: leaves are a role group, so exactly one witness remains
    claw = patterns.claw()
    embs = match.find_all(claw.graph, claw, "subgraph")
    assert len(embs) == 1
    # without role groups, a bare-path pattern in C4 keeps distinct images
    c4 = Multigraph.cycle(4)
    p3 = patterns.path(3)
    embs = match.find_all(c4, p3, "subgraph")
    images = {frozenset(e.values()) for e in embs}
    assert len(images) == 4


def test_counts_on_known_hosts():
    k4 = Multigraph.complete(4)
    tri_embs = match.brute_force_embeddings(k4, patterns.triangle(), "subgraph")
    assert len(tri_embs) == 24  # 4 triangles x 3! labelings
    c5 = Multigraph.cycle(5)
    assert not match.has_embedding(c5, patterns.triangle(), "subgraph")
