import random

import pytest

from gamma3.multigraph import Multigraph


def random_multigraph(rng: random.Random, n_max: int = 10, mu_max: int = 3,
                      connected: bool = False, p: float = 0.35) -> Multigraph:
    n = rng.randint(2, n_max)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, rng.randint(1, mu_max)))
    g = Multigraph.build(n, edges)
    if connected:
        comps = g.components()
        while len(comps) > 1:
            a = rng.choice(sorted(comps[0]))
            b = rng.choice(sorted(comps[1]))
            g = g.with_edge(a, b)
            comps = g.components()
    return g


@pytest.fixture
def rng():
    return random.Random(20260826)
