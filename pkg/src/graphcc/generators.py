"""Seeded random graph families for benches and tests."""
from __future__ import annotations

import math
import random

from .graph import Graph, norm_edge


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def bipartite_gnp(n_left: int, n_right: int, p: float, rng: random.Random) -> tuple[Graph, range]:
    """Left side ``0..n_left-1``, right side after it."""
    n = n_left + n_right
    edges = [(u, v) for u in range(n_left) for v in range(n_left, n) if rng.random() < p]
    return Graph(n, edges), range(n_left)


def connectivity_p(n: int) -> float:
    """Edge density 2 ln n / n used for connectivity-type benches."""
    return min(1.0, 2 * math.log(n) / n)


def random_cycle_union(n: int, cycles: int, rng: random.Random) -> Graph:
    """Symmetric difference of random cycles: every degree is even."""
    edges: set = set()
    for _ in range(cycles):
        k = rng.randint(3, n)
        vs = rng.sample(range(n), k)
        for a, b in zip(vs, vs[1:] + vs[:1]):
            edges ^= {norm_edge(a, b)}
    return Graph(n, edges)


def random_instance_graph(protocol: str, n: int, rng: random.Random) -> tuple[Graph, dict]:
    """A graph of size ``n`` mixing yes- and no-instances for ``protocol``.

    Returns the graph and the extra protocol parameters (``left_set`` for
    matching).
    """
    if protocol == "matching-hk":
        half = n // 2
        p = rng.choice([1.5 / half, 2.5 / half, 0.3, 0.5])
        g, left = bipartite_gnp(half, n - half, min(p, 1.0), rng)
        return g, {"left_set": left}
    if protocol == "euler-trivial":
        g = random_cycle_union(n, rng.randint(1, 4), rng)
        if rng.random() < 0.3:
            g = Graph(n, g.edges ^ {norm_edge(*rng.sample(range(n), 2))})
        return g, {}
    if protocol == "bipartite":
        if rng.random() < 0.5:
            g, _ = bipartite_gnp(n // 2, n - n // 2, 2.5 / n, rng)
            perm = rng.sample(range(n), n)
            g = Graph(n, [(perm[u], perm[v]) for u, v in g.edges])
            if rng.random() < 0.3:
                g = Graph(n, g.edges | {norm_edge(*rng.sample(range(n), 2))})
            return g, {}
        return gnp(n, rng.choice([0.5, 1.0, 1.5]) / n, rng), {}
    if protocol == "triangle":
        return gnp(n, rng.choice([0.5, 1.0, 1.5, 2.5]) / n, rng), {}
    # connectivity, spanning-forest
    return gnp(n, rng.choice([0.5, 1.0, 2.0]) * connectivity_p(n), rng), {}
