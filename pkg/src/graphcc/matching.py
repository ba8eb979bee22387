"""Matching oracles: centralized Hopcroft-Karp, exact perfect-matching search,
and the randomized determinant test for bipartite perfect matchings."""
from __future__ import annotations

import random
from typing import Iterable

from .det import LOVASZ_PRIME, det_mod_p
from .graph import Graph, Matching

EXACT_PM_MAX_VERTICES = 64


def check_bipartition(g: Graph, left_set: Iterable[int]) -> frozenset[int]:
    left = frozenset(left_set)
    if any(not 0 <= v < g.n_vertices for v in left):
        raise ValueError("left_set contains vertices outside the graph")
    for u, v in g.sorted_edges():
        if (u in left) == (v in left):
            side = "left" if u in left else "right"
            raise ValueError(f"edge ({u},{v}) has both endpoints on the {side} side")
    return left


def hopcroft_karp_phases(g: Graph, left_set: Iterable[int]) -> tuple[Matching, int]:
    """Maximum matching and the number of BFS phases run (the final,
    unsuccessful one included).

    Each phase layers the graph by BFS from the free left vertices along
    alternating unmatched/matched edges, stops at the first layer holding
    free right vertices, then runs a layered DFS back from each of those to
    collect a maximal set of vertex-disjoint shortest augmenting paths.
    """
    left = check_bipartition(g, left_set)
    adj = g.adjacency
    mate: dict[int, int] = {}
    phases = 0
    while True:
        phases += 1
        layer: dict[int, int] = {x: 0 for x in sorted(left) if x not in mate}
        frontier = list(layer)
        depth = 0
        free_right: list[int] = []
        while frontier:
            depth += 1
            nxt = sorted({y for x in frontier for y in adj[x] if y not in layer and mate.get(x) != y})
            for y in nxt:
                layer[y] = depth
            free_right = [y for y in nxt if y not in mate]
            if free_right or not nxt:
                break
            depth += 1
            frontier = [mate[y] for y in nxt]
            for x in frontier:
                layer[x] = depth
        if not free_right:
            return Matching(frozenset((x, y) for x, y in mate.items() if x in left)), phases

        used: set[int] = set()

        def descend(y: int) -> list[int] | None:
            used.add(y)
            for x in adj[y]:
                if layer.get(x) != layer[y] - 1 or x in used:
                    continue
                used.add(x)
                if layer[x] == 0:
                    return [y, x]
                rest = descend(mate[x])
                if rest is not None:
                    return [y, x] + rest
            return None

        for root in free_right:
            path = descend(root)
            if path is None:
                continue
            for i in range(0, len(path), 2):
                y, x = path[i], path[i + 1]
                mate[x] = y
                mate[y] = x


def hopcroft_karp_max_matching(g: Graph, left_set: Iterable[int]) -> Matching:
    return hopcroft_karp_phases(g, left_set)[0]


def has_perfect_matching_exact(g: Graph, max_vertices: int = EXACT_PM_MAX_VERTICES) -> bool:
    """Exact perfect-matching test for general (non-bipartite) graphs.

    Branch and bound: always branch on a remaining vertex of minimum
    remaining degree (forced when that degree is 1), memoised on the
    bitmask of unmatched vertices.
    """
    n = g.n_vertices
    if n > max_vertices:
        raise ValueError(f"exact matching oracle limited to {max_vertices} vertices, got {n}")
    if n % 2:
        return False
    nbr = [0] * n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    memo: dict[int, bool] = {}

    def solve(rem: int) -> bool:
        if rem == 0:
            return True
        hit = memo.get(rem)
        if hit is not None:
            return hit
        best, best_deg = -1, n + 1
        bits = rem
        while bits:
            low = bits & -bits
            v = low.bit_length() - 1
            d = (nbr[v] & rem).bit_count()
            if d < best_deg:
                best, best_deg = v, d
                if d <= 1:
                    break
            bits ^= low
        result = False
        if best_deg > 0:
            rem_v = rem & ~(1 << best)
            cand = nbr[best] & rem
            while cand:
                low = cand & -cand
                if solve(rem_v & ~low):
                    result = True
                    break
                cand ^= low
        memo[rem] = result
        return result

    return solve((1 << n) - 1)


def lovasz_pm_test(
    g: Graph,
    left_set: Iterable[int],
    trials: int = 1,
    seed: int | str = 0,
    p: int = LOVASZ_PRIME,
) -> bool:
    """Randomized perfect-matching test for a bipartite graph.

    Substitutes uniform elements of GF(p) for the nonzero entries of the
    left-by-right biadjacency matrix and checks whether the determinant
    vanishes. One-sided: ``False`` whenever no perfect matching exists.
    """
    left = sorted(check_bipartition(g, left_set))
    right = sorted(set(range(g.n_vertices)) - set(left))
    if len(left) != len(right):
        return False
    if not left:
        return True
    col = {v: j for j, v in enumerate(right)}
    rng = random.Random(seed)
    adj = g.adjacency
    for _ in range(trials):
        m = [[0] * len(right) for _ in left]
        for i, x in enumerate(left):
            for y in adj[x]:
                m[i][col[y]] = rng.randrange(p)
        if det_mod_p(m, p):
            return True
    return False
