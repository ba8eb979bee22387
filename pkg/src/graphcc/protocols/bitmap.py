"""Deliberately naive adjacency-bitmap protocols (Euler tour, triangle)."""
from __future__ import annotations

from itertools import combinations

from ..comm import ALICE, BOB, Recv, Send
from ..graph import Graph, has_triangle, is_eulerian


def pair_index(n: int):
    """Canonical order of unordered pairs ``(a, b), a < b``."""
    return list(combinations(range(n), 2))


def edges_to_bitmap(n: int, edges) -> str:
    return "".join("1" if p in edges else "0" for p in pair_index(n))


def bitmap_to_edges(n: int, bits: str) -> frozenset:
    return frozenset(p for p, b in zip(pair_index(n), bits) if b == "1")


def euler_trivial(view):
    n = view.n_vertices
    if n < 2:
        raise ValueError("protocol needs at least 2 vertices")
    size = n * (n - 1) // 2
    if view.role is ALICE:
        yield Send(edges_to_bitmap(n, view.edges), label="bitmap")
        return (yield Recv(1)) == "1"
    theirs = bitmap_to_edges(n, (yield Recv(size)))
    answer = is_eulerian(Graph(n, theirs | view.edges))
    yield Send("1" if answer else "0", label="answer")
    return answer


def completion_set(n: int, edges) -> frozenset:
    """Pairs {a, b} that would close a triangle with two edges of ``edges``."""
    adj = Graph(n, edges).adjacency
    out = set()
    for c in range(n):
        out.update(combinations(adj[c], 2))
    return frozenset(out)


def triangle(view):
    """Local checks first (one bit each), then each side ships the bitmap of
    pairs that would complete one of its paths of length two and the other
    answers whether it holds such an edge."""
    n = view.n_vertices
    if n < 3:
        raise ValueError("protocol needs at least 3 vertices")
    size = n * (n - 1) // 2
    for checker in (ALICE, BOB):
        if view.role is checker:
            found = has_triangle(Graph(n, view.edges))
            yield Send("1" if found else "0", label="local")
        else:
            found = (yield Recv(1)) == "1"
        if found:
            return True
    for owner in (ALICE, BOB):
        if view.role is owner:
            yield Send(edges_to_bitmap(n, completion_set(n, view.edges)), label="completion")
            hit = (yield Recv(1)) == "1"
        else:
            wanted = bitmap_to_edges(n, (yield Recv(size)))
            hit = bool(wanted & view.edges)
            yield Send("1" if hit else "0", label="answer")
        if hit:
            return True
    return False
