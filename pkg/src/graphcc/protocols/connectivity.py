"""Connectivity decision and its constructive (spanning forest) version."""
from __future__ import annotations

from ..comm import ALICE, BOB, ProtocolViolation, Recv, Send, dec, enc, vertex_width
from ..graph import UnionFind, component_labels


def _require_two(view):
    if view.n_vertices < 2:
        raise ValueError("protocol needs at least 2 vertices")


def connectivity(view):
    """Alice ships each vertex's component representative in her graph;
    Bob merges with his own components and echoes the answer bit."""
    _require_two(view)
    n = view.n_vertices
    w = vertex_width(n)
    if view.role is ALICE:
        labels = component_labels(n, view.edges)
        yield Send("".join(enc(r, w) for r in labels), label="labels")
        return (yield Recv(1)) == "1"

    raw = yield Recv(n * w)
    uf = UnionFind(n)
    for v in range(n):
        rep = dec(raw[v * w:(v + 1) * w])
        if rep >= n:
            raise ProtocolViolation(f"representative {rep} out of range")
        uf.union(v, rep)
    for u, v in sorted(view.edges):
        uf.union(u, v)
    connected = len({uf.find(v) for v in range(n)}) == 1
    yield Send("1" if connected else "0", label="answer")
    return connected


def spanning_forest(view):
    """Distributed BFS. Per level Alice lists the next-level vertices she can
    reach, then Bob lists the rest; every discovered vertex is announced once
    together with its parent. New trees are rooted at the lowest unvisited
    vertex, which both sides know without communication.

    Output: sorted tuple of forest edges ``(parent, child)``.
    """
    _require_two(view)
    n = view.n_vertices
    w = vertex_width(n)
    adj = view.adjacency
    visited = [False] * n
    forest: list[tuple[int, int]] = []
    next_root = 0
    while True:
        while next_root < n and visited[next_root]:
            next_root += 1
        if next_root == n:
            break
        visited[next_root] = True
        level = [next_root]
        while level:
            found: list[tuple[int, int]] = []
            for speaker in (ALICE, BOB):
                if view.role is speaker:
                    mine = []
                    for p in level:
                        for c in adj[p]:
                            if not visited[c]:
                                visited[c] = True
                                mine.append((c, p))
                    for c, p in mine:
                        yield Send("1" + enc(c, w) + enc(p, w), label="discover")
                    yield Send("0", label="end-list")
                else:
                    mine = []
                    while (yield Recv(1)) == "1":
                        c = dec((yield Recv(w))) if w else 0
                        p = dec((yield Recv(w))) if w else 0
                        if c >= n or visited[c] or p not in level:
                            raise ProtocolViolation(f"bad discovery ({c} from {p})")
                        visited[c] = True
                        mine.append((c, p))
                found.extend(mine)
            forest.extend((p, c) for c, p in found)
            level = sorted(c for c, _ in found)
    return tuple(sorted(forest))
