"""Alternating-frontier 2-coloring.

On its turn the active party takes every vertex colored since its last
turn, propagates colors through its own edges until nothing changes, and
announces each newly colored vertex as ``1 | vertex | color``, closing the
list with ``0``. A component is finished when a turn leaves the next party
nothing to expand; Alice then seeds the lowest uncolored vertex red.

A party that finds one of its edges joining two same-colored vertices
announces that already-colored endpoint with the opposite color; the
receiver recognises the repeat and both stop with ``False``.
"""
from __future__ import annotations

from collections import deque

from ..comm import ALICE, ProtocolViolation, Recv, Send, dec, enc, vertex_width

RED, BLUE = 0, 1


def _expand(adj, color, pending):
    """Closure of the coloring over one party's edges.

    Returns ``(newly_colored, conflict_vertex)``.
    """
    queue = deque(sorted(pending))
    new: list[int] = []
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if color[u] is None:
                color[u] = 1 - color[v]
                new.append(u)
                queue.append(u)
            elif color[u] == color[v]:
                return new, u
    return new, None


def bipartiteness(view):
    n = view.n_vertices
    if n < 1:
        raise ValueError("protocol needs at least 1 vertex")
    w = vertex_width(n)
    adj = view.adjacency
    color: list[int | None] = [None] * n
    speaker = ALICE
    pending: set[int] = set()   # colored vertices the speaker has not expanded yet
    while True:
        seeded = None
        if not pending:
            if all(c is not None for c in color):
                return True
            if speaker is not ALICE:
                speaker = ALICE
            seeded = color.index(None)
            color[seeded] = RED
            pending = {seeded}
        if view.role is speaker:
            new, conflict = _expand(adj, color, pending)
            for v in new:
                yield Send("1" + enc(v, w) + str(color[v]), label="color")
            if conflict is not None:
                yield Send("1" + enc(conflict, w) + str(1 - color[conflict]), label="conflict")
                return False
            yield Send("0", label="end-list")
        else:
            new = []
            while (yield Recv(1)) == "1":
                v = dec((yield Recv(w))) if w else 0
                c = int((yield Recv(1)))
                if v >= n:
                    raise ProtocolViolation(f"vertex {v} out of range")
                if color[v] is not None:
                    return False
                color[v] = c
                new.append(v)
        # the seed was expanded by the speaker only
        pending = set(new) if seeded is None else set(new) | {seeded}
        speaker = speaker.other
