"""Distributed Hopcroft-Karp for bipartite maximum matching.

The matching ``M`` is common knowledge: every augmenting path is applied by
both parties, so matched-edge steps of either search cost nothing. Only
newly discovered vertices go on the wire.

Phase layout:

* BFS from the free left vertices. For each right-side level Alice lists
  (``1 | vertex``, closed by ``0``) the unvisited vertices she reaches via
  unmatched edges, then Bob lists the remaining ones. The next left level
  is the set of mates. The BFS stops at the first level with free right
  vertices (collected into ``F``) or when a level comes out empty, which
  ends the protocol.
* DFS from each root in ``F`` (ascending) back towards layer 0, stepping
  only to unused vertices of the previous layer. The floor holder sends
  2-bit opcodes: ``FORWARD`` + vertex id when it can extend the path with
  one of its own edges (it keeps the floor), ``BACKTRACK`` when it cannot.
  A first ``BACKTRACK`` at a vertex hands the floor to the other party; a
  second one pops the vertex (and its mate) as dead and gives the floor
  back to Alice. After each root Alice sends ``NEXT_ROOT`` or, after the
  last one, ``END_PHASE``.
"""
from __future__ import annotations

from ..comm import ALICE, BOB, ProtocolViolation, Recv, Send, dec, enc, vertex_width

FORWARD, BACKTRACK, NEXT_ROOT, END_PHASE = "00", "01", "10", "11"
OPCODE_NAMES = {FORWARD: "forward", BACKTRACK: "backtrack", NEXT_ROOT: "next-root", END_PHASE: "end-phase"}


def _list_exchange(view, speaker, items, w, n, label):
    """Speaker sends ``items``; listener decodes them. Both return the list."""
    if view.role is speaker:
        for v in items:
            yield Send("1" + enc(v, w), label=label)
        yield Send("0", label="end-list")
        return list(items)
    out = []
    while (yield Recv(1)) == "1":
        v = dec((yield Recv(w))) if w else 0
        if v >= n:
            raise ProtocolViolation(f"vertex {v} out of range")
        out.append(v)
    return out


def hopcroft_karp(view):
    n = view.n_vertices
    left = frozenset(view.params["left_set"])
    w = vertex_width(n)
    adj = view.adjacency
    for u, v in view.edges:
        if (u in left) == (v in left):
            raise ValueError(f"edge ({u},{v}) has both endpoints on one side")
    mate: dict[int, int] = {}

    while True:
        # ---- BFS layering
        layer = {x: 0 for x in sorted(left) if x not in mate}
        frontier = list(layer)
        depth = 0
        roots: list[int] = []
        while True:
            depth += 1
            reach = {y for x in frontier for y in adj[x] if y not in layer and mate.get(x) != y}
            alice_part = yield from _list_exchange(
                view, ALICE, sorted(reach) if view.role is ALICE else None, w, n, "bfs")
            seen = set(alice_part)
            bob_part = yield from _list_exchange(
                view, BOB, sorted(reach - seen) if view.role is BOB else None, w, n, "bfs")
            level = sorted(seen | set(bob_part))
            if len(level) != len(alice_part) + len(bob_part):
                raise ProtocolViolation("vertex announced twice in one BFS level")
            for y in level:
                if y in left or y in layer:
                    raise ProtocolViolation(f"invalid BFS discovery {y}")
                layer[y] = depth
            if not level:
                return len(mate) // 2
            roots = [y for y in level if y not in mate]
            if roots:
                break
            depth += 1
            frontier = [mate[y] for y in level]
            for x in frontier:
                layer[x] = depth

        # ---- layered DFS
        used: set[int] = set()
        paths: list[list[int]] = []
        for ri, root in enumerate(roots):
            stack = [root]
            floor = ALICE
            stuck: set = set()
            while stack:
                top = stack[-1]
                if view.role is floor:
                    target = next((x for x in adj[top]
                                   if layer.get(x) == layer[top] - 1 and x not in used), None)
                    if target is not None:
                        yield Send(FORWARD + enc(target, w), label="forward")
                        op = FORWARD
                    else:
                        yield Send(BACKTRACK, label="backtrack")
                        op = BACKTRACK
                else:
                    op = yield Recv(2)
                    if op == FORWARD:
                        target = dec((yield Recv(w))) if w else 0
                        if target >= n or layer.get(target) != layer[top] - 1 or target in used:
                            raise ProtocolViolation(f"illegal FORWARD to {target}")
                    elif op != BACKTRACK:
                        raise ProtocolViolation(f"unexpected opcode {OPCODE_NAMES[op]} inside DFS")
                if op == FORWARD:
                    used.add(target)
                    stack.append(target)
                    stuck = set()
                    if layer[target] == 0:
                        paths.append(stack)
                        used.update(stack)
                        stack = []
                    else:
                        stack.append(mate[target])
                        used.add(mate[target])
                elif floor.other in stuck:
                    used.add(stack.pop())
                    if stack:
                        stack.pop()
                    floor, stuck = ALICE, set()
                else:
                    stuck.add(floor)
                    floor = floor.other
            marker = END_PHASE if ri == len(roots) - 1 else NEXT_ROOT
            if view.role is ALICE:
                yield Send(marker, label=OPCODE_NAMES[marker])
            elif (yield Recv(2)) != marker:
                raise ProtocolViolation(f"expected {OPCODE_NAMES[marker]}")

        for path in paths:
            for i in range(0, len(path), 2):
                y, x = path[i], path[i + 1]
                mate[x] = y
                mate[y] = x
