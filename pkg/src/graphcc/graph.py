"""Graph data model and centralized ground-truth predicates.

Everything here is a pure function of its arguments. Protocols and
reduction verifiers compare their answers against these.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]
Bits = tuple[int, ...]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _edge_set(n: int, edges: Iterable[Sequence[int]]) -> frozenset[Edge]:
    out = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise ValueError(f"self-loop ({u},{v}) not allowed in an undirected graph")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        out.add(norm_edge(u, v))
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n_vertices-1``."""

    n_vertices: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self):
        if self.n_vertices < 0:
            raise ValueError("n_vertices must be non-negative")
        object.__setattr__(self, "edges", _edge_set(self.n_vertices, self.edges))

    @cached_property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class DiGraph:
    """Directed graph; self-loops allowed, arcs are a set."""

    n_vertices: int
    arcs: frozenset[Edge] = frozenset()

    def __post_init__(self):
        arcs = set()
        for a in self.arcs:
            u, v = int(a[0]), int(a[1])
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"arc ({u},{v}) out of range for n={self.n_vertices}")
            arcs.add((u, v))
        object.__setattr__(self, "arcs", frozenset(arcs))

    def adjacency_matrix(self) -> list[list[int]]:
        m = [[0] * self.n_vertices for _ in range(self.n_vertices)]
        for u, v in self.arcs:
            m[u][v] = 1
        return m


@dataclass(frozen=True)
class EdgePartition:
    """Edges of one graph split between Alice (``edges_a``) and Bob (``edges_b``).

    The two sets may overlap unless ``disjoint`` is set, in which case
    overlap is rejected at construction.
    """

    n_vertices: int
    edges_a: frozenset[Edge] = frozenset()
    edges_b: frozenset[Edge] = frozenset()
    disjoint: bool = False

    def __post_init__(self):
        object.__setattr__(self, "edges_a", _edge_set(self.n_vertices, self.edges_a))
        object.__setattr__(self, "edges_b", _edge_set(self.n_vertices, self.edges_b))
        if self.disjoint and self.edges_a & self.edges_b:
            shared = sorted(self.edges_a & self.edges_b)[:3]
            raise ValueError(f"partition declared disjoint but shares edges {shared}")

    def union(self) -> Graph:
        return Graph(self.n_vertices, self.edges_a | self.edges_b)

    def owner(self, e: Edge) -> str:
        e = norm_edge(*e)
        a, b = e in self.edges_a, e in self.edges_b
        if a and b:
            return "AB"
        if a:
            return "A"
        if b:
            return "B"
        raise KeyError(e)

    def is_disjoint(self) -> bool:
        return not (self.edges_a & self.edges_b)


@dataclass(frozen=True)
class ArcPartition:
    """Directed analogue of :class:`EdgePartition` (arcs may overlap)."""

    n_vertices: int
    arcs_a: frozenset[Edge] = frozenset()
    arcs_b: frozenset[Edge] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "arcs_a", DiGraph(self.n_vertices, self.arcs_a).arcs)
        object.__setattr__(self, "arcs_b", DiGraph(self.n_vertices, self.arcs_b).arcs)

    def union(self) -> DiGraph:
        return DiGraph(self.n_vertices, self.arcs_a | self.arcs_b)

    def owner(self, a: Edge) -> str:
        in_a, in_b = a in self.arcs_a, a in self.arcs_b
        if not (in_a or in_b):
            raise KeyError(a)
        return "AB" if in_a and in_b else ("A" if in_a else "B")


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        edges = frozenset(norm_edge(*e) for e in self.edges)
        seen: set[int] = set()
        for u, v in edges:
            if u in seen or v in seen or u == v:
                raise ValueError(f"edge ({u},{v}) shares a vertex with another matching edge")
            seen.update((u, v))
        object.__setattr__(self, "edges", edges)

    @property
    def size(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def mate(self) -> dict[int, int]:
        m = {}
        for u, v in self.edges:
            m[u] = v
            m[v] = u
        return m


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # keep the smaller index as root so representatives are canonical
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def component_labels(n: int, edges: Iterable[Edge]) -> list[int]:
    """Per-vertex minimum-vertex representative of its component."""
    uf = UnionFind(n)
    for u, v in edges:
        uf.union(u, v)
    return [uf.find(v) for v in range(n)]


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by their smallest vertex."""
    blocks: dict[int, list[int]] = {}
    for v, rep in enumerate(component_labels(g.n_vertices, g.edges)):
        blocks.setdefault(rep, []).append(v)
    return [blocks[r] for r in sorted(blocks)]


def is_connected(g: Graph) -> bool:
    if g.n_vertices < 1:
        raise ValueError("connectivity is undefined on the empty vertex set")
    return len(connected_components(g)) == 1


def is_eulerian(g: Graph) -> bool:
    """Connected (ignoring isolated vertices), all degrees even, at least one edge."""
    if not g.edges:
        return False
    if any(len(nb) % 2 for nb in g.adjacency):
        return False
    labels = component_labels(g.n_vertices, g.edges)
    return len({labels[v] for v in range(g.n_vertices) if g.adjacency[v]}) == 1


def two_coloring(g: Graph) -> list[int] | None:
    """BFS 2-coloring (0/1 per vertex), or None if an odd cycle exists."""
    color = [-1] * g.n_vertices
    for root in range(g.n_vertices):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def has_triangle(g: Graph) -> bool:
    adj = [set(nb) for nb in g.adjacency]
    return any(adj[u] & adj[v] for u, v in g.edges)


def euler_circuit(g: Graph) -> list[int] | None:
    """Hierholzer's construction; returns a closed walk using every edge once, or None.

    Degree conditions are not consulted: the walk is built greedily and then
    validated, so this serves as an independent check of :func:`is_eulerian`.
    """
    if not g.edges:
        return None
    start = min(u for u, _ in g.edges)
    remaining = {v: list(reversed(nb)) for v, nb in enumerate(g.adjacency)}
    used: set[Edge] = set()
    stack = [start]
    walk: list[int] = []
    while stack:
        v = stack[-1]
        nbrs = remaining[v]
        while nbrs and norm_edge(v, nbrs[-1]) in used:
            nbrs.pop()
        if nbrs:
            u = nbrs.pop()
            used.add(norm_edge(v, u))
            stack.append(u)
        else:
            walk.append(stack.pop())
    walk.reverse()
    return walk if is_euler_circuit(g, walk) else None


def is_euler_circuit(g: Graph, walk: Sequence[int]) -> bool:
    if len(walk) != len(g.edges) + 1 or walk[0] != walk[-1]:
        return False
    steps = [norm_edge(a, b) for a, b in zip(walk, walk[1:])]
    return len(set(steps)) == len(steps) and set(steps) == set(g.edges)


# -- bit vectors --------------------------------------------------------------

def as_bits(x: Iterable[int]) -> Bits:
    out = tuple(int(b) for b in x)
    if any(b not in (0, 1) for b in out):
        raise ValueError(f"not a bit vector: {out}")
    return out


def hamming_weight(x: Iterable[int]) -> int:
    return sum(as_bits(x))


def inner_product(x: Sequence[int], y: Sequence[int]) -> int:
    """|x AND y| mod 2."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(a & b for a, b in zip(as_bits(x), as_bits(y))) % 2


def disjointness(x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return int(not any(a & b for a, b in zip(as_bits(x), as_bits(y))))


def bits_from_int(value: int, width: int) -> Bits:
    """Most significant bit first: ``bits_from_int(5, 3) == (1, 0, 1)``."""
    if value < 0 or value >= 1 << width:
        raise ValueError(f"value {value:#x} does not fit in {width} bits")
    return tuple((value >> (width - 1 - i)) & 1 for i in range(width))


def bits_to_int(bits: Sequence[int]) -> int:
    out = 0
    for b in bits:
        out = (out << 1) | b
    return out


def bit_matrix(rows: Sequence[Sequence[int]]) -> tuple[Bits, ...]:
    m = tuple(as_bits(r) for r in rows)
    if any(len(r) != len(m) for r in m):
        raise ValueError("bit matrix must be square")
    return m
