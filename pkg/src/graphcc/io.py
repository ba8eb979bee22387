"""Edge-list, partition and DOT formats.

Graph file: first line ``n m``, then ``m`` lines ``u v`` (``u < v``, sorted).
Partition file: same header, lines ``u v A|B|AB``. Arc files use the same
layout with ordered pairs (self-loops allowed).
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Mapping

from .graph import ArcPartition, DiGraph, EdgePartition, Graph

OWNERS = ("A", "B", "AB")


class FormatError(ValueError):
    pass


def _write(path, lines: Iterable[str]) -> None:
    Path(path).write_text("".join(line + "\n" for line in lines))


def _rows(path) -> tuple[int, list[tuple[int, list[str]]]]:
    lines = [(i + 1, ln.split()) for i, ln in enumerate(Path(path).read_text().splitlines())]
    lines = [(no, toks) for no, toks in lines if toks and not toks[0].startswith("#")]
    if not lines:
        raise FormatError(f"{path}: empty file")
    no, head = lines[0]
    try:
        n, m = map(int, head)
    except ValueError:
        raise FormatError(f"{path}:{no}: header must be 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"{path}: header announces {m} edges, found {len(body)}")
    return n, body


def _pair(path, no: int, toks: list[str]) -> tuple[int, int]:
    try:
        return int(toks[0]), int(toks[1])
    except (ValueError, IndexError):
        raise FormatError(f"{path}:{no}: malformed line {' '.join(toks)!r}") from None


def graph_lines(g: Graph) -> list[str]:
    return [f"{g.n_vertices} {len(g.edges)}"] + [f"{u} {v}" for u, v in g.sorted_edges()]


def write_graph(g: Graph, path) -> None:
    _write(path, graph_lines(g))


def read_graph(path) -> Graph:
    n, body = _rows(path)
    edges = []
    for no, toks in body:
        if len(toks) != 2:
            raise FormatError(f"{path}:{no}: expected 'u v'")
        edges.append(_pair(path, no, toks))
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None


def partition_lines(p: EdgePartition) -> list[str]:
    edges = sorted(p.edges_a | p.edges_b)
    return [f"{p.n_vertices} {len(edges)}"] + [f"{u} {v} {p.owner((u, v))}" for u, v in edges]


def write_partition(p: EdgePartition, path) -> None:
    _write(path, partition_lines(p))


def _split_owned(path, body, directed: bool = False):
    a, b = [], []
    seen = set()
    for no, toks in body:
        if len(toks) != 3 or toks[2] not in OWNERS:
            raise FormatError(f"{path}:{no}: expected 'u v A|B|AB'")
        e = _pair(path, no, toks)
        key = e if directed else tuple(sorted(e))
        if key in seen:
            raise FormatError(f"{path}:{no}: {e[0]} {e[1]} listed twice (use owner AB)")
        seen.add(key)
        if "A" in toks[2]:
            a.append(e)
        if "B" in toks[2]:
            b.append(e)
    return a, b


def read_partition(path) -> EdgePartition:
    n, body = _rows(path)
    a, b = _split_owned(path, body)
    try:
        return EdgePartition(n, a, b)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None


def digraph_lines(d: DiGraph) -> list[str]:
    return [f"{d.n_vertices} {len(d.arcs)}"] + [f"{u} {v}" for u, v in sorted(d.arcs)]


def write_digraph(d: DiGraph, path) -> None:
    _write(path, digraph_lines(d))


def read_digraph(path) -> DiGraph:
    n, body = _rows(path)
    return DiGraph(n, [_pair(path, no, toks) for no, toks in body])


def arc_partition_lines(p: ArcPartition) -> list[str]:
    arcs = sorted(p.arcs_a | p.arcs_b)
    return [f"{p.n_vertices} {len(arcs)}"] + [f"{u} {v} {p.owner((u, v))}" for u, v in arcs]


def write_arc_partition(p: ArcPartition, path) -> None:
    _write(path, arc_partition_lines(p))


def read_arc_partition(path) -> ArcPartition:
    n, body = _rows(path)
    a, b = _split_owned(path, body, directed=True)
    return ArcPartition(n, a, b)


def to_dot(obj, roles: Mapping[int, str] | None = None, name: str = "G") -> str:
    """DOT text for a Graph, DiGraph, EdgePartition or ArcPartition.

    Role labels become node ``label`` attributes; partition owners become an
    ``owner`` edge attribute.
    """
    directed = isinstance(obj, (DiGraph, ArcPartition))
    if isinstance(obj, EdgePartition):
        items = [(e, obj.owner(e)) for e in sorted(obj.edges_a | obj.edges_b)]
    elif isinstance(obj, ArcPartition):
        items = [(a, obj.owner(a)) for a in sorted(obj.arcs_a | obj.arcs_b)]
    elif isinstance(obj, DiGraph):
        items = [(a, None) for a in sorted(obj.arcs)]
    else:
        items = [(e, None) for e in obj.sorted_edges()]
    arrow = "->" if directed else "--"
    out = [f"{'digraph' if directed else 'graph'} {name} {{"]
    for v in range(obj.n_vertices):
        label = (roles or {}).get(v)
        out.append(f'  {v} [label="{label}"];' if label else f"  {v};")
    for (u, v), owner in items:
        out.append(f"  {u} {arrow} {v}" + (f' [owner="{owner}"];' if owner else ";"))
    out.append("}")
    return "\n".join(out) + "\n"
