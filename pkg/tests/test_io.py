import random

import pytest
from hypothesis import given

from graphcc.generators import gnp
from graphcc.graph import ArcPartition, DiGraph, EdgePartition, Graph
from graphcc.io import (
    FormatError, read_arc_partition, read_digraph, read_graph, read_partition, to_dot,
    write_arc_partition, write_digraph, write_graph, write_partition,
)
from graphcc.reductions import build_det_instance, build_ip_connectivity

from test_graph import partitions


def test_graph_format_is_exact(tmp_path):
    p = tmp_path / "g.txt"
    write_graph(Graph(4, [(2, 1), (0, 3)]), p)
    assert p.read_text() == "4 2\n0 3\n1 2\n"


def test_partition_format_is_exact(tmp_path):
    p = tmp_path / "p.txt"
    write_partition(EdgePartition(3, [(0, 1), (1, 2)], [(1, 2)]), p)
    assert p.read_text() == "3 2\n0 1 A\n1 2 AB\n"


def test_round_trips(tmp_path):
    g = gnp(15, 0.3, random.Random(1))
    write_graph(g, tmp_path / "g")
    assert read_graph(tmp_path / "g") == g
    inst = build_ip_connectivity((1, 0, 1), (0, 1, 1))
    write_partition(inst.partition, tmp_path / "p")
    back = read_partition(tmp_path / "p")
    assert (back.edges_a, back.edges_b) == (inst.partition.edges_a, inst.partition.edges_b)
    d = DiGraph(3, [(0, 1), (1, 1), (2, 0)])
    write_digraph(d, tmp_path / "d")
    assert read_digraph(tmp_path / "d").arcs == d.arcs
    ap = build_det_instance(((0, 1), (1, 0)), ((1, 1), (0, 0))).partition
    write_arc_partition(ap, tmp_path / "a")
    back = read_arc_partition(tmp_path / "a")
    assert (back.arcs_a, back.arcs_b) == (ap.arcs_a, ap.arcs_b)


@given(partitions())
def test_partition_round_trip_property(tmp_path_factory, p):
    path = tmp_path_factory.mktemp("rt") / "p.txt"
    write_partition(p, path)
    back = read_partition(path)
    assert back.n_vertices == p.n_vertices
    assert (back.edges_a, back.edges_b) == (p.edges_a, p.edges_b)


def test_comments_and_blank_lines_are_skipped(tmp_path):
    p = tmp_path / "g"
    p.write_text("# a path\n3 2\n\n0 1\n# middle\n1 2\n")
    assert read_graph(p).edges == {(0, 1), (1, 2)}


@pytest.mark.parametrize("text", [
    "", "3\n", "3 2\n0 1\n", "3 1\n0 x\n", "3 1\n0 1 2\n", "3 1\n0 3\n", "3 1\n1 1\n",
])
def test_malformed_graphs(tmp_path, text):
    p = tmp_path / "bad"
    p.write_text(text)
    with pytest.raises(FormatError):
        read_graph(p)


@pytest.mark.parametrize("text", ["3 1\n0 1\n", "3 1\n0 1 C\n", "3 2\n0 1 A\n1 0 B\n"])
def test_malformed_partitions(tmp_path, text):
    p = tmp_path / "bad"
    p.write_text(text)
    with pytest.raises(FormatError):
        read_partition(p)


def test_dot_output():
    text = to_dot(EdgePartition(3, [(0, 1)], [(1, 2)]), {0: "t_1", 1: "t_2", 2: "t_3"})
    assert text.startswith("graph G {")
    assert '  0 [label="t_1"];' in text
    assert '  0 -- 1 [owner="A"];' in text and '  1 -- 2 [owner="B"];' in text
    d = to_dot(DiGraph(2, [(1, 0)]), name="H")
    assert d.startswith("digraph H {") and "  1 -> 0;" in d
    a = to_dot(ArcPartition(2, [(0, 1)], [(0, 1)]))
    assert '0 -> 1 [owner="AB"]' in a
