import pytest

from graphcc.cli import main
from graphcc.comm import split_edges
from graphcc.generators import bipartite_gnp
from graphcc.graph import Graph
from graphcc.io import read_arc_partition, read_digraph, read_partition, write_graph, write_partition
from graphcc.matching import hopcroft_karp_max_matching

import random


@pytest.fixture(autouse=True)
def in_tmp(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_ip_conn(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "ip-conn", "--n", "3", "--x", "0x5", "--y", "0x5", "--dot")
    assert code == 0
    assert "vertices=30" in out and "expected=IP=0" in out
    part = read_partition(tmp_path / "ip-conn-n3.txt")
    assert part.n_vertices == 30 and part.is_disjoint()
    assert (tmp_path / "ip-conn-n3.txt.dot").read_text().startswith("graph G {")


def test_gen_hex_is_msb_first(capsys):
    code, out, _ = run(capsys, "gen", "ip-conn", "--n", "3", "--x", "0x4", "--y", "0x4")
    assert code == 0 and "expected=IP=1" in out


def test_gen_parity_det(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "parity-det", "--n", "2", "--z", "0x0", "-o", "z.txt")
    assert code == 0 and "expected det=0" in out
    assert read_digraph(tmp_path / "z.txt").n_vertices == 6
    code, out, _ = run(capsys, "gen", "ip-det", "--n", "2", "--x", "f", "--y", "0", "-o", "d.txt")
    assert code == 0 and "expected det=-4" in out
    assert read_arc_partition(tmp_path / "d.txt").n_vertices == 6


def test_gen_random_is_reproducible(capsys, tmp_path):
    run(capsys, "gen", "or-ip-euler", "--n", "3", "--random", "--seed", "7", "-o", "a.txt")
    run(capsys, "gen", "or-ip-euler", "--n", "3", "--random", "--seed", "7", "-o", "b.txt")
    assert (tmp_path / "a.txt").read_bytes() == (tmp_path / "b.txt").read_bytes()


def test_gen_errors(capsys):
    code, _, err = run(capsys, "gen", "ip-conn", "--n", "3", "--x", "0x10", "--y", "0")
    assert code == 1 and "does not fit" in err
    code, _, err = run(capsys, "gen", "ip-conn", "--n", "3", "--x", "zz", "--y", "0")
    assert code == 1 and "malformed hex" in err
    code, _, err = run(capsys, "gen", "ip-conn", "--n", "3", "--x", "1")
    assert code == 1 and "--y" in err
    code, _, err = run(capsys, "gen", "ip-match", "--n", "4", "--random")
    assert code == 1


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "ip-match", "--n", "3", "--exhaustive")
    assert code == 0 and "128 cases" in out
    assert (tmp_path / "verify-ip-match-n3.csv").read_text() == (
        "kind,n,cases,mismatches,seed\nip-match,3,128,0,0\n")
    code, out, _ = run(capsys, "verify", "parity-conn", "--n", "8")
    assert code == 0 and "256 cases" in out
    code, out, _ = run(capsys, "verify", "or-ip-euler-comm", "--n", "4", "--sample", "500",
                       "--csv", "r.csv")
    assert code == 0 and (tmp_path / "r.csv").exists()


def test_verify_infeasible_and_mismatch(capsys, monkeypatch):
    code, _, err = run(capsys, "verify", "ip-conn", "--n", "30", "--exhaustive")
    assert code == 2 and "2^60" in err
    import graphcc.reductions as red

    monkeypatch.setattr(red, "is_connected", lambda g: True)
    code, out, _ = run(capsys, "verify", "ip-conn", "--n", "3")
    assert code == 1 and "FAIL" in out


def test_run_connectivity(capsys, tmp_path):
    write_graph(Graph(16, [(i, i + 1) for i in range(15)]), "path16.el")
    code, out, _ = run(capsys, "run", "connectivity", "--graph", "path16.el", "--split", "random",
                       "--seed", "1", "--transcript", "t.txt")
    assert code == 0 and out.splitlines()[0] == "output=true bits=65 rounds=2"
    lines = (tmp_path / "t.txt").read_text().splitlines()
    assert lines[0].startswith("0 A 64 ") and lines[-1] == "bits=65 rounds=2 output=true"


def test_run_matching(capsys):
    g, left = bipartite_gnp(8, 8, 0.3, random.Random(5))
    write_graph(g, "bip.el")
    want = hopcroft_karp_max_matching(g, left).size
    code, out, _ = run(capsys, "run", "matching-hk", "--graph", "bip.el", "--left", "0..7")
    assert code == 0 and out.startswith(f"output={want} ") and "phases=" in out


def test_run_euler_and_partition_file(capsys):
    write_graph(Graph(3, [(0, 1), (1, 2), (0, 2)]), "tri.el")
    code, out, _ = run(capsys, "run", "euler-trivial", "--graph", "tri.el")
    assert code == 0 and "output=true bits=4" in out
    write_partition(split_edges(Graph(3, [(0, 1), (1, 2), (0, 2)]), "interleave"), "tri.part")
    code, out, _ = run(capsys, "run", "triangle", "--partition", "tri.part")
    assert code == 0 and out.startswith("output=true")
    code, out, _ = run(capsys, "run", "triangle", "--graph", "tri.el", "--split", "file",
                       "--partition", "tri.part")
    assert code == 0 and out.startswith("output=true")


def test_run_errors(capsys, tmp_path):
    (tmp_path / "bad.el").write_text("3 2\n0 1\n")
    code, _, err = run(capsys, "run", "connectivity", "--graph", "bad.el")
    assert code == 1 and "error" in err
    write_graph(Graph(3, [(0, 1), (1, 2), (0, 2)]), "tri.el")
    code, _, err = run(capsys, "run", "matching-hk", "--graph", "tri.el")
    assert code == 1 and "bipartite" in err
    code, _, err = run(capsys, "run", "matching-hk", "--graph", "tri.el", "--left", "0,1")
    assert code == 1
    code, _, _ = run(capsys, "run", "connectivity")
    assert code == 1


def test_bench(capsys, tmp_path):
    code, out, _ = run(capsys, "bench", "euler-trivial", "--sizes", "16,32,64", "--trials", "2")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "protocol,n,trial,seed,output,bits,rounds,ms"
    assert len([l for l in lines if l.startswith("euler-trivial,")]) == 6
    slope = float(next(l for l in lines if l.startswith("# slope=")).split("=")[1])
    assert abs(slope - 2.0) <= 0.1
    run(capsys, "bench", "connectivity", "--sizes", "8,16", "--trials", "3", "--out", "a.csv")
    run(capsys, "bench", "connectivity", "--sizes", "8,16", "--trials", "3", "--out", "b.csv",
        "--jobs", "2")
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
    code, _, _ = run(capsys, "bench", "connectivity", "--sizes", "2")
    assert code == 1


def test_bench_connectivity_slope(capsys):
    code, out, _ = run(capsys, "bench", "connectivity", "--sizes", "16,32,64,128", "--trials", "3")
    slope = float(next(l for l in out.splitlines() if l.startswith("# slope=")).split("=")[1])
    # n*ceil(log2 n)+1 over 16..128 fits to about 1.26 (ceil makes the curve steeper than n log n)
    assert 1.0 <= slope <= 1.3
