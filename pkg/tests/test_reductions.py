import random

import pytest

from graphcc.det import det_integer
from graphcc.graph import connected_components, is_bipartite, is_connected, is_eulerian
from graphcc.matching import has_perfect_matching_exact
from graphcc.reductions import (
    InfeasibleRequest, REDUCTIONS, build_det_instance, build_ip_connectivity, build_ip_matching,
    build_or_ip_euler_comm, build_or_ip_euler_query, build_parity_connectivity,
    build_parity_determinant, parity_connectivity_instance, parity_determinant_instance,
    verify_reduction,
)

ALL_ONES = ((1, 1), (1, 1))
ZERO = ((0, 0), (0, 0))


def _roles_ok(inst):
    assert sorted(inst.roles) == list(range(inst.n_vertices))
    assert len(set(inst.roles.values())) == inst.n_vertices


def test_parity_connectivity_examples():
    assert connected_components(build_parity_connectivity((0, 0, 0))) == [[0, 1, 2], [3, 4, 5]]
    assert len(connected_components(build_parity_connectivity((1, 0, 0)))) == 1
    inst = parity_connectivity_instance((1, 1, 0, 1))
    _roles_ok(inst)
    assert inst.roles[0] == "t_1" and inst.roles[4] == "b_1"
    with pytest.raises(ValueError):
        build_parity_connectivity((1, 0))


def test_ip_connectivity_examples():
    assert not is_connected(build_ip_connectivity((0, 0, 0), (0, 0, 0)).graph)
    inst = build_ip_connectivity((1, 0, 0), (1, 0, 0))
    assert is_connected(inst.graph) and inst.n_vertices == 30
    assert inst.partition.is_disjoint() and inst.expected is True
    _roles_ok(inst)
    assert {"t_1", "k_1^tt", "l_3^bt"} <= set(inst.roles.values())
    with pytest.raises(ValueError):
        build_ip_connectivity((1, 0), (0, 1))


def test_ip_matching_examples():
    assert not has_perfect_matching_exact(build_ip_matching((0, 0, 0), (0, 0, 0)).graph)
    inst = build_ip_matching((1, 0, 0), (1, 0, 0))
    assert has_perfect_matching_exact(inst.graph) and inst.n_vertices == 18
    _roles_ok(inst)
    d = build_ip_matching((1, 0, 0), (1, 0, 0), "disjoint")
    assert d.n_vertices == 30 and d.partition.is_disjoint()
    _roles_ok(d)
    # overlap variant genuinely shares horizontal edges when x_i = y_i = 0
    assert not build_ip_matching((0, 0, 0), (0, 0, 0)).partition.is_disjoint()
    with pytest.raises(ValueError):
        build_ip_matching((1, 0, 0, 0), (1, 0, 0, 0))
    with pytest.raises(ValueError):
        build_ip_matching((1, 0, 0), (1, 0, 0), "sideways")


def test_gadgets_are_not_bipartite_but_matching_works_anyway():
    g = build_ip_matching((0, 0, 0), (0, 0, 0)).graph
    assert not has_perfect_matching_exact(g)
    assert not is_bipartite(g)


def test_parity_determinant_examples():
    assert det_integer(build_parity_determinant(ZERO)) == 0
    assert det_integer(build_parity_determinant(((1, 0), (0, 1)))) == -2
    inst = parity_determinant_instance(((1, 1, 0), (0, 1, 0), (1, 0, 1)))
    assert inst.n_vertices == 8 and inst.expected == -5
    _roles_ok(inst)
    assert inst.roles[0] == "s" and inst.roles[4] == "t"
    with pytest.raises(ValueError):
        build_parity_determinant([[1] * 7] * 7)
    with pytest.raises(ValueError):
        build_parity_determinant(((1, 0),))


def test_det_instance_examples():
    inst = build_det_instance(ALL_ONES, ALL_ONES)
    assert det_integer(inst.graph) == 0 == inst.expected
    inst = build_det_instance(ALL_ONES, ZERO)
    assert det_integer(inst.graph) == -4 == inst.expected
    assert (inst.graph.n_vertices - 2) // 2 == 2
    assert (1, 1) in inst.partition.arcs_a and (4, 3) in inst.partition.arcs_b
    with pytest.raises(ValueError):
        build_det_instance(ZERO, ((0,),))


def test_det_instance_reverse_orientation_is_degenerate():
    rng = random.Random(21)
    for _ in range(50):
        x = tuple(tuple(rng.randint(0, 1) for _ in range(3)) for _ in range(3))
        y = tuple(tuple(rng.randint(0, 1) for _ in range(3)) for _ in range(3))
        assert det_integer(build_det_instance(x, y, "out_of_t").graph) == 0
        inst = build_det_instance(x, y)
        assert det_integer(inst.graph) == inst.expected


def test_euler_query_examples():
    inst = build_or_ip_euler_query([(0, 0, 0)] * 3)
    assert inst.n_vertices == 13 and is_eulerian(inst.graph)
    _roles_ok(inst)
    assert not is_eulerian(build_or_ip_euler_query([(1, 0, 0), (0, 0, 0), (0, 0, 0)]).graph)
    assert is_eulerian(build_or_ip_euler_query([(1, 1, 0), (0, 1, 1), (0, 0, 0)]).graph)
    with pytest.raises(ValueError):
        build_or_ip_euler_query([(0, 0)] * 2)


def test_euler_comm_examples():
    ones = [(1, 1, 1, 1)] * 4
    inst = build_or_ip_euler_comm(ones, ones)
    assert is_eulerian(inst.graph) and inst.expected
    assert inst.n_vertices == 16
    xs = [(1, 0, 0, 0)] + [(0, 0, 0, 0)] * 3
    ys = [(1, 1, 0, 0)] + [(0, 0, 0, 0)] * 3
    inst = build_or_ip_euler_comm(xs, ys)
    assert not is_eulerian(inst.graph) and not inst.expected
    with pytest.raises(ValueError):
        build_or_ip_euler_comm([(1, 1, 1)] * 3, [(1, 1, 1)] * 3)


@pytest.mark.parametrize("kind,n,cases", [
    ("ip-conn", 3, 64), ("parity-det", 2, 16), ("ip-match", 3, 128), ("parity-conn", 8, 256),
    ("or-ip-euler", 3, 512), ("ip-det", 2, 256),
])
def test_verify_exhaustive(kind, n, cases):
    report = verify_reduction(kind, n, "exhaustive")
    assert report.passed and report.cases == cases and report.mismatches == 0


def test_verify_sampled_is_seeded():
    r1 = verify_reduction("or-ip-euler-comm", 4, "sample", 2000, seed=3)
    r2 = verify_reduction("or-ip-euler-comm", 4, "sample", 2000, seed=3)
    assert r1 == r2 and r1.passed
    assert r1.csv_row() == "or-ip-euler-comm,4,2000,0,3"


def test_verify_guards():
    with pytest.raises(InfeasibleRequest, match="2\\^60"):
        verify_reduction("ip-conn", 30, "exhaustive")
    with pytest.raises(ValueError):
        verify_reduction("ip-planarity", 3)
    with pytest.raises(ValueError):
        verify_reduction("ip-conn", 3, "vibes")
    assert set(REDUCTIONS) >= {"parity-conn", "ip-conn", "ip-match", "parity-det", "ip-det",
                               "or-ip-euler", "or-ip-euler-comm"}


def test_verify_reports_witness_on_failure(monkeypatch):
    import graphcc.reductions as red

    monkeypatch.setattr(red, "is_connected", lambda g: False)
    report = verify_reduction("ip-conn", 3, "exhaustive")
    assert not report.passed and report.witness is not None
    assert "FAIL" in str(report) and "first failure" in str(report)
