"""Gadget constructions turning bit-string problems into graph properties,
plus brute-force verifiers for their iff-claims.

Vertex numbering is role-major: role ``r`` with 1-based index ``i`` lives at
``r * n + (i - 1)``, in the role order listed by each ``*_ROLES`` tuple.
Role labels are 1-based, serialized vertex ids 0-based.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Sequence

from .det import det_integer
from .graph import (
    ArcPartition, Bits, DiGraph, EdgePartition, Graph, as_bits, bits_from_int,
    connected_components, hamming_weight, inner_product, is_connected, is_eulerian,
)
from .matching import has_perfect_matching_exact

EXHAUSTIVE_LIMIT_BITS = 20

CONN_ROLES = ("t", "b", "k^tt", "k^bb", "k^tb", "k^bt", "l^tt", "l^bb", "l^tb", "l^bt")
MATCH_ROLES = ("t", "b", "k^t", "k^b", "l^t", "l^b")
MATCH_DISJOINT_ROLES = MATCH_ROLES + ("u^t", "v^t", "u^b", "v^b")


@dataclass(frozen=True)
class GadgetInstance:
    kind: str
    graph: Graph | DiGraph
    partition: EdgePartition | ArcPartition | None
    roles: dict[int, str]
    inputs: dict[str, Any]
    expected: Any

    @property
    def n_vertices(self) -> int:
        return self.graph.n_vertices


def _labels(roles: Sequence[str], n: int) -> dict[int, str]:
    out = {}
    for r, name in enumerate(roles):
        base, _, sup = name.partition("^")
        for i in range(1, n + 1):
            out[r * n + i - 1] = f"{base}_{i}" + (f"^{sup}" if sup else "")
    return out


class _Ids:
    def __init__(self, roles: Sequence[str], n: int):
        self.index = {name: r for r, name in enumerate(roles)}
        self.n = n

    def __call__(self, role: str, i: int) -> int:
        """Vertex id of ``role_i``; ``i`` is 1-based and wraps modulo n."""
        return self.index[role] * self.n + (i - 1) % self.n


def _pair_inputs(x, y) -> tuple[Bits, Bits, int]:
    x, y = as_bits(x), as_bits(y)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return x, y, len(x)


# -- parity -> connectivity (query model) -------------------------------------

def build_parity_connectivity(z) -> Graph:
    """Two rows t_1..t_n, b_1..b_n; bit z_i keeps step i horizontal (0) or crosses it (1)."""
    z = as_bits(z)
    n = len(z)
    if n < 3:
        raise ValueError("parity gadget needs n >= 3")
    v = _Ids(("t", "b"), n)
    edges = []
    for i in range(1, n + 1):
        if z[i - 1]:
            edges += [(v("t", i), v("b", i + 1)), (v("b", i), v("t", i + 1))]
        else:
            edges += [(v("t", i), v("t", i + 1)), (v("b", i), v("b", i + 1))]
    return Graph(2 * n, edges)


def parity_connectivity_instance(z) -> GadgetInstance:
    z = as_bits(z)
    g = build_parity_connectivity(z)
    return GadgetInstance("parity-conn", g, None, _labels(("t", "b"), len(z)),
                          {"z": z}, hamming_weight(z) % 2 == 1)


# -- IP -> connectivity --------------------------------------------------------

def build_ip_connectivity(x, y) -> GadgetInstance:
    """Each step of the parity graph becomes a 2-vertex gadget with disjoint
    ownership; the union is connected iff IP(x, y) = 1."""
    x, y, n = _pair_inputs(x, y)
    if n < 3:
        raise ValueError("IP->connectivity needs n >= 3")
    v = _Ids(CONN_ROLES, n)
    ea, eb = [], []
    for i in range(1, n + 1):
        xi, yi = x[i - 1], y[i - 1]
        for row, k, l in (("t", "k^tt", "l^tt"), ("b", "k^bb", "l^bb")):
            # connected iff x_i y_i = 0
            if xi == 0:
                ea.append((v(row, i), v(k, i)))
            if yi == 0:
                eb.append((v(row, i), v(l, i)))
            ea += [(v(k, i), v(row, i + 1)), (v(l, i), v(row, i + 1))]
        for src, dst, k, l in (("t", "b", "k^tb", "l^tb"), ("b", "t", "k^bt", "l^bt")):
            # connected iff x_i y_i = 1
            if xi == 1:
                ea.append((v(src, i), v(l, i)))
            if yi == 0:
                eb.append((v(k, i), v(l, i)))
            else:
                eb.append((v(l, i), v(dst, i + 1)))
            ea.append((v(src, i), v(k, i)))
    part = EdgePartition(10 * n, ea, eb, disjoint=True)
    return GadgetInstance("ip-conn", part.union(), part, _labels(CONN_ROLES, n),
                          {"x": x, "y": y}, bool(inner_product(x, y)))


# -- IP -> perfect matching -----------------------------------------------------

def build_ip_matching(x, y, variant: str = "overlap") -> GadgetInstance:
    """Union has a perfect matching iff IP(x, y) = 1 (n odd).

    ``overlap``: 6n vertices, both parties may hold the same horizontal edge.
    ``disjoint``: each horizontal edge {a, c} is replaced by fresh u, v with
    Alice always holding {u, v}; x_i = 0 gives Alice {a, u}, {v, c} and
    y_i = 0 gives Bob {a, v}, {u, c}. Either way the gadget acts as an
    odd a-c path exactly when x_i y_i = 0. 10n vertices.
    """
    x, y, n = _pair_inputs(x, y)
    if n < 3 or n % 2 == 0:
        raise ValueError("IP->matching needs odd n >= 3")
    if variant not in ("overlap", "disjoint"):
        raise ValueError(f"unknown variant {variant!r}")
    roles = MATCH_ROLES if variant == "overlap" else MATCH_DISJOINT_ROLES
    v = _Ids(roles, n)
    ea, eb = [], []
    for i in range(1, n + 1):
        xi, yi = x[i - 1], y[i - 1]
        ea += [(v("k^t", i), v("l^b", i)), (v("k^b", i), v("l^t", i))]
        for row in ("t", "b"):
            a, c = v(row, i), v(row, i + 1)
            if variant == "overlap":
                if xi == 0:
                    ea.append((a, c))
                if yi == 0:
                    eb.append((a, c))
            else:
                u, w = v("u^" + row, i), v("v^" + row, i)
                ea.append((u, w))
                if xi == 0:
                    ea += [(a, u), (w, c)]
                if yi == 0:
                    eb += [(a, w), (u, c)]
        if xi == 1:
            ea += [(v("t", i), v("k^t", i)), (v("b", i), v("k^b", i))]
        if yi == 1:
            eb += [(v("t", i + 1), v("l^t", i)), (v("b", i + 1), v("l^b", i))]
    part = EdgePartition(len(roles) * n, ea, eb, disjoint=(variant == "disjoint"))
    return GadgetInstance(f"ip-match-{variant}", part.union(), part, _labels(roles, n),
                          {"x": x, "y": y}, bool(inner_product(x, y)))


# -- parity -> determinant ------------------------------------------------------

def _square(m, name: str) -> tuple[Bits, ...]:
    rows = tuple(as_bits(r) for r in m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError(f"{name} must be square")
    if not 1 <= n <= 6:
        raise ValueError(f"{name} must be n x n with 1 <= n <= 6, got n={n}")
    return rows


def valiant_ids(n: int) -> dict[str, Callable]:
    """Pinned order s, l_1..l_n, t, r_1..r_n."""
    return {"s": 0, "t": n + 1, "l": lambda i: i, "r": lambda i: n + 1 + i}


def valiant_roles(n: int) -> dict[int, str]:
    roles = {0: "s", n + 1: "t"}
    for i in range(1, n + 1):
        roles[i] = f"l_{i}"
        roles[n + 1 + i] = f"r_{i}"
    return roles


def build_parity_determinant(z) -> DiGraph:
    """Directed graph whose adjacency determinant is -|Z|."""
    z = _square(z, "Z")
    n = len(z)
    ids = valiant_ids(n)
    s, t, l, r = ids["s"], ids["t"], ids["l"], ids["r"]
    arcs = [(t, s)]
    for i in range(1, n + 1):
        arcs += [(s, l(i)), (r(i), t), (l(i), l(i)), (r(i), r(i))]
        arcs += [(l(i), r(j)) for j in range(1, n + 1) if z[i - 1][j - 1]]
    return DiGraph(2 * n + 2, arcs)


def parity_determinant_instance(z) -> GadgetInstance:
    z = _square(z, "Z")
    weight = sum(map(sum, z))
    return GadgetInstance("parity-det", build_parity_determinant(z), None,
                          valiant_roles(len(z)), {"Z": z}, -weight)


def build_det_instance(x, y, right_arcs: str = "into_t") -> GadgetInstance:
    """Arc split for the distributed determinant: arc (l_i, r_j) is present
    iff X(i,j) Y(i,j) = 0, so det(union) = -(n^2 - |X AND Y|).

    ``right_arcs="into_t"`` uses arcs (r_i, t); ``"out_of_t"`` uses (t, r_i),
    under which nothing enters t and the determinant is identically 0.
    """
    x, y = _square(x, "X"), _square(y, "Y")
    if len(x) != len(y):
        raise ValueError(f"shape mismatch: {len(x)} vs {len(y)}")
    if right_arcs not in ("into_t", "out_of_t"):
        raise ValueError(f"unknown right_arcs {right_arcs!r}")
    n = len(x)
    ids = valiant_ids(n)
    s, t, l, r = ids["s"], ids["t"], ids["l"], ids["r"]
    aa, ab = [(t, s)], []
    for i in range(1, n + 1):
        aa += [(s, l(i)), (l(i), l(i))]
        ab += [(r(i), t) if right_arcs == "into_t" else (t, r(i)), (r(i), r(i))]
        for j in range(1, n + 1):
            if x[i - 1][j - 1] == 0:
                aa.append((l(i), r(j)))
            if y[i - 1][j - 1] == 0:
                ab.append((l(i), r(j)))
    part = ArcPartition(2 * n + 2, aa, ab)
    both = sum(a & b for ra, rb in zip(x, y) for a, b in zip(ra, rb))
    return GadgetInstance("ip-det", part.union(), part, valiant_roles(n),
                          {"X": x, "Y": y}, -(n * n - both))


# -- OR of parities -> Eulerian tour -----------------------------------------------

def euler_ids(n: int) -> dict[str, Callable]:
    return {"l": lambda i: i, "r": lambda i: n + 2 + i, "m": lambda j: 2 * n + 3 + j}


def euler_roles(n: int) -> dict[int, str]:
    ids = euler_ids(n)
    roles = {}
    for i in range(n + 2):
        roles[ids["l"](i)] = f"l_{i}"
        roles[ids["r"](i)] = f"r_{i}"
    for j in range(1, n + 1):
        roles[ids["m"](j)] = f"m_{j}"
    return roles


def euler_fixed_edges(n: int) -> list[tuple[int, int]]:
    ids = euler_ids(n)
    l, r, m = ids["l"], ids["r"], ids["m"]
    edges = [(l(i), l(i + 1)) for i in range(n + 1)]
    edges += [(r(i), r(i + 1)) for i in range(n + 1)]
    edges += [(m(j), m(j + 1)) for j in range(1, n)]
    edges += [(l(0), m(1)), (r(0), m(1)), (l(n + 1), m(n)), (r(n + 1), m(n)), (m(1), m(n))]
    return edges


def _vectors(zs, name: str) -> tuple[Bits, ...]:
    zs = tuple(as_bits(z) for z in zs)
    n = len(zs)
    if any(len(z) != n for z in zs):
        raise ValueError(f"{name} must hold n vectors of length n")
    return zs


def build_or_ip_euler_query(zs) -> GadgetInstance:
    """Eulerian iff every |z^i| is even; 3n + 4 vertices."""
    zs = _vectors(zs, "zs")
    n = len(zs)
    if n < 3:
        raise ValueError("Euler gadget needs n >= 3")
    ids = euler_ids(n)
    edges = euler_fixed_edges(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if zs[i - 1][j - 1]:
                edges += [(ids["l"](i), ids["m"](j)), (ids["r"](i), ids["m"](j))]
    expected = not any(hamming_weight(z) % 2 for z in zs)
    return GadgetInstance("or-ip-euler", Graph(3 * n + 4, edges), None, euler_roles(n),
                          {"zs": zs}, expected)


def build_or_ip_euler_comm(xs, ys) -> GadgetInstance:
    """Communication version (n even): variable edges of row i, column j go to
    Alice when x^i_j = 0 and to Bob when y^i_j = 0; fixed edges to Alice."""
    xs, ys = _vectors(xs, "xs"), _vectors(ys, "ys")
    n = len(xs)
    if len(ys) != n:
        raise ValueError("xs and ys must have the same shape")
    if n < 4 or n % 2:
        raise ValueError("communication Euler gadget needs even n >= 4")
    ids = euler_ids(n)
    ea, eb = euler_fixed_edges(n), []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            pair = [(ids["l"](i), ids["m"](j)), (ids["r"](i), ids["m"](j))]
            if xs[i - 1][j - 1] == 0:
                ea += pair
            if ys[i - 1][j - 1] == 0:
                eb += pair
    part = EdgePartition(3 * n + 4, ea, eb)
    expected = not any(inner_product(a, b) for a, b in zip(xs, ys))
    return GadgetInstance("or-ip-euler-comm", part.union(), part, euler_roles(n),
                          {"xs": xs, "ys": ys}, expected)


# -- verification -------------------------------------------------------------------

class InfeasibleRequest(ValueError):
    def __init__(self, kind: str, n: int, space_bits: int):
        super().__init__(f"{kind} at n={n} has input space 2^{space_bits}; "
                         f"exhaustive mode allows at most 2^{EXHAUSTIVE_LIMIT_BITS}")
        self.space_bits = space_bits


def _chunks(bits: Bits, size: int) -> tuple[Bits, ...]:
    return tuple(bits[i:i + size] for i in range(0, len(bits), size))


def _check_parity_conn(n: int, bits: Bits) -> list[str]:
    g = build_parity_connectivity(bits)
    comps = connected_components(g)
    want = [2 * n] if hamming_weight(bits) % 2 else [n, n]
    errs = []
    if sorted(map(len, comps)) != want:
        errs.append(f"component sizes {sorted(map(len, comps))} != {want}")
    if any(len(nb) != 2 for nb in g.adjacency):
        errs.append("not 2-regular")
    if g.n_vertices != 2 * n:
        errs.append("vertex count")
    return errs


def _check_ip_conn(n: int, bits: Bits) -> list[str]:
    inst = build_ip_connectivity(bits[:n], bits[n:])
    errs = []
    if is_connected(inst.graph) != inst.expected:
        errs.append(f"connected={not inst.expected} but IP={int(inst.expected)}")
    if not inst.partition.is_disjoint():
        errs.append("E_A and E_B overlap")
    if inst.n_vertices != 10 * n:
        errs.append("vertex count")
    if len(inst.graph.edges) > 16 * n:
        errs.append(f"{len(inst.graph.edges)} edges > 16n")
    return errs


def _check_ip_match(n: int, bits: Bits, variant: str) -> list[str]:
    inst = build_ip_matching(bits[:n], bits[n:], variant)
    errs = []
    if has_perfect_matching_exact(inst.graph) != inst.expected:
        errs.append(f"perfect matching={not inst.expected} but IP={int(inst.expected)}")
    if variant == "disjoint" and not inst.partition.is_disjoint():
        errs.append("E_A and E_B overlap")
    if inst.n_vertices != (6 if variant == "overlap" else 10) * n:
        errs.append("vertex count")
    return errs


def _check_parity_det(n: int, bits: Bits) -> list[str]:
    z = _chunks(bits, n)
    d = det_integer(build_parity_determinant(z))
    want = -hamming_weight(bits)
    return [] if d == want else [f"det={d} != {want}"]


def _check_ip_det(n: int, bits: Bits) -> list[str]:
    half = n * n
    inst = build_det_instance(_chunks(bits[:half], n), _chunks(bits[half:], n))
    d = det_integer(inst.graph)
    return [] if d == inst.expected else [f"det={d} != {inst.expected}"]


def _check_euler_query(n: int, bits: Bits) -> list[str]:
    inst = build_or_ip_euler_query(_chunks(bits, n))
    errs = []
    if is_eulerian(inst.graph) != inst.expected:
        errs.append(f"eulerian={not inst.expected} but expected {inst.expected}")
    if any(nb % 2 for nb in _degrees(inst.n_vertices, euler_fixed_edges(n))):
        errs.append("odd degree among fixed edges")
    if inst.n_vertices != 3 * n + 4:
        errs.append("vertex count")
    return errs


def _check_euler_comm(n: int, bits: Bits) -> list[str]:
    half = n * n
    inst = build_or_ip_euler_comm(_chunks(bits[:half], n), _chunks(bits[half:], n))
    return [] if is_eulerian(inst.graph) == inst.expected else [
        f"eulerian={not inst.expected} but expected {inst.expected}"]


def _degrees(n: int, edges) -> list[int]:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


@dataclass(frozen=True)
class _Kind:
    arity: Callable[[int], int]
    checks: tuple[Callable[[int, Bits], list[str]], ...]


REDUCTIONS: dict[str, _Kind] = {
    "parity-conn": _Kind(lambda n: n, (_check_parity_conn,)),
    "ip-conn": _Kind(lambda n: 2 * n, (_check_ip_conn,)),
    "ip-match": _Kind(lambda n: 2 * n, (lambda n, b: _check_ip_match(n, b, "overlap"),
                                        lambda n, b: _check_ip_match(n, b, "disjoint"))),
    "parity-det": _Kind(lambda n: n * n, (_check_parity_det,)),
    "ip-det": _Kind(lambda n: 2 * n * n, (_check_ip_det,)),
    "or-ip-euler": _Kind(lambda n: n * n, (_check_euler_query,)),
    "or-ip-euler-comm": _Kind(lambda n: 2 * n * n, (_check_euler_comm,)),
}


@dataclass
class VerifyReport:
    kind: str
    n: int
    mode: str
    seed: int
    cases: int = 0
    mismatches: int = 0
    witness: tuple | None = None
    witness_errors: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.cases > 0 and self.mismatches == 0

    CSV_HEADER = "kind,n,cases,mismatches,seed"

    def csv_row(self) -> str:
        return f"{self.kind},{self.n},{self.cases},{self.mismatches},{self.seed}"

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.kind} n={self.n} {self.mode}: {self.cases} cases, {self.mismatches} mismatches"
        if self.witness is not None:
            bits = "".join(map(str, self.witness))
            text += f"; first failure input={bits} ({'; '.join(self.witness_errors)})"
        return text


def case_bits(seed: int, index: int, arity: int) -> Bits:
    """Input for sampled case ``index``; depends only on (seed, index)."""
    rng = random.Random(f"verify/{seed}/{index}")
    return bits_from_int(rng.getrandbits(arity), arity)


def verify_reduction(kind: str, n: int, mode: str = "exhaustive", samples: int = 10_000,
                     seed: int = 0) -> VerifyReport:
    """Run a builder and its semantic oracle on every (or sampled) input.

    Inputs are flat bit strings: ``x || y`` for pairs, row-major for matrices.
    ``ip-match`` checks both variants, so each input counts as two cases.
    """
    try:
        entry = REDUCTIONS[kind]
    except KeyError:
        raise ValueError(f"unknown reduction {kind!r}; choose from {sorted(REDUCTIONS)}") from None
    arity = entry.arity(n)
    if mode == "exhaustive":
        if arity > EXHAUSTIVE_LIMIT_BITS:
            raise InfeasibleRequest(kind, n, arity)
        inputs = (tuple(b) for b in product((0, 1), repeat=arity))
    elif mode == "sample":
        inputs = (case_bits(seed, i, arity) for i in range(samples))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    report = VerifyReport(kind, n, mode, seed)
    for bits in inputs:
        for check in entry.checks:
            report.cases += 1
            errs = check(n, bits)
            if errs:
                report.mismatches += 1
                if report.witness is None:
                    report.witness, report.witness_errors = bits, errs
    return report
