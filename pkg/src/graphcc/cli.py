"""Command-line interface: ``graphcc gen | verify | run | bench``.

Exit codes: 0 success, 1 mismatch or protocol/input error, 2 infeasible request.
"""
from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import io
from .bench import CSV_HEADER, run_bench, summary_lines
from .comm import SPLIT_MODES, ProtocolViolation, format_output, run_protocol, split_edges
from .graph import bits_from_int, two_coloring
from .protocols import PROTOCOLS, hk_phase_count
from .reductions import (
    REDUCTIONS, InfeasibleRequest, VerifyReport, build_det_instance, build_ip_connectivity,
    build_ip_matching, build_or_ip_euler_comm, build_or_ip_euler_query,
    parity_connectivity_instance, parity_determinant_instance, verify_reduction,
)

EXIT_OK, EXIT_FAIL, EXIT_INFEASIBLE = 0, 1, 2

# kind -> (operands, bits per operand as a function of n)
GEN_ARITY = {
    "parity-conn": (("z",), lambda n: n),
    "ip-conn": (("x", "y"), lambda n: n),
    "ip-match": (("x", "y"), lambda n: n),
    "parity-det": (("z",), lambda n: n * n),
    "ip-det": (("x", "y"), lambda n: n * n),
    "or-ip-euler": (("z",), lambda n: n * n),
    "or-ip-euler-comm": (("x", "y"), lambda n: n * n),
}


class UsageError(Exception):
    pass


def parse_hex(text: str, width: int, name: str) -> tuple[int, ...]:
    try:
        value = int(text, 16)
    except ValueError:
        raise UsageError(f"--{name}: malformed hex {text!r}") from None
    if value < 0 or value >= 1 << width:
        raise UsageError(f"--{name}: {text} does not fit in {width} bits (arity of this kind at this n)")
    return bits_from_int(value, width)


def parse_vertex_set(text: str) -> list[int]:
    """``0..7`` (inclusive), ``1,3,5`` or mixes like ``0..3,8``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _rows(bits, n):
    return tuple(bits[i:i + n] for i in range(0, len(bits), n))


def build_gadget(kind: str, n: int, ops: dict, variant: str):
    if kind == "parity-conn":
        return parity_connectivity_instance(ops["z"])
    if kind == "ip-conn":
        return build_ip_connectivity(ops["x"], ops["y"])
    if kind == "ip-match":
        return build_ip_matching(ops["x"], ops["y"], variant)
    if kind == "parity-det":
        return parity_determinant_instance(_rows(ops["z"], n))
    if kind == "ip-det":
        return build_det_instance(_rows(ops["x"], n), _rows(ops["y"], n))
    if kind == "or-ip-euler":
        return build_or_ip_euler_query(_rows(ops["z"], n))
    return build_or_ip_euler_comm(_rows(ops["x"], n), _rows(ops["y"], n))


def expected_text(inst) -> str:
    kind = inst.kind
    if kind == "parity-conn":
        return f"expected=parity={int(inst.expected)} connected={format_output(inst.expected)}"
    if kind == "ip-conn":
        return f"expected=IP={int(inst.expected)} connected={format_output(inst.expected)}"
    if kind.startswith("ip-match"):
        return f"expected=IP={int(inst.expected)} perfect_matching={format_output(inst.expected)}"
    if kind in ("parity-det", "ip-det"):
        return f"expected det={inst.expected}"
    return f"expected eulerian={format_output(inst.expected)}"


def cmd_gen(args) -> int:
    operands, width_of = GEN_ARITY[args.kind]
    width = width_of(args.n)
    if args.random:
        rng = random.Random(args.seed)
        ops = {name: bits_from_int(rng.getrandbits(width), width) for name in operands}
    else:
        missing = [f"--{o}" for o in operands if getattr(args, o) is None]
        if missing:
            raise UsageError(f"{args.kind} needs {' '.join(missing)} (or --random)")
        ops = {o: parse_hex(getattr(args, o), width, o) for o in operands}
    try:
        inst = build_gadget(args.kind, args.n, ops, args.variant)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = Path(args.out or f"{args.kind}-n{args.n}.txt")
    obj = inst.partition if inst.partition is not None else inst.graph
    writer = {
        "EdgePartition": io.write_partition, "ArcPartition": io.write_arc_partition,
        "Graph": io.write_graph, "DiGraph": io.write_digraph,
    }[type(obj).__name__]
    writer(obj, out)
    n_edges = len(getattr(inst.graph, "edges", None) or getattr(inst.graph, "arcs", ()))
    print(f"wrote {out}")
    if args.dot:
        dot = out.with_suffix(out.suffix + ".dot")
        dot.write_text(io.to_dot(obj, inst.roles))
        print(f"wrote {dot}")
    print(f"kind={inst.kind} n={args.n} vertices={inst.n_vertices} edges={n_edges}")
    print(expected_text(inst))
    return EXIT_OK


def cmd_verify(args) -> int:
    mode = "sample" if args.sample is not None else "exhaustive"
    try:
        report = verify_reduction(args.kind, args.n, mode, args.sample or 0, args.seed)
    except InfeasibleRequest as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    path = Path(args.csv or f"verify-{args.kind}-n{args.n}.csv")
    path.write_text(f"{VerifyReport.CSV_HEADER}\n{report.csv_row()}\n")
    print(report)
    print(f"report: {path}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_run(args) -> int:
    if args.partition and args.split != "file":
        if args.graph:
            raise UsageError("--partition goes with --split file")
        inst = io.read_partition(args.partition)
    elif args.graph:
        g = io.read_graph(args.graph)
        inst = split_edges(g, args.split, args.seed, path=args.partition)
    else:
        raise UsageError("give --graph (with --split) or --partition")
    params = {}
    if args.protocol == "matching-hk":
        if args.left:
            params["left_set"] = parse_vertex_set(args.left)
        else:
            coloring = two_coloring(inst.union())
            if coloring is None:
                raise UsageError("matching-hk needs a bipartite graph")
            params["left_set"] = [v for v, c in enumerate(coloring) if c == 0]
    out = run_protocol(args.protocol, inst, args.seed, **params)
    line = f"output={format_output(out.output)} bits={out.bits} rounds={out.rounds}"
    if args.protocol == "matching-hk":
        line += f" phases={hk_phase_count(out.transcript)}"
    print(line)
    if args.transcript:
        Path(args.transcript).write_text("\n".join(out.transcript.dump_lines() + [out.summary()]) + "\n")
        print(f"transcript: {args.transcript}")
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    try:
        records = run_bench(args.protocol, sizes, args.trials, args.seed, args.timing, args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [CSV_HEADER] + [r.csv_row() for r in records] + summary_lines(args.protocol, records)
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
        for s in summary_lines(args.protocol, records):
            print(s)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphcc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="build a gadget instance and write it to disk")
    gen.add_argument("kind", choices=sorted(GEN_ARITY))
    gen.add_argument("--n", type=int, required=True)
    for name in ("x", "y", "z"):
        gen.add_argument(f"--{name}", help="hex input, most significant bit = index 1, row-major")
    gen.add_argument("--random", action="store_true", help="draw inputs from --seed")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--variant", choices=("overlap", "disjoint"), default="overlap")
    gen.add_argument("-o", "--out")
    gen.add_argument("--dot", action="store_true", help="also write <out>.dot")
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="check a reduction's iff-claim by brute force")
    ver.add_argument("kind", choices=sorted(REDUCTIONS))
    ver.add_argument("--n", type=int, required=True)
    mode = ver.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="all inputs (default)")
    mode.add_argument("--sample", type=int, metavar="K", help="K seeded random inputs")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--csv", help="report path")
    ver.set_defaults(func=cmd_verify)

    run = sub.add_parser("run", help="run a protocol on a graph or partition file")
    run.add_argument("protocol", choices=sorted(PROTOCOLS))
    run.add_argument("--graph")
    run.add_argument("--partition")
    run.add_argument("--split", choices=SPLIT_MODES, default="random")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--left", help="left side for matching-hk, e.g. 0..7")
    run.add_argument("--transcript", help="write the transcript dump here")
    run.set_defaults(func=cmd_run)

    bench = sub.add_parser("bench", help="CSV of protocol cost over random instances")
    bench.add_argument("protocol", choices=sorted(PROTOCOLS))
    bench.add_argument("--sizes", required=True, help="comma-separated, e.g. 16,32,64")
    bench.add_argument("--trials", type=int, default=10)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--out")
    bench.add_argument("--timing", action="store_true", help="record wall time (ms is 0 otherwise)")
    bench.add_argument("--jobs", type=int, default=1)
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, io.FormatError, ProtocolViolation, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
