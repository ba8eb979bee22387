"""Protocol cost benchmarks over seeded random instances."""
from __future__ import annotations

import math
import random
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .comm import format_output, run_protocol, split_edges
from .generators import bipartite_gnp, connectivity_p, gnp
from .protocols import hk_phase_count

CSV_HEADER = "protocol,n,trial,seed,output,bits,rounds,ms"


@dataclass(frozen=True)
class BenchRecord:
    protocol: str
    n: int
    trial: int
    seed: int
    output: object
    bits: int
    rounds: int
    ms: float
    phases: int | None = None

    def csv_row(self) -> str:
        return (f"{self.protocol},{self.n},{self.trial},{self.seed},"
                f"{format_output(self.output)},{self.bits},{self.rounds},{self.ms:.3f}")


def trial_seed(seed: int, n: int, trial: int) -> int:
    return random.Random(f"bench/{seed}/{n}/{trial}").getrandbits(32)


def bench_instance(protocol: str, n: int, seed: int):
    """Bipartite G(n, n, 1/2) for matching (``n`` per side); otherwise
    G(n, 2 ln n / n). Edges are split by independent fair coins."""
    rng = random.Random(seed)
    params = {}
    if protocol == "matching-hk":
        g, left = bipartite_gnp(n, n, 0.5, rng)
        params["left_set"] = left
    else:
        g = gnp(n, connectivity_p(n), rng)
    return split_edges(g, "random", seed), params


def run_trial(protocol: str, n: int, trial: int, seed: int, timing: bool = False) -> BenchRecord:
    s = trial_seed(seed, n, trial)
    inst, params = bench_instance(protocol, n, s)
    start = time.perf_counter()
    out = run_protocol(protocol, inst, s, **params)
    ms = (time.perf_counter() - start) * 1e3 if timing else 0.0
    phases = hk_phase_count(out.transcript) if protocol == "matching-hk" else None
    return BenchRecord(protocol, n, trial, s, out.output, out.bits, out.rounds, ms, phases)


def _run_trial_args(args):
    return run_trial(*args)


def run_bench(protocol: str, sizes, trials: int, seed: int = 0, timing: bool = False,
              jobs: int = 1) -> list[BenchRecord]:
    for n in sizes:
        if n < 4:
            raise ValueError(f"bench sizes must be >= 4, got {n}")
    tasks = [(protocol, n, t, seed, timing) for n in sizes for t in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(_run_trial_args, tasks, chunksize=8))
    return [run_trial(*t) for t in tasks]


def loglog_slope(records: list[BenchRecord]) -> float:
    """Least-squares slope of log(mean bits) against log n."""
    sizes = sorted({r.n for r in records})
    if len(sizes) < 2:
        raise ValueError("need at least two sizes for a slope")
    means = [statistics.fmean(r.bits for r in records if r.n == n) for n in sizes]
    return statistics.linear_regression([math.log(n) for n in sizes], [math.log(m) for m in means]).slope


def hk_cost_constant(records: list[BenchRecord]) -> float:
    """Smallest C with bits <= C * n^1.5 * ceil(log2 2n) on every record."""
    return max(r.bits / (r.n ** 1.5 * math.ceil(math.log2(2 * r.n))) for r in records)


def summary_lines(protocol: str, records: list[BenchRecord]) -> list[str]:
    lines = []
    if len({r.n for r in records}) >= 2:
        lines.append(f"# slope={loglog_slope(records):.4f}")
    if protocol == "matching-hk":
        lines.append(f"# C={hk_cost_constant(records):.4f}")
        lines.append(f"# max_phases={max(r.phases for r in records)}")
    return lines
