"""Scaling harness: linear construction versus the exchange walk.

Operation counters are the evidence that matters; wall time is recorded for
information only.
"""

from __future__ import annotations

import csv
import enum
import statistics
import time
from dataclasses import astuple, dataclass, field
from typing import IO, Callable, Sequence

import numpy as np

from .errors import BadParams
from .graph import BicoloredGraph, OpCounter, SpanningTree
from .graphio import gen_random, verify_tree
from .kred import construct_k_red, feasible_interval
from .oracle import exchange_construct

CSV_COLUMNS = ("algo", "n", "m", "red_prob", "k", "time_ns", "ops")
DEFAULT_EXCHANGE_CAP = 20_000


class KRule(enum.Enum):
    MIDPOINT = "mid"
    KMIN = "min"
    KMAX = "max"

    def pick(self, k_min: int, k_max: int) -> int:
        if self is KRule.KMIN:
            return k_min
        if self is KRule.KMAX:
            return k_max
        return (k_min + k_max) // 2


@dataclass(frozen=True)
class BenchRow:
    algo: str
    n: int
    m: int
    red_prob: float
    k: int
    time_ns: int
    ops: int


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)

    def write_csv(self, out: IO[str]) -> None:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in self.rows:
            w.writerow(astuple(row))


def linear_pipeline(g: BicoloredGraph, k_rule: KRule, ops: OpCounter | None = None) -> SpanningTree:
    """Interval computation followed by construction, both charged to ``ops``."""
    iv = feasible_interval(g, ops)
    return construct_k_red(g, k_rule.pick(iv.k_min, iv.k_max), ops)


def linear_pipeline_ops(g: BicoloredGraph, k_rule: KRule = KRule.MIDPOINT) -> int:
    ops = OpCounter()
    linear_pipeline(g, k_rule, ops)
    return ops.count


def exchange_stress_graph(n: int) -> BicoloredGraph:
    """Blue Hamiltonian path plus red chords ``(i, i + n//2)``.

    The fewest-red tree is the blue path and the most-red tree holds every
    chord, so reaching ``k = n//2`` takes ``n//2`` exchanges, each closing a
    cycle of length about ``n/2``.
    """
    if n < 2:
        raise BadParams("stress graph needs at least 2 nodes")
    half = n // 2
    path_u = np.arange(n - 1)
    chord_u = np.arange(half)
    u = np.concatenate([path_u, chord_u])
    v = np.concatenate([path_u + 1, chord_u + half])
    reds = np.concatenate([np.zeros(n - 1, bool), np.ones(half, bool)])
    return BicoloredGraph.from_arrays(n, u, v, reds)


def _timed(fn: Callable[[], SpanningTree]) -> tuple[SpanningTree, int]:
    t0 = time.perf_counter_ns()
    out = fn()
    return out, time.perf_counter_ns() - t0


def run_bench(
    sizes: Sequence[tuple[int, int]],
    red_prob: float,
    k_rule: KRule = KRule.MIDPOINT,
    trials: int = 1,
    seed: int = 0,
    exchange_cap: int = DEFAULT_EXCHANGE_CAP,
) -> BenchReport:
    """Time both constructions on one seeded instance per size.

    Each row holds the median wall time over ``trials`` runs; the operation
    count is deterministic.  Every produced tree is verified before its row
    is recorded, and both algorithms must agree on the red count.
    """
    if trials < 1:
        raise BadParams("trials must be at least 1")
    if not sizes:
        raise BadParams("no sizes given")
    if any(b[0] < a[0] or b[1] < a[1] for a, b in zip(sizes, sizes[1:])):
        raise BadParams("sizes must be nondecreasing")
    report = BenchReport()
    for idx, (n, m) in enumerate(sizes):
        g = gen_random(n, m, red_prob, seed + idx)
        iv = feasible_interval(g)
        k = k_rule.pick(iv.k_min, iv.k_max)

        algos: list[tuple[str, Callable[[OpCounter | None], SpanningTree]]] = [
            ("linear", lambda ops: construct_k_red(g, k, ops)),
        ]
        if n <= exchange_cap:
            algos.append(("exchange", lambda ops: exchange_construct(g, k, ops)[0]))
        for name, run in algos:
            ops = OpCounter()
            tree = run(ops)
            check = verify_tree(g, tree, k)
            if not check:
                raise AssertionError(f"{name} produced an invalid tree at n={n}: {check}")
            times = [_timed(lambda: run(None))[1] for _ in range(trials)]
            report.rows.append(
                BenchRow(name, n, m, red_prob, k, int(statistics.median(times)), ops.count)
            )
    return report


def parse_sizes(text: str) -> list[tuple[int, int]]:
    """Parse ``"1000:10000,10000:100000"`` into ``[(n, m), ...]``."""
    sizes = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            n_txt, m_txt = part.replace("x", ":").split(":")
            sizes.append((int(float(n_txt)), int(float(m_txt))))
        except ValueError:
            raise BadParams(f"bad size {part!r}; expected n:m") from None
    return sizes
