"""Wall-clock comparison of the two solvers on random instances."""
from __future__ import annotations

import csv
import io
import random
import statistics
import time
from dataclasses import astuple, dataclass
from typing import Iterable, Optional, Sequence

from .index import build_index
from .solver import drss_solve, fast_solve, optimal_total
from .tuples import StringTuple
from .verify import random_tuple

CSV_HEADER = ("algorithm", "n", "m", "alphabet", "seed", "wall_time_ns", "result")

SOLVE = {"fast": fast_solve, "drss": drss_solve}


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    n: int
    m: int
    alphabet: int
    seed: int
    wall_time_ns: int
    result: int


def parse_sizes(text: str) -> list[tuple[int, int]]:
    """``"200x32,400x32"`` -> ``[(200, 32), (400, 32)]``."""
    sizes = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            n, m = part.lower().split("x")
            sizes.append((int(n), int(m)))
        except ValueError:
            raise ValueError(f"bad size {part!r}, expected NxM") from None
        if sizes[-1][0] < 1 or sizes[-1][1] < 1:
            raise ValueError(f"bad size {part!r}, n and m must be >= 1")
    return sizes


def warm_up():
    """Trigger JIT compilation so it never lands inside a timed call."""
    ix = build_index(StringTuple(("ab", "ba", "aa")))
    for solve in SOLVE.values():
        solve(ix)


def time_solve(algorithm: str, ix, repeat: int = 1) -> tuple[int, int]:
    """Median wall time in ns over ``repeat`` calls, and the optimum found."""
    solve = SOLVE[algorithm]
    times = []
    tables = None
    for _ in range(repeat):
        start = time.perf_counter_ns()
        tables = solve(ix)
        times.append(time.perf_counter_ns() - start)
    return int(statistics.median(times)), optimal_total(ix, tables)


def run_bench(sizes: Iterable[tuple[int, int]], alphabet: int = 2, seed: int = 0,
              algorithms: Sequence[str] = ("fast", "drss"), repeat: int = 1,
              instance: Optional[StringTuple] = None) -> list[BenchRecord]:
    """One record per (size, algorithm), in input order.

    Each size draws its tuple from ``random.Random(seed)``, so a size's
    instance does not depend on which other sizes are listed.  ``instance``
    replaces the random tuples with a fixed one.
    """
    for name in algorithms:
        if name not in SOLVE:
            raise ValueError(f"unknown algorithm {name!r}")
    warm_up()
    records = []
    for n, m in sizes:
        t = instance if instance is not None else random_tuple(random.Random(seed), n, m, alphabet)
        symbols = alphabet if instance is None else len(set("".join(t.strings)))
        ix = build_index(t)
        for name in algorithms:
            wall, result = time_solve(name, ix, repeat)
            records.append(BenchRecord(name, t.n, t.m, symbols, seed, wall, result))
    return records


def records_to_csv(records: Iterable[BenchRecord]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(astuple(rec))
    return out.getvalue()
