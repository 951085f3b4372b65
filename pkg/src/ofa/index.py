"""Run-length preprocessing over the string tuple.

``R[i, k]`` is the number of consecutive strings starting at ``S_i`` that
agree with ``S_i`` at position ``k``.  From it, ``C[i, i']`` counts the
positions common to ``S_i..S_i'`` and ``Cw[i, i']`` sums their unify costs.
All arrays are padded so that 1-based indices address them directly.
"""
from __future__ import annotations

import io
from typing import Iterator, NamedTuple, Optional

import numpy as np
from numba import njit

from .costs import COST_LIMIT, CostModel
from .errors import CostModelMismatch, CostOverflow, NoCostModel
from .tuples import StringTuple


class Run(NamedTuple):
    start: int
    end: int
    symbol: str


@njit(cache=True)
def _run_lengths(codes, n, m):
    R = np.zeros((n + 1, m + 1), dtype=np.int64)
    for k in range(1, m + 1):
        R[n, k] = 1
    for i in range(n - 1, 0, -1):
        for k in range(1, m + 1):
            if codes[i, k] == codes[i + 1, k]:
                R[i, k] = R[i + 1, k] + 1
            else:
                R[i, k] = 1
    return R


@njit(cache=True)
def _common_totals(R, weights, n, m):
    # out[i, i'] = sum of weights[i, k] over k with R[i, k] >= i' - i + 1
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    by_len = np.zeros(n + 2, dtype=np.int64)
    for i in range(1, n + 1):
        span = n - i + 1
        by_len[: span + 2] = 0
        for k in range(1, m + 1):
            by_len[R[i, k]] += weights[i, k]
        acc = 0
        for length in range(span, 0, -1):
            acc += by_len[length]
            out[i, i + length - 1] = acc
    return out


class CommonalityIndex:
    """Constant-time ``|com|`` / ``com_w`` lookups and run enumeration.

    ``C`` and ``Cw`` are dense ``(n+1) x (n+1)`` arrays; only entries with
    ``1 <= i <= i' <= n`` are meaningful.
    """

    def __init__(self, t: StringTuple, costs: Optional[CostModel] = None):
        if costs is not None and costs.m != t.m:
            raise CostModelMismatch(f"cost model is for m={costs.m}, tuple has m={t.m}")
        if costs is not None and costs.max_cost * t.m >= COST_LIMIT:
            raise CostOverflow(f"costs up to {costs.max_cost} overflow a sum over {t.m} positions")
        self.tuple = t
        self.costs = costs
        n, m = t.n, t.m
        self.R = _run_lengths(t.codes, n, m)
        ones = np.ones((n + 1, m + 1), dtype=np.int64)
        self.C = _common_totals(self.R, ones, n, m)
        self.Cw = None
        if costs is not None:
            weights = np.zeros((n + 1, m + 1), dtype=np.int64)
            for i in range(1, n + 1):
                s = t[i]
                for k in range(1, m + 1):
                    weights[i, k] = costs.unify_cost(k, s[k - 1])
            self.Cw = _common_totals(self.R, weights, n, m)
        for arr in (self.R, self.C, self.Cw):
            if arr is not None:
                arr.flags.writeable = False

    @property
    def n(self) -> int:
        return self.tuple.n

    @property
    def m(self) -> int:
        return self.tuple.m

    @property
    def weighted(self) -> bool:
        return self.Cw is not None

    def com_size(self, i: int, i2: int) -> int:
        return int(self.C[i, i2])

    def com_weight(self, i: int, i2: int) -> int:
        if self.Cw is None:
            raise NoCostModel()
        return int(self.Cw[i, i2])

    def is_common(self, i: int, i2: int, k: int) -> bool:
        return self.R[i, k] >= i2 - i + 1

    def com_positions(self, i: int, i2: int) -> list[int]:
        need = i2 - i + 1
        row = self.R[i]
        return [k for k in range(1, self.m + 1) if row[k] >= need]

    def unc_positions(self, i: int, i2: int) -> list[int]:
        need = i2 - i + 1
        row = self.R[i]
        return [k for k in range(1, self.m + 1) if row[k] < need]

    def runs(self, i: int, i2: int, k: int) -> Iterator[Run]:
        """Yield the runs of ``S_i..S_i'`` at position ``k`` left to right, O(1) each."""
        R = self.R
        j = i
        while j <= i2:
            end = min(j + int(R[j, k]) - 1, i2)
            yield Run(j, end, self.tuple.char_at(j, k))
            j = end + 1

    def last_run_start(self, i: int, i2: int, k: int) -> int:
        start = i
        for run in self.runs(i, i2, k):
            start = run.start
        return start

    def dump_csv(self) -> str:
        """R (rows i, columns k) then C (rows i, columns i'), 1-based, ascending."""
        out = io.StringIO()
        n, m = self.n, self.m
        out.write("# R\n")
        out.write("i," + ",".join(f"k{k}" for k in range(1, m + 1)) + "\n")
        for i in range(1, n + 1):
            out.write(f"{i}," + ",".join(str(int(v)) for v in self.R[i, 1:]) + "\n")
        out.write("# C\n")
        out.write("i," + ",".join(f"i'{j}" for j in range(1, n + 1)) + "\n")
        for i in range(1, n + 1):
            cells = [str(int(self.C[i, j])) if j >= i else "" for j in range(1, n + 1)]
            out.write(f"{i}," + ",".join(cells) + "\n")
        return out.getvalue()


def build_index(t: StringTuple, costs: Optional[CostModel] = None) -> CommonalityIndex:
    return CommonalityIndex(t, costs)
