"""Interval dynamic programs for the minimum factoring automaton.

``D[i, i']`` is the minimum size (or cost) of an automaton for the strings
``S_i..S_i'`` over their uncommon positions, i.e. assuming every position
they all agree on has already been tested above.  ``kstar[i, i']`` is the
position tested at the root of that sub-automaton.

Two solvers fill the same table:

* :func:`drss_solve` evaluates each candidate position from scratch by
  scanning the runs, O(n^2 m (n + m)) overall.
* :func:`fast_solve` sweeps ``i'`` upwards for fixed ``i`` and keeps, per
  position ``k``, the running sum ``a[k]`` of ``|com(j,j')| + D(j,j')`` over
  the runs, their count ``p[k]`` and the start ``l[k]`` of the last run.
  Each step touches only the last run, giving O(n^2 m).

Both take the per-position choice cost and the common-weight table as
parameters; the unweighted problem is the special case with zero choice
cost and ``C`` in place of ``Cw``.  Ties on the minimum go to the smallest
position in both solvers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from numba import njit

from .costs import COST_LIMIT, CostModel
from .errors import CostOverflow, FlavorMismatch, Infeasible, NoCostModel
from .index import CommonalityIndex

_BIG = np.int64(2**62)


@njit(cache=True)
def _split_cases(codes, n, m):
    # order[i', :] lists the positions where S_{i'-1} and S_i' agree (the
    # last run grows), then those where they differ (a new run starts);
    # same_count[i'] is the length of the first group.  The split does not
    # depend on i, and looping over each group separately keeps the hot loop
    # free of a data-dependent branch.
    order = np.zeros((n + 1, m), dtype=np.int64)
    same_count = np.zeros(n + 1, dtype=np.int64)
    for i2 in range(2, n + 1):
        c = 0
        for k in range(1, m + 1):
            if codes[i2 - 1, k] == codes[i2, k]:
                order[i2, c] = k
                c += 1
        same_count[i2] = c
        for k in range(1, m + 1):
            if codes[i2 - 1, k] != codes[i2, k]:
                order[i2, c] = k
                c += 1
    return order, same_count


@njit(cache=True)
def _fast_kernel(codes, R, C, choice, n, m, trace):
    order, same_count = _split_cases(codes, n, m)
    D = np.zeros((n + 1, n + 1), dtype=np.int64)
    K = np.zeros((n + 1, n + 1), dtype=np.int64)
    a = np.zeros(m + 1, dtype=np.int64)
    p = np.zeros(m + 1, dtype=np.int64)
    l = np.zeros(m + 1, dtype=np.int64)
    record = trace.shape[0] > 1
    for i in range(n, 0, -1):
        for k in range(1, m + 1):
            p[k] = 1
            l[k] = i
            # single run (i, i): |com(i,i)| + D(i,i)
            a[k] = C[i, i]
        if record:
            trace[i, i, 0, :] = a
            trace[i, i, 1, :] = p
            trace[i, i, 2, :] = l
        for i2 in range(i + 1, n + 1):
            need = i2 - i + 1
            c_ii = C[i, i2]
            row = order[i2]
            best = _BIG
            best_k = m + 1
            # the last run grows by S_i'; skip positions still common
            for t in range(same_count[i2]):
                k = row[t]
                if R[i, k] >= need:
                    continue
                j = l[k]
                a[k] += (C[j, i2] + D[j, i2]) - (C[j, i2 - 1] + D[j, i2 - 1])
                value = choice[k] + a[k] - p[k] * c_ii
                if value < best or (value == best and k < best_k):
                    best = value
                    best_k = k
            # S_i' starts a new run; these positions are never common
            for t in range(same_count[i2], m):
                k = row[t]
                p[k] += 1
                l[k] = i2
                a[k] += C[i2, i2]
                value = choice[k] + a[k] - p[k] * c_ii
                if value < best or (value == best and k < best_k):
                    best = value
                    best_k = k
            if best_k > m:
                return D, K, i, i2
            D[i, i2] = best
            K[i, i2] = best_k
            # only after D(i,i') is known: single-run positions
            shift = (c_ii + best) - (C[i, i2 - 1] + D[i, i2 - 1])
            for k in range(1, m + 1):
                if R[i, k] >= need:
                    a[k] += shift
            if record:
                trace[i, i2, 0, :] = a
                trace[i, i2, 1, :] = p
                trace[i, i2, 2, :] = l
    return D, K, 0, 0


@njit(cache=True)
def _drss_kernel(codes, R, C, choice, n, m):
    D = np.zeros((n + 1, n + 1), dtype=np.int64)
    K = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i in range(n, 0, -1):
        for i2 in range(i + 1, n + 1):
            need = i2 - i + 1
            c_ii = C[i, i2]
            best = _BIG
            best_k = 0
            for k in range(1, m + 1):
                if R[i, k] >= need:
                    continue
                total = choice[k]
                # scan S_i..S_i' for run boundaries at k
                j = i
                for r in range(i + 1, i2 + 2):
                    if r > i2 or codes[r, k] != codes[r - 1, k]:
                        total += C[j, r - 1] - c_ii + D[j, r - 1]
                        j = r
                if total < best:
                    best = total
                    best_k = k
            if best_k == 0:
                return D, K, i, i2
            D[i, i2] = best
            K[i, i2] = best_k
    return D, K, 0, 0


@dataclass(frozen=True)
class DpTables:
    """Solver output.  ``D`` and ``kstar`` are indexed ``[i, i']``, 1-based."""

    D: np.ndarray
    kstar: np.ndarray
    weighted: bool
    algorithm: str

    @property
    def n(self) -> int:
        return self.D.shape[0] - 1

    def value(self, i: int, i2: int) -> int:
        assert 1 <= i <= i2 <= self.n
        return int(self.D[i, i2])

    def k_star(self, i: int, i2: int) -> int:
        assert 1 <= i < i2 <= self.n
        return int(self.kstar[i, i2])

    def same_values(self, other: "DpTables") -> bool:
        return bool(np.array_equal(np.triu(self.D), np.triu(other.D)))


def _kernel_inputs(ix: CommonalityIndex, weighted: bool):
    t = ix.tuple
    if not weighted:
        return ix.C, np.zeros(t.m + 1, dtype=np.int64)
    if ix.costs is None:
        raise NoCostModel()
    _check_overflow(ix.n, ix.m, ix.costs)
    choice = np.zeros(t.m + 1, dtype=np.int64)
    choice[1:] = ix.costs.choice
    return ix.Cw, choice


def _check_overflow(n: int, m: int, costs: CostModel):
    # loose bound on every intermediate: (n + 1) runs, each worth at most
    # one full automaton (<= n*m edges and < n branching nodes) plus a chain
    top = costs.max_cost
    bound = (n + 1) * (n * m * top + n * top + m * top)
    if bound >= COST_LIMIT:
        raise CostOverflow(f"costs up to {top} may overflow exact 64-bit arithmetic at n={n}, m={m}")


def _finish(ix, D, K, fail_i, fail_i2, weighted, algorithm):
    if fail_i:
        raise Infeasible(f"no uncommon position for strings {fail_i}..{fail_i2}")
    D.flags.writeable = False
    K.flags.writeable = False
    return DpTables(D, K, weighted, algorithm)


_NO_TRACE = np.zeros((1, 1, 1, 1), dtype=np.int64)


def fast_solve(ix: CommonalityIndex) -> DpTables:
    C, choice = _kernel_inputs(ix, False)
    D, K, fi, fi2 = _fast_kernel(ix.tuple.codes, ix.R, C, choice, ix.n, ix.m, _NO_TRACE)
    return _finish(ix, D, K, fi, fi2, False, "fast")


def fast_solve_weighted(ix: CommonalityIndex) -> DpTables:
    C, choice = _kernel_inputs(ix, True)
    D, K, fi, fi2 = _fast_kernel(ix.tuple.codes, ix.R, C, choice, ix.n, ix.m, _NO_TRACE)
    return _finish(ix, D, K, fi, fi2, True, "fast")


def fast_solve_traced(ix: CommonalityIndex, weighted: bool = False):
    """Like :func:`fast_solve` but also returns the scratch arrays.

    The second value is an array ``trace[i, i', row, k]`` holding ``a``,
    ``p`` and ``l`` (rows 0, 1, 2) as they stood once pair ``(i, i')`` was
    fully processed.
    """
    C, choice = _kernel_inputs(ix, weighted)
    n, m = ix.n, ix.m
    trace = np.zeros((n + 1, n + 1, 3, m + 1), dtype=np.int64)
    if n == 1:
        # a length-1 first axis is the kernel's "no trace" signal
        trace = np.zeros((2, 2, 3, m + 1), dtype=np.int64)
    D, K, fi, fi2 = _fast_kernel(ix.tuple.codes, ix.R, C, choice, n, m, trace)
    return _finish(ix, D, K, fi, fi2, weighted, "fast"), trace


def drss_solve(ix: CommonalityIndex) -> DpTables:
    C, choice = _kernel_inputs(ix, False)
    D, K, fi, fi2 = _drss_kernel(ix.tuple.codes, ix.R, C, choice, ix.n, ix.m)
    return _finish(ix, D, K, fi, fi2, False, "drss")


def drss_solve_weighted(ix: CommonalityIndex) -> DpTables:
    C, choice = _kernel_inputs(ix, True)
    D, K, fi, fi2 = _drss_kernel(ix.tuple.codes, ix.R, C, choice, ix.n, ix.m)
    return _finish(ix, D, K, fi, fi2, True, "drss")


SOLVERS = {
    ("fast", False): fast_solve,
    ("fast", True): fast_solve_weighted,
    ("drss", False): drss_solve,
    ("drss", True): drss_solve_weighted,
}


def solve(ix: CommonalityIndex, algorithm: str = "fast", weighted: Optional[bool] = None) -> DpTables:
    if weighted is None:
        weighted = ix.weighted
    try:
        return SOLVERS[algorithm, weighted](ix)
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}") from None


def optimal_total(ix: CommonalityIndex, tables: DpTables, weighted: Optional[bool] = None) -> int:
    """Size (or cost) of an optimal automaton for the whole tuple.

    The common positions of the full tuple form a chain above the root of
    the sub-automaton counted by ``D[1, n]``.
    """
    if weighted is None:
        weighted = tables.weighted
    if weighted != tables.weighted:
        raise FlavorMismatch(
            f"tables are {'weighted' if tables.weighted else 'unweighted'}, "
            f"requested {'weighted' if weighted else 'unweighted'} total"
        )
    n = ix.n
    head = ix.com_weight(1, n) if weighted else ix.com_size(1, n)
    return head + tables.value(1, n)
