"""Exhaustive exact solver used as ground truth.

Searches over every automaton: at a node covering strings ``i..i'`` with
untested positions ``B`` (a bitmask), any position of ``B`` may be tested,
common or not, and the children are forced to be the runs at that
position.  Nothing else is assumed about the shape of an optimum, and run
detection scans the strings directly rather than using the preprocessing.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .costs import CostModel
from .errors import InstanceTooLarge
from .tuples import StringTuple

MAX_N = 12
MAX_M = 20


def _check_guards(t: StringTuple):
    if t.n > MAX_N or t.m > MAX_M:
        raise InstanceTooLarge(f"oracle limited to n <= {MAX_N}, m <= {MAX_M}; got n={t.n}, m={t.m}")


def _split(strings, i, i2, k):
    runs = []
    start = i
    for r in range(i + 1, i2 + 2):
        if r > i2 or strings[r][k] != strings[r - 1][k]:
            runs.append((start, r - 1, strings[start][k]))
            start = r
    return runs


def _search(t: StringTuple, costs: Optional[CostModel]) -> int:
    _check_guards(t)
    n, m = t.n, t.m
    # 1-based rows, 0-based columns
    strings = ("",) + t.strings
    if costs is None:
        unify = lambda k, c: 1  # noqa: E731
        choice = lambda k: 0  # noqa: E731
        infeasible = n * m + 1
    else:
        unify = lambda k, c: costs.unify_cost(k + 1, c)  # noqa: E731
        choice = lambda k: costs.choice_cost(k + 1)  # noqa: E731
        infeasible = n * m * costs.max_cost + n * costs.max_cost + 1

    @lru_cache(maxsize=None)
    def best(i, i2, untested):
        if not untested:
            return 0 if i == i2 else infeasible
        result = infeasible
        for k in range(m):
            if not untested >> k & 1:
                continue
            rest = untested & ~(1 << k)
            runs = _split(strings, i, i2, k)
            total = choice(k) if len(runs) >= 2 else 0
            for j, j2, c in runs:
                total += unify(k, c) + best(j, j2, rest)
                if total >= infeasible:
                    break
            result = min(result, total)
        return result

    value = best(1, n, (1 << m) - 1)
    best.cache_clear()
    return value


def oracle_min_size(t: StringTuple) -> int:
    """Minimum number of edges over all factoring automata for ``t``."""
    return _search(t, None)


def oracle_min_cost(t: StringTuple, costs: CostModel) -> int:
    """Minimum total cost over all factoring automata for ``t``."""
    return _search(t, costs)
