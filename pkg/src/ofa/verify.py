"""Randomised cross-checking of both solvers against the oracle."""
from __future__ import annotations

import random
import string
from dataclasses import dataclass, field
from typing import Optional

from .automaton import construct_fa, fa_cost, fa_size, fixed_order_fa, validate_fa
from .costs import CostModel
from .index import build_index
from .oracle import oracle_min_cost, oracle_min_size
from .solver import drss_solve, drss_solve_weighted, fast_solve, fast_solve_weighted, optimal_total
from .tuples import StringTuple

ALPHABET = string.ascii_lowercase + string.ascii_uppercase + string.digits


def random_tuple(rng: random.Random, n: int, m: int, alphabet: int) -> StringTuple:
    """Uniform symbols per cell; a string equal to its predecessor is redrawn."""
    if alphabet < 1 or alphabet > len(ALPHABET):
        raise ValueError(f"alphabet size must be in 1..{len(ALPHABET)}")
    if n > 1 and alphabet ** m < 2:
        raise ValueError("need at least two distinct strings for n > 1")
    symbols = ALPHABET[:alphabet]
    strings: list[str] = []
    while len(strings) < n:
        s = "".join(rng.choice(symbols) for _ in range(m))
        if strings and strings[-1] == s:
            continue
        strings.append(s)
    return StringTuple(tuple(strings))


def random_costs(rng: random.Random, t: StringTuple, low: int = 0, high: int = 5) -> CostModel:
    """Choice cost per position, unify cost per (position, symbol) seen, all in ``[low, high]``."""
    choice = tuple(rng.randint(low, high) for _ in range(t.m))
    unify = {}
    for k in range(1, t.m + 1):
        for sym in sorted({s[k - 1] for s in t.strings}):
            unify[(k, sym)] = rng.randint(low, high)
    return CostModel(choice=choice, unify=unify, unify_default=rng.randint(low, high))


def check_instance(t: StringTuple, costs: Optional[CostModel] = None) -> list[str]:
    """Every disagreement between fast, DRSS, the oracle and the rebuilt automaton."""
    problems = []
    n = t.n
    if costs is None:
        ix = build_index(t)
        fast, drss = fast_solve(ix), drss_solve(ix)
        oracle = oracle_min_size(t)
    else:
        ix = build_index(t, costs)
        fast, drss = fast_solve_weighted(ix), drss_solve_weighted(ix)
        oracle = oracle_min_cost(t, costs)
    if not fast.same_values(drss):
        problems.append("fast and drss D tables differ")
    total_fast, total_drss = optimal_total(ix, fast), optimal_total(ix, drss)
    if not total_fast == total_drss == oracle:
        problems.append(f"optimum: fast={total_fast} drss={total_drss} oracle={oracle}")
    fa = construct_fa(ix, fast)
    report = validate_fa(fa, t)
    if not report.ok:
        problems.append(f"constructed automaton invalid: {report}")
    built = fa_size(fa) if costs is None else fa_cost(fa, costs)
    if built != total_fast:
        problems.append(f"constructed automaton measures {built}, expected {total_fast}")
    if costs is None:
        d = fast.value(1, n)
        unc = ix.unc_positions(1, n)
        lower = len(unc) + n - 1
        trie = fa_size(fixed_order_fa(t))
        if not lower <= d <= trie:
            problems.append(f"D(1,n)={d} outside [{lower}, {trie}]")
    return problems


@dataclass
class VerifyReport:
    trials: int
    passed: int = 0
    failures: list[tuple[int, StringTuple, list[str]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.trials

    def summary(self) -> str:
        lines = [f"{self.passed}/{self.trials} ok"]
        if self.failures:
            seed, t, problems = self.failures[0]
            lines.append(f"first failure: seed={seed} strings={list(t.strings)}")
            lines.extend(f"  {p}" for p in problems)
        return "\n".join(lines)


def trial_instance(seed: int, max_n: int, max_m: int, alphabet: int, weighted: bool):
    """The instance checked by trial ``seed``; reproducible on its own."""
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    size = rng.randint(min(2, alphabet), alphabet)
    t = random_tuple(rng, n, m, size)
    costs = random_costs(rng, t) if weighted else None
    return t, costs


def run_verify(trials: int, max_n: int = 6, max_m: int = 4, alphabet: int = 3,
               seed: int = 0, weighted: bool = False) -> VerifyReport:
    """Trial ``r`` uses seed ``seed + r``; rerun one with ``trials=1``."""
    report = VerifyReport(trials)
    for r in range(trials):
        t, costs = trial_instance(seed + r, max_n, max_m, alphabet, weighted)
        problems = check_instance(t, costs)
        if problems:
            report.failures.append((seed + r, t, problems))
        else:
            report.passed += 1
    return report
