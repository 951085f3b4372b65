"""Cost model for the weighted problem.

A branching node labelled ``k`` costs ``choice[k]``; an edge with symbol
``c`` below a node labelled ``k`` costs ``unify_cost(k, c)``.  All costs are
non-negative integers so every comparison downstream is exact.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .errors import CostModelError, CostModelMismatch

# totals are accumulated in int64 kernels; keep every reachable sum below this
COST_LIMIT = 2**62


def _check_cost(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise CostModelError(f"{what}: cost must be an integer, got {value!r}")
    if value < 0:
        raise CostModelError(f"{what}: cost must be non-negative, got {value}")
    if value >= COST_LIMIT:
        raise CostModelError(f"{what}: cost {value} must be below 2**62")
    return value


@dataclass(frozen=True)
class CostModel:
    """Positions in ``choice`` and the ``unify`` keys are 1-based."""

    choice: tuple[int, ...]
    unify: Mapping[tuple[int, str], int] = field(default_factory=dict)
    unify_default: int = 1

    def __post_init__(self):
        object.__setattr__(self, "choice", tuple(self.choice))
        object.__setattr__(self, "unify", dict(self.unify))
        for k, c in enumerate(self.choice, start=1):
            _check_cost(c, f"choice[{k}]")
        _check_cost(self.unify_default, "unify_default")
        for (k, sym), c in self.unify.items():
            if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= self.m:
                raise CostModelMismatch(f"unify position {k!r} outside 1..{self.m}")
            if not isinstance(sym, str) or len(sym) != 1:
                raise CostModelError(f"unify symbol must be a single character, got {sym!r}")
            _check_cost(c, f"unify[{k}, {sym!r}]")

    @property
    def m(self) -> int:
        return len(self.choice)

    def choice_cost(self, k: int) -> int:
        return self.choice[k - 1]

    def unify_cost(self, k: int, symbol: str) -> int:
        return self.unify.get((k, symbol), self.unify_default)

    @property
    def max_cost(self) -> int:
        return max([self.unify_default, *self.choice, *self.unify.values()])

    @classmethod
    def unit(cls, m: int) -> "CostModel":
        """Zero choice cost and unit unify cost: the cost of an FA is its size."""
        return cls(choice=(0,) * m, unify={}, unify_default=1)

    def to_dict(self) -> dict:
        return {
            "choice": list(self.choice),
            "unify_default": self.unify_default,
            "unify": [[k, sym, c] for (k, sym), c in sorted(self.unify.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def cost_model_from_dict(obj) -> CostModel:
    if not isinstance(obj, dict):
        raise CostModelError("cost model must be a JSON object")
    unknown = set(obj) - {"choice", "unify", "unify_default"}
    if unknown:
        raise CostModelError(f"unknown cost model fields: {sorted(unknown)}")
    if not isinstance(obj.get("choice"), list):
        raise CostModelError("cost model needs a 'choice' array")
    unify = {}
    for entry in obj.get("unify", []):
        if not isinstance(entry, list) or len(entry) != 3:
            raise CostModelError(f"unify entries are [position, symbol, cost] triples, got {entry!r}")
        k, sym, c = entry
        if (k, sym) in unify:
            raise CostModelError(f"duplicate unify entry for ({k}, {sym!r})")
        unify[(k, sym)] = c
    return CostModel(
        choice=tuple(obj["choice"]),
        unify=unify,
        unify_default=obj.get("unify_default", 1),
    )


def parse_cost_model(text: str) -> CostModel:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CostModelError(f"cost model is not valid JSON: {exc}") from None
    return cost_model_from_dict(obj)


def read_cost_model(path) -> CostModel:
    with open(path, encoding="utf-8") as fh:
        return parse_cost_model(fh.read())
