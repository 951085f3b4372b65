"""Factoring automata: data model, reconstruction, validation, output.

An automaton is an ordered tree.  Internal nodes carry a position (1-based)
and an ordered list of ``(symbol, child)`` edges; leaves carry the 1-based
index of the string they represent.  Every leaf sits at depth ``m``.
"""
from __future__ import annotations

import json
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

from .costs import CostModel
from .errors import InputError, NoCostModel
from .index import CommonalityIndex
from .solver import DpTables
from .tuples import StringTuple


@dataclass(eq=True)
class Leaf:
    index: int
    string: str


@dataclass(eq=True)
class Node:
    position: int
    children: list[tuple[str, "FaNode"]] = field(default_factory=list)


FaNode = Union[Node, Leaf]


@dataclass(eq=False)
class FactoringAutomaton:
    root: Node
    n: int
    m: int

    def __eq__(self, other):
        if not isinstance(other, FactoringAutomaton):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and self._shape() == other._shape()

    def _shape(self):
        # pre-order with child labels fixes the tree; avoids recursive __eq__ on deep trees
        return [
            ("leaf", v.index, v.string) if isinstance(v, Leaf)
            else ("node", v.position, tuple(label for label, _ in v.children))
            for v in self.nodes()
        ]

    def nodes(self) -> Iterator[FaNode]:
        """Pre-order, children left to right."""
        stack: list[FaNode] = [self.root]
        while stack:
            node = stack.pop()
            yield node
            if isinstance(node, Node):
                stack.extend(child for _, child in reversed(node.children))

    def leaves(self) -> list[Leaf]:
        return [v for v in self.nodes() if isinstance(v, Leaf)]


class _Builder:
    """Grows a subtree one chain at a time; shared by both constructions."""

    def __init__(self, t: StringTuple):
        self.t = t

    def chain(self, edges, label, positions, string_index):
        # positions are tested in order, each by a single-child node;
        # returns the edge list the next node should hang from, and its label
        s = self.t[string_index]
        for pos in positions:
            node = Node(pos)
            edges.append((label, node))
            label = s[pos - 1]
            edges = node.children
        return edges, label


def construct_fa(ix: CommonalityIndex, tables: DpTables) -> FactoringAutomaton:
    """Rebuild an optimal automaton from the positions recorded in ``tables``.

    Common positions of a subtuple are placed on a chain in ascending order
    before the recorded branching position.  O(nm) work.
    """
    t = ix.tuple
    n, m = t.n, t.m
    build = _Builder(t)
    holder: list[tuple[str, FaNode]] = []
    # (edge list, edge label, first string, last string, chain positions)
    pending = [(holder, "", 1, n, ix.com_positions(1, n))]
    while pending:
        edges, label, j, j2, chain = pending.pop()
        edges, label = build.chain(edges, label, chain, j)
        if j == j2:
            edges.append((label, Leaf(j, t[j])))
            continue
        k = tables.k_star(j, j2)
        branch = Node(k)
        edges.append((label, branch))
        outer = j2 - j + 1
        tasks = []
        for run in ix.runs(j, j2, k):
            inner = run.end - run.start + 1
            # com(run) \ com(j, j2) \ {k}
            extra = [
                h for h in range(1, m + 1)
                if h != k and ix.R[run.start, h] >= inner and ix.R[j, h] < outer
            ]
            tasks.append((branch.children, run.symbol, run.start, run.end, extra))
        # reversed so runs are expanded left to right
        pending.extend(reversed(tasks))
    root = holder[0][1]
    if isinstance(root, Leaf):
        raise AssertionError("automaton root cannot be a leaf when m >= 1")
    return FactoringAutomaton(root, n, m)


def fixed_order_fa(t: StringTuple, order: Optional[Sequence[int]] = None) -> FactoringAutomaton:
    """The ordered trie testing positions in ``order`` (default ``1..m``) on every path."""
    m = t.m
    order = list(range(1, m + 1)) if order is None else list(order)
    if sorted(order) != list(range(1, m + 1)):
        raise ValueError(f"order must be a permutation of 1..{m}")
    holder: list[tuple[str, FaNode]] = []
    pending = [(holder, "", 1, t.n, 0)]
    while pending:
        edges, label, j, j2, depth = pending.pop()
        if depth == m:
            edges.append((label, Leaf(j, t[j])))
            continue
        node = Node(order[depth])
        edges.append((label, node))
        k = order[depth]
        tasks = []
        start = j
        for r in range(j + 1, j2 + 2):
            if r > j2 or t.char_at(r, k) != t.char_at(r - 1, k):
                tasks.append((node.children, t.char_at(start, k), start, r - 1, depth + 1))
                start = r
        pending.extend(reversed(tasks))
    return FactoringAutomaton(holder[0][1], t.n, m)


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "ok" if self.ok else "\n".join(self.violations)


def validate_fa(fa: FactoringAutomaton, t: StringTuple) -> ValidationReport:
    """Check ``fa`` against the definition of a factoring automaton for ``t``."""
    report = ValidationReport()
    bad = report.violations.append
    n, m = t.n, t.m
    if (fa.n, fa.m) != (n, m):
        bad(f"automaton dimensions n={fa.n}, m={fa.m} differ from tuple n={n}, m={m}")
    if not isinstance(fa.root, Node):
        bad("root is a leaf")
        return report

    seen_leaves = 0
    # (node, depth, positions on path so far, produced symbols by position)
    stack = [(fa.root, 0, (), {})]
    while stack:
        node, depth, used, produced = stack.pop()
        if isinstance(node, Leaf):
            seen_leaves += 1
            path = f"path {seen_leaves}"
            if node.index != seen_leaves:
                bad(f"{path}: leaf carries index {node.index}, expected {seen_leaves}")
            if depth != m:
                bad(f"{path}: leaf at depth {depth}, expected {m}")
            if sorted(used) != list(range(1, m + 1)):
                bad(f"{path}: positions tested {sorted(used)} are not 1..{m} once each")
                continue
            word = "".join(produced[k] for k in range(1, m + 1))
            if seen_leaves <= n and word != t[seen_leaves]:
                bad(f"{path} produces {word!r} != S_{seen_leaves} = {t[seen_leaves]!r}")
            if node.string != word:
                bad(f"{path}: leaf string {node.string!r} differs from produced {word!r}")
            continue
        where = f"node at depth {depth} (position {node.position})"
        if not 1 <= node.position <= m:
            bad(f"{where}: position out of range 1..{m}")
            continue
        if node.position in used:
            bad(f"{where}: position {node.position} repeated on a root path")
        if not node.children:
            bad(f"{where}: internal node without children")
        for (a, _), (b, _) in zip(node.children, node.children[1:]):
            if a == b:
                bad(f"{where}: consecutive edges share label {a!r}")
        for label, child in reversed(node.children):
            if not isinstance(label, str) or len(label) != 1:
                bad(f"{where}: edge label {label!r} is not a single symbol")
            stack.append((child, depth + 1, used + (node.position,), {**produced, node.position: label}))
    if seen_leaves != n:
        bad(f"automaton has {seen_leaves} leaves, expected {n}")
    return report


def fa_size(fa: FactoringAutomaton) -> int:
    return sum(len(v.children) for v in fa.nodes() if isinstance(v, Node))


def fa_cost(fa: FactoringAutomaton, costs: Optional[CostModel]) -> int:
    """Choice cost of every branching node plus unify cost of every edge."""
    if costs is None:
        raise NoCostModel()
    total = 0
    for v in fa.nodes():
        if isinstance(v, Node):
            if len(v.children) >= 2:
                total += costs.choice_cost(v.position)
            for label, _ in v.children:
                total += costs.unify_cost(v.position, label)
    return total


def walk(fa: FactoringAutomaton):
    """Yield ``(node, first_leaf, last_leaf, tested_above)`` for every node.

    ``first_leaf..last_leaf`` is the range of strings below the node and
    ``tested_above`` the positions of its strict ancestors.
    """
    spans: dict[int, tuple[int, int]] = {}
    order = []
    stack = [(fa.root, frozenset())]
    while stack:
        node, above = stack.pop()
        order.append((node, above))
        if isinstance(node, Node):
            inner = above | {node.position}
            stack.extend((child, inner) for _, child in reversed(node.children))
    # children appear after parents in pre-order, so fold spans in reverse
    for node, _ in reversed(order):
        if isinstance(node, Leaf):
            spans[id(node)] = (node.index, node.index)
        else:
            first = spans[id(node.children[0][1])][0]
            last = spans[id(node.children[-1][1])][1]
            spans[id(node)] = (first, last)
    for node, above in order:
        first, last = spans[id(node)]
        yield node, first, last, above


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(fa: FactoringAutomaton) -> str:
    lines = ["digraph fa {"]
    edges = []
    ids: dict[int, str] = {}
    for node in fa.nodes():
        name = f"n{len(ids)}"
        ids[id(node)] = name
        if isinstance(node, Leaf):
            lines.append(f"  {name} [shape=box, label={_quote(node.string)}];")
        else:
            lines.append(f"  {name} [shape=circle, label={_quote(f'p={node.position}')}];")
    for node in fa.nodes():
        if isinstance(node, Node):
            for label, child in node.children:
                edges.append(f"  {ids[id(node)]} -> {ids[id(child)]} [label={_quote(label)}];")
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _node_to_obj(root: FaNode):
    def shell(v):
        if isinstance(v, Leaf):
            return {"leaf": v.index, "string": v.string}
        return {"position": v.position, "children": []}

    top = shell(root)
    stack = [(root, top)]
    while stack:
        node, obj = stack.pop()
        if isinstance(node, Node):
            for label, child in node.children:
                child_obj = shell(child)
                obj["children"].append({"label": label, "node": child_obj})
                stack.append((child, child_obj))
    return top


@contextmanager
def _deep_recursion(depth: int):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * depth + 1000))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def to_json(fa: FactoringAutomaton, indent: Optional[int] = None) -> str:
    doc = {"n": fa.n, "m": fa.m, "root": _node_to_obj(fa.root)}
    with _deep_recursion(fa.m):
        return json.dumps(doc, indent=indent, ensure_ascii=False)


def _obj_to_node(obj) -> FaNode:
    def shell(o):
        if not isinstance(o, dict):
            raise InputError(f"automaton node must be an object, got {o!r}")
        if "leaf" in o:
            if not isinstance(o["leaf"], int) or not isinstance(o.get("string"), str):
                raise InputError(f"malformed leaf {o!r}")
            return Leaf(o["leaf"], o["string"])
        if not isinstance(o.get("position"), int) or not isinstance(o.get("children"), list):
            raise InputError("internal node needs integer 'position' and 'children' array")
        return Node(o["position"])

    top = shell(obj)
    stack = [(obj, top)]
    while stack:
        o, node = stack.pop()
        if isinstance(node, Leaf):
            continue
        for edge in o["children"]:
            if not isinstance(edge, dict) or not isinstance(edge.get("label"), str) or "node" not in edge:
                raise InputError(f"malformed edge {edge!r}")
            child = shell(edge["node"])
            node.children.append((edge["label"], child))
            stack.append((edge["node"], child))
    return top


def from_json(text: str) -> FactoringAutomaton:
    with _deep_recursion(10_000):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"automaton is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or not {"n", "m", "root"} <= set(doc):
        raise InputError("automaton document needs 'n', 'm' and 'root'")
    root = _obj_to_node(doc["root"])
    if not isinstance(root, Node):
        raise InputError("automaton root must be an internal node")
    return FactoringAutomaton(root, doc["n"], doc["m"])
