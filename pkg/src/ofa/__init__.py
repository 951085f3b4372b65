"""Minimum-size and minimum-cost factoring automata for ordered string tuples."""
from .automaton import (
    FactoringAutomaton,
    Leaf,
    Node,
    ValidationReport,
    construct_fa,
    fa_cost,
    fa_size,
    fixed_order_fa,
    from_json,
    to_dot,
    to_json,
    validate_fa,
)
from .costs import CostModel, parse_cost_model, read_cost_model
from .errors import (
    AdjacentDuplicate,
    BlankLine,
    CostModelMismatch,
    CostOverflow,
    EmptyInput,
    EmptyString,
    FlavorMismatch,
    InputError,
    InstanceTooLarge,
    NoCostModel,
    OFAError,
    RaggedLengths,
)
from .index import CommonalityIndex, Run, build_index
from .oracle import oracle_min_cost, oracle_min_size
from .solver import (
    DpTables,
    drss_solve,
    drss_solve_weighted,
    fast_solve,
    fast_solve_weighted,
    optimal_total,
    solve,
)
from .tuples import StringTuple, char_at, parse_tuple, read_tuple

__version__ = "0.1.0"
