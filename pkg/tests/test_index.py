import pytest
from hypothesis import given

from ofa import CostModel, CostModelMismatch, NoCostModel, build_index

from .conftest import string_tuples


def scan_com(t, i, i2):
    """Positions common to S_i..S_i' by looking at every string."""
    return [k for k in range(1, t.m + 1) if len({t.char_at(r, k) for r in range(i, i2 + 1)}) == 1]


def scan_R(t, i, k):
    length = 1
    while i + length <= t.n and t.char_at(i + length, k) == t.char_at(i, k):
        length += 1
    return length


def test_R_column_worked(worked):
    ix = build_index(worked)
    expected = [scan_R(worked, i, 1) for i in range(1, 5)]
    assert expected == [1, 1, 2, 1]
    assert list(ix.R[1:, 1]) == expected


def test_R_last_row_is_one(worked):
    ix = build_index(worked)
    assert all(ix.R[4, k] == 1 for k in range(1, 4))


def test_com_sizes_worked(worked):
    ix = build_index(worked)
    assert ix.com_size(3, 4) == 2
    assert ix.com_size(1, 4) == 0
    assert ix.com_size(2, 2) == 3


def test_positions_worked(worked):
    ix = build_index(worked)
    assert ix.com_positions(3, 4) == [1, 3]
    assert ix.unc_positions(3, 4) == [2]
    assert ix.com_positions(1, 4) == []
    assert ix.unc_positions(1, 4) == [1, 2, 3]
    for i in range(1, 5):
        assert ix.com_positions(i, i) == [1, 2, 3]
        assert ix.unc_positions(i, i) == []


def test_runs_worked(worked):
    ix = build_index(worked)
    assert list(ix.runs(1, 4, 1)) == [(1, 1, "a"), (2, 2, "b"), (3, 4, "a")]
    assert list(ix.runs(3, 4, 1)) == [(3, 4, "a")]
    assert list(ix.runs(2, 2, 3)) == [(2, 2, "c")]


def test_runs_is_lazy(worked):
    ix = build_index(worked)
    it = ix.runs(1, 4, 2)
    assert next(it) == (1, 1, "a")


def test_last_run_start_worked(worked):
    ix = build_index(worked)
    assert ix.last_run_start(1, 4, 1) == 3
    assert ix.last_run_start(1, 4, 2) == 4
    assert ix.last_run_start(2, 2, 1) == 2


def test_com_weight(worked):
    unit = build_index(worked, CostModel.unit(3))
    assert unit.com_weight(3, 4) == 2
    assert unit.com_weight(2, 2) == 3
    # com(3,4) = {1, 3} with S_3 = "aab": 5 + 7
    costs = CostModel(choice=(0, 0, 0), unify={(1, "a"): 5, (3, "b"): 7}, unify_default=1)
    assert build_index(worked, costs).com_weight(3, 4) == 12


def test_com_weight_requires_costs(worked):
    with pytest.raises(NoCostModel):
        build_index(worked).com_weight(1, 1)


def test_cost_model_dimension_mismatch(worked):
    with pytest.raises(CostModelMismatch):
        build_index(worked, CostModel.unit(2))


def test_dump_csv(worked):
    text = build_index(worked).dump_csv()
    lines = text.splitlines()
    assert lines[0] == "# R"
    assert lines[2] == "1,1,1,1"
    assert lines[4] == "3,2,1,2"
    assert "# C" in lines
    assert lines[-1] == "4,,,,3"


@given(string_tuples())
def test_C_matches_direct_scan(t):
    ix = build_index(t)
    for i in range(1, t.n + 1):
        assert ix.C[i, i] == t.m
        for i2 in range(i, t.n + 1):
            com = scan_com(t, i, i2)
            assert ix.com_size(i, i2) == len(com)
            assert ix.com_positions(i, i2) == com
            assert ix.unc_positions(i, i2) == [k for k in range(1, t.m + 1) if k not in com]
            if i2 < t.n:
                assert ix.C[i, i2 + 1] <= ix.C[i, i2]


@given(string_tuples())
def test_runs_tile_and_alternate(t):
    ix = build_index(t)
    for i in range(1, t.n + 1):
        for i2 in range(i, t.n + 1):
            for k in range(1, t.m + 1):
                runs = list(ix.runs(i, i2, k))
                assert runs[0].start == i and runs[-1].end == i2
                for a, b in zip(runs, runs[1:]):
                    assert b.start == a.end + 1
                    assert a.symbol != b.symbol
                for run in runs:
                    assert {t.char_at(r, k) for r in range(run.start, run.end + 1)} == {run.symbol}
                assert (len(runs) == 1) == ix.is_common(i, i2, k)


@given(string_tuples())
def test_unit_weight_equals_size(t):
    ix = build_index(t, CostModel.unit(t.m))
    n = t.n
    assert all(ix.com_weight(i, j) == ix.com_size(i, j) for i in range(1, n + 1) for j in range(i, n + 1))
