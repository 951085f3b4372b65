import csv
import io
import json

import pytest

from ofa import from_json, parse_tuple, validate_fa
from ofa.cli import main

from .conftest import WORKED


@pytest.fixture
def worked_file(tmp_path):
    path = tmp_path / "worked.txt"
    path.write_text(WORKED)
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("algorithm", ["fast", "drss"])
def test_solve_size(capsys, worked_file, algorithm):
    assert run(capsys, "solve", worked_file, "--algorithm", algorithm) == (0, "10\n", "")


def test_solve_single_line(capsys, tmp_path):
    path = tmp_path / "one.txt"
    path.write_text("abc")
    assert run(capsys, "solve", path)[:2] == (0, "3\n")


def test_solve_dot(capsys, worked_file):
    code, out, _ = run(capsys, "solve", worked_file, "--format", "dot")
    assert code == 0
    assert sum(1 for line in out.splitlines() if "->" in line) == 10


def test_solve_json_to_file(capsys, worked_file, tmp_path):
    target = tmp_path / "fa.json"
    code, out, _ = run(capsys, "solve", worked_file, "--format", "json", "--out", target)
    assert code == 0 and out == ""
    doc = json.loads(target.read_text())
    assert (doc["n"], doc["m"]) == (4, 3)
    assert validate_fa(from_json(target.read_text()), parse_tuple(WORKED)).ok


def test_solve_weighted(capsys, worked_file, tmp_path):
    weights = tmp_path / "w.json"
    weights.write_text(json.dumps({"choice": [1, 1, 1], "unify_default": 1, "unify": []}))
    assert run(capsys, "solve", worked_file, "--weights", weights)[:2] == (0, "12\n")
    assert run(capsys, "solve", worked_file, "--weights", weights, "--algorithm", "drss")[:2] == (0, "12\n")
    weights.write_text(json.dumps({"choice": [0, 0, 0], "unify_default": 1, "unify": [[1, "a", 5], [3, "b", 7]]}))
    code, out, _ = run(capsys, "solve", worked_file, "--weights", weights)
    assert code == 0 and int(out) > 10


def test_solve_dump_index(capsys, worked_file, tmp_path):
    target = tmp_path / "ix.csv"
    assert run(capsys, "solve", worked_file, "--dump-index", target)[0] == 0
    assert target.read_text().startswith("# R\n")


@pytest.mark.parametrize("content", ["ab\nab\n", "abc\nab\n", "", "ab\n\ncd\n"])
def test_solve_bad_input(capsys, tmp_path, content):
    path = tmp_path / "bad.txt"
    path.write_text(content)
    code, out, err = run(capsys, "solve", path)
    assert code == 1 and out == "" and "error" in err


@pytest.mark.parametrize("weights", [
    '{"choice": [1, 1]}',
    '{"choice": [1, -1, 1]}',
    '{"choice": [1, 1, 1], "unify": [[4, "a", 1]]}',
    '{"choice": [1, 1, 1], "bogus": 1}',
    "not json",
])
def test_solve_bad_weights(capsys, worked_file, tmp_path, weights):
    path = tmp_path / "w.json"
    path.write_text(weights)
    assert run(capsys, "solve", worked_file, "--weights", path)[0] == 1


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "solve", tmp_path / "nope.txt")[0] == 1


def test_verify_unweighted(capsys):
    code, out, _ = run(capsys, "verify", "--trials", 500, "--max-n", 6, "--max-m", 4, "--alphabet", 2, "--seed", 7)
    assert code == 0 and out == "500/500 ok\n"


def test_verify_trivial(capsys):
    code, out, _ = run(capsys, "verify", "--trials", 1, "--max-n", 1)
    assert code == 0 and out == "1/1 ok\n"


def test_verify_weighted(capsys):
    code, out, _ = run(capsys, "verify", "--trials", 200, "--weighted", "--seed", 11)
    assert code == 0 and out == "200/200 ok\n"


def test_verify_guards(capsys):
    assert run(capsys, "verify", "--max-n", 13)[0] == 1
    assert run(capsys, "verify", "--alphabet", 1)[0] == 1


def test_verify_failure_exit_code(capsys, monkeypatch):
    import ofa.verify
    monkeypatch.setattr(ofa.verify, "check_instance", lambda t, costs=None: ["boom"])
    code, out, _ = run(capsys, "verify", "--trials", 3, "--seed", 5)
    assert code == 2
    assert out.startswith("0/3 ok\nfirst failure: seed=5")


def test_bench_worked(capsys, worked_file):
    code, out, _ = run(capsys, "bench", "--sizes", "4x3", "--input", worked_file)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [(r["algorithm"], r["result"]) for r in rows] == [("fast", "10"), ("drss", "10")]


def test_bench_input_size_mismatch(capsys, worked_file):
    assert run(capsys, "bench", "--sizes", "5x3", "--input", worked_file)[0] == 1


def test_bench_empty(capsys):
    assert run(capsys, "bench") == (0, "algorithm,n,m,alphabet,seed,wall_time_ns,result\n", "")


def test_bench_csv_file(capsys, tmp_path):
    target = tmp_path / "b.csv"
    code, out, _ = run(capsys, "bench", "--sizes", "20x4,40x4", "--algorithms", "fast", "--csv", target)
    rows = list(csv.DictReader(io.StringIO(target.read_text())))
    assert code == 0 and out == ""
    assert [(r["n"], r["m"], r["algorithm"]) for r in rows] == [("20", "4", "fast"), ("40", "4", "fast")]


def test_bench_unwritable(capsys, tmp_path):
    assert run(capsys, "bench", "--sizes", "4x2", "--csv", tmp_path / "missing" / "x.csv")[0] == 1


def test_bench_bad_algorithm(capsys):
    assert run(capsys, "bench", "--sizes", "4x2", "--algorithms", "slow")[0] == 1


def test_solve_fast_and_drss_agree(capsys, tmp_path):
    import random
    from ofa.verify import random_tuple
    path = tmp_path / "r.txt"
    path.write_text(random_tuple(random.Random(3), 40, 6, 3).serialize())
    assert run(capsys, "solve", path)[1] == run(capsys, "solve", path, "--algorithm", "drss")[1]
