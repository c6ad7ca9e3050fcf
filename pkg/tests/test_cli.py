import csv
import json

import pytest

from jumbled_lab.cli import append_csv, bench_rows, main
from jumbled_lab.conv3sum import brute_force_solve, Conv3SumInstance


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def worked_file(tmp_path):
    p = tmp_path / "x.json"
    p.write_text('{"n": 4, "u": 4, "values": [1, 3, 4, 2]}')
    return p


def test_gen_strong(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--n", 16, "--variant", "strong", "--seed", 7)
    data = json.loads(out)
    assert code == 0 and data["u"] == 16 and len(data["values"]) == 16
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "gen", "--n", 16, "--seed", 7, "--out", a)
    run(capsys, "gen", "--n", 16, "--seed", 7, "--out", b)
    assert a.read_bytes() == b.read_bytes() == out.encode()


def test_gen_planted(capsys):
    _, out, _ = run(capsys, "gen", "--n", 12, "--planted", "yes", "--seed", 3)
    assert brute_force_solve(Conv3SumInstance.from_json(out)) is not None
    _, out, _ = run(capsys, "gen", "--n", 12, "--u", 500, "--planted", "no", "--seed", 3)
    assert brute_force_solve(Conv3SumInstance.from_json(out)) is None
    _, out, _ = run(capsys, "gen", "--n", 5, "--variant", "standard")
    assert json.loads(out)["u"] == 25


@pytest.mark.parametrize("backend", ["naive", "sliding"])
@pytest.mark.parametrize("variant", ["strong", "abc3"])
def test_solve_worked(capsys, worked_file, backend, variant):
    code, out, _ = run(capsys, "solve", worked_file, "--variant", variant, "--backend", backend,
                       "--mode", "verify")
    r = json.loads(out)
    assert code == 0
    assert r["schema"] == 1 and r["agreement"] and r["ji_answer"] == "yes"
    assert r["primes"] == [3, 5] and r["witness_valid"] and r["verification"]["ok"]


def test_solve_no_instance(capsys, tmp_path):
    p = tmp_path / "no.json"
    p.write_text('{"n": 4, "u": 4, "values": [1, 3, 2, 4]}')
    code, out, _ = run(capsys, "solve", p, "--mode", "stats")
    r = json.loads(out)
    assert code == 0 and r["ji_answer"] == "no" and r["matches"] == 0 and r["agreement"]
    assert r["queries"] == 12


def test_solve_usage_errors(capsys, worked_file, tmp_path):
    assert run(capsys, "solve", worked_file, "--backend", "binary")[0] == 2
    assert run(capsys, "solve", worked_file, "--variant", "standard", "--k", 2)[0] == 2
    assert run(capsys, "solve", worked_file, "--k", 1)[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "u": 9, "values": [1, 2]}')
    assert run(capsys, "solve", bad)[0] == 2            # u above the strong bound
    bad.write_text("not json")
    assert run(capsys, "solve", bad)[0] == 2
    assert run(capsys, "solve", tmp_path / "missing.json")[0] == 2


def test_solve_standard(capsys, tmp_path):
    p = tmp_path / "s.json"
    run(capsys, "gen", "--n", 10, "--variant", "standard", "--planted", "yes", "--out", p)
    code, out, _ = run(capsys, "solve", p, "--variant", "standard", "--backend", "naive")
    r = json.loads(out)
    assert code == 0 and r["k"] == 3 and len(r["primes"]) == 3 and r["ji_answer"] == "yes"


def test_solve_artifacts(capsys, worked_file, tmp_path):
    d = tmp_path / "art"
    run(capsys, "solve", worked_file, "--artifacts", d)
    assert (d / "text.txt").read_text() == "$#aaaabbbbbbb#$#aaaaaabbbbbb#$#aaaaaabbb#$"


def test_verify_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--trials", 30, "--n-max", 12)
    s = json.loads(out)
    assert code == 0 and s["ok"] and s["checks"]["match_set"]["passed"] == 30


def test_verify_abc3_and_parallel_identical(capsys):
    _, serial, _ = run(capsys, "verify", "--variant", "abc3", "--trials", 8, "--n-max", 10)
    _, par, _ = run(capsys, "verify", "--variant", "abc3", "--trials", 8, "--n-max", 10,
                    "--parallel", 2)
    assert serial == par and json.loads(serial)["ok"]


def test_verify_corrupted_delta(capsys):
    code, out, _ = run(capsys, "verify", "--variant", "abc3", "--trials", 6, "--n-max", 10,
                       "--delta-factor", 4)
    s = json.loads(out)
    assert code == 4 and not s["ok"]
    assert s["checks"]["hash_balance"]["failed"] == 6
    assert s["failures"][0]["instance"]["values"]


def test_verify_n2_and_guard(capsys):
    code, out, _ = run(capsys, "verify", "--n", 2, "--trials", 3)
    assert code == 0 and json.loads(out)["ok"]
    assert run(capsys, "verify", "--n-max", 500)[0] == 3


def test_bench_rows_and_csv(tmp_path):
    rows, skipped = bench_rows([16, 32], ["naive", "sliding"], "strong", None, 1)
    assert not skipped
    assert [(r["backend"], r["n"]) for r in rows] == [
        ("naive", 16), ("sliding", 16), ("naive", 32), ("sliding", 32)]
    again, _ = bench_rows([16, 32], ["naive", "sliding"], "strong", None, 1)
    stable = ("backend", "n", "k", "s", "queries")
    assert [[r[c] for c in stable] for r in rows] == [[r[c] for c in stable] for r in again]
    out = tmp_path / "bench.csv"
    append_csv(out, rows)
    append_csv(out, again)
    table = list(csv.DictReader(out.open()))
    assert len(table) == 8 and table[0]["backend"] == "naive"


def test_bench_ordering():
    rows, _ = bench_rows([64], ["naive", "sliding"], "strong", None, 2)
    naive, sliding = rows
    assert naive["preprocess_ns"] > 100 * sliding["preprocess_ns"]
    assert naive["query_ns_total"] < sliding["query_ns_total"]


def test_bench_guard_skips(capsys):
    code, out, err = run(capsys, "bench", "--n", "512", "--backend", "naive,sliding")
    assert code == 0 and "skipped naive n=512" in err
    lines = out.strip().splitlines()
    assert len(lines) == 2 and lines[1].startswith("sliding,512,")
