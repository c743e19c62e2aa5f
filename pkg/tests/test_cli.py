import csv
import io as _io
import json
import subprocess
import sys

import numpy as np
import pytest

from structla import io, oracle
from structla.cli import EXIT_BAD_INPUT, EXIT_FAILED, EXIT_INCONSISTENT, EXIT_OK, main
from structla.structured import to_dense


def gen(tmp_path, name, *flags):
    path = tmp_path / name
    assert main(["gen", *flags, "--out", str(path)]) == EXIT_OK
    return path


def test_gen_round_trip(tmp_path):
    path = gen(tmp_path, "t.json", "--structure", "toeplitz", "--m", "4", "--n", "4", "--alpha", "2",
               "--prime", "65537", "--seed", "1")
    g, v = io.load_instance(path)
    assert (g.m, g.n, g.alpha, g.field.p) == (4, 4, 2, 65537)
    io.save_instance(tmp_path / "again.json", g, v)
    assert (tmp_path / "again.json").read_bytes() == path.read_bytes()


def test_gen_wide_cauchy(tmp_path):
    path = gen(tmp_path, "c.json", "--structure", "cauchy", "--m", "3", "--n", "5", "--alpha", "2",
               "--seed", "2", "--wide")
    g, _ = io.load_instance(path)
    assert g.n - oracle.rank(to_dense(g), g.field) >= 2


def test_gen_field_too_small(tmp_path, capsys):
    code = main(["gen", "--structure", "vandermonde", "--m", "10", "--n", "10", "--alpha", "1",
                 "--prime", "7", "--out", str(tmp_path / "x.json")])
    assert code == EXIT_BAD_INPUT
    assert "FieldTooSmall" in capsys.readouterr().err


@pytest.mark.parametrize("structure", ["toeplitz", "vandermonde", "cauchy"])
@pytest.mark.parametrize("rhs", ["random", "zero", "consistent", "none"])
def test_solve_verify(tmp_path, capsys, structure, rhs):
    inst = gen(tmp_path, "i.json", "--structure", structure, "--m", "6", "--n", "9", "--alpha", "3",
               "--seed", "4", "--rhs", rhs)
    sol = tmp_path / "s.json"
    assert main(["solve", str(inst), str(sol)]) == EXIT_OK
    assert main(["verify", str(inst), str(sol)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "FAIL" not in out and "PASS residual" in out and "PASS nullity" in out
    data = json.loads(sol.read_text())
    assert data["status"] == "solved" and data["nullity"] == 3
    assert data["nullspace"]["ell"] == len(data["nullspace"]["t"])
    assert data["kernel_vector"] is not None


def test_identity_instance(tmp_path):
    path = tmp_path / "id.json"
    path.write_text(json.dumps({"format": "structla-instance", "version": 1, "prime": 7,
                                "structure": "toeplitz", "m": 2, "n": 2, "alpha": 1,
                                "G": [[1], [0]], "H": [[1], [0]], "v": [3, 5]}))
    sol = tmp_path / "s.json"
    assert main(["solve", str(path), str(sol)]) == EXIT_OK
    data = json.loads(sol.read_text())
    assert data["u"] == [3, 5] and data["nullity"] == 0 and data["kernel_vector"] is None
    assert main(["verify", str(path), str(sol)]) == EXIT_OK


def test_inconsistent_exit(tmp_path):
    inst = gen(tmp_path, "tall.json", "--structure", "toeplitz", "--m", "9", "--n", "4", "--alpha", "2",
               "--seed", "5")
    sol = tmp_path / "s.json"
    assert main(["solve", str(inst), str(sol)]) == EXIT_INCONSISTENT
    data = json.loads(sol.read_text())
    assert data["status"] == "inconsistent" and data["u"] is None
    assert "nullspace" in data
    assert main(["verify", str(inst), str(sol)]) == EXIT_OK


def _solved(tmp_path):
    inst = gen(tmp_path, "i.json", "--structure", "vandermonde", "--m", "5", "--n", "8", "--alpha", "2",
               "--seed", "6")
    sol = tmp_path / "s.json"
    main(["solve", str(inst), str(sol)])
    return inst, sol


def test_corrupted_u(tmp_path, capsys):
    inst, sol = _solved(tmp_path)
    data = json.loads(sol.read_text())
    data["u"][0] = (data["u"][0] + 1) % 65537
    sol.write_text(json.dumps(data))
    capsys.readouterr()
    assert main(["verify", str(inst), str(sol)]) == EXIT_FAILED
    assert "FAIL residual" in capsys.readouterr().out


def test_corrupted_t(tmp_path, capsys):
    inst, sol = _solved(tmp_path)
    data = json.loads(sol.read_text())
    data["nullspace"]["t"][0] += 8
    sol.write_text(json.dumps(data))
    capsys.readouterr()
    assert main(["verify", str(inst), str(sol)]) == EXIT_FAILED
    assert "FAIL degree_ledger" in capsys.readouterr().out


def test_nullity_field_checked(tmp_path, capsys):
    inst, sol = _solved(tmp_path)
    data = json.loads(sol.read_text())
    data["nullity"] += 1
    sol.write_text(json.dumps(data))
    capsys.readouterr()
    assert main(["verify", str(inst), str(sol)]) == EXIT_FAILED
    assert "FAIL nullity_field" in capsys.readouterr().out


@pytest.mark.parametrize("text", [
    "not json",
    json.dumps({"format": "other"}),
    json.dumps({"format": "structla-instance", "version": 1, "prime": 8, "structure": "toeplitz",
                "m": 1, "n": 1, "alpha": 1, "G": [[1]], "H": [[1]]}),
    json.dumps({"format": "structla-instance", "version": 1, "prime": 7, "structure": "toeplitz",
                "m": 2, "n": 1, "alpha": 1, "G": [[1]], "H": [[1]]}),
    json.dumps({"format": "structla-instance", "version": 1, "prime": 7, "structure": "cauchy",
                "m": 1, "n": 1, "alpha": 1, "G": [[1]], "H": [[1]], "x": [1], "y": [1]}),
    json.dumps({"format": "structla-instance", "version": 1, "prime": 7, "structure": "toeplitz",
                "m": 1, "n": 1, "alpha": 1, "G": [["a"]], "H": [[1]]}),
])
def test_malformed_instance(tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    assert main(["solve", str(path), str(tmp_path / "o.json")]) == EXIT_BAD_INPUT
    assert main(["verify", str(path), str(path)]) == EXIT_BAD_INPUT


def test_missing_file(tmp_path):
    assert main(["solve", str(tmp_path / "nope.json")]) == EXIT_BAD_INPUT


def test_malformed_solution(tmp_path):
    inst, sol = _solved(tmp_path)
    data = json.loads(sol.read_text())
    del data["nullspace"]
    sol.write_text(json.dumps(data))
    assert main(["verify", str(inst), str(sol)]) == EXIT_BAD_INPUT


def test_entries_reduced_on_load(tmp_path):
    path = tmp_path / "i.json"
    path.write_text(json.dumps({"format": "structla-instance", "version": 1, "prime": 7,
                                "structure": "toeplitz", "m": 2, "n": 2, "alpha": 1,
                                "G": [[8], [-7]], "H": [[15], [0]], "v": [10, -2]}))
    g, v = io.load_instance(path)
    assert g.G.ravel().tolist() == [1, 0] and g.H.ravel().tolist() == [1, 0]
    assert v.tolist() == [3, 5]


def test_solution_round_trip(tmp_path):
    inst, sol = _solved(tmp_path)
    g, v = io.load_instance(inst)
    out = io.load_solution(sol, g)
    io.save_solution(tmp_path / "again.json", out, g)
    assert (tmp_path / "again.json").read_bytes() == sol.read_bytes()


def test_deterministic_files(tmp_path):
    a = gen(tmp_path, "a.json", "--structure", "cauchy", "--m", "7", "--n", "7", "--alpha", "2", "--seed", "9")
    b = gen(tmp_path, "b.json", "--structure", "cauchy", "--m", "7", "--n", "7", "--alpha", "2", "--seed", "9")
    assert a.read_bytes() == b.read_bytes()
    main(["solve", str(a), str(tmp_path / "sa.json")])
    main(["solve", str(b), str(tmp_path / "sb.json")])
    assert (tmp_path / "sa.json").read_bytes() == (tmp_path / "sb.json").read_bytes()


def test_bench(capsys):
    assert main(["bench", "--structure", "toeplitz", "--alpha", "4", "--sizes", "128,256,512", "--reps", "1"]) == EXIT_OK
    rows = list(csv.reader(_io.StringIO(capsys.readouterr().out)))
    assert rows[0] == ["structure", "m", "n", "alpha", "phase1_ms", "phase2_ms", "phase3_ms", "total_ms"]
    assert [r[1] for r in rows[1:]] == ["128", "256", "512"]
    totals = [float(r[-1]) for r in rows[1:]]
    assert totals == sorted(totals)


def test_module_entry_point(tmp_path):
    path = tmp_path / "i.json"
    r = subprocess.run([sys.executable, "-m", "structla", "gen", "--structure", "toeplitz", "--m", "3",
                        "--n", "3", "--alpha", "1", "--seed", "0"], capture_output=True, text=True)
    assert r.returncode == 0
    path.write_text(r.stdout)
    assert io.load_instance(path)[0].m == 3
    r = subprocess.run([sys.executable, "-m", "structla", "solve", str(path)], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["status"] == "solved"
