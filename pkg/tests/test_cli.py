import csv
import io
import json
import subprocess
import sys

import pytest

from glnsw.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main


def run(capsys, *args):
    code = main(list(args))
    return code, capsys.readouterr()


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_usage_errors(capsys):
    assert run(capsys, "gl2-table", "--q", "4")[0] == EXIT_USAGE
    assert run(capsys, "gln-stats", "--q", "15", "--n", "2")[0] == EXIT_USAGE
    assert run(capsys, "gl2-density", "--X", "2")[0] == EXIT_USAGE
    assert run(capsys, "no-such-command")[0] == EXIT_USAGE
    assert run(capsys, "gl2-density", "--jobs", "0")[0] == EXIT_USAGE
    assert EXIT_USAGE != EXIT_CHECK_FAILED


def test_sn_stats(capsys):
    code, out = run(capsys, "sn-stats", "--n", "2", "--n-max", "12", "--format", "csv")
    assert code == EXIT_OK
    rows = csv_rows(out.out)
    assert [r["b_closed"] for r in rows] == [r["b_brute"] for r in rows]
    code, out = run(capsys, "sn-stats", "--n", "1", "--format", "json")
    row = json.loads(out.out)["rows"][0]
    assert row["p"] == 1 and row["proportion"] in (0, 1)


def test_sn_stats_truncation(capsys):
    code, out = run(capsys, "sn-stats", "--n", "10", "--n-max", "30", "--step", "10", "--budget", "1000", "--format", "json")
    report = json.loads(out.out)
    assert [r["proportion"] == "TRUNCATED" for r in report["rows"]] == [False, False, True]
    assert any(v["status"] == "TRUNCATED" for v in report["verdicts"])


def test_gln_stats(capsys):
    code, out = run(capsys, "gln-stats", "--q", "3", "--n", "2", "--format", "json")
    assert json.loads(out.out)["rows"][0]["X_n"] == 8
    code, out = run(capsys, "gln-stats", "--q", "5", "--n", "2", "--format", "json")
    assert json.loads(out.out)["rows"][0]["Y_n"] == 8
    code, out = run(capsys, "gln-stats", "--q", "3", "--n", "6", "--k", "1", "--format", "csv")
    assert csv_rows(out.out)[0]["divisibility_proportion"] == "8/31"
    code, out = run(capsys, "gln-stats", "--q", "3", "--n", "1", "--n-max", "8", "--budget", "1000", "--format", "csv")
    assert [r["status"] for r in csv_rows(out.out)][-1] == "TRUNCATED"


def _table(capsys, q):
    code, out = run(capsys, "gl2-table", "--q", str(q), "--format", "json")
    assert code == EXIT_OK
    return {r["family"]: r for r in json.loads(out.out)["rows"]}


def test_gl2_table(capsys):
    t7 = _table(capsys, 7)
    assert t7["Cuspidal"]["w2_zero"] == "No"
    assert t7["Steinberg twist (psi=quadratic)"]["w2_zero"] == "Yes"
    assert t7["Principal series {1, quadratic}"]["matches_table"] == "out-of-table"
    t3 = _table(capsys, 3)
    assert t3["Principal series chi1(-1)=1"]["w2_zero"] == "Yes"
    t17 = _table(capsys, 17)
    # every w2 row is Yes except PS with chi1(-1) = -1 (m = 10)
    assert {f: r["w2_zero"] for f, r in t17.items() if r["w2_zero"] != "Yes"} == {"Principal series chi1(-1)=-1": "No"}


def test_density_small_snapshot(capsys):
    code, out = run(capsys, "gl2-density", "--X", "30", "--format", "csv")
    rows = csv_rows(out.out)
    assert [int(r["q"]) for r in rows] == [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29]
    assert [int(r["w2_zero"]) for r in rows] == [4, 3, 5, 10, 10, 5, 16, 16, 9, 22, 22, 9]
    assert rows[-1]["global_running_ratio"] == "0.584821"
    assert out.out.count("\r") == 0


def test_json_and_csv_agree(capsys):
    _, a = run(capsys, "gl2-density", "--X", "200", "--format", "csv")
    _, b = run(capsys, "gl2-density", "--X", "200", "--format", "json")
    rows = csv_rows(a.out)
    jrows = json.loads(b.out)["rows"]
    assert len(rows) == len(jrows)
    for r, j in zip(rows, jrows):
        assert {k: str(v) for k, v in j.items()} == r


def test_out_and_determinism(tmp_path):
    paths = []
    for jobs in (1, 8):
        p = tmp_path / f"d{jobs}.csv"
        assert main(["gl2-density", "--X", "3000", "--jobs", str(jobs), "--format", "csv", "--out", str(p)]) == 0
        paths.append(p.read_bytes())
    assert paths[0] == paths[1]
    a = tmp_path / "t1.json"
    b = tmp_path / "t8.json"
    main(["gl2-table", "--q", "3", "--q-max", "60", "--jobs", "1", "--format", "json", "--out", str(a)])
    main(["gl2-table", "--q", "3", "--q-max", "60", "--jobs", "8", "--format", "json", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_verify_paths(capsys):
    code, out = run(capsys, "verify", "--only", "1,2")
    assert code == EXIT_OK
    assert out.out.count("[PASS]") == 2
    code, out = run(capsys, "verify", "--only", "7", "--density-tol", "0")
    assert code == EXIT_CHECK_FAILED
    assert "[FAIL] 7. density limits" in out.out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "glnsw", "gl2-table", "--q", "8"], capture_output=True, text=True)
    assert res.returncode == EXIT_USAGE
    assert "odd" in res.stderr
