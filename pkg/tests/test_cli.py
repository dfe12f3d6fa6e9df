import csv
import io
import json
import subprocess
import sys

import pytest

from higherkm import cli, suites


def _run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_run_json_lines(capsys):
    code, out, _ = _run(capsys, "run", "residue", "--dim", "2")
    assert code == 0
    lines = [json.loads(x) for x in out.splitlines()]
    assert lines[0]["suite"] == "residue"
    assert lines[-1]["pass"] is True and lines[-1]["checks"] == len(lines) - 2
    for rec in lines[1:-1]:
        assert set(rec) >= {"name", "anchor", "provenance", "inputs", "expected", "actual", "pass"}


def test_deterministic(capsys):
    a = _run(capsys, "run", "extension-check", "--dim", "1", "--samples", "20", "--seed", "5")[1]
    b = _run(capsys, "run", "extension-check", "--dim", "1", "--samples", "20", "--seed", "5")[1]
    assert a == b


def test_csv_and_text(capsys, tmp_path):
    path = tmp_path / "r.csv"
    code, out, _ = _run(capsys, "run", "clifford", "--dim", "2", "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    rows = list(csv.reader(io.StringIO(path.read_text())))
    assert rows[0] == list(cli.COLUMNS) and len(rows) > 1
    code, out, _ = _run(capsys, "run", "clifford", "--dim", "2", "--format", "text")
    assert out.rstrip().endswith("overall: PASS")


def test_failing_record_gives_exit_1(capsys, monkeypatch):
    def bad(spec):
        return [suites.record("x", "a", "derived", {}, 1, 2, False)]
    monkeypatch.setitem(suites.SUITES, "clifford", bad)
    code, out, _ = _run(capsys, "run", "clifford")
    assert code == 1
    assert json.loads(out.splitlines()[-1])["pass"] is False


def test_configuration_errors_exit_2(capsys):
    code, _, err = _run(capsys, "run", "ad-cohomology", "--dim", "2", "--kmax", "0", "--deg-max", "1")
    assert code == 2 and "error" in json.loads(err)
    code, _, err = _run(capsys, "run", "lqt", "--lie", "sl2")
    assert code == 2
    code, _, err = _run(capsys, "run", "hopf-homology", "--lie", "/nonexistent.json")
    assert code == 2


def test_explain(capsys):
    code, out, _ = _run(capsys, "explain", "lqt")
    assert code == 0 and "Loday-Quillen-Tsygan" in out
    code, _, err = _run(capsys, "explain", "bogus")
    assert code == 2 and err


def test_vacuous_samples(capsys):
    code, out, _ = _run(capsys, "run", "lqt", "--samples", "0")
    assert code == 0 and json.loads(out.splitlines()[-1]) == {"checks": 0, "pass": True}


def test_unknown_suite_rejected_by_parser():
    with pytest.raises(SystemExit) as e:
        cli.main(["run", "nope"])
    assert e.value.code == 2


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "higherkm", "explain", "clifford"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout
