import io
import json
import subprocess
import sys

import pytest

from polyplateau.cli import main, verify_grid
from polyplateau.counting import CountTable, count_dpp_closed


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["count", "-d", "3", "-k", "2", "-n", "5", "--method", "closed"], "6"),
        (["count", "-d", "4", "-k", "1", "-n", "3", "--method", "oracle"], "1"),
        (["count", "-d", "3", "-k", "1", "-n", "2", "--method", "conv"], "1"),
        (["count", "-d", "3", "-k", "2", "-n", "7", "--method", "enum"], "56"),
    ],
)
def test_count(argv, expected):
    assert run(*argv) == (0, expected + "\n")


def test_count_exit_codes(capsys):
    assert run("count", "-d", "2", "-k", "1", "-n", "3")[0] == 2
    assert "error" in capsys.readouterr().err
    code, _ = run("count", "-d", "3", "-k", "2", "-n", "8", "--method", "oracle", "--budget", "5")
    assert code == 3
    assert "budget of 5" in capsys.readouterr().err
    assert run("count", "-d", "3", "-k", "2", "-n", "8", "--method", "enum", "--budget", "5")[0] == 3


def test_budget_env_var(monkeypatch):
    monkeypatch.setenv("POLYPLATEAU_BUDGET", "3")
    assert run("count", "-d", "3", "-k", "2", "-n", "8", "--method", "oracle")[0] == 3


def test_table_csv():
    code, text = run("table", "-d", "3", "--kmax", "2", "--nmax", "6", "--format", "csv")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 3
    assert lines[1] == "0,0,1,2,3,4,5"
    assert CountTable.from_csv(3, text).rows[1] == [count_dpp_closed(3, 2, n) for n in range(7)]


def test_table_json_round_trip():
    code, text = run("table", "-d", "5", "--kmax", "1", "--nmax", "4")
    assert code == 0 and text.splitlines()[-1].endswith(",1")
    code, text = run("table", "-d", "3", "--kmax", "2", "--nmax", "6", "--format", "json")
    _, csv_text = run("table", "-d", "3", "--kmax", "2", "--nmax", "6", "--format", "csv")
    assert CountTable.from_json(text) == CountTable.from_csv(3, csv_text)


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["series", "-d", "3", "--which", "total", "--order", "6"], "0 0 1 2 4 10 27"),
        (["series", "-d", "3", "-k", "1", "--which", "fixed", "--order", "4"], "0 0 1 2 3"),
        (["series", "-d", "4", "--which", "total", "--order", "3"], "0 0 0 1"),
    ],
)
def test_series(argv, expected):
    assert run(*argv) == (0, expected + "\n")


def test_series_json_and_missing_k():
    code, text = run("series", "-d", "3", "-k", "2", "--which", "fixed", "--order", "5", "--format", "json")
    assert code == 0
    assert json.loads(text) == {"d": 3, "k": 2, "order": 5, "coeffs": ["0", "0", "0", "0", "1", "6"]}
    assert run("series", "-d", "3", "--which", "fixed", "--order", "5")[0] == 2


def test_enumerate():
    code, text = run("enumerate", "-d", "3", "-k", "2", "-n", "4")
    lines = [json.loads(x) for x in text.splitlines()]
    assert code == 0 and len(lines) == 2 and lines[-1] == {"count": 1}
    code, text = run("enumerate", "-d", "3", "-k", "1", "-n", "4")
    lines = [json.loads(x) for x in text.splitlines()]
    assert lines[-1] == {"count": 3}
    assert sorted(x["strata"][0]["extents"] for x in lines[:-1]) == [[1, 3], [2, 2], [3, 1]]
    code, text = run("enumerate", "-d", "4", "-k", "1", "-n", "4", "--cells")
    first = json.loads(text.splitlines()[0])
    assert first["d"] == 4 and first["cells"] == sorted(first["cells"])


@pytest.mark.parametrize("d,k,n", [(3, 2, 6), (4, 2, 7), (5, 1, 8)])
def test_enumerate_count_line_matches_closed_form(d, k, n):
    _, text = run("enumerate", "-d", str(d), "-k", str(k), "-n", str(n))
    assert json.loads(text.splitlines()[-1])["count"] == count_dpp_closed(d, k, n)


def test_output_is_deterministic():
    for argv in (["table", "-d", "4", "--kmax", "3", "--nmax", "12"],
                 ["enumerate", "-d", "3", "-k", "2", "-n", "6"],
                 ["verify", "--dmax", "3", "--kmax", "2", "--nmax", "6"]):
        assert run(*argv) == run(*argv)


def test_small_verify_and_below_support_zero():
    report = verify_grid(dmax=4, kmax=3, nmax=8)
    assert report["summary"]["failed"] == 0
    for cell in report["cells"]:
        if cell["n"] < (cell["d"] - 1) * cell["k"]:
            assert set(cell["values"].values()) == {"0"}
        assert {"enumerator", "convolution", "closed_form", "gf_coefficient"} <= set(cell["values"])
        assert "oracle" in cell["values"]


def test_verify_self_test_fails():
    code, text = run("verify", "--dmax", "3", "--kmax", "1", "--nmax", "4", "--self-test")
    assert code == 4
    assert json.loads(text)["summary"]["failed"] == 1


def test_verify_timing_flag():
    _, text = run("verify", "--dmax", "3", "--kmax", "1", "--nmax", "3", "--timing")
    assert "wall_time_s" in json.loads(text)["summary"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polyplateau", "count", "-d", "3", "-k", "2", "-n", "5"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "6\n"
