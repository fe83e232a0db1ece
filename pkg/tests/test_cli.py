import csv
import io
import json
import math
import subprocess
import sys

import pytest

from deltoid import cli, special_loci


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def pt(d):
    return complex(d["re"], d["im"])


@pytest.mark.parametrize("x, verdict, value", [("0", "Inside", -27.0), ("3", "On", 0.0), ("4", "Outside", 5.0)])
def test_classify(capsys, x, verdict, value):
    code, out, _ = run(capsys, "--json", "classify", x, "0")
    assert code == 0
    d = json.loads(out)
    assert d["verdict"] == verdict and d["value"] == value
    code, out, _ = run(capsys, "classify", x, "0")
    assert out.startswith(verdict)


def test_global_flags_after_subcommand(capsys):
    code, out, _ = run(capsys, "classify", "0", "0", "--json")
    assert code == 0 and json.loads(out)["verdict"] == "Inside"


@pytest.mark.parametrize("argv", [["classify", "x", "0"], ["classify", "0"], ["bogus"], ["classify", "nan", "0"]])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as e:
        cli.main(argv)
    assert e.value.code == 2


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "1", "0")
    verts = [pt(v) for v in json.loads(out)["vertices"]]
    assert code == 0 and len(verts) == 3
    for want in (1, 1j, -1j):
        assert min(abs(v - want) for v in verts) < 1e-12
    code, out, _ = run(capsys, "solve", "0", "0")
    for v in json.loads(out)["vertices"]:
        assert abs(abs(pt(v)) - 1) < 1e-12 and abs(pt(v) ** 3 - 1) < 1e-12


def test_solve_outside_is_domain_error(capsys):
    code, out, err = run(capsys, "solve", "4", "0")
    assert code == 3 and "OutsideDeltoid" in err and out == ""


@pytest.mark.parametrize("args, want", [(("1", "0", "2"), -1), (("0", "0", "3"), 3), (("1", "0", "0"), 3)])
def test_power(capsys, args, want):
    code, out, _ = run(capsys, "power", *args)
    d = json.loads(out)
    assert code == 0
    assert abs(pt(d["value"]) - want) < 1e-12
    for v in d["algorithms"].values():
        if v is not None:
            assert abs(pt(v) - want) < 1e-12
    assert d["max_disagreement"] < 1e-12


def test_power_reports_all_paths(capsys):
    _, out, _ = run(capsys, "power", "0.3", "0.2", "6")
    algos = json.loads(out)["algorithms"]
    assert all(algos[k] is not None for k in ("roots", "recurrence", "closed_form"))
    _, out, _ = run(capsys, "power", "1", "1", "2")  # outside: formal evaluation only
    d = json.loads(out)
    assert d["algorithms"]["roots"] is None and pt(d["value"]) == -2 + 4j
    code, _, _ = run(capsys, "power", "4", "0", "-1")
    assert code == 3


@pytest.mark.parametrize("n, rows", [(1, 1), (2, 4), (8, 64)])
def test_zeros_csv(capsys, n, rows):
    code, out, _ = run(capsys, "zeros", str(n))
    table = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(table) == rows
    assert list(table[0]) == cli.ZERO_COLUMNS
    if n == 1:
        assert abs(complex(float(table[0]["re"]), float(table[0]["im"]))) < 1e-15
    if n == 2:
        assert any(abs(complex(float(r["re"]), float(r["im"])) - 2) < 1e-15 for r in table)


def test_zeros_csv_round_trip(tmp_path, capsys):
    path = tmp_path / "z.csv"
    assert run(capsys, "--out", str(path), "zeros", "5")[0] == 0
    zl = special_loci.zero_locus(5)
    with open(path, newline="") as fh:
        table = list(csv.DictReader(fh))
    for k, r in enumerate(table):
        assert complex(float(r["re"]), float(r["im"])) == zl.points[k]
        assert (int(r["j1"]), int(r["j2"]), int(r["j3"])) == zl.index_triples[k]
        got = tuple(float(r[f"needle_theta_{i}"]) for i in (1, 2, 3))
        assert got == zl.needle_angles(k)
        assert float(r["pn_abs_residual"]) == zl.residuals[k]


def test_figure_written_and_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run(capsys, "figure", "3", "--out", str(a))[0] == 0
    assert run(capsys, "figure", "crossings", "--n", "8", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert text.count('class="needle"') == 24 and text.count('class="crossing"') == 64


def test_figure_bad_path(capsys, tmp_path):
    code, _, err = run(capsys, "figure", "1", "--out", str(tmp_path / "missing" / "f.svg"))
    assert code == 4 and err


def test_figure_bad_spec(capsys):
    assert run(capsys, "figure", "2", "--samples-per-curve", "3")[0] == 2


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--only", "core.", "--json", "--samples", "100")
    d = json.loads(out)
    assert code == 0 and d["passed"] and all(r["name"].startswith("core.") for r in d["checks"])
    code, out, _ = run(capsys, "verify", "--only", "core.curve", "--tol-override", "0")
    assert code == 1 and "FAIL" in out


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "deltoid", "classify", "3", "0"], capture_output=True, text=True
    )
    assert res.returncode == 0 and res.stdout.startswith("On")


def test_shortest_repr_numbers(capsys):
    _, out, _ = run(capsys, "--json", "classify", "0.1", "0.2")
    d = json.loads(out)
    assert d["point"] == {"re": 0.1, "im": 0.2}
    assert "0.1," in out or "0.1\n" in out
    assert math.isfinite(d["value"])
