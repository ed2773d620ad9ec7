import io
import subprocess
import sys

import pytest

from qswitch.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue().splitlines()


def records(lines):
    return [dict(field.split("=", 1) for field in line.split()) for line in lines if "=" in line]


def test_verify_budapest():
    code, lines = run("--structured", "verify", "--switch", "budapest")
    assert code == 0
    recs = records(lines)
    assert {"lambda": "k"} in recs
    assert recs[-1]["verdict"] == "pass"
    assert sum(1 for r in recs if r.get("zero") == "yes") == 7


def test_verify_failures():
    code, lines = run("--structured", "verify", "--switch", "1,k,i,j")
    assert code == 1
    assert any(r.get("zero") == "no" for r in records(lines))
    code, lines = run("--structured", "verify", "--switch", "1,0,0,1")
    assert code == 1
    assert {"units_bc": "no", "invertible": "no", "braid_3x3": "yes"} in records(lines)


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--switch", "1,q"],
        ["verify", "--switch", "nosuch"],
        ["invariant", "--gauss", "O1+U2-"],
        ["invariant", "--braid", "s1 s1"],
        ["invariant", "--gauss", "vtrefoil", "--braid", "trefoil"],
        ["invariant", "--gauss", "vtrefoil", "--levels", "-1"],
        ["invariant", "--gauss", "vtrefoil", "--levels", "3"],
        ["tables", "7"],
        ["frobnicate"],
        ["search", "--config", "/nonexistent.ini"],
    ],
)
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_invariant_outputs():
    code, lines = run("--structured", "invariant", "--gauss", "vtrefoil", "--switch", "budapest", "--levels", "0")
    assert code == 0
    assert records(lines)[0]["delta"] == "t^4+2t^2+1"

    _, lines = run("--structured", "invariant", "--gauss", "kishino3", "--switch", "budapest", "--levels", "0,1")
    assert [r["delta"] for r in records(lines)] == ["0", "2t^4+5t^2+2"]

    _, lines = run("--structured", "invariant", "--braid", "s1 s1 s1", "--strands", "2", "--levels", "0,1")
    recs = records(lines)
    assert [r["delta"] for r in recs] == ["0", "1"]
    assert recs[1]["raw"] == "9"

    _, lines = run("--structured", "invariant", "--gauss", "O1+O2+U1+U2+", "--alexander", "--levels", "0")
    assert records(lines)[0]["delta"] == "l^2*m^2-l^2*m-l*m^2+l+m-1"


def test_text_mode():
    code, lines = run("invariant", "--gauss", "vtrefoil")
    assert code == 0
    assert lines[0].startswith("delta0 = t^4+2t^2+1")


def test_tables_9a_report():
    code, lines = run("tables", "9a")
    recs = records(lines)
    cells = {r["row"]: r for r in recs if "row" in r}
    for row in ("s9-1", "s9-2", "s9-4"):
        assert cells[row]["status"] == "match"
    summary = recs[-1]
    assert code == (0 if summary["status"] == "pass" else 1)


def test_search_integer_preset(tmp_path):
    target = tmp_path / "out.txt"
    code, lines = run("search", "--preset", "integer", "--output", str(target))
    assert code == 0
    assert lines[-1] == "orbits=1"
    assert target.read_text().splitlines() == lines[1:-1]
    assert "budapest_type=yes" in lines[1]


def test_catalog():
    code, lines = run("catalog")
    assert code == 0
    names = {r.get("switch") or r.get("diagram") for r in records(lines)}
    assert {"budapest", "s9-4", "table2-11", "vtrefoil", "kishino1", "figure8"} <= names


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qswitch", "verify", "--switch", "budapest"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "lambda = k" in proc.stdout
