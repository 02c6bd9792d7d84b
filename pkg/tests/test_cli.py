import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings

from strategies import interval_sets
from sumsetlab.cli import main
from sumsetlab.generators import gen_small_extremal
from sumsetlab.linear_sets import format_set, parse_set

GOLDEN = Path(__file__).parent / "golden"
UPDATE = os.environ.get("SUMSETLAB_UPDATE_GOLDEN") == "1"

FAM = "{0} U [1/10,9/10] U {1}"
SMALL_A, SMALL_B = (format_set(X) for X in gen_small_extremal(3, "1/2", "1/10", "1/10", 1))


def run(*argv, stdin=""):
    out = io.StringIO()
    code = main(list(argv), out=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def check_golden(name: str, data: bytes):
    path = GOLDEN / name
    if UPDATE:
        path.write_bytes(data)
    assert data == path.read_bytes(), f"{name} differs from the golden file"


# -- sum ------------------------------------------------------------------

def test_sum_examples():
    assert run("sum", "[0,1]", "[0,1]") == (0, "[0,2]\n")
    assert run("sum", FAM, FAM) == (0, "{0} U [1/10,19/10] U {2}\n")
    code, out = run("sum", "--format", "json", "[0,1]", "[0,1]")
    assert json.loads(out) == {"intervals": [["0", "2"]]}
    assert run("--decimal", "2", "sum", "[0,1/3]", "[0,1/3]") == (0, "[0.00,0.67]\n")


@pytest.mark.parametrize("bad", ["[1,0]", "[0,1", "[0,x]", "{}"])
def test_sum_input_errors(bad):
    assert run("sum", bad, "[0,1]")[0] == 3


def test_set_sources(tmp_path):
    f = tmp_path / "b.json"
    f.write_text('{"intervals": [["0","1"]]}')
    assert run("sum", "-", f"@{f}", stdin="[0,1/2]\n") == (0, "[0,3/2]\n")
    assert run("sum", "-", "[0,1]", stdin="")[0] == 3
    assert run("sum", "@/nonexistent/file", "[0,1]")[0] == 3


# -- analyze --------------------------------------------------------------

def test_analyze_large_family_golden():
    code, out = run("analyze", FAM, FAM)
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == 1
    assert rep["binding"] == "ruzsa_min" and rep["slack"] == "0"
    assert rep["zones"]["m"] == 0 and rep["K_A"] == 2
    check_golden("analyze_large_family.json", out.encode())


def test_analyze_small_extremal_golden():
    code, out = run("analyze", SMALL_A, SMALL_B)
    assert code == 0
    rep = json.loads(out)
    assert rep["slack"] == "0" and rep["K_A"] == 3
    check_golden("analyze_small_extremal.json", out.encode())


def test_analyze_measure_zero_guard():
    code, out = run("analyze", "{0} U {1/2} U {1}", "[0,1]")
    assert code == 2
    rep = json.loads(out)
    assert rep["bounds"] is None and rep["guards"]


def test_analyze_decimal_view():
    code, out = run("--decimal", "3", "analyze", FAM, FAM)
    assert json.loads(out)["lambda_sum"] == "1.800"


# -- verify ---------------------------------------------------------------

def test_verify_3k4():
    code, out = run("verify", "--theorem", "3k4", FAM, FAM)
    assert code == 0
    rep = json.loads(out)
    assert rep["status"] == "verified"
    assert rep["I"] == ["1/10", "19/10"] and rep["I_length"] == "9/5"
    code, out = run("verify", "--theorem", "3k4", "--format", "text", FAM, FAM)
    assert code == 0 and "I = (1/10, 19/10)" in out


def test_verify_extremal_small():
    code, out = run("verify", "--theorem", "extremal-small", SMALL_A, SMALL_B)
    assert code == 0
    rep = json.loads(out)
    assert rep["recognized"] and rep["parameters"]["K"] == 3 and rep["parameters"]["delta"] == "1/2"
    assert run("verify", "--theorem", "extremal-small", "[0,1]", "[0,1]")[0] == 2


def test_verify_other_theorems():
    assert run("verify", "--theorem", "relaxed", "--m", "0", FAM, FAM)[0] == 0
    assert run("verify", "--theorem", "extremal-large", FAM, FAM)[0] == 0
    assert run("verify", "--theorem", "lemma-mes", "--x", "1/20", FAM, FAM)[0] == 0
    assert run("verify", "--theorem", "lemma-mes", FAM, FAM)[0] == 0
    assert run("verify", "--theorem", "relaxed", "[0,1/4] U [3/4,1]", "[0,1/4] U [3/4,1]")[0] == 2


def test_verify_sweep(tmp_path):
    code, out = run("verify", "--sweep", "20", "--seed", "1", "--repro-dir", str(tmp_path))
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "verified" and rep["failure_count"] == 0
    assert run("verify", "--sweep", "5", "--checks", "nope")[0] == 3


def test_failed_check_writes_reproducer(tmp_path, monkeypatch):
    from sumsetlab import sweep

    monkeypatch.setitem(sweep.CHECKS, "torus", lambda case, stats: ["forced failure"])
    code, out = run("verify", "--sweep", "2", "--checks", "torus", "--repro-dir", str(tmp_path))
    assert code == 1
    rep = json.loads(out)
    repro = Path(rep["reproducer"])
    assert repro.parent == tmp_path and repro.name.startswith("sumsetlab-repro-sweep-")
    saved = json.loads(repro.read_text())
    assert saved["failures"] == ["forced failure"]
    assert parse_set(json.dumps(saved["A"])) is not None


# -- generate -------------------------------------------------------------

def test_generate_families():
    code, out = run("generate", "--family", "freiman_large", "--n", "2", "--m", "2", "--a1", "1/5", "--a2", "1/5")
    assert code == 0 and out.splitlines()[0] == f"A = {FAM}"
    assert "check: lambda(A+A) = 9/5" in out
    code, out = run("generate", "--family", "small_extremal", "--K", "3", "--delta", "1/2",
                    "--b1", "1/5", "--b2", "1/10", "--DB", "1")
    assert code == 0 and "[0,11/20] U [9/10,27/20] U [9/5,43/20]" in out
    code, out = run("generate", "--family", "asymmetric", "--a", "1/5", "--b", "2/25", "--eps", "1/100", "--n", "2")
    assert code == 0
    code, out = run("generate", "--family", "random", "--seed", "1", "--count", "3", "--scale", "1", "--density", "1/2")
    assert code == 0 and out == run("generate", "--family", "random", "--seed", "1", "--count", "3",
                                    "--scale", "1", "--density", "1/2")[1]
    assert run("generate", "--family", "asymmetric", "--a", "1/5", "--b", "1/10", "--eps", "1/100", "--n", "2")[0] == 3


# -- plot -----------------------------------------------------------------

def test_plot_golden(tmp_path):
    target = tmp_path / "fam.svg"
    code, out = run("plot", FAM, FAM, "--out", str(target))
    assert code == 0 and out.strip() == str(target)
    data = target.read_bytes()
    assert data.startswith(b"<?xml") and b"<svg" in data
    check_golden("plot_large_family.svg", data)


def test_plot_is_byte_stable_across_processes(tmp_path):
    paths = []
    for i in range(2):
        p = tmp_path / f"unit{i}.svg"
        subprocess.run([sys.executable, "-m", "sumsetlab", "plot", "[0,1]", "[0,1]", "--out", str(p)], check=True)
        paths.append(p)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_plot_preconditions(tmp_path):
    assert run("plot", "[0,1]", "[0,2]", "--out", str(tmp_path / "x.svg"))[0] == 2
    assert run("plot", "{0} U {1}", "[0,1]", "--out", str(tmp_path / "x.svg"))[0] == 2


def test_analyze_writes_plot(tmp_path):
    target = tmp_path / "a.svg"
    code, out = run("analyze", FAM, FAM, "--plot", str(target))
    assert code == 0 and target.exists()
    assert json.loads(out)["plot"] == str(target)


# -- round trip -----------------------------------------------------------

@settings(max_examples=200)
@given(interval_sets(6))
def test_text_and_json_round_trip(X):
    assert parse_set(format_set(X)) == X
    code, out = run("sum", format_set(X) or "{}", "{0}") if X else (0, "{}\n")
    assert parse_set(out.strip()) == X
