import json
import subprocess
import sys
from pathlib import Path

import pytest

from yangbaxter import fixtures as F
from yangbaxter.cli import run
from yangbaxter.documents import dumps
from yangbaxter.report import analyze, without_timing

ROOT = Path(__file__).resolve().parent.parent
FIX = ROOT / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"


def fx(name):
    return str(FIX / f"{name}.json")


def golden_cases():
    commands = {"solution": [("analysis", ["analyze"])],
                "rack": [("check", ["rack", "check"])],
                "brace": [("socle", ["brace", "socle"]), ("commutator", ["brace", "commutator"])]}
    for name, doc in sorted(F.documents().items()):
        for tag, cmd in commands[doc.kind]:
            yield pytest.param(name, tag, cmd, id=f"{name}-{tag}")


@pytest.mark.parametrize("name,tag,cmd", list(golden_cases()))
def test_output_matches_golden(name, tag, cmd):
    code, out = run(cmd + [fx(name)])
    assert code == 0
    if tag == "analysis":
        assert set(out["timing"]) >= {"stats", "retract", "d"}
        out = without_timing(out)
    assert dumps(out) == (GOLDEN / f"{name}.{tag}.json").read_text()


def test_every_golden_file_is_checked():
    expected = {f"{v[0]}.{v[1]}.json" for v in (c.values for c in golden_cases())}
    assert {p.name for p in GOLDEN.glob("*.json")} == expected


def test_analysis_sections():
    rep = without_timing(analyze(F.nc_example()))
    assert rep["nc"]["outcome"] == "satisfied"
    assert rep["nilpotency"]["verdict"] == "not_nilpotent"
    assert rep["lu"]["2"] == [[0, 1], [0, 2], [0, 3]]
    assert rep["lu"]["3"] == [[1, 2, 3]]


def test_validate():
    code, out = run(["validate", fx("z3_example")])
    assert code == 0 and out["valid"]
    code, out = run(["validate", fx("dihedral_quandle_3")])
    assert code == 0 and out["quandle"]


def test_validate_reports_invalid_tables(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": "solution", "n": 2, "lambda": [[0, 1], [0, 1]], "rho": [[0, 0], [1, 1]]}')
    code, out = run(["validate", str(p)])
    assert code == 0 and out["valid"] is False and "error" in out["failure"]


def test_input_errors_exit_two(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{")
    code, out = run(["analyze", str(p)])
    assert code == 2 and out["error"] == "ParseError"
    code, out = run(["analyze", str(tmp_path / "missing.json")])
    assert code == 2 and out["error"] == "FileError"
    code, out = run(["analyze", fx("hol_brace")])
    assert code == 2 and out["error"] == "UsageError"


def test_nc_commands():
    code, out = run(["nc-check", fx("nc_example")])
    assert code == 0 and out["outcome"] == "satisfied" and out["d"] == 2
    code, out = run(["nc-verify", fx("nc_example"), "--Y", "0,2", "--Z", "0,3",
                     "--a", "0", "--b", "0,0"])
    assert code == 0 and out["valid"]
    code, out = run(["nc-verify", fx("nc_example"), "--Y", "0,2", "--Z", "0,3",
                     "--a", "2", "--b", "0"])
    assert code == 2 and out["error"] == "LetterOutsideIntersection"
    code, out = run(["nc-verify", fx("nc_example"), "--Y", "0,9", "--Z", "0,3",
                     "--a", "0", "--b", "0"])
    assert code == 2 and out["error"] == "UsageError"


def test_rack_commands():
    code, out = run(["rack", "check", fx("mpl2_rack")])
    assert code == 0 and out["abelian"] and out["nilpotency_bound"] == 2
    code, out = run(["rack", "classify", fx("swap_rack")])
    assert code == 0 and out["blocks"] == [[0, 1]]
    code, out = run(["rack", "classify", fx("dihedral_quandle_3")])
    assert code == 2 and out["error"] == "ConditionFailure"
    code, out = run(["rack", "build", fx("trivial_quandle_3")])
    assert code == 0 and out["op"] == [[0, 0, 0], [1, 1, 1], [2, 2, 2]]


def test_brace_commands():
    code, out = run(["brace", "commutator", fx("hol_brace")])
    assert code == 0 and out["members"] == [0, 12, 16] and out["mul_normal"] is False
    code, out = run(["brace", "socle", fx("hol_brace")])
    assert code == 0 and out["length"] is None
    code, out = run(["brace", "solution", fx("hol_brace")])
    assert code == 0 and out["kind"] == "solution" and out["n"] == 24


def test_monoid_commands():
    code, out = run(["monoid", "equal", fx("lyubashenko_example"), "--word", "0,1",
                     "--other", "0,0", "--structure"])
    assert code == 0 and out["equal"]
    code, out = run(["monoid", "equal", fx("nc_example"), "--word", "0,2", "--other", "3,0"])
    assert code == 0 and out["equal"] is False
    code, out = run(["monoid", "normalize", fx("z4_example"), "--word", "0,3"])
    assert out["class_size"] == 4 and out["divisors"] == [0, 1, 2, 3]
    code, out = run(["monoid", "divisors", fx("z3_example"), "--word", ""])
    assert out["divisors"] == [] and out["level"] == 0


def test_enumerate_command():
    code, out = run(["enumerate", "--kind", "solutions", "--n", "3", "--count-only"])
    assert code == 0 and out["count"] == 66 and out["items"] == []
    code, first = run(["enumerate", "--kind", "racks", "--n", "3", "--limit", "5"])
    code, rest = run(["enumerate", "--kind", "racks", "--n", "3", "--start", str(first["next"])])
    assert first["count"] + rest["count"] == 13
    assert all(item["kind"] == "rack" for item in first["items"])
    code, out = run(["enumerate", "--kind", "solutions", "--n", "4"])
    assert code == 2 and out["error"] == "EnumerationTooLarge"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "yangbaxter", "nc-check", fx("z3_example")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["outcome"] == "not_satisfied"
