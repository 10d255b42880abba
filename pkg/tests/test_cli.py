import csv
import io
import json
import math
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from tinvariant.cli import main
from tinvariant.errors import DomainError
from tinvariant.fibers import FiberClass
from tinvariant.golden import GoldenNum
from tinvariant.seifert import ParseError, SeifertPresentation, parse_presentation


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# --- parsing -------------------------------------------------------------------

def test_parse_basic():
    p = parse_presentation("-1; (2,1) (2,1) (3,2)")
    assert p == SeifertPresentation(-1, ((2, 1), (2, 1), (3, 2)))


def test_parse_whitespace_and_signs():
    p = parse_presentation("  +3 ;( -2 , 1 )(3,-1)   (5, 2)  ")
    assert p == SeifertPresentation(3, ((-2, 1), (3, -1), (5, 2)))


def test_parse_pads_two_fibers():
    p = parse_presentation("0; (2,1) (2,1)")
    assert p.fibers == ((2, 1), (2, 1), (1, 0))


def test_parse_coprimality_named_per_fiber():
    with pytest.raises(DomainError, match="fiber 1 not coprime"):
        parse_presentation("-1; (2,2) (2,1) (3,2)")
    with pytest.raises(DomainError, match="fiber 3 not coprime"):
        parse_presentation("-1; (2,1) (2,1) (3,6)")


@pytest.mark.parametrize(
    "text, column",
    [
        ("x; (2,1) (2,1) (2,1)", 1),
        ("-1 (2,1) (2,1) (2,1)", 1),
        ("-1; (2,1) (2 1) (2,1)", 11),
        ("-1; (2,1) (2,1) foo", 17),
    ],
)
def test_parse_syntax_error_column(text, column):
    with pytest.raises(ParseError) as info:
        parse_presentation(text)
    assert info.value.column == column
    assert f"column {column}" in str(info.value)


def test_parse_wrong_fiber_count():
    with pytest.raises(ParseError):
        parse_presentation("-1; (2,1)")
    with pytest.raises(ParseError):
        parse_presentation("-1; (2,1) (2,1) (2,1) (2,1)")


fiber = st.tuples(st.integers(-99, 99), st.integers(-99, 99)).filter(lambda f: math.gcd(*f) == 1)


@given(st.integers(-99, 99), fiber, fiber, fiber)
def test_parse_render_parse(b, f1, f2, f3):
    p = SeifertPresentation(b, (f1, f2, f3))
    text = str(p)
    assert parse_presentation(text) == p
    assert str(parse_presentation(text)) == text


# --- commands -------------------------------------------------------------------

def test_compute_text(capsys):
    code, out, _ = run(capsys, "compute", "-1; (2,1) (2,1) (2,1)")
    assert code == 0
    assert "3 + e" in out
    assert "Z_2 x Z_2" in out
    assert "routes agree: yes" in out


def test_compute_json_schema(capsys):
    code, out, _ = run(capsys, "compute", "--format", "json", "-1; (2,1) (2,1) (3,2)")
    assert code == 0
    rec = json.loads(out)
    assert {"presentation", "normalized", "classes", "t", "t_float", "h1"} <= set(rec)
    assert GoldenNum.from_json(rec["t"]) == GoldenNum(3, 2)
    assert rec["h1"] == {"torsion": [8], "free_rank": 0}
    assert rec["routes_agree"] is True
    assert rec["t_float"] == pytest.approx(3 + 2 * 1.6180339887)


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "--format", "csv", "-1; (2,1) (2,1) (5,2)")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["t"] == "2 - e"


def test_compute_lens_form(capsys):
    # "0; (2,1) (3,1)" is L(5,-1), whose class is (0,1)
    code, out, _ = run(capsys, "compute", "--format", "json", "0; (2,1) (3,1)")
    assert code == 0
    rec = json.loads(out)
    assert rec["presentation"] == "0; (2,1) (3,1) (1,0)"
    assert GoldenNum.from_json(rec["t"]) == GoldenNum(2, 1)


def test_invalid_input_exit_1(capsys):
    code, _, err = run(capsys, "compute", "-1; (2,2) (2,1) (3,2)")
    assert code == 1
    assert "fiber 1 not coprime" in err
    code, _, err = run(capsys, "compute", "-1; (2,1) oops")
    assert code == 1
    assert "column" in err


def test_unknown_convention_rejected(capsys):
    with pytest.raises(SystemExit) as info:
        main(["compute", "--convention", "bogus", "-1; (2,1) (2,1) (2,1)"])
    assert info.value.code == 2
    capsys.readouterr()


def test_wrong_convention_reports_disagreement(capsys):
    # a table row on which the literal sign reading gets 2 + e instead of 1
    code, out, _ = run(capsys, "compute", "--convention", "b1-:b-:theorem", "-1; (2,1) (2,1) (4,1)")
    assert code == 2
    assert "routes agree: NO" in out
    assert "t (closed):   2 + e" in out


def test_classify_pair(capsys):
    code, out, _ = run(capsys, "classify", "--format", "json", "5", "2")
    assert code == 0
    rec = json.loads(out)["fibers"][0]
    assert rec["word"] == "ABB"
    assert rec["class"] == str(FiberClass(0, 2))
    assert len(rec["vector"]) == 5


def test_classify_presentation(capsys):
    code, out, _ = run(capsys, "classify", "-1; (2,1) (2,1) (5,2)")
    assert code == 0
    assert "ZeroTwoFibers" in out


def test_classify_bad_pair(capsys):
    code, _, _ = run(capsys, "classify", "4", "2")
    assert code == 1
    code, _, _ = run(capsys, "classify", "a", "b")
    assert code == 1


def test_sweep_text(capsys):
    code, out, _ = run(capsys, "sweep")
    assert code == 0
    assert "364 class triples, 12 distinct values" in out


def test_sweep_csv(capsys, tmp_path):
    target = tmp_path / "sweep.csv"
    code, out, _ = run(capsys, "sweep", "--format", "csv", "-o", str(target))
    assert code == 0 and out == ""
    rows = list(csv.DictReader(target.open()))
    assert list(rows[0]) == ["class1", "class2", "class3", "t_a", "t_b", "t_float"]
    assert len(rows) == 364
    assert len({(r["t_a"], r["t_b"]) for r in rows}) == 12
    # rows come in canonical class order
    keys = [tuple(r[f"class{i}"] for i in (1, 2, 3)) for r in rows]
    assert len(set(keys)) == 364


def test_sweep_report_dir(capsys, tmp_path):
    code, _, _ = run(capsys, "sweep", "--report-dir", str(tmp_path / "rep"))
    assert code == 0
    report = json.loads((tmp_path / "rep" / "reconcile.json").read_text())
    assert report["selected_convention"] == "b1+:b+:proof"
    text = (tmp_path / "rep" / "reconcile.txt").read_text()
    assert "L(2,1)" in text and "L(5,2)" in text


def test_sweep_report_dir_wrong_convention(capsys, tmp_path):
    code, _, err = run(capsys, "sweep", "--convention", "b1-:b-:theorem", "--report-dir", str(tmp_path))
    assert code == 2
    assert "reconcile failed" in err


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [r["t"] for r in rows] == ["3 + e", "1", "3 + e", "2 + 3*e", "3 + 2*e", "2 - e"]
    assert [r["h1"] for r in rows] == ["Z_2 x Z_2", "Z_2 x Z_2", "Z_4", "Z_4", "Z_8", "Z_8"]
    assert all(r["match"] for r in rows)


def test_selfcheck_deterministic(capsys):
    code, out1, _ = run(capsys, "selfcheck", "--format", "json", "--seed", "3")
    assert code == 0
    code, out2, _ = run(capsys, "selfcheck", "--format", "json", "--seed", "3")
    res1, res2 = json.loads(out1), json.loads(out2)
    assert len(res1) == 10
    assert all(r["passed"] for r in res1)
    # details carry wall-clock timings, so compare names and verdicts only
    assert [(r["name"], r["passed"]) for r in res1] == [(r["name"], r["passed"]) for r in res2]


def test_dump_constants_defaults_to_json(capsys):
    code, out, _ = run(capsys, "dump-constants")
    assert code == 0
    data = json.loads(out)
    assert len(data["orbit"]) == 12
    assert len(data["phi_T"]) == 5
    assert all(row["match"] for row in data["printed_correspondence"])


def test_dump_constants_text(capsys):
    code, out, _ = run(capsys, "dump-constants", "--format", "text")
    assert code == 0
    assert out.startswith("phi_E = ")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tinvariant", "compute", "-1; (2,1) (2,1) (4,1)"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "t (tensor):   1" in proc.stdout
