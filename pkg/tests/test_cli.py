import doctest
import json

import pytest

import meshlab.cli
from meshlab.algebra import Poly
from meshlab.cli import (
    format_pattern,
    format_poly,
    format_poly_latex,
    main,
    parse_pattern,
    parse_poly,
)
from meshlab.distributions import Family, family_polynomial
from meshlab.permutations import QuadrantSpec


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_module_doctests():
    assert doctest.testmod(meshlab.cli).failed == 0


# --- polynomial rendering ----------------------------------------------------


def test_format_poly_basic():
    assert format_poly(Poly()) == "0"
    assert format_poly(Poly([1])) == "1"
    assert format_poly(Poly([0, 1])) == "x"
    assert format_poly(Poly([0, 2])) == "2x"
    assert format_poly(Poly([0, 0, 3, 2])) == "x^2(3+2x)"
    assert format_poly(Poly([3, 0, 2])) == "3+2x^2"
    assert format_poly(Poly([0, -1, 1])) == "x(-1+x)"


def test_format_poly_fraction_coefficients():
    from fractions import Fraction

    p = Poly([Fraction(2, 3), 1])
    assert format_poly(p) == "(2/3)+x"
    assert parse_poly(format_poly(p)) == p


@pytest.mark.parametrize("family", list(Family))
def test_format_parse_roundtrip_on_family_rows(family):
    for index in range(family.min_index(), 9):
        poly = family_polynomial(family, index)
        assert parse_poly(format_poly(poly)) == poly


def test_parse_poly_forms():
    assert parse_poly("16x^3(3+8x+6x^2)") == Poly([0, 0, 0, 48, 128, 96])
    assert parse_poly("x") == Poly([0, 1])
    assert parse_poly("0").is_zero()
    assert parse_poly("3x^2+2x^3") == Poly([0, 0, 3, 2])
    assert parse_poly("x(-1+x)") == Poly([0, -1, 1])
    with pytest.raises(ValueError):
        parse_poly("3y^2+?")


def test_format_poly_latex():
    assert format_poly_latex(Poly([0, 0, 3, 2])) == r"x^{2}\left(3+2x\right)"
    assert format_poly_latex(Poly([0, 1])) == "x"


# --- pattern argument --------------------------------------------------------


def test_pattern_parsing():
    assert parse_pattern("1,0,0,0") == QuadrantSpec(1, 0, 0, 0)
    assert parse_pattern("1,0,e,0") == QuadrantSpec(1, 0, None, 0)
    # lenient spellings
    assert parse_pattern("1, 0, empty, 0") == QuadrantSpec(1, 0, None, 0)
    assert parse_pattern("1,0,∅,0") == QuadrantSpec(1, 0, None, 0)
    assert format_pattern(QuadrantSpec(1, 0, None, 0)) == "1,0,e,0"
    with pytest.raises(ValueError):
        parse_pattern("1,0,0")
    with pytest.raises(ValueError):
        parse_pattern("1,0,-2,0")


def test_pattern_roundtrip():
    for spec in (QuadrantSpec(0, 0, 0, 0), QuadrantSpec(2, None, 1, None)):
        assert parse_pattern(format_pattern(spec)) == spec


# --- table command -----------------------------------------------------------


def test_table_plain(capsys):
    code, out, _ = run(capsys, "table", "--family", "A", "--max-index", "2")
    assert code == 0
    polys = [line.split()[-1] for line in out.strip().splitlines()]
    assert polys == ["1", "x", "x^2(3+2x)"]


def test_table_plain_d_row_one(capsys):
    code, out, _ = run(capsys, "table", "--family", "D", "--max-index", "1")
    assert code == 0
    assert out.strip().splitlines() == ["1 1 1"]


def test_table_csv_trivial_row(capsys):
    code, out, _ = run(
        capsys, "table", "--family", "A", "--max-index", "0", "--format", "csv"
    )
    assert code == 0
    assert out.strip().splitlines() == ["index,length,polynomial", "0,0,1"]


def test_table_csv_roundtrip(capsys):
    code, out, _ = run(
        capsys, "table", "--family", "C", "--max-index", "6", "--format", "csv"
    )
    assert code == 0
    for line in out.strip().splitlines()[1:]:
        index, length, poly_text = line.split(",", 2)
        assert parse_poly(poly_text) == family_polynomial(Family.C, int(index))
        assert Family.C.length(int(index)) == int(length)


def test_table_json_roundtrip(capsys):
    code, out, _ = run(
        capsys, "table", "--family", "B", "--max-index", "7", "--format", "json"
    )
    assert code == 0
    records = json.loads(out)
    assert [r["index"] for r in records] == list(range(1, 8))
    for rec in records:
        assert Poly(int(c) for c in rec["coeffs"]) == family_polynomial(
            Family.B, rec["index"]
        )


def test_table_latex(capsys):
    code, out, _ = run(
        capsys, "table", "--family", "A", "--max-index", "2", "--format", "latex"
    )
    assert code == 0
    assert r"A_{4}(x) &= x^{2}\left(3+2x\right) \\" in out


def test_table_cache_write_and_merge(tmp_path, capsys):
    cache = tmp_path / "cache.json"
    code, _, _ = run(
        capsys, "table", "--family", "A", "--max-index", "3", "--cache", str(cache)
    )
    assert code == 0
    code, _, _ = run(
        capsys, "table", "--family", "D", "--max-index", "2", "--cache", str(cache)
    )
    assert code == 0
    records = json.loads(cache.read_text())
    keys = {(r["family"], r["index"]) for r in records}
    assert keys == {("A", 0), ("A", 1), ("A", 2), ("A", 3), ("D", 1), ("D", 2)}
    for rec in records:
        assert rec["provenance"] == "recursion"
        assert all(isinstance(c, str) for c in rec["coeffs"])


def test_table_cache_unwritable_still_prints(tmp_path, capsys):
    bogus = tmp_path / "missing-dir" / "cache.json"
    code, out, err = run(
        capsys, "table", "--family", "A", "--max-index", "1", "--cache", str(bogus)
    )
    assert code == 1
    assert "x" in out  # the table itself was printed
    assert "cache" in err


# --- series command ----------------------------------------------------------


def test_series_family(capsys):
    code, out, _ = run(capsys, "series", "--gf", "A", "--order", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("#")
    values = [line.split(maxsplit=1)[1] for line in lines[1:]]
    assert values == ["1", "0", "x", "0", "x^2(3+2x)"]


def test_series_tanx(capsys):
    code, out, _ = run(capsys, "series", "--gf", "tanx", "--order", "3")
    values = [line.split(maxsplit=1)[1] for line in out.strip().splitlines()[1:]]
    assert code == 0 and values == ["0", "x", "0", "2x^3"]


def test_series_sec_power(capsys):
    code, out, _ = run(capsys, "series", "--gf", "sec^x", "--order", "2")
    values = [line.split(maxsplit=1)[1] for line in out.strip().splitlines()[1:]]
    assert code == 0 and values == ["1", "0", "x"]


def test_series_json(capsys):
    code, out, _ = run(
        capsys, "series", "--gf", "secx", "--order", "4", "--format", "json"
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["coefficients"][4] == ["0", "0", "0", "0", "5"]


def test_series_usage_errors(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["series", "--gf", "cotx", "--order", "3"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["series", "--gf", "A", "--order", "99"])
    assert excinfo.value.code == 2


def test_series_order_cap_is_configurable(capsys, monkeypatch):
    monkeypatch.setenv("MESHLAB_MAX_SERIES_ORDER", "44")
    code, out, _ = run(capsys, "series", "--gf", "tanx", "--order", "42")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("42 ")
    monkeypatch.setenv("MESHLAB_MAX_SERIES_ORDER", "10")
    with pytest.raises(SystemExit) as excinfo:
        main(["series", "--gf", "tanx", "--order", "12"])
    assert excinfo.value.code == 2


# --- brute command -----------------------------------------------------------


def test_brute_plain(capsys):
    code, out, _ = run(
        capsys, "brute", "--length", "4", "--class", "ud", "--pattern", "1,0,0,0"
    )
    assert code == 0
    assert out.strip() == "x^2(3+2x) over 5 permutations"


def test_brute_empty_quadrant(capsys):
    code, out, _ = run(
        capsys, "brute", "--length", "2", "--class", "ud", "--pattern", "1,0,e,0"
    )
    assert code == 0
    assert out.strip() == "x over 1 permutations"


def test_brute_rotated_statistic(capsys):
    code, out, _ = run(
        capsys, "brute", "--length", "3", "--class", "du", "--pattern", "0,1,0,0"
    )
    assert code == 0
    assert out.strip() == "x(1+x) over 2 permutations"


def test_brute_bad_pattern(capsys):
    code, _, err = run(
        capsys, "brute", "--length", "3", "--class", "du", "--pattern", "1,0,0"
    )
    assert code == 2 and "pattern" in err


def test_brute_negative_length_is_usage_error(capsys):
    code, _, err = run(
        capsys, "brute", "--length", "-2", "--class", "ud", "--pattern", "1,0,0,0"
    )
    assert code == 2 and "length" in err


def test_brute_guard_exit_codes(capsys, monkeypatch):
    monkeypatch.setenv("MESHLAB_MAX_BRUTE", "4")
    code, _, err = run(
        capsys, "brute", "--length", "6", "--class", "ud", "--pattern", "1,0,0,0"
    )
    assert code == 3 and "guard" in err
    code, out, _ = run(
        capsys, "brute", "--length", "6", "--class", "ud", "--pattern", "1,0,0,0",
        "--force",
    )
    assert code == 0 and "over 61 permutations" in out


def test_brute_json(capsys):
    code, out, _ = run(
        capsys, "brute", "--length", "3", "--class", "du", "--pattern", "1,0,0,0",
        "--format", "json",
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["coeffs"] == ["0", "1", "1"]
    assert payload["permutations"] == 2


# --- verify command ----------------------------------------------------------


def test_verify_tables(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tables")
    assert code == 0
    assert "28/28" in out


def test_verify_symmetry(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "symmetry", "--max-length", "6"
    )
    assert code == 0


def test_verify_closed_forms_strictness(capsys, tmp_path):
    report = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "verify", "--suite", "closed-forms", "--report", str(report)
    )
    # published-text disagreements are adjudications: informational by default
    assert code == 0
    assert "adjudications agree" in out
    payload = json.loads(report.read_text())
    records = payload[0]["records"]
    assert set(records[0]) == {
        "check", "family", "k", "n", "expected", "actual", "verdict", "variant"
    }
    fails = {(r["family"], r["k"]) for r in records if r["verdict"] == "fail"}
    assert fails == {("A", 3), ("B", 2), ("D", 2), ("D", 3)}
    # under --strict the same disagreements fail the run
    code, _, _ = run(capsys, "verify", "--suite", "closed-forms", "--strict")
    assert code == 1


def test_verify_oracle_small(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "oracle", "--max-length", "8", "--workers", "2"
    )
    assert code == 0


def test_verify_json_format(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "tables", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["suite"] == "tables"
    assert all(r["verdict"] == "pass" for r in payload[0]["records"])


def test_verify_deterministic_output(capsys):
    first = run(capsys, "verify", "--suite", "egf", "--format", "json")
    second = run(capsys, "verify", "--suite", "egf", "--format", "json")
    assert first == second


def test_verify_all_suites(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "all", "--max-length", "6", "--workers", "2"
    )
    assert code == 0
    for suite in ("tables", "symmetry", "oracle", "egf", "coeff-laws", "closed-forms"):
        assert f"suite {suite}: PASS" in out


def test_verify_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "--suite", "everything"])
    assert excinfo.value.code == 2


# --- unimodal command ----------------------------------------------------------


def test_cli_as_a_process():
    # the same surface through a real process, byte-identical across runs
    import subprocess
    import sys

    argv = [sys.executable, "-m", "meshlab.cli", "table", "--family", "A",
            "--max-index", "4", "--format", "csv"]
    first = subprocess.run(argv, capture_output=True, check=True)
    second = subprocess.run(argv, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout.decode().splitlines()[3] == "2,4,x^2(3+2x)"


def test_unimodal(capsys):
    code, out, _ = run(capsys, "unimodal", "--max-index", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 24
    assert all("unimodal" in line for line in lines)
    assert any("mode at x^6" in line for line in lines)
