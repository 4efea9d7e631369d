"""
Command-line surface.

Subcommands: table (family polynomial rows), verify (the verification
suites), series (EGF coefficient views), brute (the enumeration oracle) and
unimodal (conjecture scan).  Exit codes: 0 success, 1 verification failure,
2 usage error, 3 enumeration guard refusal.

Output formats: plain (default), csv, json and latex.  The polynomial
renderer factors out the smallest power of x, the same presentation the
published tables use, and parse_poly reads that form back.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from pathlib import Path

from .algebra import Poly, sec_series, tan_series
from .coeff_laws import unimodality_check
from .distributions import (
    BruteForceLimitError,
    Family,
    cache_record,
    dist_brute,
    egf_family,
    family_polynomial,
    sec_t_power_of_x,
)
from .permutations import DOWN_UP, UP_DOWN, QuadrantSpec
from .verify import SUITE_RUNNERS, is_adjudication, run_suite, write_report

DEFAULT_MAX_SERIES_ORDER = 40
SERIES_ORDER_ENV = "MESHLAB_MAX_SERIES_ORDER"

FORMATS = ("plain", "csv", "json", "latex")


def max_series_order() -> int:
    """Series truncation cap: the env override or the built-in default."""
    raw = os.environ.get(SERIES_ORDER_ENV)
    if raw is None:
        return DEFAULT_MAX_SERIES_ORDER
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{SERIES_ORDER_ENV} must be an integer, got {raw!r}") from exc


# ---------------------------------------------------------------------------
# Polynomial rendering and parsing.
# ---------------------------------------------------------------------------


def _coef_str(c: Fraction) -> str:
    return str(c) if c.denominator == 1 else f"({c})"


def _term(c: Fraction, power: int, var: str) -> str:
    if power == 0:
        return _coef_str(c)
    body = var if power == 1 else f"{var}^{power}"
    if c == 1:
        return body
    if c == -1:
        return f"-{body}"
    return f"{_coef_str(c)}{body}"


def _sum_str(coeffs, var: str) -> str:
    parts = [_term(c, j, var) for j, c in enumerate(coeffs) if c != 0]
    out = parts[0]
    for term in parts[1:]:
        out += term if term.startswith("-") else f"+{term}"
    return out


def format_poly(poly: Poly, var: str = "x") -> str:
    """
    Compact factored form: the smallest power of x is pulled out front.

    >>> format_poly(Poly([0, 0, 3, 2]))
    'x^2(3+2x)'
    >>> format_poly(Poly([0, 2])), format_poly(Poly([1])), format_poly(Poly())
    ('2x', '1', '0')
    """
    if poly.is_zero():
        return "0"
    low = next(i for i, c in enumerate(poly.coeffs) if c)
    inner = poly.coeffs[low:]
    if len(inner) == 1:
        return _term(inner[0], low, var)
    body = _sum_str(inner, var)
    if low == 0:
        return body
    return f"{_term(Fraction(1), low, var)}({body})"


def format_poly_latex(poly: Poly, var: str = "x") -> str:
    """Same factoring, TeX spelling: exponents braced, \\left( ... \\right)."""
    text = format_poly(poly, var)
    text = re.sub(rf"{var}\^(\d+)", rf"{var}^{{\1}}", text)
    return text.replace("(", r"\left(").replace(")", r"\right)")


_MONO_FACTOR = re.compile(r"^(\d*)(x)(?:\^(\d+))?\((.+)\)$")
_TERM = re.compile(r"^([+-]?)(?:\((-?\d+)/(\d+)\)|(\d+))?(x(?:\^(\d+))?)?$")


def _parse_sum(text: str, var: str) -> Poly:
    text = text.replace(var, "x")
    # split into signed terms at top level; coefficients may carry (a/b) parens
    pieces: list[str] = []
    depth = 0
    current = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and current not in ("", "+", "-"):
            pieces.append(current)
            current = ch
        else:
            current += ch
    pieces.append(current)
    total = Poly.zero()
    for piece in pieces:
        m = _TERM.match(piece)
        if not m or piece in ("", "+", "-"):
            raise ValueError(f"cannot parse polynomial term {piece!r}")
        sign, num, den, integer, xpart, power = m.groups()
        if num is not None:
            coeff = Fraction(int(num), int(den))
        elif integer is not None:
            coeff = Fraction(int(integer))
        elif xpart:
            coeff = Fraction(1)
        else:
            raise ValueError(f"cannot parse polynomial term {piece!r}")
        if sign == "-":
            coeff = -coeff
        exponent = 0
        if xpart:
            exponent = int(power) if power else 1
        total = total + Poly.monomial(coeff, exponent)
    return total


def parse_poly(text: str, var: str = "x") -> Poly:
    """
    Inverse of format_poly.

    >>> parse_poly("x^2(3+2x)") == Poly([0, 0, 3, 2])
    True
    >>> parse_poly("0").is_zero()
    True
    """
    text = text.strip().replace(" ", "")
    if not text:
        raise ValueError("empty polynomial text")
    m = _MONO_FACTOR.match(text.replace(var, "x"))
    if m:
        coeff, _, power, inner = m.groups()
        factor = Poly.monomial(
            Fraction(int(coeff)) if coeff else Fraction(1),
            int(power) if power else 1,
        )
        return factor * _parse_sum(inner, "x")
    return _parse_sum(text, var)


# ---------------------------------------------------------------------------
# Pattern argument.
# ---------------------------------------------------------------------------

_EMPTY_SPELLINGS = {"e", "E", "none", "empty", "∅"}


def parse_pattern(text: str) -> QuadrantSpec:
    """
    "a,b,c,d" with nonnegative integers, where "e" (leniently also "empty"
    or the empty-set glyph) marks a quadrant that must stay empty.
    """
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"pattern needs four entries, got {text!r}")
    reqs: list[int | None] = []
    for part in parts:
        if part in _EMPTY_SPELLINGS:
            reqs.append(None)
        else:
            try:
                value = int(part)
            except ValueError as exc:
                raise ValueError(f"bad pattern entry {part!r}") from exc
            if value < 0:
                raise ValueError(f"bad pattern entry {part!r}")
            reqs.append(value)
    return QuadrantSpec(*reqs)


def format_pattern(spec: QuadrantSpec) -> str:
    return ",".join("e" if r is None else str(r) for r in spec.requirements)


# ---------------------------------------------------------------------------
# Commands.
# ---------------------------------------------------------------------------


def _table_rows(family: Family, max_index: int):
    for index in range(family.min_index(), max_index + 1):
        yield index, family.length(index), family_polynomial(family, index)


def cmd_table(args) -> int:
    family = Family(args.family)
    rows = list(_table_rows(family, args.max_index))
    if args.format == "plain":
        for index, length, poly in rows:
            print(f"{index} {length} {format_poly(poly)}")
    elif args.format == "csv":
        print("index,length,polynomial")
        for index, length, poly in rows:
            print(f"{index},{length},{format_poly(poly)}")
    elif args.format == "json":
        print(json.dumps(
            [cache_record(family, i, p, "recursion") for i, _, p in rows], indent=2
        ))
    else:
        for index, length, poly in rows:
            label = f"{family.value}_{{{length}}}(x)"
            print(f"{label} &= {format_poly_latex(poly)} \\\\")
    if args.cache:
        try:
            _update_cache(Path(args.cache), family, rows)
        except OSError as exc:
            print(f"error: cannot write cache {args.cache}: {exc}", file=sys.stderr)
            return 1
    return 0


def _update_cache(path: Path, family: Family, rows) -> None:
    records: list[dict] = []
    if path.exists():
        records = json.loads(path.read_text())
    by_key = {(r["family"], r["index"]): r for r in records}
    for index, _, poly in rows:
        by_key[(family.value, index)] = cache_record(family, index, poly, "recursion")
    merged = [by_key[k] for k in sorted(by_key)]
    path.write_text(json.dumps(merged, indent=2) + "\n")


def cmd_verify(args) -> int:
    try:
        results = run_suite(args.suite, workers=args.workers, max_length=args.max_length)
    except BruteForceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.report:
        write_report(args.report, results)
    if args.format == "json":
        print(json.dumps(
            [{"suite": r.name, "records": r.records} for r in results], indent=2
        ))
    else:
        for result in results:
            print(result.summary())
            for failure in result.failures(include_adjudications=True):
                tag = "adjudication" if is_adjudication(failure) else "FAILURE"
                print(
                    f"  [{tag}] {failure['check']} family={failure['family']} "
                    f"k={failure['k']} n={failure['n']} variant={failure['variant']}: "
                    f"expected {failure['expected']}, got {failure['actual']}"
                )
    ok = all(r.passed_strict if args.strict else r.passed for r in results)
    return 0 if ok else 1


_SERIES = {
    "A": lambda order: egf_family(Family.A, order),
    "B": lambda order: egf_family(Family.B, order),
    "C": lambda order: egf_family(Family.C, order),
    "D": lambda order: egf_family(Family.D, order),
    "secx": sec_series,
    "tanx": tan_series,
    "sec^x": sec_t_power_of_x,
}


def cmd_series(args) -> int:
    series = _SERIES[args.gf](args.order)
    if args.format == "json":
        print(json.dumps(
            {
                "series": args.gf,
                "convention": "coefficient n multiplies t^n/n!",
                "coefficients": [[str(c) for c in p.coeffs] for p in series.coeffs],
            },
            indent=2,
        ))
        return 0
    if args.format == "csv":
        print("n,coefficient")
        for n in range(series.order + 1):
            print(f"{n},{format_poly(series.coefficient(n))}")
        return 0
    print(f"# {args.gf}: coefficient of t^n/n! per row")
    for n in range(series.order + 1):
        poly = series.coefficient(n)
        rendered = (
            format_poly_latex(poly) if args.format == "latex" else format_poly(poly)
        )
        print(f"{n} {rendered}")
    return 0


def cmd_brute(args) -> int:
    cls = UP_DOWN if args.cls == "ud" else DOWN_UP
    try:
        spec = parse_pattern(args.pattern)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        poly = dist_brute(
            args.length, cls, spec, workers=args.workers, force=args.force
        )
    except BruteForceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    count = int(poly(1))
    if args.format == "json":
        print(json.dumps(
            {
                "length": args.length,
                "class": args.cls,
                "pattern": format_pattern(spec),
                "coeffs": [str(c) for c in poly.coeffs],
                "permutations": count,
            },
            indent=2,
        ))
    elif args.format == "csv":
        print("length,class,pattern,polynomial,permutations")
        print(f"{args.length},{args.cls},\"{format_pattern(spec)}\","
              f"{format_poly(poly)},{count}")
    else:
        rendered = format_poly_latex(poly) if args.format == "latex" else format_poly(poly)
        print(f"{rendered} over {count} permutations")
    return 0


def cmd_unimodal(args) -> int:
    counterexample = False
    for family in Family:
        for record in unimodality_check(family, args.max_index):
            ok = record["verdict"] == "pass"
            counterexample |= not ok
            print(
                f"{family.value} index {record['n']}: "
                f"{'unimodal' if ok else 'NOT UNIMODAL'} ({record['variant']})"
            )
    return 1 if counterexample else 0


# ---------------------------------------------------------------------------
# Wiring.
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meshlab",
        description="Exact quadrant marked mesh pattern distributions over "
        "alternating permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="family polynomial table rows")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--max-index", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--cache", help="JSON cache file to create or update")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "--suite", required=True, choices=sorted(SUITE_RUNNERS) + ["all"]
    )
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--strict", action="store_true",
                   help="adjudication disagreements also fail the run")
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", help="EGF coefficients")
    p.add_argument("--gf", required=True, choices=sorted(_SERIES))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("brute", help="exhaustive oracle for one distribution")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True, choices=("ud", "du"))
    p.add_argument("--pattern", required=True, help='e.g. "1,0,0,0" or "1,0,e,0"')
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--force", action="store_true",
                   help="override the enumeration length guard")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("unimodal", help="unimodality scan of the four families")
    p.add_argument("--max-index", type=int, default=8)
    p.set_defaults(func=cmd_unimodal)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "series" and args.order > max_series_order():
        parser.error(f"--order is capped at {max_series_order()}")
    if args.command == "series" and args.order < 0:
        parser.error("--order must be nonnegative")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
