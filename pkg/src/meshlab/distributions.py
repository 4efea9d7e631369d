"""
The four distribution families of the quadrant-I statistic over alternating
permutations, computed by three independent routes:

  * brute force: enumerate the class and histogram the statistic (the oracle);
  * positional recursion on the location of the largest value;
  * truncated EGF arithmetic driven by the linear differential equations.

Family naming: A and B collect up-down permutations of even and odd length,
C and D down-up permutations of even and odd length.  Family index n means
length 2n for A and C, length 2n - 1 for B and D, matching the classical
tables A_{2n}(x), B_{2n-1}(x), C_{2n}(x), D_{2n-1}(x).

Exact throughout: brute-force histograms are machine integers well inside
int64 range (enforced by the length guard), everything else is rational.
"""
from __future__ import annotations

import enum
import json
import os
from concurrent.futures import ThreadPoolExecutor
from functools import cache
from math import comb
from pathlib import Path
from typing import Sequence

import numpy as np

from .algebra import (
    EgfSeries,
    Poly,
    sec_series,
    solve_linear_ode,
    tan_series,
    zigzag_numbers,
)
from .permutations import (
    DOWN_UP,
    UP_DOWN,
    AlternatingClass,
    QuadrantSpec,
    enumerate_alternating,
    mmp_count,
)

MMP_Q1 = QuadrantSpec(1, 0, 0, 0)

UNIT_PATTERNS = {
    "q1": QuadrantSpec(1, 0, 0, 0),
    "q2": QuadrantSpec(0, 1, 0, 0),
    "q3": QuadrantSpec(0, 0, 1, 0),
    "q4": QuadrantSpec(0, 0, 0, 1),
}

# Hard guard for the exhaustive oracle.  Length 14 means ~2 * 10^8 statistic
# evaluations per class; beyond that you must opt in explicitly.
DEFAULT_BRUTE_LIMIT = 14
BRUTE_LIMIT_ENV = "MESHLAB_MAX_BRUTE"


class BruteForceLimitError(RuntimeError):
    """Raised when an enumeration request exceeds the configured guard."""

    def __init__(self, length: int, limit: int):
        super().__init__(
            f"brute-force enumeration of length {length} exceeds the guard "
            f"({limit}); pass force=True or raise {BRUTE_LIMIT_ENV}"
        )
        self.length = length
        self.limit = limit


def brute_force_limit() -> int:
    """Current guard: the MESHLAB_MAX_BRUTE override or the built-in default."""
    raw = os.environ.get(BRUTE_LIMIT_ENV)
    if raw is None:
        return DEFAULT_BRUTE_LIMIT
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{BRUTE_LIMIT_ENV} must be an integer, got {raw!r}") from exc


class Family(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    @property
    def alternating_class(self) -> AlternatingClass:
        return UP_DOWN if self in (Family.A, Family.B) else DOWN_UP

    @property
    def even_length(self) -> bool:
        return self in (Family.A, Family.C)

    def length(self, index: int) -> int:
        """Permutation length for a family index (2n, or 2n - 1 for B and D)."""
        return 2 * index if self.even_length else 2 * index - 1

    def index_for_length(self, length: int) -> int:
        if self.even_length != (length % 2 == 0):
            raise ValueError(f"family {self.value} has no row of length {length}")
        return (length + 1) // 2

    def min_index(self) -> int:
        return 0 if self.even_length else 1


def family_for(length: int, cls: AlternatingClass) -> Family:
    """The family a (length, class) pair contributes to."""
    if length % 2 == 0:
        return Family.A if cls is UP_DOWN else Family.C
    return Family.B if cls is UP_DOWN else Family.D


# ---------------------------------------------------------------------------
# Route 1: positional recursions on the location of the largest value.
#
# With E_m the zigzag numbers (so E_{2k-1} counts up-down words left of the
# peak and E_{2k} counts down-up prefixes):
#
#   A_{2n}(x)   = sum_{k=1}^{n}   C(2n-1, 2k-1) E_{2k-1} x^{2k-1} A_{2n-2k}(x)
#   B_{2n+1}(x) = sum_{k=1}^{n}   C(2n,   2k-1) E_{2k-1} x^{2k-1} B_{2n-2k+1}(x)
#   C_{2n}(x)   = sum_{k=0}^{n-1} C(2n-1, 2k)   E_{2k}   x^{2k}   B_{2n-2k-1}(x)
#   D_{2n+1}(x) = sum_{k=0}^{n}   C(2n,   2k)   E_{2k}   x^{2k}   A_{2n-2k}(x)
#
# seeded by A_0 = 1 and B_1 = 1.  Everything left of the peak matches the
# quadrant-I pattern, hence the plain x-power; everything right contributes
# its own distribution.
# ---------------------------------------------------------------------------


@cache
def a_poly(n: int) -> Poly:
    """Distribution polynomial over up-down permutations of length 2n."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return Poly.one()
    ee = zigzag_numbers(2 * n)
    acc = Poly.zero()
    for k in range(1, n + 1):
        term = a_poly(n - k) * (comb(2 * n - 1, 2 * k - 1) * ee[2 * k - 1])
        acc = acc + term.shift(2 * k - 1)
    return acc


@cache
def b_poly(n: int) -> Poly:
    """Distribution polynomial over up-down permutations of length 2n - 1."""
    if n < 1:
        raise ValueError("index must be at least 1")
    if n == 1:
        return Poly.one()
    m = n - 1  # length is 2m + 1
    ee = zigzag_numbers(2 * m)
    acc = Poly.zero()
    for k in range(1, m + 1):
        term = b_poly(n - k) * (comb(2 * m, 2 * k - 1) * ee[2 * k - 1])
        acc = acc + term.shift(2 * k - 1)
    return acc


@cache
def c_poly(n: int) -> Poly:
    """Distribution polynomial over down-up permutations of length 2n."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return Poly.one()
    ee = zigzag_numbers(2 * n)
    acc = Poly.zero()
    for k in range(0, n):
        term = b_poly(n - k) * (comb(2 * n - 1, 2 * k) * ee[2 * k])
        acc = acc + term.shift(2 * k)
    return acc


@cache
def d_poly(n: int) -> Poly:
    """Distribution polynomial over down-up permutations of length 2n - 1."""
    if n < 1:
        raise ValueError("index must be at least 1")
    if n == 1:
        return Poly.one()
    m = n - 1
    ee = zigzag_numbers(2 * m)
    acc = Poly.zero()
    for k in range(0, m + 1):
        term = a_poly(m - k) * (comb(2 * m, 2 * k) * ee[2 * k])
        acc = acc + term.shift(2 * k)
    return acc


_POLY_BY_FAMILY = {Family.A: a_poly, Family.B: b_poly, Family.C: c_poly, Family.D: d_poly}


def family_polynomial(family: Family, index: int) -> Poly:
    """Recursion-computed distribution polynomial for a family row."""
    return _POLY_BY_FAMILY[family](index)


def a_poly_upto(n: int) -> list[Poly]:
    """A-family rows 0..n (memoised, so this is just a convenience view)."""
    return [a_poly(i) for i in range(n + 1)]


# ---------------------------------------------------------------------------
# Route 2: the exhaustive oracle.
# ---------------------------------------------------------------------------


def _spec_to_req(spec: QuadrantSpec) -> np.ndarray:
    return np.array(
        [-1 if r is None else r for r in spec.requirements], dtype=np.int64
    )


def _prefix_tasks(n: int, cls: AlternatingClass) -> list[tuple[int, int]]:
    # Partition the search space on the first two entries; lexicographic task
    # order keeps merged results identical for any worker count.
    rising = cls.rises_into(1)
    return [
        (v1, v2)
        for v1 in range(1, n + 1)
        for v2 in range(1, n + 1)
        if v1 != v2 and (v1 < v2) == rising
    ]


def _dist_brute_compiled(
    length: int, cls: AlternatingClass, spec: QuadrantSpec, workers: int
) -> Poly:
    from . import _kernel

    req = _spec_to_req(spec)
    rise_parity = 1 if cls is UP_DOWN else 0
    if workers <= 1 or length < 4:
        hist = np.zeros(length + 1, dtype=np.int64)
        _kernel.count_distribution(
            length, rise_parity, req, np.zeros(0, dtype=np.int64), hist
        )
        return Poly(int(c) for c in hist)

    def run(task: tuple[int, int]):
        hist = np.zeros(length + 1, dtype=np.int64)
        _kernel.count_distribution(
            length, rise_parity, req, np.array(task, dtype=np.int64), hist
        )
        return hist

    total = np.zeros(length + 1, dtype=np.int64)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        # map preserves task order; integer sums make the merge associative,
        # so the result is bit-identical to the sequential run.
        for hist in pool.map(run, _prefix_tasks(length, cls)):
            total += hist
    return Poly(int(c) for c in total)


def _dist_brute_python(length: int, cls: AlternatingClass, spec: QuadrantSpec) -> Poly:
    hist = [0] * (length + 1)
    for perm in enumerate_alternating(length, cls):
        hist[mmp_count(perm, spec)] += 1
    return Poly(hist)


def dist_brute(
    length: int,
    cls: AlternatingClass,
    spec: QuadrantSpec,
    *,
    workers: int = 1,
    force: bool = False,
    engine: str = "auto",
) -> Poly:
    """
    The oracle: sum of x^statistic over every alternating permutation of the
    given length and class.

    Lengths above the guard (see brute_force_limit) raise
    BruteForceLimitError unless force=True.  engine selects "compiled"
    (numba kernel, parallelisable by partitioning on the first two entries)
    or "python" (the literal generator fallback, always sequential); "auto"
    prefers the kernel.  Results are identical whichever engine or worker
    count runs.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length == 0:
        return Poly.one()  # empty-permutation convention: one object, statistic 0
    limit = brute_force_limit()
    if length > limit and not force:
        raise BruteForceLimitError(length, limit)

    if engine == "auto":
        from . import _kernel

        engine = "compiled" if _kernel.AVAILABLE else "python"
    if engine == "compiled":
        return _dist_brute_compiled(length, cls, spec, workers)
    if engine == "python":
        return _dist_brute_python(length, cls, spec)
    raise ValueError(f"unknown engine {engine!r}")


# ---------------------------------------------------------------------------
# Route 3: truncated EGF arithmetic.
#
# The generating functions satisfy first-order linear ODEs in t:
#     A' = tan(xt) A         A(0) = 1
#     B' = 1 + tan(xt) B     B(0) = 0
#     C' = sec(xt) B         C(0) = 1
#     D' = sec(xt) A         D(0) = 0
# A and B go through the term-by-term solver; C and D are a product and an
# antiderivative of already-known series.
# ---------------------------------------------------------------------------


def _zero_series(order: int) -> EgfSeries:
    return EgfSeries.constant(Poly.zero(), order)


@cache
def egf_family(family: Family, order: int) -> EgfSeries:
    """
    Truncated series for a family; the t^m/m! coefficient equals the family
    polynomial at the matching length and is zero at the opposite parity.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order == 0:
        start = Poly.one() if family.even_length else Poly.zero()
        return EgfSeries([start])
    tan = tan_series(order - 1)
    if family is Family.A:
        return solve_linear_ode(tan, _zero_series(order - 1), Poly.one(), order)
    if family is Family.B:
        return solve_linear_ode(
            tan, EgfSeries.constant(Poly.one(), order - 1), Poly.zero(), order
        )
    if family is Family.C:
        rhs = sec_series(order - 1) * egf_family(Family.B, order - 1)
        return rhs.integrate(constant=Poly.one())
    rhs = sec_series(order - 1) * egf_family(Family.A, order - 1)
    return rhs.integrate(constant=Poly.zero())


@cache
def sec_xt_power(multiplier: Poly, order: int) -> EgfSeries:
    """
    sec(xt)^alpha as the solution of Y' = multiplier * tan(xt) * Y, Y(0) = 1,
    where multiplier = alpha * x.  The powers used here (alpha in {1/x, -1/x,
    1 + 1/x}) all make the multiplier a genuine polynomial, which keeps every
    series coefficient polynomial in x; the power itself is never formed
    symbolically.
    """
    if order == 0:
        return EgfSeries([Poly.one()])
    f = tan_series(order - 1) * multiplier
    return solve_linear_ode(f, _zero_series(order - 1), Poly.one(), order)


@cache
def sec_t_power_of_x(order: int) -> EgfSeries:
    """
    (sec t)^x: the solution of Y' = x tan(t) Y, Y(0) = 1.  Unlike
    sec_xt_power, the tangent argument here carries no x; its coefficients
    are the bare tangent numbers times the marker x.
    """
    if order == 0:
        return EgfSeries([Poly.one()])
    ee = zigzag_numbers(order - 1)
    f = EgfSeries(
        Poly.monomial(ee[m], 1) if m % 2 == 1 else Poly.zero()
        for m in range(order)
    )
    return solve_linear_ode(f, _zero_series(order - 1), Poly.one(), order)


# ---------------------------------------------------------------------------
# Verification helpers: each returns plain report records
# {check, family, k, n, expected, actual, verdict, variant}.
# ---------------------------------------------------------------------------


def poly_report_str(poly: Poly) -> str:
    """Canonical report form: ascending coefficients as decimal strings."""
    if poly.is_zero():
        return "0"
    return ",".join(str(c) for c in poly.coeffs)


def _stringify(value) -> str:
    if isinstance(value, Poly):
        return poly_report_str(value)
    if isinstance(value, EgfSeries):
        return " | ".join(poly_report_str(c) for c in value.coeffs)
    if isinstance(value, tuple):
        return "(" + ", ".join(_stringify(v) for v in value) + ")"
    return str(value)


def make_record(check, *, family=None, k=None, n=None, expected, actual, variant=None) -> dict:
    return {
        "check": check,
        "family": family.value if isinstance(family, Family) else family,
        "k": k,
        "n": n,
        "expected": _stringify(expected),
        "actual": _stringify(actual),
        "verdict": "pass" if expected == actual else "fail",
        "variant": variant,
    }


# The four equality chains relating the rotated unit statistics to the
# families, one entry per family: which class is summed with which statistic
# to reproduce that family's polynomial.  Reversal preserves the alternating
# class at odd length and swaps it at even length; complementation always
# swaps, which is why the even and odd chains differ.
_SYMMETRY_CHAINS: dict[Family, list[tuple[str, AlternatingClass]]] = {
    Family.A: [("q2", DOWN_UP), ("q4", DOWN_UP), ("q3", UP_DOWN)],
    Family.C: [("q2", UP_DOWN), ("q4", UP_DOWN), ("q3", DOWN_UP)],
    Family.B: [("q2", UP_DOWN), ("q4", DOWN_UP), ("q3", DOWN_UP)],
    Family.D: [("q2", DOWN_UP), ("q4", UP_DOWN), ("q3", UP_DOWN)],
}


def symmetry_suite(max_length: int, *, workers: int = 1) -> list[dict]:
    """
    Brute-force verification of the four reverse/complement equality chains
    for every length up to max_length.  One record per chain member.
    """
    records = []
    for length in range(1, max_length + 1):
        for cls in (UP_DOWN, DOWN_UP):
            family = family_for(length, cls)
            base = dist_brute(length, cls, MMP_Q1, workers=workers)
            for name, other_cls in _SYMMETRY_CHAINS[family]:
                other = dist_brute(length, other_cls, UNIT_PATTERNS[name], workers=workers)
                records.append(
                    make_record(
                        "symmetry-chain",
                        family=family,
                        n=family.index_for_length(length),
                        expected=base,
                        actual=other,
                        variant=f"{UNIT_PATTERNS[name]} over {other_cls.value}",
                    )
                )
    return records


def oracle_equivalence(max_length: int, *, workers: int = 1) -> list[dict]:
    """
    Brute force vs recursion vs EGF coefficient for the quadrant-I statistic,
    every length and class up to max_length.  Two records per pair.
    """
    records = []
    series = {fam: egf_family(fam, max_length) for fam in Family}
    for length in range(1, max_length + 1):
        for cls in (UP_DOWN, DOWN_UP):
            family = family_for(length, cls)
            index = family.index_for_length(length)
            brute = dist_brute(length, cls, MMP_Q1, workers=workers)
            rec = family_polynomial(family, index)
            egf = series[family].coefficient(length)
            records.append(
                make_record(
                    "oracle-vs-recursion", family=family, n=index,
                    expected=brute, actual=rec,
                )
            )
            records.append(
                make_record(
                    "oracle-vs-egf", family=family, n=index,
                    expected=brute, actual=egf,
                )
            )
    return records


def sec_power_identity(max_n: int, *, workers: int = 1) -> list[dict]:
    """
    Check that (sec t)^x expands to the distribution of the pattern that asks
    for a point above-right and an empty lower-left quadrant, over up-down
    permutations of even length 2n, for n <= max_n.
    """
    spec = QuadrantSpec(1, 0, None, 0)
    series = sec_t_power_of_x(2 * max_n)
    records = []
    for n in range(0, max_n + 1):
        expected = series.coefficient(2 * n)
        actual = dist_brute(2 * n, UP_DOWN, spec, workers=workers)
        records.append(
            make_record(
                "sec-power-identity",
                family=Family.A,
                n=n,
                expected=expected,
                actual=actual,
                variant=str(spec),
            )
        )
    return records


def closed_form_series_check(order: int) -> list[dict]:
    """
    Rebuild B, C and D compositionally from sec powers and antiderivatives
    and compare with the ODE route.  The two printed variants of the inner
    exponent in the C double integral disagree; both are evaluated and the
    records name which one the computation confirms.
    """
    if order < 2:
        raise ValueError("need order >= 2 for the composite forms")
    records = []
    one = Poly.one()

    # B = sec(xt)^{1/x} * integral of sec(xz)^{-1/x}
    b_form = sec_xt_power(Poly([1]), order) * sec_xt_power(Poly([-1]), order - 1).integrate()
    records.append(
        make_record(
            "series-closed-form",
            family=Family.B,
            expected=egf_family(Family.B, order),
            actual=b_form,
            variant="sec^(1/x) * int sec^(-1/x)",
        )
    )

    # D = integral of sec(xz)^{1 + 1/x}
    d_form = sec_xt_power(Poly([1, 1]), order - 1).integrate()
    records.append(
        make_record(
            "series-closed-form",
            family=Family.D,
            expected=egf_family(Family.D, order),
            actual=d_form,
            variant="int sec^(1+1/x)",
        )
    )

    # C = 1 + double integral; adjudicate the sign of the inner exponent.
    outer = sec_xt_power(Poly([1, 1]), order - 1)
    for sign, label in ((-1, "inner exponent -1/x"), (+1, "inner exponent +1/x")):
        inner = sec_xt_power(Poly([sign]), order - 2).integrate()
        cand = (outer * inner).integrate(constant=one)
        records.append(
            make_record(
                "c-double-integral",
                family=Family.C,
                expected=egf_family(Family.C, order),
                actual=cand,
                variant=label,
            )
        )
    return records


def confirmed_c_variant(order: int = 10) -> str:
    """Which inner exponent the exact computation confirms for the C form."""
    verdicts = {
        rec["variant"]: rec["verdict"]
        for rec in closed_form_series_check(order)
        if rec["check"] == "c-double-integral"
    }
    confirmed = [v for v, verdict in verdicts.items() if verdict == "pass"]
    if len(confirmed) != 1:
        raise RuntimeError(f"expected exactly one confirmed variant, got {verdicts}")
    return confirmed[0]


# ---------------------------------------------------------------------------
# Polynomial cache file.
# ---------------------------------------------------------------------------


def cache_record(family: Family, index: int, poly: Poly, provenance: str) -> dict:
    """One cache row; coefficients as decimal strings to dodge integer-width loss."""
    if provenance not in ("brute", "recursion", "egf"):
        raise ValueError(f"unknown provenance {provenance!r}")
    return {
        "family": family.value,
        "index": index,
        "length": family.length(index),
        "coeffs": [str(c) for c in poly.coeffs],
        "provenance": provenance,
    }


def build_cache(max_index: int, provenance: str = "recursion") -> list[dict]:
    records = []
    for family in Family:
        for index in range(family.min_index(), max_index + 1):
            records.append(
                cache_record(family, index, family_polynomial(family, index), provenance)
            )
    return records


def save_cache(path: str | Path, records: Sequence[dict]) -> None:
    Path(path).write_text(json.dumps(list(records), indent=2) + "\n")


def load_cache(path: str | Path) -> list[dict]:
    records = json.loads(Path(path).read_text())
    for rec in records:
        rec["coeffs"] = [str(c) for c in rec["coeffs"]]
    return records


def cached_polynomial(record: dict) -> Poly:
    return Poly(int(c) for c in record["coeffs"])
