"""
Exact arithmetic: dense rational polynomials and truncated exponential
generating functions whose coefficients are polynomials.

Everything here is exact; no floating point enters at any stage.  Rational
coefficients are plain fractions.Fraction values (already normalised to lowest
terms with a positive denominator).

An EgfSeries of order N stores polynomials c_0 .. c_N and denotes
F(t, x) = sum c_n(x) t^n / n!.  Products are therefore binomial convolutions
of the coefficient lists.  Truncation orders are explicit and arithmetic
between series of different orders is an error; call truncate() first when
that is what you mean.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

Rational = Fraction | int


class Poly:
    """
    Dense univariate polynomial with exact rational coefficients, ascending
    powers.  Trailing zeros are trimmed; the zero polynomial stores nothing.

    Immutable by convention: never mutate .coeffs.

    >>> Poly([3, 2]) * Poly.x()
    Poly((0, 3, 2))
    >>> Poly([1, 2]).coefficient(5)
    Fraction(0, 1)
    >>> Poly([0, 0, 3, 2])(1)
    Fraction(5, 1)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> Poly:
        return _ZERO

    @classmethod
    def one(cls) -> Poly:
        return _ONE

    @classmethod
    def x(cls) -> Poly:
        return _X

    @classmethod
    def monomial(cls, coeff: Rational, power: int) -> Poly:
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of x^k; zero beyond the degree."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def shift(self, k: int) -> Poly:
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("shift exponent must be nonnegative")
        if self.is_zero() or k == 0:
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def __add__(self, other: Poly | Rational) -> Poly:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly | Rational) -> Poly:
        return self + (-_coerce(other))

    def __rsub__(self, other: Rational) -> Poly:
        return _coerce(other) + (-self)

    def __mul__(self, other: Poly | Rational) -> Poly:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return _ZERO
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return _ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = _ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, value):
        """Evaluate by Horner's rule.  Works for rationals and for Poly values."""
        result = value * 0  # additive zero of the argument's kind
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == _coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Poly({tuple(int(c) if c.denominator == 1 else c for c in self.coeffs)!r})"


_ZERO = Poly()
_ONE = Poly([1])
_X = Poly([0, 1])


def _coerce(value: Poly | Rational) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly([value])


class EgfSeries:
    """
    Truncated exponential generating function with polynomial coefficients:
    order N means coefficients c_0 .. c_N of t^n / n! are stored exactly.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Poly | Rational]):
        cs = tuple(_coerce(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the order-0 coefficient")
        self.coeffs: tuple[Poly, ...] = cs

    @classmethod
    def constant(cls, value: Poly | Rational, order: int) -> EgfSeries:
        return cls([_coerce(value)] + [_ZERO] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Poly:
        """Coefficient of t^n/n!.  Beyond-truncation queries are errors."""
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def _check_order(self, other: EgfSeries) -> None:
        if self.order != other.order:
            raise ValueError(
                f"mixed truncation orders {self.order} and {other.order}; truncate explicitly"
            )

    def __add__(self, other: EgfSeries) -> EgfSeries:
        self._check_order(other)
        return EgfSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: EgfSeries) -> EgfSeries:
        self._check_order(other)
        return EgfSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other: EgfSeries | Poly | Rational) -> EgfSeries:
        if isinstance(other, (Poly, int, Fraction)):
            factor = _coerce(other)
            return EgfSeries(c * factor for c in self.coeffs)
        self._check_order(other)
        # EGF product: c_n(fg) = sum_k binom(n, k) c_k(f) c_{n-k}(g)
        out = []
        for n in range(self.order + 1):
            acc = _ZERO
            for k in range(n + 1):
                a = self.coeffs[k]
                b = other.coeffs[n - k]
                if a and b:
                    acc = acc + (a * b) * comb(n, k)
            out.append(acc)
        return EgfSeries(out)

    __rmul__ = __mul__

    def differentiate(self) -> EgfSeries:
        """d/dt shifts coefficients left; the order drops by one."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 series")
        return EgfSeries(self.coeffs[1:])

    def integrate(self, constant: Poly | Rational = 0) -> EgfSeries:
        """
        Antiderivative in t with the given value at t = 0; the order rises by
        one (the shifted coefficients are all exactly known).
        """
        return EgfSeries((_coerce(constant),) + self.coeffs)

    def truncate(self, order: int) -> EgfSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return EgfSeries(self.coeffs[: order + 1])

    def at_x(self, value: Rational) -> list[Fraction]:
        """Specialise the marker variable, e.g. at_x(1) for plain counting."""
        return [c(Fraction(value)) for c in self.coeffs]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EgfSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"EgfSeries(order={self.order})"


def solve_linear_ode(
    f: EgfSeries, g: EgfSeries, y0: Poly | Rational, order: int
) -> EgfSeries:
    """
    Unique truncated solution of Y' = f Y + g with Y(0) = y0.

    Term by term: c_0 = y0 and c_{n+1} = sum_k binom(n, k) f_k c_{n-k} + g_n,
    so f and g only need coefficients through order - 1.  The residual
    Y' - f Y - g vanishes identically through order - 1, which tests verify
    in exact arithmetic.
    """
    if order > 0 and (f.order < order - 1 or g.order < order - 1):
        raise ValueError(f"f and g must be defined through order {order - 1}")
    coeffs = [_coerce(y0)]
    for n in range(order):
        acc = g.coeffs[n]
        for k in range(n + 1):
            fk = f.coeffs[k]
            cnk = coeffs[n - k]
            if fk and cnk:
                acc = acc + (fk * cnk) * comb(n, k)
        coeffs.append(acc)
    return EgfSeries(coeffs)


# Zigzag numbers E_n (OEIS A000111): 1, 1, 1, 2, 5, 16, 61, 272, 1385, ...
# E_n counts the alternating permutations of length n; the even-indexed values
# are the secant numbers (A000364) and the odd-indexed ones the tangent
# numbers (A000182).  Computed by the boustrophedon (Seidel triangle)
# recurrence: integer additions only, no series inversion.
_zigzag: list[int] = [1]
_seidel_row: list[int] = [1]


def zigzag_numbers(n: int) -> list[int]:
    """
    The zigzag numbers E_0 .. E_n.

    >>> zigzag_numbers(10)
    [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    global _seidel_row
    while len(_zigzag) <= n:
        m = len(_zigzag)
        row = [0]
        for k in range(m):
            row.append(row[-1] + _seidel_row[m - 1 - k])
        _seidel_row = row
        _zigzag.append(row[-1])
    return _zigzag[: n + 1]


def tangent_number(m: int) -> int:
    """B_{m}(1) for odd m: the number of up-down permutations of odd length m."""
    if m % 2 == 0 or m < 1:
        raise ValueError(f"tangent numbers live at odd indices, got {m}")
    return zigzag_numbers(m)[m]


def secant_number(m: int) -> int:
    """A_{m}(1) for even m: the number of up-down permutations of even length m."""
    if m % 2 == 1 or m < 0:
        raise ValueError(f"secant numbers live at even indices, got {m}")
    return zigzag_numbers(m)[m]


def tan_series(order: int) -> EgfSeries:
    """
    tan(xt) as a truncated EGF: the t^m/m! coefficient is E_m x^m for odd m
    and zero for even m.

    >>> tan_series(4).coefficient(3)
    Poly((0, 0, 0, 2))
    """
    ee = zigzag_numbers(order)
    return EgfSeries(
        Poly.monomial(ee[m], m) if m % 2 == 1 else _ZERO for m in range(order + 1)
    )


def sec_series(order: int) -> EgfSeries:
    """
    sec(xt) as a truncated EGF: E_m x^m at even m, zero at odd m.

    >>> sec_series(4).coefficient(4)
    Poly((0, 0, 0, 0, 5))
    """
    ee = zigzag_numbers(order)
    return EgfSeries(
        Poly.monomial(ee[m], m) if m % 2 == 0 else _ZERO for m in range(order + 1)
    )


def fit_polynomial(points: Sequence[tuple[Rational, Rational]]) -> Poly:
    """
    Lagrange interpolation through the given (x, y) pairs, exact.

    Used to establish polynomiality of value sequences empirically: fit on
    d + 1 points and check the interpolant reproduces further ones.

    >>> fit_polynomial([(0, 1), (1, 2), (2, 5)])
    Poly((1, 0, 1))
    """
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    total = _ZERO
    for i, (_, y) in enumerate(points):
        basis = _ONE
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if i == j:
                continue
            basis = basis * Poly([-xj, 1])
            denom *= xs[i] - xj
        total = total + basis * (Fraction(y) / denom)
    return total
