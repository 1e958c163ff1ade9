"""Rational functions in x in canonical form, and their Taylor prefixes."""
from __future__ import annotations

from fractions import Fraction

from .errors import NonUnitDenominatorError
from .poly import Poly, Scalar, as_rational, poly_divrem, poly_gcd

#: coefficients 0..N of a formal power series
SeriesPrefix = list


class RatFun:
    """A reduced quotient ``num/den``.

    Build values through :func:`ratfun_normalize` (or :meth:`of`); the
    constructor trusts its arguments and is meant for internal use.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    @classmethod
    def of(cls, num, den=1) -> "RatFun":
        return ratfun_normalize(_poly(num), _poly(den))

    @property
    def numerator(self) -> Poly:
        return self.num

    @property
    def denominator(self) -> Poly:
        return self.den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return ratfun_equal(self, other)
        if isinstance(other, (Poly, int, Fraction)):
            return ratfun_equal(self, RatFun.of(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFun({self.num!r}, {self.den!r})"

    def __str__(self):
        from .dsl import format_ratfun

        return format_ratfun(self)

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __add__(self, other):
        return ratfun_add(self, _ratfun(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ratfun_add(self, -_ratfun(other))

    def __rsub__(self, other):
        return ratfun_add(_ratfun(other), -self)

    def __mul__(self, other):
        return ratfun_mul(self, _ratfun(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _ratfun(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return ratfun_mul(self, ratfun_normalize(other.den, other.num))

    def series(self, n: int) -> SeriesPrefix:
        return series_expand(self, n)


def _poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (list, tuple)):
        return Poly(value)
    return Poly.constant(as_rational(value))


def _ratfun(value) -> RatFun:
    return value if isinstance(value, RatFun) else RatFun.of(value)


def ratfun_normalize(num: Poly, den: Poly) -> RatFun:
    """Cancel the gcd and scale so the lowest nonzero denominator coefficient is 1."""
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return RatFun(Poly(), Poly.one())
    g = poly_gcd(num, den)
    if g.degree > 0:
        num = poly_divrem(num, g)[0]
        den = poly_divrem(den, g)[0]
    lead = den[den.low_degree()]
    if lead != 1:
        inv = 1 / lead
        num, den = num.scale(inv), den.scale(inv)
    return RatFun(num, den)


def ratfun_equal(a: RatFun, b: RatFun) -> bool:
    """Value equality by cross-multiplication."""
    return a.num * b.den == b.num * a.den


def ratfun_add(a: RatFun, b: RatFun) -> RatFun:
    if a.den == b.den:
        return ratfun_normalize(a.num + b.num, a.den)
    return ratfun_normalize(a.num * b.den + b.num * a.den, a.den * b.den)


def ratfun_mul(a: RatFun, b: RatFun) -> RatFun:
    return ratfun_normalize(a.num * b.num, a.den * b.den)


def ratfun_scale(a: RatFun, c: Scalar) -> RatFun:
    return ratfun_normalize(a.num.scale(c), a.den)


def ratfun_xdx(a: RatFun) -> RatFun:
    """``x * d/dx`` applied to ``a``; maps sum b_n x^n to sum n b_n x^n."""
    num = a.num.derivative() * a.den - a.num * a.den.derivative()
    return ratfun_normalize(num.shift(1), a.den * a.den)


def series_expand(a: RatFun, n: int) -> SeriesPrefix:
    """Taylor coefficients 0..n of ``a`` at x = 0."""
    if n < 0:
        raise ValueError("number of terms must be nonnegative")
    d = a.den.coeffs
    if not d[0]:
        raise NonUnitDenominatorError("denominator vanishes at x = 0")
    inv0 = 1 / d[0]
    out: list[Fraction] = []
    for k in range(n + 1):
        acc = a.num[k]
        for j in range(1, min(k, len(d) - 1) + 1):
            if d[j]:
                acc -= d[j] * out[k - j]
        out.append(acc * inv0)
    return out


__all__ = [
    "RatFun",
    "SeriesPrefix",
    "ratfun_add",
    "ratfun_equal",
    "ratfun_mul",
    "ratfun_normalize",
    "ratfun_scale",
    "ratfun_xdx",
    "series_expand",
]
