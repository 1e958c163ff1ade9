"""Dense univariate polynomials over the rationals.

Coefficients are stored lowest degree first as a tuple of
:class:`fractions.Fraction`; the zero polynomial is the empty tuple.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from numbers import Rational as _RationalABC
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]

#: degree of the zero polynomial; compares below every integer
NEG_INF = float("-inf")


def as_rational(value) -> Fraction:
    """Coerce ``value`` (int, Fraction, or "p/q" string) to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational coefficients")
    if isinstance(value, (int, _RationalABC, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "Poly":
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([0] * degree + [c])

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    # -- inspection ---------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError("negative coefficient index")
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def low_degree(self):
        """Index of the lowest nonzero coefficient (NEG_INF for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return NEG_INF

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, Poly) else Poly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        from .dsl import format_poly

        return format_poly(self)

    # -- arithmetic ---------------------------------------------------
    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return poly_add(other, -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        return poly_divrem(self, _lift(other))

    def __floordiv__(self, other):
        return poly_divrem(self, _lift(other))[0]

    def __mod__(self, other):
        return poly_divrem(self, _lift(other))[1]

    def scale(self, c: Scalar) -> "Poly":
        c = as_rational(c)
        return Poly(c * a for a in self.coeffs)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.scale(1 / self.leading)

    def shift(self, k: int) -> "Poly":
        return poly_shift(self, k)

    def derivative(self) -> "Poly":
        return poly_derivative(self)


def _lift(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Poly.constant(value)
    return None


X = Poly.monomial(1)


def poly_add(a: Poly, b: Poly) -> Poly:
    return Poly(s + t for s, t in zip_longest(a.coeffs, b.coeffs, fillvalue=0))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a.coeffs or not b.coeffs:
        return Poly()
    out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, s in enumerate(a.coeffs):
        if not s:
            continue
        for j, t in enumerate(b.coeffs):
            out[i + j] += s * t
    return Poly(out)


def poly_divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division: ``a == q*b + r`` with ``deg r < deg b``."""
    if b is None or b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    if len(rem) - 1 < db:
        return Poly(), a
    inv_lead = 1 / b.leading
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        q = rem[k + db] * inv_lead
        quot[k] = q
        if q:
            for j, t in enumerate(b.coeffs):
                rem[k + j] -= q * t
    return Poly(quot), Poly(rem[:db])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; ``gcd(0, 0) == 0``."""
    while b:
        a, b = b, poly_divrem(a, b)[1].monic()
    return a.monic()


def poly_derivative(a: Poly) -> Poly:
    return Poly(i * c for i, c in enumerate(a.coeffs) if i)


def poly_shift(a: Poly, k: int) -> Poly:
    if k < 0:
        raise ValueError("shift must be nonnegative")
    if not a.coeffs:
        return a
    return Poly((0,) * k + a.coeffs)


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    q, r = poly_divrem(a, b)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return q
