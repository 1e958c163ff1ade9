"""Generating function of the squares of a linear recurrence.

For ``a_n = p_1 a_{n-1} + ... + p_l a_{n-l}`` with ``a_j = c_j`` for
``j < l``, the auxiliary series

    F_d(x) = sum_{n >= 1} a_{n-1} a_{n-1-d} x^n,    d = 0..l-1

satisfy a linear system ``Delta . [F_0..F_{l-1}] = rhs`` over the
polynomials.  ``Gamma`` is ``Delta`` with column 0 replaced by ``rhs``,
so ``sum a_n^2 x^n = F_0 / x = det(Gamma) / (x det(Delta))``.

Each matrix entry branch is its own module-level function and the
builders resolve them at call time, which lets the verification tests
swap out one branch and check that the verifier notices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InternalConsistencyError
from .matrix import PolyMatrix, cramer_solve, det
from .poly import Poly, as_rational, poly_exact_div
from .ratfun import RatFun, SeriesPrefix, ratfun_normalize, ratfun_xdx

DEFAULT_TERMS = 40


@dataclass(frozen=True)
class RecurrenceSpec:
    """Order-``l`` recurrence: ``coefficients`` holds p_1..p_l, ``initials`` c_0..c_{l-1}."""

    coefficients: tuple[Fraction, ...]
    initials: tuple[Fraction, ...]

    def __post_init__(self):
        p = tuple(as_rational(v) for v in self.coefficients)
        c = tuple(as_rational(v) for v in self.initials)
        if not p:
            raise ValueError("recurrence order must be at least 1")
        if len(p) != len(c):
            raise ValueError(
                f"order {len(p)} recurrence needs {len(p)} initial values, got {len(c)}"
            )
        object.__setattr__(self, "coefficients", p)
        object.__setattr__(self, "initials", c)

    @classmethod
    def of(cls, coefficients: Iterable, initials: Iterable) -> "RecurrenceSpec":
        return cls(tuple(coefficients), tuple(initials))

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def p(self, m: int) -> Fraction:
        """p_m, zero outside 1..l."""
        if 1 <= m <= len(self.coefficients):
            return self.coefficients[m - 1]
        return Fraction(0)

    def c(self, m: int) -> Fraction:
        return self.initials[m]

    def is_minimal_order(self) -> bool:
        return self.coefficients[-1] != 0

    def scaled(self, lam) -> "RecurrenceSpec":
        lam = as_rational(lam)
        return RecurrenceSpec(self.coefficients, tuple(lam * v for v in self.initials))


def fibonacci_spec(k: int) -> RecurrenceSpec:
    """k-generalized Fibonacci numbers: all p_j = 1, c = (0, 1, ..., 1)."""
    if k < 2:
        raise ValueError(f"k-Fibonacci family needs k >= 2, got {k}")
    return RecurrenceSpec.of([1] * k, [0] + [1] * (k - 1))


def pell_spec(k: int) -> RecurrenceSpec:
    """k-Pell numbers: p = (2, 1, ..., 1), all c_j = 1."""
    if k < 2:
        raise ValueError(f"k-Pell family needs k >= 2, got {k}")
    return RecurrenceSpec.of([2] + [1] * (k - 1), [1] * k)


FAMILIES = {"fibonacci": fibonacci_spec, "pell": pell_spec}


# -- brute-force oracle ---------------------------------------------------

def oracle_sequence(spec: RecurrenceSpec, n: int) -> list[Fraction]:
    """a_0..a_n by direct unrolling."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = spec.coefficients
    a = list(spec.initials[: n + 1])
    while len(a) <= n:
        a.append(sum(pj * a[-1 - j] for j, pj in enumerate(p)))
    return a


def oracle_products(spec: RecurrenceSpec, d: int, n: int) -> SeriesPrefix:
    """Coefficients 0..n of F_d computed from the unrolled sequence."""
    if not 0 <= d < spec.order:
        raise IndexError(f"lag d={d} outside [0, {spec.order - 1}]")
    a = oracle_sequence(spec, max(n - 1, 0))
    out = [Fraction(0)] * (n + 1)
    for k in range(max(1, d + 1), n + 1):
        out[k] = a[k - 1] * a[k - 1 - d]
    return out


# -- auxiliary quantities -------------------------------------------------

@dataclass(frozen=True)
class AuxVectors:
    """``v[j-1]`` holds v_j for j = 1..l-1; ``w[j]`` holds w_j for j = 0..l-2."""

    v: tuple[Poly, ...]
    w: tuple[Fraction, ...]

    def v_(self, j: int) -> Poly:
        return self.v[j - 1]

    def w_(self, j: int) -> Fraction:
        # w_{-1} = 0
        return self.w[j] if j >= 0 else Fraction(0)


def aux_vectors(spec: RecurrenceSpec) -> AuxVectors:
    l = spec.order
    v = tuple(
        Poly(spec.p(s) * spec.p(s + j) for s in range(1, l - j + 1)) for j in range(1, l)
    )
    w = tuple(
        sum((spec.p(s) * spec.c(j + 1 - s) for s in range(1, j + 2)), Fraction(0))
        for j in range(l - 1)
    )
    return AuxVectors(v, w)


# -- Delta ---------------------------------------------------------------

def delta_corner(spec: RecurrenceSpec, aux: AuxVectors) -> Poly:
    """Delta(0,0) = 1 - sum_{j=1..l} p_j^2 x^j."""
    return Poly([1] + [-spec.p(j) ** 2 for j in range(1, spec.order + 1)])


def delta_top_row(spec: RecurrenceSpec, aux: AuxVectors, j: int) -> Poly:
    """Delta(0,j) = -2 x v_j."""
    return aux.v_(j).shift(1).scale(-2)


def delta_left_column(spec: RecurrenceSpec, aux: AuxVectors, i: int) -> Poly:
    """Delta(i,0) = -p_i x^i."""
    return Poly.monomial(i, -spec.p(i))


def delta_inner(spec: RecurrenceSpec, aux: AuxVectors, i: int, j: int) -> Poly:
    """Delta(i,j) = [i == j] - p_{i-j} x^{i-j} - p_{i+j} x^i for all i, j >= 1.

    The ``p_{i-j}`` term is needed on the whole row, including columns
    j > l - i where ``p_{i+j}`` already vanishes.
    """
    out = Poly.constant(1 if i == j else 0)
    if i > j:
        out = out - Poly.monomial(i - j, spec.p(i - j))
    return out - Poly.monomial(i, spec.p(i + j))


def delta_entry(spec: RecurrenceSpec, aux: AuxVectors, i: int, j: int) -> Poly:
    if i == 0 and j == 0:
        return delta_corner(spec, aux)
    if i == 0:
        return delta_top_row(spec, aux, j)
    if j == 0:
        return delta_left_column(spec, aux, i)
    return delta_inner(spec, aux, i, j)


def build_delta(spec: RecurrenceSpec) -> PolyMatrix:
    aux = aux_vectors(spec)
    l = spec.order
    return PolyMatrix([[delta_entry(spec, aux, i, j) for j in range(l)] for i in range(l)])


# -- right-hand side and Gamma ------------------------------------------------

def rhs_corner(spec: RecurrenceSpec, aux: AuxVectors) -> Poly:
    """x * sum_{s=0..l-1} (c_s^2 - w_{s-1}^2) x^s."""
    return Poly([0] + [spec.c(s) ** 2 - aux.w_(s - 1) ** 2 for s in range(spec.order)])


def rhs_lower(spec: RecurrenceSpec, aux: AuxVectors, i: int) -> Poly:
    """x^{i+1} * sum_{s=0..l-1-i} c_s (c_{s+i} - w_{s+i-1}) x^s."""
    body = Poly(
        spec.c(s) * (spec.c(s + i) - aux.w_(s + i - 1)) for s in range(spec.order - i)
    )
    return body.shift(i + 1)


def rhs_entry(spec: RecurrenceSpec, aux: AuxVectors, i: int) -> Poly:
    return rhs_corner(spec, aux) if i == 0 else rhs_lower(spec, aux, i)


def build_rhs(spec: RecurrenceSpec) -> list[Poly]:
    aux = aux_vectors(spec)
    return [rhs_entry(spec, aux, i) for i in range(spec.order)]


def gamma_copy(delta: PolyMatrix, i: int, j: int) -> Poly:
    """Gamma(i,j) = Delta(i,j) for j >= 1."""
    return delta[i, j]


def build_gamma(spec: RecurrenceSpec, delta: PolyMatrix | None = None) -> PolyMatrix:
    if delta is None:
        delta = build_delta(spec)
    rhs = build_rhs(spec)
    l = spec.order
    return PolyMatrix(
        [[rhs[i] if j == 0 else gamma_copy(delta, i, j) for j in range(l)] for i in range(l)]
    )


# -- generating functions --------------------------------------------------

def gf_squares(spec: RecurrenceSpec) -> RatFun:
    """sum_{n>=0} a_n^2 x^n as a reduced rational function."""
    delta = build_delta(spec)
    det_delta = det(delta)
    det_gamma = det(build_gamma(spec, delta))
    if det_gamma[0]:
        raise InternalConsistencyError("det(Gamma) has a nonzero constant term")
    if det_delta[0] != 1:
        raise InternalConsistencyError("det(Delta) does not have constant term 1")
    return ratfun_normalize(poly_exact_div(det_gamma, Poly.monomial(1)), det_delta)


def solve_f_system(spec: RecurrenceSpec) -> list[RatFun]:
    """[F_0, ..., F_{l-1}] from Cramer's rule on the Delta system."""
    return cramer_solve(build_delta(spec), build_rhs(spec))


def weighted_gf(spec: RecurrenceSpec) -> RatFun:
    """sum_{n>=0} n a_n^2 x^n."""
    return ratfun_xdx(gf_squares(spec))


# -- lemma identities checked on oracle series --------------------------------

def _times(poly: Poly, series: Sequence[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * (n + 1)
    for k, pk in enumerate(poly.coeffs[: n + 1]):
        if pk:
            for m in range(n + 1 - k):
                out[k + m] += pk * series[m]
    return out


def _sub(acc: list[Fraction], other: Sequence[Fraction]) -> None:
    for k, v in enumerate(other):
        acc[k] -= v


def lemma_residuals(spec: RecurrenceSpec, n: int = DEFAULT_TERMS) -> list[SeriesPrefix]:
    """LHS - RHS of the l identities tying the F_d together, truncated at x^n.

    Every F_d is taken from the brute-force oracle and the identities are
    transcribed term by term, not read off :func:`build_delta`, so an
    all-zero result vouches for the system independently of the solver.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    l = spec.order
    p = spec.p
    aux = aux_vectors(spec)
    F = [oracle_products(spec, d, n) for d in range(l)]

    # F_0 = F_0 sum p_j^2 x^j + 2x sum v_j F_j + x sum (c_j^2 - w_{j-1}^2) x^j
    r0 = list(F[0])
    _sub(r0, _times(Poly([0] + [p(j) ** 2 for j in range(1, l + 1)]), F[0], n))
    for j in range(1, l):
        _sub(r0, _times(aux.v_(j).shift(1).scale(2), F[j], n))
    _sub(r0, Poly([0] + [spec.c(j) ** 2 - aux.w_(j - 1) ** 2 for j in range(l)]).coeffs[: n + 1])
    residuals = [r0]

    # F_i = p_i x^i F_0 + sum_{j=1..l-1} (p_{i-j} x^{i-j} + p_{i+j} x^i) F_j
    #       + x^{i+1} sum_{j=0..l-1-i} c_j (c_{i+j} - w_{i+j-1}) x^j
    for i in range(1, l):
        ri = list(F[i])
        _sub(ri, _times(Poly.monomial(i, p(i)), F[0], n))
        for j in range(1, l):
            coef = Poly.monomial(i, p(i + j))
            if i > j:
                coef = coef + Poly.monomial(i - j, p(i - j))
            _sub(ri, _times(coef, F[j], n))
        tail = Poly(spec.c(j) * (spec.c(i + j) - aux.w_(i + j - 1)) for j in range(l - i))
        _sub(ri, tail.shift(i + 1).coeffs[: n + 1])
        residuals.append(ri)
    return residuals
