"""Cross-check the closed form against the brute-force oracle."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import core
from .errors import RecSquaresError
from .matrix import det
from .ratfun import series_expand


@dataclass
class Check:
    name: str
    passed: bool
    index: Optional[int] = None
    expected: Optional[Fraction] = None
    got: Optional[Fraction] = None
    detail: str = ""

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name}"
        if self.index is None:
            return f"FAIL {self.name}: {self.detail}"
        return (
            f"FAIL {self.name}: first mismatch at n={self.index}: "
            f"expected {self.expected}, got {self.got}"
        )


@dataclass
class VerificationReport:
    spec: core.RecurrenceSpec
    terms: int
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def _compare(name: str, expected, got) -> Check:
    for n, (e, g) in enumerate(zip(expected, got)):
        if e != g:
            return Check(name, False, n, e, g)
    return Check(name, True)


def _guarded(name: str, fn) -> Check:
    try:
        return fn()
    except (RecSquaresError, ArithmeticError) as exc:
        return Check(name, False, detail=f"{type(exc).__name__}: {exc}")


def verify_spec(spec: core.RecurrenceSpec, terms: int = core.DEFAULT_TERMS) -> VerificationReport:
    """Run every independent check on ``spec`` to order ``terms``."""
    if terms < 1:
        raise ValueError("terms must be at least 1")
    report = VerificationReport(spec, terms)
    squares = [a * a for a in core.oracle_sequence(spec, terms)]

    def structure():
        d0 = det(core.build_delta(spec))[0]
        g0 = det(core.build_gamma(spec))[0]
        if d0 != 1 or g0 != 0:
            return Check("structure", False, detail=f"det(Delta)(0)={d0}, det(Gamma)(0)={g0}")
        return Check("structure", True)

    def closed_form():
        return _compare("squares", squares, series_expand(core.gf_squares(spec), terms))

    def f_system():
        solved = core.solve_f_system(spec)
        for d, f in enumerate(solved):
            check = _compare(f"f-system d={d}", core.oracle_products(spec, d, terms), series_expand(f, terms))
            if not check.passed:
                return check
        return Check("f-system", True)

    def lemmas():
        for i, res in enumerate(core.lemma_residuals(spec, terms)):
            check = _compare(f"lemma i={i}", [0] * len(res), res)
            if not check.passed:
                return check
        return Check("lemmas", True)

    for name, fn in (("structure", structure), ("squares", closed_form), ("f-system", f_system), ("lemmas", lemmas)):
        report.checks.append(_guarded(name, fn))
    return report
