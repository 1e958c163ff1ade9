"""Square matrices of polynomials: determinants and Cramer solves."""
from __future__ import annotations

from typing import Sequence

from .errors import SingularMatrixError
from .poly import Poly, poly_exact_div

#: largest dimension handled by memoized cofactor expansion
COFACTOR_MAX_DIM = 6


class PolyMatrix:
    """Immutable n-by-n matrix with :class:`Poly` entries, row-major."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        built = tuple(tuple(_as_poly(e) for e in row) for row in rows)
        n = len(built)
        if n == 0:
            raise ValueError("matrix dimension must be positive")
        if any(len(row) != n for row in built):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", built)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"PolyMatrix({[[str(e) for e in row] for row in self.rows]})"

    def column(self, j: int) -> list[Poly]:
        return [row[j] for row in self.rows]

    def replace_column(self, j: int, col: Sequence) -> "PolyMatrix":
        if len(col) != self.dim:
            raise ValueError("column length does not match matrix dimension")
        return PolyMatrix(
            [[col[i] if k == j else e for k, e in enumerate(row)] for i, row in enumerate(self.rows)]
        )

    def at(self, x) -> list[list]:
        """Evaluate every entry at the scalar ``x``."""
        return [[e(x) for e in row] for row in self.rows]


def _as_poly(e) -> Poly:
    return e if isinstance(e, Poly) else Poly.constant(e)


def det(m: PolyMatrix) -> Poly:
    if m.dim <= COFACTOR_MAX_DIM:
        return _det_cofactor(m)
    return _det_bareiss(m)


def _det_cofactor(m: PolyMatrix) -> Poly:
    # Laplace expansion down the rows; minors keyed by the tuple of
    # surviving columns, each computed once.
    n = m.dim
    memo: dict[tuple[int, ...], Poly] = {}

    def minor(cols: tuple[int, ...]) -> Poly:
        if not cols:
            return Poly.one()
        hit = memo.get(cols)
        if hit is not None:
            return hit
        row = n - len(cols)
        total = Poly()
        for k, c in enumerate(cols):
            entry = m.rows[row][c]
            if not entry:
                continue
            term = entry * minor(cols[:k] + cols[k + 1:])
            total = total - term if k % 2 else total + term
        memo[cols] = total
        return total

    return minor(tuple(range(n)))


def _det_bareiss(m: PolyMatrix) -> Poly:
    # Fraction-free elimination; every division below is exact.
    a = [list(row) for row in m.rows]
    n = len(a)
    sign = 1
    prev = Poly.one()
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Poly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = poly_exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def cramer_solve(m: PolyMatrix, b: Sequence, *, det_m: Poly | None = None) -> list:
    """Solve ``m @ x = b`` over the rational functions by Cramer's rule.

    Returns one reduced :class:`~recsquares.ratfun.RatFun` per unknown.
    ``det_m`` may be passed when the caller already holds ``det(m)``.
    """
    from .ratfun import ratfun_normalize

    if len(b) != m.dim:
        raise ValueError("right-hand side length does not match matrix dimension")
    d = det(m) if det_m is None else det_m
    if not d:
        raise SingularMatrixError("matrix is singular")
    return [ratfun_normalize(det(m.replace_column(j, b)), d) for j in range(m.dim)]
