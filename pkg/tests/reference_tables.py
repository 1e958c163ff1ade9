"""Published closed forms for the Fibonacci and Pell families.

Factored presentations are kept factored here and expanded by
multiplication, so no row is retyped in expanded form.
"""
from recsquares.poly import Poly
from recsquares.ratfun import RatFun

X = Poly([0, 1])


def P(*cs):
    return Poly(cs)


_DEN_15 = P(1, -2, -4, -7, -11, -16, 4, 7, 4, 4, 7, 0, -1, -1, 0, -1)

# sum F_{k,n}^2 x^n
FIBONACCI_SQUARES = {
    2: (X * P(1, -1), P(1, 1) * P(1, -3, 1)),
    3: (X * P(1, -1, -1, -1), P(1, 1, 1, -1) * P(1, -3, -1, -1)),
    4: (X * P(1, -1, -5, -2, -1, -2, 0, 3, 1), P(1, -2, -4, -5, -8, 4, 6, 0, 1, 0, -1)),
    5: (X * P(1, -1, -5, -12, -8, -10, -7, -17, -8, 13, 10, 3, 9, 4), _DEN_15),
}

# sum P_{k,n}^2 x^n
PELL_SQUARES = {
    2: (P(1, -4, -1), P(1, 1) * P(1, -6, 1)),
    3: (P(1, -4, -11, -13, -5, -4), P(1, -6, -3, -1) * P(1, -1, 2, -1)),
    4: (P(1, -4, -12, -25, -29, -3, -9, -12, 13, 9), P(1, -5, -8, -13, -20, 2, 14, 1, 1, 0, -1)),
    5: (P(1, 1) * P(1, -2, -3, -9, -14, -5, -2, -6, -26, 6, 13, 2, 4, 9), _DEN_15),
}

# sum n F_{3,n}^2 x^n and sum n P_{2,n}^2 x^n
WEIGHTED_TRIBONACCI = (X * P(1, -2, 2, 12, 0, 8, 2, 4, 3, 2), (P(-1, -1, -1, 1) * P(-1, 3, 1, 1)) ** 2)
WEIGHTED_PELL = (X * P(1, -2, 10, -2, 1), (P(1, 1) * P(1, -6, 1)) ** 2)


def as_ratfun(row) -> RatFun:
    return RatFun.of(*row)
