"""Exact generating functions for the squares of linear recurrences."""
from .core import (
    AuxVectors,
    RecurrenceSpec,
    aux_vectors,
    build_delta,
    build_gamma,
    build_rhs,
    fibonacci_spec,
    gf_squares,
    lemma_residuals,
    oracle_products,
    oracle_sequence,
    pell_spec,
    solve_f_system,
    weighted_gf,
)
from .dsl import format_ratfun, format_spec, parse_spec, ratfun_from_json
from .errors import (
    InternalConsistencyError,
    NonUnitDenominatorError,
    RecSquaresError,
    SingularMatrixError,
    SpecSemanticError,
    SpecSyntaxError,
)
from .matrix import PolyMatrix, cramer_solve, det
from .poly import (
    Poly,
    poly_add,
    poly_derivative,
    poly_divrem,
    poly_gcd,
    poly_mul,
    poly_shift,
)
from .ratfun import (
    RatFun,
    ratfun_add,
    ratfun_equal,
    ratfun_mul,
    ratfun_normalize,
    ratfun_xdx,
    series_expand,
)
from .verify import VerificationReport, verify_spec

__version__ = "0.1.0"
