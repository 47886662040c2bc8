from frobenius_singularities.core_algebra.errors import (
    RingMismatchError,
    ParseError,
    UnknownVariableError,
    BudgetExceededError,
    NonHomogeneousError,
    HypothesisMissingError,
)
from frobenius_singularities.core_algebra.fields import PrimeField, Rational, to_rational, lcm, lcm_of
from frobenius_singularities.core_algebra.polynomials import (
    ORDERS,
    DEFAULT_ORDER,
    NEG_INF,
    PolyRing,
    Polynomial,
    format_poly,
    format_monomial,
    monomial_mul,
    monomial_divides,
    monomial_quotient,
    monomial_lcm,
    monomial_is_coprime,
)
from frobenius_singularities.core_algebra.parser import parse_poly, parse_poly_list
from frobenius_singularities.core_algebra.hypotheses import (
    HYPOTHESIS_FLAGS,
    REQUIRED_HYPOTHESES,
    IMPLIED_HYPOTHESES,
    normalize_flags,
    close_flags,
    require_hypotheses,
)


def poly_arith(ff, gg, op):
    """ `op` one of `add`, `sub`, `mul`. Raises `RingMismatchError` for polynomials of different rings. """
    if op == "add":
        return ff + gg
    if op == "sub":
        return ff - gg
    if op == "mul":
        return ff * gg
    raise ValueError("Unsupported op: {}, should be one of add, sub, mul".format(op))


def weighted_degree(ff):
    return ff.weighted_degree()


def is_homogeneous(ff):
    return ff.is_homogeneous()
