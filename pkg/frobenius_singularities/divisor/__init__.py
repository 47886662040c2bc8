from frobenius_singularities.divisor.divisor import (
    PointP1,
    QDivisor,
    infinity_point,
    deg_Q,
    divisor_arith,
    round_down,
    frac_part,
    rounding_identity,
    random_divisor,
    canonical_divisor,
    h0_dim,
    h1_dim,
    fpure_obstruction,
    fpure_obstruction_formula,
    a_invariant_sectionring,
    a_invariant_sectionring_bruteforce,
    family_alphas,
    family_divisor,
    parse_divisor,
    format_divisor,
)

__head_doc__ = """
Divisor calculus on P^1, every quantity is computed from degrees of rounded divisors.
"""

fpure_obstruction.__doc__ = __head_doc__ + fpure_obstruction.__doc__ + """
Args:
  dd: QDivisor, the Demazure divisor of the ring under test.
  pp: the characteristic.
  canonical: canonical divisor representative, default `-2 * inf`. Results only depend on its degree `-2`.
"""

a_invariant_sectionring.__doc__ = __head_doc__ + a_invariant_sectionring.__doc__ + """
Example:
>>> from frobenius_singularities.divisor import family_divisor, parse_divisor, a_invariant_sectionring
>>> a_invariant_sectionring(family_divisor(2, 5)), a_invariant_sectionring(parse_divisor("D = 1*inf"))
# (-1, -2)
"""
