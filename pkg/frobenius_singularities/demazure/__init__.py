from frobenius_singularities.demazure.linalg import SpanTracker, rank_mod_p
from frobenius_singularities.demazure.demazure import (
    DEFAULT_N_MAX,
    xy_ring,
    linear_form,
    order_at,
    SectionElement,
    normalize,
    constant_section,
    divisor_of,
    is_valid_section,
    level_denominator,
    section_basis,
    to_vector,
    GradedAlgebraSketch,
    generators_up_to,
    family_points,
    family_generators,
    quotient_dimension,
    QuotientRelationsReport,
    verify_quotient_relations,
    family_quotient_ideal,
)

__head_doc__ = """
Graded pieces of the section ring `R(P^1, D) = sum_n H^0(P^1, O(nD)) T^n` over F_p, with `D` a Q-divisor on
concrete points. Sections are degree zero rational functions in `X, Y`, linear algebra runs on int64 arrays mod p.
"""

generators_up_to.__doc__ = __head_doc__ + generators_up_to.__doc__
verify_quotient_relations.__doc__ = __head_doc__ + verify_quotient_relations.__doc__
