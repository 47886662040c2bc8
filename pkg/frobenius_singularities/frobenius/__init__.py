from frobenius_singularities.frobenius.verdicts import Status, FrobeniusVerdict, MembershipCheck, DegreeCertificate, UNDECIDED
from frobenius_singularities.frobenius.frobenius import (
    DEFAULT_E_MAX,
    bracket_power,
    maximal_ideal_bracket,
    frobenius_closure_member,
    frobenius_closure_obstruction,
    squarefree_monomial_fpure,
    fedder_is_f_pure,
    tight_closure_witness,
)

__tail_doc__ = """
Args:
  ff: element, a Polynomial or a string in the ring variables.
  ideal: Ideal, or a list of generators read in `quotient.ambient`.
  e_max: largest Frobenius exponent tried, default `DEFAULT_E_MAX`.
  quotient: optional QuotientRing, memberships are then tested modulo its defining ideal.
  budget: reduction budget for every Groebner computation.

Returns:
  A `FrobeniusVerdict`, `verdict.recheck()` replays its membership checks.
"""

frobenius_closure_member.__doc__ += __tail_doc__ + """
Example:
>>> from frobenius_singularities.core_algebra import PolyRing
>>> from frobenius_singularities.ideals import QuotientRing
>>> from frobenius_singularities.frobenius import frobenius_closure_member
>>> rr = QuotientRing(PolyRing(5, "u, v, y, z", weights=[2, 2, 1, 1]), ["u*v", "u*z", "z*(v - y^2)"])
>>> print(frobenius_closure_member("y^3*z^4", ["y^2*(u^2 - z^4)"], e_max=3, quotient=rr))
# InFrobeniusClosureAt(1)
"""
frobenius_closure_obstruction.__doc__ += __tail_doc__
