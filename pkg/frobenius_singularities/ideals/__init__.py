from frobenius_singularities.ideals.ideals import (
    Ideal,
    Membership,
    QuotientRing,
    member,
    ideal_sum,
    equal,
    power,
    eliminate,
    intersect,
    colon_element,
    colon,
    saturate,
)
from frobenius_singularities.ideals.hilbert import HilbertData, hilbert, hilbert_function, dimension, a_invariant, monomial_hilbert_numerator

__budget_doc__ = """
  budget: reduction budget forwarded to every Groebner computation, `BudgetExceededError` when exhausted.
"""

colon.__doc__ += """
Args:
  ideal: Ideal.
  other: Ideal of the same ring. The zero ideal gives the unit ideal.""" + __budget_doc__

saturate.__doc__ += """
Args:
  ideal: Ideal.
  ff: nonzero Polynomial or string.""" + __budget_doc__ + """  max_steps: bound on the colon chain, RuntimeError if it is still growing.

Example:
>>> from frobenius_singularities.core_algebra import PolyRing
>>> from frobenius_singularities.ideals import Ideal, saturate
>>> ring = PolyRing(3, "x, y")
>>> print(saturate(Ideal(ring, ["x^2", "x*y"]), ring.parse("y")))
# (x)
"""
