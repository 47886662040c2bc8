from frobenius_singularities.covers.covers import (
    DivisorialIdeal,
    symbolic_power,
    ClassOrder,
    principal_generator,
    class_order,
    CoverReport,
    cyclic_cover_stats,
    f_regular_verdict_dim2,
    f_rational_verdict_dim2,
    canonical_module_gorenstein,
    cover_summands,
    CoverPresentationCheck,
    cover_presentation_check,
    CoverInclusionCheck,
    cover_inclusion_check,
)

__tail_doc__ = """
  Hypotheses are never verified. They come from the QuotientRing flags plus `flags`, and every
  verdict echoes the ones it consumed. `budget` caps Groebner reductions, exceeding it raises BudgetExceededError.
"""

f_regular_verdict_dim2.__doc__ = f_regular_verdict_dim2.__doc__ + __tail_doc__
f_rational_verdict_dim2.__doc__ = f_rational_verdict_dim2.__doc__ + __tail_doc__
class_order.__doc__ = class_order.__doc__ + __tail_doc__
