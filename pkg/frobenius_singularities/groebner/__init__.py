from frobenius_singularities.groebner.groebner import (
    DEFAULT_BUDGET,
    ENGINE_STATS,
    EngineStats,
    GroebnerBasis,
    set_default_budget,
    get_default_budget,
    normal_form,
    reduce_with_quotients,
    divide_exact,
    s_polynomial,
    buchberger,
    is_groebner_basis,
)

__budget_doc__ = """
  budget: max number of single-step reductions, default `DEFAULT_BUDGET` or the value set by `set_default_budget`.
      Running out raises `BudgetExceededError`, which is never reported as a mathematical answer.
"""

reduce_with_quotients.__doc__ += """
Args:
  ff: the Polynomial to divide.
  divisors: list of Polynomial, zeros are skipped.""" + __budget_doc__
