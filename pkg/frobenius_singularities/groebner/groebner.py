import threading
from dataclasses import dataclass
from frobenius_singularities.core_algebra.errors import BudgetExceededError, RingMismatchError
from frobenius_singularities.core_algebra.polynomials import (
    Polynomial,
    monomial_divides,
    monomial_quotient,
    monomial_lcm,
    monomial_is_coprime,
    monomial_mul,
)

DEFAULT_BUDGET = 10**6  # reductions per Groebner computation
__default_budget__ = [DEFAULT_BUDGET]


def set_default_budget(budget):
    if not isinstance(budget, int) or budget < 1:
        raise ValueError("Budget must be a positive integer, got: {!r}".format(budget))
    __default_budget__[0] = budget


def get_default_budget():
    return __default_budget__[0]


class EngineStats:
    """ Process wide counters, read by the CLI reports. """

    def __init__(self):
        self.lock = threading.Lock()
        self.reset()

    def reset(self):
        self.pairs_processed, self.reductions, self.bases_computed = 0, 0, 0

    def add(self, pairs_processed=0, reductions=0, bases_computed=0):
        with self.lock:
            self.pairs_processed += pairs_processed
            self.reductions += reductions
            self.bases_computed += bases_computed

    def snapshot(self):
        with self.lock:
            return {"pairs_processed": self.pairs_processed, "reductions": self.reductions, "bases_computed": self.bases_computed}


ENGINE_STATS = EngineStats()


class __ReductionCounter__:
    def __init__(self, budget=None):
        self.budget = get_default_budget() if budget is None else budget
        self.reductions, self.pairs_processed = 0, 0

    def step(self):
        self.reductions += 1
        if self.reductions > self.budget:
            ENGINE_STATS.add(self.pairs_processed, self.reductions)
            raise BudgetExceededError(self.budget, self.reductions, self.pairs_processed)


@dataclass(frozen=True)
class GroebnerBasis:
    ring: object
    elements: tuple
    order: str
    reduced: bool = True
    pairs_processed: int = 0
    reductions: int = 0

    @property
    def leading_monomials(self):
        return tuple(ii.leading_monomial() for ii in self.elements)

    def is_unit(self):
        return any(ii.is_constant() and not ii.is_zero() for ii in self.elements)

    def reduce(self, ff):
        return normal_form(ff, self.elements)

    def contains(self, ff):
        return normal_form(ff, self.elements).is_zero()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self):
        return "[{}]".format(", ".join(str(ii) for ii in self.elements))


def __prepare_divisors__(ring, divisors):
    prepared = []
    for gg in divisors:
        if gg.ring != ring:
            raise RingMismatchError(ring, gg.ring, "reduction")
        if gg.is_zero():
            continue
        lm = gg.leading_monomial()
        prepared.append((lm, ring.field.inverse(gg.coeffs[lm]), list(gg.coeffs.items()), gg))
    return prepared


def __reduce__(ff, divisors, counter=None, with_quotients=False):
    ring = ff.ring
    pp, key = ring.p, ring.sort_key
    prepared = __prepare_divisors__(ring, divisors)
    work, remainder = dict(ff.coeffs), {}
    quotients = [{} for _ in divisors] if with_quotients else None
    positions = [id for id, gg in enumerate(divisors) if not gg.is_zero()]
    while work:
        lm = max(work, key=key)
        cc = work[lm]
        for pos, (glm, ginv, gterms, _) in zip(positions, prepared):
            if not monomial_divides(glm, lm):
                continue
            if counter is not None:
                counter.step()
            factor, shift = cc * ginv % pp, monomial_quotient(lm, glm)
            for mm, gc in gterms:
                target = monomial_mul(mm, shift)
                vv = (work.get(target, 0) - factor * gc) % pp
                if vv:
                    work[target] = vv
                else:
                    work.pop(target, None)
            if with_quotients:
                quotients[pos][shift] = (quotients[pos].get(shift, 0) + factor) % pp
            break
        else:
            remainder[lm] = cc
            del work[lm]
    remainder = Polynomial(ring, remainder, normalized=True)
    if with_quotients:
        return [Polynomial(ring, {mm: cc for mm, cc in qq.items() if cc}, normalized=True) for qq in quotients], remainder
    return remainder


def normal_form(ff, basis, budget=None):
    """
    Fully reduced remainder of `ff` by `basis`, always reducing by the first divisor in list order.
    `ff - normal_form(ff, basis)` lies in the ideal generated by `basis`.

    Example:
    >>> from frobenius_singularities.core_algebra import PolyRing
    >>> from frobenius_singularities.groebner import normal_form
    >>> ring = PolyRing(5, "u, v, y, z")
    >>> print(normal_form(ring.parse("y^3*u"), [ring.parse("v"), ring.parse("z")]))
    # u*y^3
    """
    basis = list(basis.elements if isinstance(basis, GroebnerBasis) else basis)
    counter = __ReductionCounter__(budget)
    out = __reduce__(ff, basis, counter)
    ENGINE_STATS.add(reductions=counter.reductions)
    return out


def reduce_with_quotients(ff, divisors, budget=None):
    """ Division algorithm: returns `(quotients, remainder)` with `ff = sum(q_i * g_i) + remainder` """
    divisors = list(divisors)
    counter = __ReductionCounter__(budget)
    out = __reduce__(ff, divisors, counter, with_quotients=True)
    ENGINE_STATS.add(reductions=counter.reductions)
    return out


def divide_exact(ff, gg):
    """ `ff / gg`, ValueError if `gg` does not divide `ff` """
    if gg.is_zero():
        raise ZeroDivisionError("Division by the zero polynomial")
    (quotient,), remainder = reduce_with_quotients(ff, [gg])
    if not remainder.is_zero():
        raise ValueError("{} is not divisible by {}".format(ff, gg))
    return quotient


def s_polynomial(ff, gg):
    lm_f, lm_g = ff.leading_monomial(), gg.leading_monomial()
    lcm = monomial_lcm(lm_f, lm_g)
    field = ff.ring.field
    left = ff.mul_term(field.inverse(ff.coeffs[lm_f]), monomial_quotient(lcm, lm_f))
    right = gg.mul_term(field.inverse(gg.coeffs[lm_g]), monomial_quotient(lcm, lm_g))
    return left - right


def __interreduce__(elements, counter):
    """ Minimal then reduced basis, monic, sorted ascending in the ring order """
    ring = elements[0].ring
    elements = [ii.monic() for ii in elements]
    minimal = []
    for id, gg in enumerate(elements):
        lm = gg.leading_monomial()
        dominated = False
        for jd, hh in enumerate(elements):
            if jd == id:
                continue
            hlm = hh.leading_monomial()
            # equal leading monomials: keep the first one
            if monomial_divides(hlm, lm) and (hlm != lm or jd < id):
                dominated = True
                break
        if not dominated:
            minimal.append(gg)
    reduced = []
    for id, gg in enumerate(minimal):
        others = minimal[:id] + minimal[id + 1 :]
        lt = gg.leading_term()
        tail = __reduce__(gg - lt, others, counter)
        reduced.append((lt + tail).monic())
    return sorted(reduced, key=lambda ii: ring.sort_key(ii.leading_monomial()))


def buchberger(gens, budget=None, ring=None):
    """
    Reduced Groebner basis, normal selection strategy with Buchberger's product and chain criteria.
    Raises `BudgetExceededError` once more than `budget` reductions were spent.

    Example:
    >>> from frobenius_singularities.core_algebra import PolyRing
    >>> from frobenius_singularities.groebner import buchberger
    >>> ring = PolyRing(7, "A, B, C, D")
    >>> gb = buchberger([ring.parse(ii) for ii in ["A*C - B^2", "B*D - C^2", "A*D - B*C"]])
    >>> print(gb)
    # [C^2 - B*D, B*C - A*D, B^2 - A*C]
    """
    gens = list(gens)
    if ring is None:
        if len(gens) == 0:
            raise ValueError("Need a ring when no generators are given")
        ring = gens[0].ring
    for gg in gens:
        if gg.ring != ring:
            raise RingMismatchError(ring, gg.ring, "buchberger")

    counter = __ReductionCounter__(budget)
    basis = [gg.monic() for gg in gens if not gg.is_zero()]
    if len(basis) == 0:
        ENGINE_STATS.add(bases_computed=1)
        return GroebnerBasis(ring, (), ring.order_name, True, 0, 0)
    if any(gg.is_constant() for gg in basis):
        ENGINE_STATS.add(bases_computed=1)
        return GroebnerBasis(ring, (ring.one(),), ring.order_name, True, 0, 0)

    key = ring.sort_key
    lms = [gg.leading_monomial() for gg in basis]
    pending = {}
    for jj in range(len(basis)):
        for ii in range(jj):
            pending[(ii, jj)] = monomial_lcm(lms[ii], lms[jj])

    while pending:
        pair = min(pending, key=lambda kk: (key(pending[kk]), kk))
        lcm = pending.pop(pair)
        ii, jj = pair
        if monomial_is_coprime(lms[ii], lms[jj]):
            continue
        # chain criterion: some g_k with lm_k | lcm whose pairs with i and j are both already treated
        chained = False
        for kk in range(len(basis)):
            if kk == ii or kk == jj or not monomial_divides(lms[kk], lcm):
                continue
            if (min(ii, kk), max(ii, kk)) not in pending and (min(jj, kk), max(jj, kk)) not in pending:
                chained = True
                break
        if chained:
            continue

        counter.pairs_processed += 1
        hh = __reduce__(s_polynomial(basis[ii], basis[jj]), basis, counter)
        if hh.is_zero():
            continue
        if hh.is_constant():
            basis, lms = [ring.one()], [(0,) * ring.nvars]
            pending = {}
            break
        hh = hh.monic()
        basis.append(hh)
        lms.append(hh.leading_monomial())
        new = len(basis) - 1
        for ii in range(new):
            pending[(ii, new)] = monomial_lcm(lms[ii], lms[new])

    elements = __interreduce__(basis, counter)
    ENGINE_STATS.add(counter.pairs_processed, counter.reductions, 1)
    return GroebnerBasis(ring, tuple(elements), ring.order_name, True, counter.pairs_processed, counter.reductions)


def is_groebner_basis(elements):
    """ Every S-polynomial of a pair reduces to zero """
    elements = [ii for ii in elements if not ii.is_zero()]
    for jj in range(len(elements)):
        for ii in range(jj):
            if not __reduce__(s_polynomial(elements[ii], elements[jj]), elements).is_zero():
                return False
    return True
