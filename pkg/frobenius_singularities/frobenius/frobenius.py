from frobenius_singularities.core_algebra.hypotheses import require_hypotheses
from frobenius_singularities.core_algebra.polynomials import Polynomial
from frobenius_singularities.ideals.ideals import Ideal, colon, ideal_sum
from frobenius_singularities.frobenius.verdicts import Status, FrobeniusVerdict, MembershipCheck

DEFAULT_E_MAX = 3


def __as_ideal__(ideal, ring=None):
    if isinstance(ideal, Ideal):
        return ideal
    if ring is None:
        raise ValueError("Need a ring to build an ideal from {!r}".format(ideal))
    return Ideal(ring, ideal)


def __with_relations__(ideal, quotient):
    """ Lift into the ambient ring of `quotient`, None means a polynomial ring """
    return ideal if quotient is None else ideal_sum(ideal, quotient.defining)


def bracket_power(ideal, qq):
    """
    Frobenius power `I^[q] = (g^q for g in generators)`, `q` a power of the characteristic.

    Example:
    >>> from frobenius_singularities.core_algebra import PolyRing
    >>> from frobenius_singularities.ideals import Ideal
    >>> from frobenius_singularities.frobenius import bracket_power
    >>> ring = PolyRing(2, "x, y")
    >>> print(bracket_power(Ideal(ring, ["x", "y"]), 4))
    # (x^4, y^4)
    """
    ee = ideal.ring.field.exponent_of(qq)
    return Ideal(ideal.ring, [gg.frobenius_power(ee) for gg in ideal.generators])


def maximal_ideal_bracket(ring, qq=None):
    """ `m^[q] = (x_1^q, ..., x_n^q)`, default `q = p` """
    qq = ring.p if qq is None else qq
    ee = ring.field.exponent_of(qq)
    return Ideal(ring, [gg.frobenius_power(ee) for gg in ring.gens()])


def __reduce_mod_bracket_maximal__(ff, qq):
    """ Normal form modulo the monomial ideal `m^[q]`: drop every term with some exponent >= q """
    coeffs = {mm: cc for mm, cc in ff.coeffs.items() if all(ee < qq for ee in mm)}
    return Polynomial(ff.ring, coeffs, normalized=True)


def frobenius_closure_member(ff, ideal, e_max=DEFAULT_E_MAX, quotient=None, budget=None):
    """
    Bounded Frobenius closure search: InIdeal if `f in I`, else InFrobeniusClosureAt(e) for the least `e <= e_max`
    with `f^(p^e) in I^[p^e]`, else NotDetectedUpTo(e_max), which is not a proof of non-membership.

    With `quotient` given, `ideal` is read in `ambient / defining` and every membership is tested on lifts.
    """
    if not isinstance(e_max, int) or e_max < 1:
        raise ValueError("e_max must be a positive integer, got: {!r}".format(e_max))
    ring = ideal.ring if isinstance(ideal, Ideal) else quotient.ambient
    ideal = __as_ideal__(ideal, ring)
    ff = ring.parse(ff) if isinstance(ff, str) else ff

    lifted = __with_relations__(ideal, quotient)
    nf = lifted.reduce(ff, budget)
    if nf.is_zero():
        return FrobeniusVerdict(Status.IN_IDEAL, nf, exponent=0, checks=(MembershipCheck(ff, lifted, True),))

    evidence = []
    for ee in range(1, e_max + 1):
        qq = ring.p**ee
        power = ff.frobenius_power(ee)
        bracket = __with_relations__(bracket_power(ideal, qq), quotient)
        nf = bracket.reduce(power, budget)
        if nf.is_zero():
            checks = (MembershipCheck(ff, lifted, False), MembershipCheck(power, bracket, True))
            return FrobeniusVerdict(Status.IN_FROBENIUS_CLOSURE_AT, power, exponent=ee, checks=checks, evidence=tuple(evidence))
        evidence.append((ee, nf))
    note = "no witness up to e = {}, this does not prove non-membership".format(e_max)
    return FrobeniusVerdict(Status.NOT_DETECTED_UP_TO, None, exponent=e_max, evidence=tuple(evidence), note=note)


def squarefree_monomial_fpure(ideal, p=None):
    """
    Fast path: an ideal generated by square-free monomials defines an F-pure ring.
    Certificate is `(x_1 ... x_n)^(p - 1)`, which lies in `(J^[p] : J)` and not in `m^[p]`.
    Any other generating set gives Inconclusive.
    """
    ring = ideal.ring
    pp = ring.p if p is None else p
    if pp != ring.p:
        raise ValueError("p = {} differs from the ring characteristic {}".format(pp, ring.p))
    if not all(gg.is_squarefree_monomial() for gg in ideal.generators):
        return FrobeniusVerdict(Status.INCONCLUSIVE, note="not generated by square-free monomials")
    witness = ring.monomial([pp - 1] * ring.nvars)
    bracket = bracket_power(ideal, pp)
    checks = tuple(MembershipCheck(witness * gg, bracket, True) for gg in ideal.generators)
    checks += (MembershipCheck(witness, maximal_ideal_bracket(ring, pp), False),)
    return FrobeniusVerdict(Status.F_PURE, witness, checks=checks, note="square-free monomial ideal")


def fedder_is_f_pure(ideal, p=None, budget=None):
    """
    Fedder's criterion at the homogeneous maximal ideal: `S / J` is F-pure iff `(J^[p] : J)` is not inside `m^[p]`.

    Returns FPure with a colon generator outside `m^[p]`, or NotFPure with every colon generator as certificate.
    """
    ring = ideal.ring
    pp = ring.p if p is None else p
    if pp != ring.p:
        raise ValueError("p = {} differs from the ring characteristic {}".format(pp, ring.p))
    if any(gg.constant_value() != 0 for gg in ideal.generators):
        raise ValueError("Defining ideal is not inside the homogeneous maximal ideal: {}".format(ideal))
    m_bracket = maximal_ideal_bracket(ring, pp)
    if ideal.is_zero():
        return FrobeniusVerdict(Status.F_PURE, ring.one(), checks=(MembershipCheck(ring.one(), m_bracket, False),), note="polynomial ring")

    bracket = bracket_power(ideal, pp)
    colon_gens = colon(bracket, ideal, budget=budget).gb(budget).elements
    for gg in colon_gens:
        if not __reduce_mod_bracket_maximal__(gg, pp).is_zero():
            checks = tuple(MembershipCheck(gg * hh, bracket, True) for hh in ideal.generators)
            checks += (MembershipCheck(gg, m_bracket, False),)
            return FrobeniusVerdict(Status.F_PURE, gg, checks=checks)
    checks = tuple(MembershipCheck(gg, m_bracket, True) for gg in colon_gens)
    return FrobeniusVerdict(Status.NOT_F_PURE, list(colon_gens), checks=checks, note="(J^[p] : J) is contained in m^[p]")


def tight_closure_witness(ff, ideal, cc, e_min=1, e_max=DEFAULT_E_MAX, quotient=None, flags=None, budget=None):
    """
    Test `c * f^q in I^[q]` for `q = p^e`, `e_min <= e <= e_max`. Never decides tight closure membership:
    the verdict is always Inconclusive, `evidence` holds `(e, passed)` for each exponent.
    The test element must be asserted in R° with the `in_r_circ` flag.
    """
    hypotheses = require_hypotheses(flags if quotient is None else tuple(quotient.flags) + tuple(flags or ()), "tight_closure_witness")
    if not 0 <= e_min <= e_max:
        raise ValueError("Need 0 <= e_min <= e_max, got {} and {}".format(e_min, e_max))
    ring = ideal.ring if isinstance(ideal, Ideal) else quotient.ambient
    ideal = __as_ideal__(ideal, ring)
    ff = ring.parse(ff) if isinstance(ff, str) else ff
    cc = ring.parse(cc) if isinstance(cc, str) else cc
    if cc.is_zero() or (quotient is not None and quotient.is_zero(cc)):
        raise ValueError("Test element c must be nonzero")

    evidence = []
    for ee in range(e_min, e_max + 1):
        bracket = __with_relations__(bracket_power(ideal, ring.p**ee), quotient)
        evidence.append((ee, bracket.reduce(cc * ff.frobenius_power(ee), budget).is_zero()))
    passed = [ee for ee, ok in evidence if ok]
    if len(passed) == len(evidence):
        note = "c * f^q in I^[q] for every tested e, evidence for f in I*"
    else:
        note = "c * f^q not in I^[q] at e = {}, evidence against f in I*".format([ee for ee, ok in evidence if not ok])
    return FrobeniusVerdict(Status.INCONCLUSIVE, cc, hypotheses=hypotheses, evidence=tuple(evidence), note=note)


def frobenius_closure_obstruction(ff, ideal, e_max=DEFAULT_E_MAX, quotient=None, budget=None):
    """
    In an F-pure ring every ideal is Frobenius closed, so `f not in I` with `f^q in I^[q]` proves NotFPure,
    for any characteristic. Without such a witness the result is Inconclusive.

    Example:
    >>> from frobenius_singularities.core_algebra import PolyRing
    >>> from frobenius_singularities.ideals import QuotientRing
    >>> from frobenius_singularities.frobenius import frobenius_closure_obstruction
    >>> rr = QuotientRing(PolyRing(7, "u, v, y, z", weights=[2, 2, 1, 1]), ["u*v", "u*z", "z*(v - y^2)"])
    >>> print(frobenius_closure_obstruction("y^3*z^4", ["y^2*(u^2 - z^4)"], quotient=rr))
    # NotFPure
    """
    verdict = frobenius_closure_member(ff, ideal, e_max=e_max, quotient=quotient, budget=budget)
    if verdict.status == Status.IN_FROBENIUS_CLOSURE_AT:
        note = "{} is in the Frobenius closure at e = {} but not in the ideal".format(verdict.checks[0].element, verdict.exponent)
        return FrobeniusVerdict(Status.NOT_F_PURE, verdict.certificate, exponent=verdict.exponent, checks=verdict.checks, note=note)
    return FrobeniusVerdict(Status.INCONCLUSIVE, exponent=verdict.exponent, evidence=verdict.evidence, note="no Frobenius closure witness outside the ideal")
