import math
from dataclasses import dataclass, field
from fractions import Fraction
from frobenius_singularities.core_algebra.fields import to_rational
from frobenius_singularities.core_algebra.hypotheses import normalize_flags, require_hypotheses
from frobenius_singularities.core_algebra.polynomials import Polynomial
from frobenius_singularities.ideals.ideals import Ideal, QuotientRing, equal, power, saturate
from frobenius_singularities.ideals.hilbert import a_invariant, hilbert
from frobenius_singularities.frobenius.verdicts import Status, FrobeniusVerdict, MembershipCheck, DegreeCertificate


def __as_poly__(ring, value):
    if isinstance(value, Polynomial):
        return value
    return ring.constant(value) if isinstance(value, int) else ring.parse(value)


@dataclass(frozen=True)
class DivisorialIdeal:
    """
    Fractional ideal `(1 / denominator) * numerator` of `ring`, a QuotientRing.
    `numerator` is an Ideal of the ambient ring, read modulo the defining relations.
    `degree_shift` is the weighted degree of the `1 / denominator` factor, default `-deg(denominator)`;
    a formal shift with denominator `1` stands for a factor that is not an element of the ring.
    """

    ring: QuotientRing
    numerator: Ideal
    denominator: Polynomial = None
    degree_shift: Fraction = None
    hypotheses: tuple = field(default_factory=tuple)

    def __post_init__(self):
        ambient = self.ring.ambient
        numerator = self.numerator if isinstance(self.numerator, Ideal) else Ideal(ambient, self.numerator)
        denominator = ambient.one() if self.denominator is None else __as_poly__(ambient, self.denominator)
        if self.ring.is_zero(denominator):
            raise ValueError("Denominator of a divisorial ideal must be nonzero in the ring, got: {}".format(denominator))
        if not denominator.is_homogeneous():
            raise ValueError("Denominator must be homogeneous, got: {}".format(denominator))
        shift = -denominator.weighted_degree() if self.degree_shift is None else to_rational(self.degree_shift)
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)
        object.__setattr__(self, "degree_shift", Fraction(shift))

    @classmethod
    def principal(cls, ring, uu, denominator=None, degree_shift=None):
        return cls(ring, Ideal(ring.ambient, [__as_poly__(ring.ambient, uu)]), denominator, degree_shift)

    @property
    def lifted(self):
        """ `numerator + defining` in the ambient ring """
        return self.ring.ideal(self.numerator)

    @property
    def formal_shift(self):
        """ Part of the shift not accounted for by the denominator """
        return self.degree_shift + self.denominator.weighted_degree()

    def equals(self, other, budget=None):
        """ Cross multiplied numerators agree modulo the relations and the formal shifts agree """
        if self.formal_shift != other.formal_shift:
            return False
        left = [other.denominator * gg for gg in self.numerator.generators]
        right = [self.denominator * gg for gg in other.numerator.generators]
        return self.ring.equal(left, right, budget=budget)

    def __str__(self):
        gens = ", ".join(str(gg) for gg in self.numerator.generators)
        if not self.denominator.is_constant():
            return "(1/{})*({})R".format(self.denominator, gens)
        if self.degree_shift != 0:
            return "({})R[shift {}]".format(gens, self.degree_shift)
        return "({})R".format(gens)

    def to_dict(self):
        return {
            "numerator": [str(gg) for gg in self.numerator.generators],
            "denominator": str(self.denominator),
            "degree_shift": str(self.degree_shift),
            "hypotheses": list(self.hypotheses),
        }


def __modulo_relations__(ring, ideal, budget=None):
    """ Reduced Groebner basis elements of `ideal + defining` that are nonzero in the ring, ascending """
    gb = ring.ideal(ideal).gb(budget)
    return [gg for gg in gb.elements if not ring.reduce(gg, budget).is_zero()]


def symbolic_power(ww, ii, ss, flags=None, budget=None):
    """
    `W^(i)`: numerator `saturate(numerator^i + defining, s)` on lifts, denominator `denominator^i`, shift `i * shift`.
    `s` must avoid every minimal prime of the numerator, asserted with `saturator_avoids_minimal_primes`.

    Example:
    >>> from frobenius_singularities.core_algebra import PolyRing
    >>> from frobenius_singularities.ideals import QuotientRing
    >>> from frobenius_singularities.covers import DivisorialIdeal, symbolic_power
    >>> ring = PolyRing(7, "T, U, V, W", weights=[1, 4, 4, 4])
    >>> rr = QuotientRing(ring, ["T^8 - U*V", "T^4*(V - W) - V*W", "U*(V - W) - T^4*W"], flags="saturator_avoids_minimal_primes")
    >>> cube = symbolic_power(DivisorialIdeal(rr, ["V", "W"], "T^3"), 3, "U")
    >>> print(cube.denominator, cube.degree_shift, cube.equals(DivisorialIdeal(rr, ["(V - W)^2"], "T^9")))
    # T^9 -9 True
    """
    ring = ww.ring
    hypotheses = require_hypotheses(tuple(ring.flags) + normalize_flags(flags), "symbolic_power")
    if not isinstance(ii, int) or ii < 1:
        raise ValueError("Symbolic power exponent must be a positive integer, got: {!r}".format(ii))
    if ss is None:
        raise ValueError("Symbolic powers need a saturating element, give `saturator = ...` with the divisorial ideal")
    ss = __as_poly__(ring.ambient, ss)
    if ss.is_zero() or ring.is_zero(ss):
        raise ValueError("Saturating element must be nonzero in the ring, got: {}".format(ss))

    lifted = ring.ideal(power(ww.numerator, ii))
    saturated = saturate(lifted, ss, budget=budget)
    numerator = Ideal(ring.ambient, __modulo_relations__(ring, saturated, budget))
    merged = tuple(sorted(set(ww.hypotheses) | set(hypotheses)))
    return DivisorialIdeal(ring, numerator, ww.denominator**ii, ww.degree_shift * ii, merged)


@dataclass(frozen=True)
class ClassOrder:
    """ Least `order <= n_max` with `W^(order)` principal, generated by `generator` of degree `degree` (shift included) """

    n_max: int
    order: int = None
    generator: DivisorialIdeal = None
    degree: Fraction = None
    power: DivisorialIdeal = None
    checks: tuple = field(default_factory=tuple)

    @property
    def found(self):
        return self.order is not None

    @property
    def label(self):
        return "Order({})".format(self.order) if self.found else "NotFoundUpTo({})".format(self.n_max)

    def __str__(self):
        return self.label

    def to_dict(self):
        return {
            "status": self.label,
            "order": self.order,
            "generator": None if self.generator is None else str(self.generator.numerator.generators[0]),
            "denominator": None if self.generator is None else str(self.generator.denominator),
            "deg_u": None if self.degree is None else str(self.degree),
            "power": None if self.power is None else self.power.to_dict(),
        }


def principal_generator(ww, budget=None):
    """
    A candidate `g` among the reduced Groebner basis elements of `numerator + defining` with `(g) + defining`
    equal to `numerator + defining`, None if no candidate works. A principal generator outside the candidates is missed.
    """
    ring, target = ww.ring, ww.lifted
    for gg in __modulo_relations__(ring, ww.numerator, budget):
        if not gg.is_homogeneous():
            continue
        if equal(ring.ideal([gg]), target, budget=budget):
            return gg
    return None


def class_order(ww, n_max, ss, flags=None, budget=None, verbose=False):
    """
    Order of `W` in the graded class group: least `n <= n_max` with `W^(n)` principal, `W^(n) = uR`.
    `deg u` is the weighted degree of the generator plus `n` times the shift of `W`.
    Returns ClassOrder, with `order` None (NotFoundUpTo(n_max)) when the candidate search fails.
    """
    if not isinstance(n_max, int) or n_max < 1:
        raise ValueError("n_max must be a positive integer, got: {!r}".format(n_max))
    ring = ww.ring
    for nn in range(1, n_max + 1):
        cur = ww if nn == 1 else symbolic_power(ww, nn, ss, flags=flags, budget=budget)
        uu = principal_generator(cur, budget=budget)
        if verbose:
            print(">>>> n = {}, numerator: {}, principal: {}".format(nn, cur.numerator, uu is not None))
        if uu is None:
            continue
        degree = uu.weighted_degree() + cur.degree_shift
        generator = DivisorialIdeal(ring, Ideal(ring.ambient, [uu]), cur.denominator, cur.degree_shift, cur.hypotheses)
        checks = (MembershipCheck(uu, cur.lifted, True),)
        checks += tuple(MembershipCheck(gg, generator.lifted, True) for gg in cur.numerator.generators)
        return ClassOrder(n_max, nn, generator, Fraction(degree), cur, checks)
    if verbose:
        print(">>>> No principal symbolic power found up to n = {}".format(n_max))
    return ClassOrder(n_max)


@dataclass(frozen=True)
class CoverReport:
    """ Degree bookkeeping of the cyclic cover `S = R[W t, ..., W^(n-1) t^(n-1)] / (u t^n - 1)`: `a(S) = -deg(u) / n` """

    order: int = None
    deg_u: Fraction = None
    generator: object = None
    verdict: FrobeniusVerdict = None
    hypotheses: tuple = field(default_factory=tuple)

    @property
    def k(self):
        return None if self.order is None else Fraction(self.deg_u) / self.order

    @property
    def a_of_cover(self):
        return None if self.order is None else -self.k

    def to_dict(self):
        return {
            "order": self.order,
            "deg_u": None if self.deg_u is None else str(self.deg_u),
            "k": None if self.k is None else str(self.k),
            "a_of_cover": None if self.a_of_cover is None else str(self.a_of_cover),
            "generator": None if self.generator is None else str(self.generator),
            "verdict": None if self.verdict is None else self.verdict.to_dict(),
            "hypotheses": list(self.hypotheses),
        }


def cyclic_cover_stats(nn, u_degree):
    """
    >>> from frobenius_singularities.covers import cyclic_cover_stats
    >>> print(cyclic_cover_stats(3, -1).a_of_cover)
    # 1/3
    """
    if not isinstance(nn, int) or nn < 1:
        raise ValueError("Order must be a positive integer, got: {!r}".format(nn))
    return CoverReport(nn, to_rational(u_degree))


def f_regular_verdict_dim2(rr, ww, n_max, ss, flags=None, budget=None, verbose=False):
    """
    For a normal graded ring of dimension two with `d_S(R) < p` (or `p` large), and `W^(n) = uR` with `n` prime to `p`:
    R is F-regular iff `deg u > 0`. Inconclusive when the order is not found or `p` divides it.
    """
    hypotheses = require_hypotheses(tuple(rr.flags) + normalize_flags(flags), "f_regular_dim2")
    result = class_order(ww, n_max, ss, flags=flags, budget=budget, verbose=verbose)
    hypotheses = tuple(sorted(set(hypotheses) | set(ww.hypotheses) | (set(result.power.hypotheses) if result.found else set())))
    if not result.found:
        verdict = FrobeniusVerdict(Status.INCONCLUSIVE, hypotheses=hypotheses, note="order not found up to n = {}".format(n_max))
        return CoverReport(verdict=verdict, hypotheses=hypotheses)

    nn, deg_u = result.order, result.degree
    if math.gcd(nn, rr.p) != 1:
        note = "p = {} divides the order {}".format(rr.p, nn)
        verdict = FrobeniusVerdict(Status.INCONCLUSIVE, deg_u, hypotheses=hypotheses, exponent=nn, note=note)
        return CoverReport(nn, deg_u, result.generator, verdict, hypotheses)

    hypotheses = tuple(sorted(set(hypotheses) | {"coprime_order"}))
    if deg_u > 0:
        status, relation = Status.F_REGULAR, ">0"
    else:
        status, relation = Status.NOT_F_REGULAR, "<=0"
    certificate = DegreeCertificate(deg_u, relation, quantity="deg u")
    note = "order {}, deg u = {}".format(nn, deg_u)
    verdict = FrobeniusVerdict(status, deg_u, hypotheses, nn, result.checks, certificate, note=note)
    return CoverReport(nn, deg_u, result.generator, verdict, hypotheses)


def f_rational_verdict_dim2(rr, flags=None, budget=None):
    """ Normal graded ring of dimension two with `d_S(R) < p` (or `p` large): F-rational iff `a(R) < 0` """
    hypotheses = require_hypotheses(tuple(rr.flags) + normalize_flags(flags), "f_rational_dim2")
    data = a_invariant(rr.with_flags(flags) if flags else rr, budget=budget)
    hypotheses = tuple(sorted(set(hypotheses) | set(data.hypotheses)))
    aa = data.a_invariant
    if aa < 0:
        status, relation = Status.F_RATIONAL, "<0"
    else:
        status, relation = Status.NOT_F_RATIONAL, ">=0"
    certificate = DegreeCertificate(aa, relation, quantity="a(R)")
    return FrobeniusVerdict(status, aa, hypotheses, degree_certificate=certificate, note="a(R) = {}".format(aa))


def canonical_module_gorenstein(rr, budget=None):
    """
    `omega = R(a)`: the divisorial ideal `(1)` with its generator in degree `-a`, so shift `-a`.
    For a polynomial ring, a complete intersection or a ring asserted `gorenstein`.
    """
    data = hilbert(rr, budget=budget)
    if data.a_invariant is None:
        raise ValueError("The zero ring has no canonical module")
    is_ci = len(rr.defining.generators) == rr.ambient.nvars - data.dimension
    if not (rr.defining.is_zero() or is_ci or "gorenstein" in rr.flags):
        raise ValueError("Canonical module needs a Gorenstein ring, assert `gorenstein` or give omega explicitly")
    hypotheses = ("gorenstein",) if "gorenstein" in rr.flags and not (rr.defining.is_zero() or is_ci) else ()
    return DivisorialIdeal(rr, Ideal.unit(rr.ambient), None, -data.a_invariant, hypotheses)


def cover_summands(nn, kk):
    """ Graded pieces of `S = R + omega(k) + ... + omega^(n-1)((n-1)k)` as `(i, twist)` pairs """
    if not isinstance(nn, int) or nn < 1:
        raise ValueError("Order must be a positive integer, got: {!r}".format(nn))
    kk = to_rational(kk)
    return [(ii, ii * kk) for ii in range(nn)]


@dataclass(frozen=True)
class CoverPresentationCheck:
    a_of_cover: Fraction
    hilbert_a_invariant: Fraction

    @property
    def match(self):
        return self.a_of_cover == self.hilbert_a_invariant

    def __bool__(self):
        return self.match

    def to_dict(self):
        return {"a_of_cover": str(self.a_of_cover), "hilbert_a_invariant": str(self.hilbert_a_invariant), "match": self.match}


def cover_presentation_check(report, presentation, weights=None, budget=None):
    """ Compare `a(S) = -deg u / n` with the Hilbert series a-invariant of an explicit presentation of `S` """
    a_of_cover = report.a_of_cover if isinstance(report, CoverReport) else to_rational(report)
    if a_of_cover is None:
        raise ValueError("Cover report carries no order")
    if isinstance(presentation, Ideal):
        presentation = QuotientRing(presentation.ring, presentation.generators)
    data = a_invariant(presentation, weights=weights, budget=budget)
    return CoverPresentationCheck(Fraction(a_of_cover), data.a_invariant)


@dataclass(frozen=True)
class CoverInclusionCheck:
    images: dict
    checks: tuple = ()
    degree_mismatches: tuple = ()

    @property
    def match(self):
        return len(self.degree_mismatches) == 0 and all(ii.run() for ii in self.checks)

    def __bool__(self):
        return self.match

    def to_dict(self):
        return {
            "images": {kk: str(vv) for kk, vv in sorted(self.images.items())},
            "relations_vanish": all(ii.run() for ii in self.checks),
            "degree_mismatches": list(self.degree_mismatches),
            "match": self.match,
        }


def cover_inclusion_check(rr, presentation, images, budget=None):
    """
    Check that `R -> S`, sending each variable of R to `images[name]` in the cover presentation, is a graded ring map:
    every image is homogeneous of the weight of its variable, and every relation of R maps into the defining ideal of S.
    """
    target = presentation if isinstance(presentation, Ideal) else presentation.defining
    cover_ring = target.ring
    missing = [name for name in rr.ambient.variables if name not in images]
    if len(missing) != 0:
        raise ValueError("No image for variables {} of {}".format(missing, rr.ambient))
    mapped = {name: __as_poly__(cover_ring, images[name]) for name in rr.ambient.variables}

    degree_mismatches = []
    for name, weight in zip(rr.ambient.variables, rr.ambient.weights):
        image = mapped[name]
        if not image.is_homogeneous() or image.weighted_degree() != weight:
            degree_mismatches.append(name)
    target.gb(budget)
    checks = tuple(MembershipCheck(gg.substitute(mapped, cover_ring), target, True) for gg in rr.defining.generators)
    return CoverInclusionCheck(mapped, checks, tuple(degree_mismatches))
