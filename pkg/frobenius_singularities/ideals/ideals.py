import threading
from dataclasses import dataclass
from itertools import combinations_with_replacement
from frobenius_singularities.core_algebra.errors import RingMismatchError
from frobenius_singularities.core_algebra.hypotheses import normalize_flags, close_flags, require_hypotheses
from frobenius_singularities.core_algebra.polynomials import Polynomial, PolyRing
from frobenius_singularities.groebner.groebner import buchberger, normal_form, divide_exact


def __as_poly__(ring, value):
    if isinstance(value, str):
        return ring.parse(value)
    if isinstance(value, int):
        return ring.constant(value)
    if not isinstance(value, Polynomial):
        raise TypeError("Expected a Polynomial, str or int, got: {}".format(type(value).__name__))
    if value.ring != ring:
        raise RingMismatchError(ring, value.ring, "ideal construction")
    return value


class Ideal:
    """
    Ideal of a PolyRing given by generators, zeros dropped. The reduced Groebner basis is computed on first use
    and cached, later readers see the final value.

    Example:
    >>> from frobenius_singularities.core_algebra import PolyRing
    >>> from frobenius_singularities.ideals import Ideal
    >>> ring = PolyRing(5, "x, y")
    >>> ii = Ideal(ring, ["x^2", "x*y"])
    >>> print(ii, ring.parse("x^2*y + x^3") in ii)
    # (x^2, x*y) True
    """

    def __init__(self, ring, generators=(), gb=None):
        if isinstance(generators, (str, Polynomial)):
            generators = [generators]
        self.ring = ring
        self.generators = tuple(gg for gg in (__as_poly__(ring, ii) for ii in generators) if not gg.is_zero())
        self.__gb, self.__lock = gb, threading.Lock()

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one()])

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    def gb(self, budget=None):
        if self.__gb is None:
            with self.__lock:
                if self.__gb is None:
                    self.__gb = buchberger(self.generators, budget=budget, ring=self.ring)
        return self.__gb

    @property
    def cached_gb(self):
        return self.__gb

    def reduce(self, ff, budget=None):
        return normal_form(__as_poly__(self.ring, ff), self.gb(budget).elements, budget=budget)

    def __contains__(self, ff):
        return self.reduce(ff).is_zero()

    def contains_ideal(self, other):
        return all(gg in self for gg in other.generators)

    def is_zero(self):
        return len(self.generators) == 0

    def is_unit(self):
        return self.gb().is_unit()

    def is_homogeneous(self):
        return all(gg.is_homogeneous() for gg in self.generators)

    def is_monomial(self):
        return all(gg.is_monomial() for gg in self.generators)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        if other.ring != self.ring:
            raise RingMismatchError(self.ring, other.ring, "ideal product")
        return Ideal(self.ring, [aa * bb for aa in self.generators for bb in other.generators])

    def __pow__(self, nn):
        return power(self, nn)

    def to_ring(self, ring):
        return Ideal(ring, [gg.to_ring(ring) for gg in self.generators])

    def __str__(self):
        return "({})".format(", ".join(str(ii) for ii in self.generators))

    def __repr__(self):
        return "Ideal{} in {!r}".format(str(self), self.ring)


@dataclass(frozen=True)
class Membership:
    """ `member` is True iff `normal_form` is zero, the normal form is the certificate either way """

    member: bool
    normal_form: Polynomial
    ideal: Ideal
    element: Polynomial = None

    def __bool__(self):
        return self.member

    def recheck(self):
        nf = self.ideal.reduce(self.element)
        return nf == self.normal_form and nf.is_zero() == self.member


def __check_same_ring__(*ideals, operation="operation"):
    ring = ideals[0].ring
    for ii in ideals[1:]:
        if ii.ring != ring:
            raise RingMismatchError(ring, ii.ring, operation)
    return ring


def member(ff, ideal, budget=None):
    ff = __as_poly__(ideal.ring, ff)
    nf = ideal.reduce(ff, budget=budget)
    return Membership(nf.is_zero(), nf, ideal, ff)


def ideal_sum(left, right):
    ring = __check_same_ring__(left, right, operation="ideal sum")
    return Ideal(ring, left.generators + right.generators)


def equal(left, right, budget=None):
    """ Mutual membership of generators """
    __check_same_ring__(left, right, operation="ideal equality")
    return all(left.reduce(gg, budget).is_zero() for gg in right.generators) and all(right.reduce(gg, budget).is_zero() for gg in left.generators)


def power(ideal, nn):
    if not isinstance(nn, int) or nn < 0:
        raise ValueError("Power must be a nonnegative integer, got: {!r}".format(nn))
    if nn == 0:
        return Ideal.unit(ideal.ring)
    gens = []
    for combo in combinations_with_replacement(ideal.generators, nn):
        prod = ideal.ring.one()
        for gg in combo:
            prod = prod * gg
        gens.append(prod)
    return Ideal(ideal.ring, list(dict.fromkeys(gens)))


def eliminate(ideal, names, budget=None):
    """ `ideal ∩ F_p[remaining variables]`, returned in the ring of the remaining variables """
    names = [names] if isinstance(names, str) else list(names)
    ring = ideal.ring
    elim_ring = ring.eliminating(names)
    elim_gb = buchberger([gg.to_ring(elim_ring) for gg in ideal.generators], budget=budget, ring=elim_ring)
    rest = [ii for ii in ring.variables if ii not in names]
    sub_ring = PolyRing(ring.p, rest, [ring.weights[ring.index[ii]] for ii in rest], ring.order)
    kept = [gg for gg in elim_gb.elements if all(gg.degree_in(ii) <= 0 for ii in names)]
    return Ideal(sub_ring, [gg.to_ring(sub_ring) for gg in kept])


def intersect(left, right, budget=None):
    """ Eliminate `t` from `t * left + (1 - t) * right` """
    ring = __check_same_ring__(left, right, operation="intersection")
    if left.is_zero() or right.is_zero():
        return Ideal.zero(ring)
    tt = ring.fresh_variable("t")
    big_ring = ring.extend([tt])
    t_poly = big_ring.gen(tt)
    gens = [t_poly * gg.to_ring(big_ring) for gg in left.generators]
    gens += [(1 - t_poly) * gg.to_ring(big_ring) for gg in right.generators]
    out = eliminate(Ideal(big_ring, gens), [tt], budget=budget)
    return Ideal(ring, [gg.to_ring(ring) for gg in out.generators])


def colon_element(ideal, ff, budget=None):
    """ `(ideal : f) = (ideal ∩ (f)) / f` """
    ff = __as_poly__(ideal.ring, ff)
    if ff.is_zero():
        return Ideal.unit(ideal.ring)
    if ideal.is_zero():
        return Ideal.zero(ideal.ring)
    meet = intersect(ideal, Ideal(ideal.ring, [ff]), budget=budget)
    return Ideal(ideal.ring, [divide_exact(gg, ff) for gg in meet.generators])


def colon(ideal, other, budget=None):
    """ `{g : g * other ⊆ ideal}`, intersection of the element colons """
    ring = __check_same_ring__(ideal, other, operation="colon")
    out = None
    for gg in other.generators:
        cur = colon_element(ideal, gg, budget=budget)
        out = cur if out is None else intersect(out, cur, budget=budget)
        if out.is_zero():
            break
    return Ideal.unit(ring) if out is None else out


def saturate(ideal, ff, budget=None, max_steps=64):
    """ `∪_k (ideal : f^k)`, iterating `colon_element` until the chain stabilizes """
    ff = __as_poly__(ideal.ring, ff)
    if ff.is_zero():
        raise ValueError("Cannot saturate at the zero polynomial")
    cur = ideal
    for _ in range(max_steps):
        nxt = colon_element(cur, ff, budget=budget)
        if all(cur.reduce(gg, budget).is_zero() for gg in nxt.generators):
            return cur
        cur = Ideal(ideal.ring, nxt.gb(budget).elements, gb=nxt.gb(budget))
    raise RuntimeError("Saturation did not stabilize after {} steps".format(max_steps))


class QuotientRing:
    """
    `ambient / defining`, elements are represented by polynomials of `ambient` and compared by normal forms.
    Ideals of the quotient are handled through their lifts `lift + defining`.

    Args:
      ambient: PolyRing.
      relations: defining relations, Polynomials or strings.
      flags: asserted hypotheses, like `"normal, dim2"`. Implied flags are added, `normal` + `dim2` gives `cohen_macaulay`.
    """

    def __init__(self, ambient, relations=(), flags=None):
        self.ambient = ambient
        self.defining = Ideal(ambient, relations)
        self.asserted_flags = normalize_flags(flags)
        self.flags = close_flags(self.asserted_flags)

    @property
    def p(self):
        return self.ambient.p

    def lift(self, ff):
        return __as_poly__(self.ambient, ff)

    def reduce(self, ff, budget=None):
        return self.defining.reduce(self.lift(ff), budget)

    def is_zero(self, ff):
        return self.reduce(ff).is_zero()

    def ideal(self, generators):
        """ The lifted ideal `(generators) + defining` of `ambient` """
        if isinstance(generators, Ideal):
            generators = generators.generators
        if isinstance(generators, (str, Polynomial)):
            generators = [generators]
        return Ideal(self.ambient, [self.lift(ii) for ii in generators] + list(self.defining.generators))

    def member(self, ff, generators, budget=None):
        return member(self.lift(ff), self.ideal(generators), budget=budget)

    def equal(self, left, right, budget=None):
        return equal(self.ideal(left), self.ideal(right), budget=budget)

    def maximal_ideal(self):
        return self.ideal(self.ambient.gens())

    def with_flags(self, flags):
        return QuotientRing(self.ambient, self.defining.generators, tuple(self.asserted_flags) + tuple(normalize_flags(flags)))

    def require(self, consumer, required=None):
        return require_hypotheses(self.flags, consumer, required)

    def __repr__(self):
        return "QuotientRing({!r} / {}, flags={})".format(self.ambient, self.defining, list(self.asserted_flags))
