"""
Hilbert series of graded quotients `S / I` from the lead term ideal of `I`.
With integer weights `w_i = L * weight_i`, the series in `t = T^(1/L)` is `N(t) / prod(1 - t^w_i)`.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from sympy import Poly, symbols, div
from frobenius_singularities.core_algebra.errors import NonHomogeneousError
from frobenius_singularities.core_algebra.polynomials import monomial_divides, monomial_is_coprime
from frobenius_singularities.ideals.ideals import Ideal, QuotientRing

T = symbols("t")


@dataclass(frozen=True)
class HilbertData:
    numerator: Poly  # integer coefficients in t, common (1 - t^w) factors cancelled
    denominator_weights: tuple  # cleared integer weights left in the denominator
    weight_denominator: int  # t = T^(1 / weight_denominator)
    a_invariant: Fraction
    dimension: int
    hypotheses: tuple = field(default_factory=tuple)
    cohen_macaulay_source: str = "unchecked"

    @property
    def numerator_coefficients(self):
        """ Ascending, `[c_0, c_1, ...]` """
        return list(reversed(self.numerator.all_coeffs()))

    def to_dict(self):
        return {
            "numerator": str(self.numerator.as_expr()),
            "denominator_weights": list(self.denominator_weights),
            "weight_denominator": self.weight_denominator,
            "a_invariant": str(self.a_invariant),
            "dimension": self.dimension,
            "hypotheses": list(self.hypotheses),
            "cohen_macaulay_source": self.cohen_macaulay_source,
        }


def __minimalize__(monomials):
    monomials = sorted(set(monomials), key=lambda mm: (sum(mm), mm))
    out = []
    for mm in monomials:
        if not any(monomial_divides(nn, mm) for nn in out):
            out.append(mm)
    return tuple(out)


def __pivot__(monomials, nvars):
    """ Variable dividing most generators, ties go to the lower index """
    counts = [sum(1 for mm in monomials if mm[ii] > 0) for ii in range(nvars)]
    return max(range(nvars), key=lambda ii: (counts[ii], -ii))


def __monomial_numerator__(monomials, int_weights, cache):
    """ Numerator `K(M)` of the Hilbert series of `S / M` over `prod(1 - t^w_i)` """
    monomials = __minimalize__(monomials)
    if monomials in cache:
        return cache[monomials]
    one = Poly(1, T, domain="ZZ")
    if len(monomials) == 0:
        out = one
    elif any(not any(mm) for mm in monomials):
        out = Poly(0, T, domain="ZZ")
    elif all(monomial_is_coprime(aa, bb) for id, aa in enumerate(monomials) for bb in monomials[id + 1 :]):
        out = one
        for mm in monomials:
            deg = sum(ww * ee for ww, ee in zip(int_weights, mm))
            out = out * Poly(1 - T**deg, T, domain="ZZ")
    else:
        # K(M) = K(M + (x_i)) + t^w_i * K(M : x_i)
        nvars = len(int_weights)
        pivot = __pivot__(monomials, nvars)
        var = tuple(1 if ii == pivot else 0 for ii in range(nvars))
        with_var = [mm for mm in monomials if mm[pivot] == 0] + [var]
        quotient = [tuple(ee - 1 if ii == pivot and ee > 0 else ee for ii, ee in enumerate(mm)) for mm in monomials]
        out = __monomial_numerator__(with_var, int_weights, cache)
        out = out + Poly(T ** int_weights[pivot], T, domain="ZZ") * __monomial_numerator__(quotient, int_weights, cache)
    cache[monomials] = out
    return out


def monomial_hilbert_numerator(monomials, int_weights):
    """ Uncancelled numerator for the monomial ideal with exponent vectors `monomials` """
    return __monomial_numerator__([tuple(mm) for mm in monomials], tuple(int_weights), {})


def __order_at_one__(poly):
    """ Multiplicity of `t = 1` as a root, the zero polynomial counts as infinite """
    if poly.is_zero:
        return float("inf")
    order, factor = 0, Poly(T - 1, T, domain="ZZ")
    while poly.eval(1) == 0:
        poly, _ = div(poly, factor)
        order += 1
    return order


def __weighted_ring_ideal__(ideal, weights):
    ring = ideal.ring if weights is None else ideal.ring.with_weights(weights)
    if ring != ideal.ring:
        ideal = ideal.to_ring(ring)
    for gg in ideal.generators:
        if not gg.is_homogeneous():
            raise NonHomogeneousError(gg, ring.weights)
    return ideal


def hilbert(ideal, weights=None, hypotheses=(), budget=None):
    """
    Hilbert series of `S / ideal` with `S` graded by `weights` (default the ring weights).

    Returns HilbertData. `a_invariant = (deg N - sum(w_i)) / L` is the degree of the series as a rational function,
    which is the a-invariant when `S / ideal` is Cohen-Macaulay; `dimension` is the pole order at `t = 1`.

    Example:
    >>> from frobenius_singularities.core_algebra import PolyRing
    >>> from frobenius_singularities.ideals import Ideal, hilbert
    >>> ring = PolyRing(5, "T, U, V, W", weights=[1, 4, 4, 4])
    >>> hh = hilbert(Ideal(ring, ["T^8 - U*V", "T^4*(V - W) - V*W", "U*(V - W) - T^4*W"]))
    >>> print(hh.numerator.as_expr(), hh.denominator_weights, hh.a_invariant, hh.dimension)
    # 2*t**4 + 1 (1, 4) -1 2
    """
    if isinstance(ideal, QuotientRing):
        ideal = ideal.defining
    ideal = __weighted_ring_ideal__(ideal, weights)
    ring = ideal.ring
    int_weights, ll = ring.int_weights, ring.weight_denominator
    leading = [gg.leading_monomial() for gg in ideal.gb(budget).elements]
    numerator = monomial_hilbert_numerator(leading, int_weights)
    if numerator.is_zero:
        # S / S: empty series
        return HilbertData(numerator, (), ll, None, -1, tuple(hypotheses))

    a_invariant = Fraction(numerator.degree() - sum(int_weights), ll)
    remaining = []
    for ww in sorted(int_weights, reverse=True):
        quotient, remainder = div(numerator, Poly(1 - T**ww, T, domain="ZZ"))
        if remainder.is_zero:
            numerator = quotient
        else:
            remaining.append(ww)
    dimension = len(remaining) - __order_at_one__(numerator)
    return HilbertData(numerator, tuple(sorted(remaining)), ll, a_invariant, int(dimension), tuple(hypotheses))


def hilbert_function(ideal, n_max, weights=None, budget=None):
    """ `[dim_K (S / ideal)_(k / L) for k in 0..n_max]`, series coefficients in `t` """
    data = hilbert(ideal, weights=weights, budget=budget)
    coeffs = data.numerator_coefficients + [0] * (n_max + 1)
    series = [int(ii) for ii in coeffs[: n_max + 1]]
    for ww in data.denominator_weights:
        # multiply by 1 / (1 - t^w)
        for kk in range(ww, n_max + 1):
            series[kk] += series[kk - ww]
    return series


def dimension(ideal, weights=None, budget=None):
    """ Krull dimension of `S / ideal`, `-1` for the unit ideal """
    return hilbert(ideal, weights=weights, budget=budget).dimension


def __is_complete_intersection__(ring_or_ideal, data):
    ideal = ring_or_ideal.defining if isinstance(ring_or_ideal, QuotientRing) else ring_or_ideal
    return len(ideal.generators) == ideal.ring.nvars - data.dimension


def a_invariant(ring, weights=None, budget=None):
    """
    a-invariant of the graded ring `ring`, a QuotientRing (or an Ideal of a polynomial ring).

    Needs Cohen-Macaulayness, asserted through the `cohen_macaulay` flag (implied by `normal` + `dim2`)
    or detected when the defining ideal is a complete intersection. Returns HilbertData with the flag recorded.
    """
    if isinstance(ring, Ideal):
        ring = QuotientRing(ring.ring, ring.generators)
    data = hilbert(ring, weights=weights, budget=budget)
    if data.a_invariant is None:
        raise ValueError("The zero ring has no a-invariant")
    if __is_complete_intersection__(ring, data):
        source, hypotheses = "complete_intersection", ()
    else:
        hypotheses, source = ring.require("a_invariant"), "asserted"
    return HilbertData(data.numerator, data.denominator_weights, data.weight_denominator, data.a_invariant, data.dimension, hypotheses, source)
