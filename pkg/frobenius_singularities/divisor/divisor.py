import math
import re
from dataclasses import dataclass
from fractions import Fraction
from sympy import isprime
from frobenius_singularities.core_algebra.errors import ParseError
from frobenius_singularities.core_algebra.fields import lcm_of, to_rational
from frobenius_singularities.frobenius.verdicts import Status, FrobeniusVerdict, DegreeCertificate

INFINITY = None  # alpha of the point V(Y)
FORMAL_POINT_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class PointP1:
    """
    A point of P^1 = Proj K[X, Y]. `alpha` is an int for `V(X - alpha * Y)`, a string for a formal point
    used only in degree computations, or None for the point at infinity `V(Y)`.
    """

    alpha: object = INFINITY

    @property
    def is_infinity(self):
        return self.alpha is None

    @property
    def is_formal(self):
        return isinstance(self.alpha, str)

    @property
    def is_concrete(self):
        return isinstance(self.alpha, int)

    def sort_key(self):
        if self.is_concrete:
            return (0, self.alpha, "")
        return (1, 0, self.alpha) if self.is_formal else (2, 0, "")

    def reduce(self, p):
        """ Same point with `alpha` taken mod `p` """
        return PointP1(self.alpha % p) if self.is_concrete else self

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if self.is_infinity:
            return "inf"
        if self.is_formal:
            return self.alpha
        if self.alpha < 0:
            return "(X + {}*Y)".format(-self.alpha)
        return "(X - {}*Y)".format(self.alpha)


def infinity_point():
    return PointP1(INFINITY)


class QDivisor:
    """
    Rational coefficient Weil divisor on P^1. Immutable, zero coefficients are pruned.

    Example:
    >>> from fractions import Fraction
    >>> from frobenius_singularities.divisor import QDivisor, PointP1
    >>> dd = QDivisor({PointP1(1): Fraction(1, 2), PointP1(3): Fraction(2, 3)})
    >>> print(dd, dd.degree)
    # 1/2*(X - 1*Y) + 2/3*(X - 3*Y) 7/6
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=None):
        items = coefficients.items() if isinstance(coefficients, dict) else (coefficients or ())
        merged = {}
        for point, coef in items:
            point = point if isinstance(point, PointP1) else PointP1(point)
            merged[point] = merged.get(point, Fraction(0)) + to_rational(coef)
        self.coefficients = tuple(sorted(((kk, vv) for kk, vv in merged.items() if vv != 0), key=lambda ii: ii[0].sort_key()))

    @classmethod
    def zero(cls):
        return cls()

    @property
    def points(self):
        return tuple(point for point, _ in self.coefficients)

    @property
    def degree(self):
        return sum((coef for _, coef in self.coefficients), Fraction(0))

    @property
    def denominators(self):
        return [coef.denominator for _, coef in self.coefficients]

    def coefficient(self, point):
        point = point if isinstance(point, PointP1) else PointP1(point)
        return dict(self.coefficients).get(point, Fraction(0))

    def is_integral(self):
        return all(coef.denominator == 1 for _, coef in self.coefficients)

    def is_effective(self):
        return all(coef >= 0 for _, coef in self.coefficients)

    def is_concrete(self):
        return all(not point.is_formal for point in self.points)

    def __add__(self, other):
        return QDivisor(list(self.coefficients) + list(other.coefficients))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, rr):
        rr = to_rational(rr)
        return QDivisor([(point, coef * rr) for point, coef in self.coefficients])

    def __mul__(self, rr):
        return self.scale(rr)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, QDivisor) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __str__(self):
        return format_divisor(self)

    def __repr__(self):
        return "QDivisor({})".format(format_divisor(self))


def deg_Q(dd):
    return dd.degree


def divisor_arith(dd, ee=None, op="add", rr=None):
    """ `op` one of `add`, `sub`, `scale` (by the rational `rr`) """
    if op == "add":
        return dd + ee
    if op == "sub":
        return dd - ee
    if op == "scale":
        return dd.scale(rr)
    raise ValueError("Unsupported op: {}, should be one of add, sub, scale".format(op))


def round_down(dd):
    """ `[D]`, coefficientwise floor """
    return QDivisor([(point, Fraction(math.floor(coef))) for point, coef in dd.coefficients])


def frac_part(dd):
    """ `D' = sum((q_i - 1) / q_i * V_i)` for `D = sum(p_i / q_i * V_i)`, depends only on the denominators """
    return QDivisor([(point, Fraction(coef.denominator - 1, coef.denominator)) for point, coef in dd.coefficients])


def rounding_identity(dd, nn):
    """ `-[-nD] = [nD + D']`, exact for every integer `n` """
    return -round_down(dd.scale(-nn)) == round_down(dd.scale(nn) + frac_part(dd))


def random_divisor(rng, max_points=4, max_denominator=7, max_numerator=12):
    """ Random Q-divisor on concrete points `0..10`, `rng` a `numpy.random.Generator` """
    count = int(rng.integers(1, max_points + 1))
    alphas = rng.choice(11, size=count, replace=False)
    items = []
    for alpha in alphas:
        numerator = int(rng.integers(-max_numerator, max_numerator + 1))
        items.append((PointP1(int(alpha)), Fraction(numerator, int(rng.integers(1, max_denominator + 1)))))
    return QDivisor(items)


def canonical_divisor(points=None):
    """ `K = -2 * inf` by default, or `-P_1 - P_2` for two distinct points """
    if points is None:
        return QDivisor([(infinity_point(), -2)])
    points = [ii if isinstance(ii, PointP1) else PointP1(ii) for ii in points]
    if len(points) != 2 or points[0] == points[1]:
        raise ValueError("Need two distinct points for a canonical divisor, got: {}".format([str(ii) for ii in points]))
    return QDivisor([(points[0], -1), (points[1], -1)])


def h0_dim(dd):
    """ `dim H^0(P^1, O(D)) = max(0, deg[D] + 1)` """
    return max(0, int(round_down(dd).degree) + 1)


def h1_dim(dd):
    """ `dim H^1(P^1, O(D)) = h^0(K - [D]) = max(0, -deg[D] - 1)` """
    return max(0, -int(round_down(dd).degree) - 1)


def fpure_obstruction_formula(nn, kk, pp):
    """ `k (p - 1) (1/n + 2/k - 1)`, the degree of `(1 - p)(K + D')` for the family divisor """
    return kk * (pp - 1) * (Fraction(1, nn) + Fraction(2, kk) - 1)


def fpure_obstruction(dd, pp, canonical=None):
    """
    If `R(P^1, D)` is F-pure then `H^1(O(p(K + D')))` is nonzero. By duality it is dual to `H^0(O((1 - p)(K + D')))`,
    which vanishes once `delta = deg((1 - p)(K + D')) < 0`. So `delta < 0` gives NotFPure, otherwise Inconclusive.

    Example:
    >>> from frobenius_singularities.divisor import family_divisor, fpure_obstruction
    >>> verdict = fpure_obstruction(family_divisor(2, 5), 3)
    >>> print(verdict, verdict.degree_certificate.value)
    # NotFPure -1
    """
    if not isinstance(pp, int) or isinstance(pp, bool) or pp < 2 or not isprime(pp):
        raise ValueError("p must be a prime, got: {!r}".format(pp))
    canonical = canonical_divisor() if canonical is None else canonical
    target = (canonical + frac_part(dd)).scale(1 - pp)
    delta = target.degree
    if delta < 0:
        certificate = DegreeCertificate(delta, "<0", quantity="deg((1 - p)(K + D'))")
        note = "H^0(O((1 - p)(K + D'))) = 0, so H^1(O(p(K + D'))) = 0"
        return FrobeniusVerdict(Status.NOT_F_PURE, delta, degree_certificate=certificate, note=note)
    note = "deg((1 - p)(K + D')) = {} >= 0, no obstruction".format(delta)
    return FrobeniusVerdict(Status.INCONCLUSIVE, delta, evidence=(("delta", delta),), note=note)


def a_invariant_sectionring(dd, canonical=None):
    """
    `a(R(P^1, D)) = max{n : deg[nD] <= deg K}`, the top degree where `H^1(O(nD))`, dual to `H^0(O(K - [nD]))`, is nonzero.
    The scan starts at `floor((deg D' - deg K) / deg D) + lcm(denominators)`, above every solution.
    """
    degree = dd.degree
    if degree <= 0:
        raise ValueError("Section ring needs deg D > 0, got: {}".format(degree))
    bound = (canonical_divisor() if canonical is None else canonical).degree
    start = math.floor((frac_part(dd).degree - bound) / degree) + lcm_of(dd.denominators)
    nn = start
    while round_down(dd.scale(nn)).degree > bound:
        nn -= 1
    return nn


def a_invariant_sectionring_bruteforce(dd, low=-20, high=20, canonical=None):
    """ Largest `n` in `[low, high]` with `H^1(O(nD))` nonzero, None if there is none """
    if canonical is None:
        hits = [nn for nn in range(low, high + 1) if h1_dim(dd.scale(nn)) > 0]
    else:
        hits = [nn for nn in range(low, high + 1) if h0_dim(canonical - round_down(dd.scale(nn))) > 0]
    return max(hits) if len(hits) != 0 else None


def family_alphas(kk, p=None):
    """ `1, ..., k` in F_p (needs `k < p`, all nonzero and distinct), formal `a1, ..., ak` without `p` """
    if p is None:
        return ["a{}".format(ii) for ii in range(1, kk + 1)]
    if kk >= p:
        raise ValueError("Need k = {} distinct nonzero elements of F_{}".format(kk, p))
    return list(range(1, kk + 1))


def family_divisor(nn, kk, p=None, alphas=None):
    """
    `D = (1/n) V(X - alpha_1 Y) + ... + (1/n) V(X - alpha_k Y)`, the family with `1/n + 2/k < 1`.
    Points are formal when neither `p` nor `alphas` is given.
    """
    if nn < 1 or kk < 1:
        raise ValueError("Need positive n and k, got n = {}, k = {}".format(nn, kk))
    alphas = family_alphas(kk, p) if alphas is None else list(alphas)
    if len(set(alphas)) != kk:
        raise ValueError("Need {} distinct alphas, got: {}".format(kk, alphas))
    if p is not None and any(isinstance(ii, int) and ii % p == 0 for ii in alphas):
        raise ValueError("alphas must be nonzero in F_{}, got: {}".format(p, alphas))
    return QDivisor([(PointP1(ii), Fraction(1, nn)) for ii in alphas])


# Divisor literal: `D = 1/2*(X - 1*Y) + 2/3*(X - 3*Y) + -2*inf`

TERM_RE = re.compile(r"^\s*(?:(?P<coef>[+-]?\s*\d+(?:\s*/\s*\d+)?)\s*\*\s*)?(?P<point>.+?)\s*$")
LINEAR_RE = re.compile(r"^\(\s*X\s*(?:(?P<sign>[+-])\s*(?:(?P<alpha>\d+)\s*\*\s*)?Y\s*)?\)$")


def __split_terms__(text, offset):
    """ Split on top level `+`, keeping the offset of each term """
    terms, depth, start = [], 0, 0
    for id, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parenthesis", text, offset + id, expected="(")
        elif char == "+" and depth == 0 and len(text[start:id].strip()) != 0:
            terms.append((text[start:id], offset + start))
            start = id + 1
    if depth != 0:
        raise ParseError("unbalanced parenthesis", text, offset + len(text), expected=")")
    terms.append((text[start:], offset + start))
    return terms


def __parse_point__(text, full_text, position):
    text = text.strip()
    if text == "inf":
        return infinity_point()
    if text == "(X)":
        return PointP1(0)
    matched = LINEAR_RE.match(text)
    if matched is not None and matched.group("sign") is not None:
        alpha = 1 if matched.group("alpha") is None else int(matched.group("alpha"))
        return PointP1(alpha if matched.group("sign") == "-" else -alpha)
    if FORMAL_POINT_RE.match(text) and text not in ("X", "Y"):
        return PointP1(text)
    raise ParseError("invalid point {!r}".format(text), full_text, position, expected="(X - a*Y), inf or a formal name")


def parse_divisor(text, p=None):
    """
    Parse a divisor literal like `D = 1/2*(X - 1*Y) + 2/3*(X - 3*Y) + -2*inf`. Points are `(X - a*Y)`, `(X + a*Y)`,
    `(X)`, `inf` or a formal name; the coefficient defaults to `1`. With `p`, alphas are reduced mod `p`.
    """
    body, offset = text, 0
    if "=" in text:
        offset = text.index("=") + 1
        body = text[offset:]
    if len(body.strip()) == 0:
        raise ParseError("empty divisor", text, offset, expected="term")
    items = []
    for term, position in __split_terms__(body, offset):
        if len(term.strip()) == 0:
            raise ParseError("empty term", text, position, expected="coefficient or point")
        matched = TERM_RE.match(term)
        coef = matched.group("coef")
        try:
            coef = Fraction(1) if coef is None else Fraction(re.sub(r"\s", "", coef))
        except ZeroDivisionError:
            raise ParseError("zero denominator", text, position, expected="nonzero denominator") from None
        point = __parse_point__(matched.group("point"), text, position + matched.start("point"))
        items.append((point if p is None else point.reduce(p), coef))
    return QDivisor(items)


def format_divisor(dd):
    if len(dd.coefficients) == 0:
        return "0"
    return " + ".join("{}*{}".format(coef, point) for point, coef in dd.coefficients)
