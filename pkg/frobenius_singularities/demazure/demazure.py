from dataclasses import dataclass, field
from functools import lru_cache
from frobenius_singularities.core_algebra.polynomials import PolyRing
from frobenius_singularities.groebner.groebner import divide_exact
from frobenius_singularities.ideals.ideals import Ideal
from frobenius_singularities.divisor.divisor import PointP1, QDivisor, round_down, h0_dim
from frobenius_singularities.demazure.linalg import SpanTracker

DEFAULT_N_MAX = 6


@lru_cache(maxsize=None)
def xy_ring(p):
    return PolyRing(p, "X, Y")


def linear_form(point, ring):
    """ `X - alpha * Y` for a finite point, `Y` for the point at infinity """
    if point.is_formal:
        raise ValueError("Formal point {} has no linear form".format(point))
    if point.is_infinity:
        return ring.gen("Y")
    return ring.gen("X") - ring.gen("Y") * point.alpha


def order_at(poly, point):
    """ Vanishing order of the binary form `poly` at `point` """
    if poly.is_zero():
        raise ValueError("Zero has no vanishing order")
    if point.is_infinity:
        return min(mm[1] for mm in poly.coeffs)
    ring, order = poly.ring, 0
    form = linear_form(point, ring)
    # X - a*Y divides a binary form G iff G(a, 1) = 0
    while poly.evaluate([point.alpha, 1]) == 0:
        poly = divide_exact(poly, form)
        order += 1
    return order


def __concrete_points__(dd, p):
    points = [point.reduce(p) for point in dd.points]
    if any(point.is_formal for point in points):
        raise ValueError("Section bases need concrete points, got: {}".format(dd))
    if len(set(points)) != len(points):
        raise ValueError("Points of {} collide in F_{}".format(dd, p))
    return QDivisor([(point.reduce(p), coef) for point, coef in dd.coefficients])


@dataclass(frozen=True)
class SectionElement:
    """
    `numerator / prod(l_P^c_P)` at `level`, a degree zero rational function on P^1 standing for `f * T^level`.
    `denominator` is a sorted tuple of `(PointP1, c_P)`, `l_P` the linear form of `P`.
    """

    level: int
    numerator: object
    denominator: tuple = field(default_factory=tuple)

    @property
    def denominator_exponents(self):
        return dict(self.denominator)

    @property
    def p(self):
        return self.numerator.ring.p

    def __mul__(self, other):
        exps = self.denominator_exponents
        for point, cc in other.denominator:
            exps[point] = exps.get(point, 0) + cc
        return normalize(SectionElement(self.level + other.level, self.numerator * other.numerator, __sorted_exponents__(exps)))

    def at_level(self, level):
        """ Same function read at another level, like `f * T^n / Y` for a lower level """
        return SectionElement(level, self.numerator, self.denominator)

    def __str__(self):
        if len(self.denominator) == 0:
            body = str(self.numerator)
        else:
            den = "*".join(("{}^{}".format(point, cc) if cc > 1 else str(point)) for point, cc in self.denominator)
            body = "({})/({})".format(self.numerator, den)
        return "{} @{}".format(body, self.level)


def __sorted_exponents__(exps):
    return tuple(sorted(((kk, vv) for kk, vv in exps.items() if vv != 0), key=lambda ii: ii[0].sort_key()))


def normalize(elem):
    """ Cancel linear factors shared by numerator and denominator """
    if elem.numerator.is_zero():
        return SectionElement(elem.level, elem.numerator, ())
    numerator, exps = elem.numerator, {}
    for point, cc in elem.denominator:
        form = linear_form(point, numerator.ring)
        common = min(cc, order_at(numerator, point))
        for _ in range(common):
            numerator = divide_exact(numerator, form)
        exps[point] = cc - common
    return SectionElement(elem.level, numerator, __sorted_exponents__(exps))


def constant_section(level, p, value=1):
    return SectionElement(level, xy_ring(p).constant(value), ())


def divisor_of(elem):
    """
    `div(f)` by scanning the roots of the numerator over F_p. ValueError if the numerator does not split
    into linear factors.
    """
    elem = normalize(elem)
    numerator, p = elem.numerator, elem.p
    if numerator.is_zero():
        raise ValueError("The zero section has no divisor")
    items, found = [], 0
    for point in [PointP1(alpha) for alpha in range(p)] + [PointP1(None)]:
        order = order_at(numerator, point)
        if order:
            items.append((point, order))
            found += order
    if found != numerator.weighted_degree():
        raise ValueError("Numerator {} does not split into linear factors over F_{}".format(numerator, p))
    items += [(point, -cc) for point, cc in elem.denominator]
    return QDivisor(items)


def is_valid_section(elem, dd, level=None):
    """ `div(f) + [level * D] >= 0`, only the orders at the support of `[level * D]` and the denominator matter """
    level = elem.level if level is None else level
    elem = normalize(elem)
    if elem.numerator.is_zero():
        return True
    if elem.numerator.weighted_degree() != sum(cc for _, cc in elem.denominator):
        return False
    rounded = round_down(dd.scale(level))
    exps = elem.denominator_exponents
    for point in set(rounded.points) | set(exps):
        order = order_at(elem.numerator, point) - exps.get(point, 0)
        if order + rounded.coefficient(point) < 0:
            return False
    return True


def level_denominator(dd, level):
    """ `prod(l_P^max(m_P, 0))` for `[level * D] = sum(m_P P)`, as a sorted exponent tuple """
    rounded = round_down(dd.scale(level))
    return __sorted_exponents__({point: max(int(cc), 0) for point, cc in rounded.coefficients})


def section_basis(dd, level, p):
    """
    Basis of `H^0(P^1, O(level * D))`: with `E = [level * D] = sum(m_P P)`, the functions
    `prod(l_P^max(-m_P, 0)) * X^a * Y^(deg E - a) / prod(l_P^max(m_P, 0))` for `a = 0..deg E`.
    Empty when `deg E < 0`.

    Example:
    >>> from frobenius_singularities.divisor import family_divisor
    >>> from frobenius_singularities.demazure import section_basis
    >>> print(len(section_basis(family_divisor(2, 5, p=7), 2, 7)))
    # 6
    """
    dd = __concrete_points__(dd, p)
    ring = xy_ring(p)
    rounded = round_down(dd.scale(level))
    degree = int(rounded.degree)
    if degree < 0:
        return []
    base = ring.one()
    for point, cc in rounded.coefficients:
        if cc < 0:
            base = base * linear_form(point, ring) ** int(-cc)
    denominator = level_denominator(dd, level)
    xx, yy = ring.gen("X"), ring.gen("Y")
    return [SectionElement(level, base * xx**aa * yy ** (degree - aa), denominator) for aa in range(degree + 1)]


def to_vector(elem, dd, p):
    """ Coordinates of `f * L` in the monomials `X^a Y^(d - a)`, `L` the level denominator of degree `d` """
    dd = __concrete_points__(dd, p)
    elem = normalize(elem)
    target = level_denominator(dd, elem.level)
    degree = sum(cc for _, cc in target)
    numerator, exps = elem.numerator, elem.denominator_exponents
    for point, cc in target:
        extra = cc - exps.pop(point, 0)
        if extra < 0:
            raise ValueError("{} has a pole beyond level {} at {}".format(elem, elem.level, point))
        numerator = numerator * linear_form(point, numerator.ring) ** extra
    if any(cc > 0 for cc in exps.values()):
        raise ValueError("{} has a pole outside the support of D".format(elem))
    vec = [0] * (degree + 1)
    for mm, cc in numerator.coeffs.items():
        if mm[0] + mm[1] != degree:
            raise ValueError("{} is not of degree zero".format(elem))
        vec[mm[0]] = cc
    return vec


@dataclass
class GradedAlgebraSketch:
    """
    `R(P^1, D)` level by level: `bases[n]` spans `R_n`, `generators` lists `(level, name, SectionElement)`
    in the order they were chosen, `product_ranks[n]` is the rank of the span of products of lower generators.
    Generation is only known through `n_max`.
    """

    divisor: QDivisor
    p: int
    n_max: int
    bases: dict = field(default_factory=dict)
    generators: list = field(default_factory=list)
    product_ranks: dict = field(default_factory=dict)

    def dimension(self, level):
        return len(self.bases[level])

    def generator_levels(self):
        return sorted(set(level for level, _, _ in self.generators))

    def generator_names(self, level=None):
        return [name for ll, name, _ in self.generators if level is None or ll == level]

    def new_generators(self, level):
        return [elem for ll, _, elem in self.generators if ll == level]

    def to_dict(self):
        return {
            "divisor": str(self.divisor),
            "p": self.p,
            "n_max": self.n_max,
            "dimensions": {str(kk): len(vv) for kk, vv in sorted(self.bases.items())},
            "generators": [{"level": ll, "name": name, "element": str(elem)} for ll, name, elem in self.generators],
        }


def generators_up_to(dd, n_max, p, preferred=None):
    """
    Greedy generators of `R(P^1, D)` through level `n_max`. At level `n` the products `g * R_(n - l)` of every
    generator `g` of level `l < n` are spanned first, then `preferred[n]` (a list of `(name, SectionElement)`),
    then the basis vectors, each kept only if it enlarges the span.
    """
    dd = __concrete_points__(dd, p)
    preferred = {} if preferred is None else preferred
    sketch = GradedAlgebraSketch(dd, p, n_max)
    sketch.bases[0] = section_basis(dd, 0, p)
    for level in range(1, n_max + 1):
        basis = section_basis(dd, level, p)
        sketch.bases[level] = basis
        tracker = SpanTracker(p, sum(cc for _, cc in level_denominator(dd, level)) + 1)
        for gen_level, _, gen in sketch.generators:
            for elem in sketch.bases[level - gen_level]:
                tracker.add(to_vector(gen * elem, dd, p))
        sketch.product_ranks[level] = tracker.rank
        candidates = list(preferred.get(level, [])) + [("b{}_{}".format(level, ii), elem) for ii, elem in enumerate(basis)]
        for name, elem in candidates:
            if tracker.rank == len(basis):
                break
            if tracker.add(to_vector(elem, dd, p)):
                sketch.generators.append((level, name, elem))
    return sketch


def family_points(dd):
    return [point for point in dd.points if not point.is_infinity]


def family_generators(dd, nn, p):
    """ `Y` (the level one section `1`) and `A_i = X / (X - alpha_i Y)` at level `n`, as `(level, name, element)` """
    dd = __concrete_points__(dd, p)
    ring = xy_ring(p)
    out = [(1, "Y", constant_section(1, p))]
    for id, point in enumerate(family_points(dd), start=1):
        out.append((nn, "A{}".format(id), SectionElement(nn, ring.gen("X"), ((point, 1),))))
    return out


def quotient_dimension(dd, level, p):
    """ `dim R_level - dim R_(level - 1)`, the Hilbert function of `R / YR` """
    if level == 0:
        return 1
    __concrete_points__(dd, p)
    return h0_dim(dd.scale(level)) - h0_dim(dd.scale(level - 1))


@dataclass
class QuotientRelationsReport:
    mixed_products_in_yr: bool
    squares_outside_yr: bool
    quotient_dimensions_match: bool
    squares_independent: bool
    quotient_dimensions: list = field(default_factory=list)

    @property
    def confirmed(self):
        return self.mixed_products_in_yr and self.squares_outside_yr and self.quotient_dimensions_match and self.squares_independent

    def __bool__(self):
        return self.confirmed

    def to_dict(self):
        return {
            "confirmed": self.confirmed,
            "mixed_products_in_yr": self.mixed_products_in_yr,
            "squares_outside_yr": self.squares_outside_yr,
            "quotient_dimensions_match": self.quotient_dimensions_match,
            "squares_independent": self.squares_independent,
            "quotient_dimensions": self.quotient_dimensions,
        }


def verify_quotient_relations(dd, nn, p):
    """
    Checks `R / YR = K[A_1, ..., A_k] / (A_i A_j : i != j)` with the `A_i` in degree `n`, up to level `2n`:
      - `A_i A_j / Y` is a section at level `2n - 1` for `i != j`, so `A_i A_j in YR`.
      - `A_i^2 / Y` is not, so `A_i^2 not in YR`.
      - `dim R_m - dim R_(m - 1)` is `k` for `m` in `{n, 2n}` and `0` for other `0 < m <= 2n`.
      - the `A_i^2` are independent modulo `Y * R_(2n - 1)`.
    """
    dd = __concrete_points__(dd, p)
    gens = [elem for _, name, elem in family_generators(dd, nn, p) if name != "Y"]
    kk = len(gens)
    mixed = all(is_valid_section(gens[ii] * gens[jj], dd, 2 * nn - 1) for ii in range(kk) for jj in range(ii + 1, kk))
    squares_out = all(not is_valid_section(gen * gen, dd, 2 * nn - 1) for gen in gens)

    dims = [quotient_dimension(dd, level, p) for level in range(2 * nn + 1)]
    expected = [1] + [kk if level % nn == 0 else 0 for level in range(1, 2 * nn + 1)]

    top = 2 * nn
    tracker = SpanTracker(p, sum(cc for _, cc in level_denominator(dd, top)) + 1)
    yy = constant_section(1, p)
    for elem in section_basis(dd, top - 1, p):
        tracker.add(to_vector(yy * elem, dd, p))
    independent = all(tracker.add(to_vector(gen * gen, dd, p)) for gen in gens)
    independent = independent and tracker.rank == len(section_basis(dd, top, p))
    return QuotientRelationsReport(mixed, squares_out, dims == expected, independent, dims)


def family_quotient_ideal(kk, p):
    """ `(A_i A_j : i != j)` in `F_p[A_1, ..., A_k]` """
    ring = PolyRing(p, ["A{}".format(ii) for ii in range(1, kk + 1)])
    gens = ring.gens()
    return Ideal(ring, [gens[ii] * gens[jj] for ii in range(kk) for jj in range(ii + 1, kk)])
