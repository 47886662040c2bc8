import re
from fractions import Fraction
from functools import lru_cache
from frobenius_singularities.core_algebra.errors import RingMismatchError
from frobenius_singularities.core_algebra.fields import PrimeField, to_rational, lcm_of

ORDERS = ("wdegrevlex", "wdeglex", "lex")
DEFAULT_ORDER = "wdegrevlex"
NEG_INF = float("-inf")  # degree of the zero polynomial
VARIABLE_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


# Monomials are tuples of nonnegative exponents, one per ring variable


def monomial_mul(aa, bb):
    return tuple(ii + jj for ii, jj in zip(aa, bb))


def monomial_divides(aa, bb):
    """ True if `aa | bb` """
    return all(ii <= jj for ii, jj in zip(aa, bb))


def monomial_quotient(aa, bb):
    """ `aa / bb`, caller guarantees `bb | aa` """
    return tuple(ii - jj for ii, jj in zip(aa, bb))


def monomial_lcm(aa, bb):
    return tuple(max(ii, jj) for ii, jj in zip(aa, bb))


def monomial_is_coprime(aa, bb):
    return all(ii == 0 or jj == 0 for ii, jj in zip(aa, bb))


def __block_key__(order, weights):
    if order == "lex":
        return lambda exps: exps
    if order == "wdeglex":
        return lambda exps: (sum(ww * ee for ww, ee in zip(weights, exps)),) + exps
    # wdegrevlex: higher weighted degree first, then smaller exponent in the last variable wins
    return lambda exps: (sum(ww * ee for ww, ee in zip(weights, exps)),) + tuple(-ee for ee in reversed(exps))


class PolyRing:
    """
    F_p[x_1, ..., x_n] with positive rational weights and a monomial order.

    Args:
      p: the characteristic, a prime.
      variables: variable names, a list or a comma separated string.
      weights: one positive rational per variable, default all `1`.
      order: one of `wdegrevlex` (default), `wdeglex`, `lex`.
      elimination: number of leading variables forming an elimination block.
          Monomials are compared on that block first, then on the rest.

    Example:
    >>> from frobenius_singularities.core_algebra import PolyRing
    >>> ring = PolyRing(5, "u, v, y, z", weights=[2, 2, 1, 1])
    >>> ff = ring.parse("u^2 - z^4")
    >>> print(ff, ff.weighted_degree(), ff.is_homogeneous())
    # u^2 - z^4 4 True
    """

    def __init__(self, p, variables, weights=None, order=DEFAULT_ORDER, elimination=0):
        self.field = PrimeField(p)
        self.p = self.field.p
        if isinstance(variables, str):
            variables = [ii.strip() for ii in variables.split(",") if len(ii.strip()) != 0]
        self.variables = tuple(variables)
        for name in self.variables:
            if not VARIABLE_NAME_RE.match(name):
                raise ValueError("Invalid variable name: {!r}".format(name))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("Variable names must be unique: {}".format(self.variables))

        weights = [1] * len(self.variables) if weights is None else [to_rational(ii) for ii in weights]
        if len(weights) != len(self.variables):
            raise ValueError("Need one weight per variable, got {} weights for {} variables".format(len(weights), len(self.variables)))
        if any(ii <= 0 for ii in weights):
            raise ValueError("Weights must be positive: {}".format([str(ii) for ii in weights]))
        self.weights = tuple(Fraction(ii) for ii in weights)
        self.weight_denominator = lcm_of([ii.denominator for ii in self.weights])
        self.int_weights = tuple(int(ii * self.weight_denominator) for ii in self.weights)

        if order not in ORDERS:
            raise ValueError("Unsupported order: {}, should be one of {}".format(order, ORDERS))
        if not 0 <= elimination < max(len(self.variables), 1):
            raise ValueError("elimination block size {} out of range for {} variables".format(elimination, len(self.variables)))
        self.order, self.elimination = order, elimination
        self.index = {name: id for id, name in enumerate(self.variables)}
        self.sort_key = lru_cache(maxsize=None)(self.__build_sort_key__())

    def __build_sort_key__(self):
        kk, int_weights = self.elimination, self.int_weights
        if kk == 0:
            return __block_key__(self.order, int_weights)
        head, tail = __block_key__(self.order, int_weights[:kk]), __block_key__(self.order, int_weights[kk:])
        return lambda exps: head(exps[:kk]) + tail(exps[kk:])

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def order_name(self):
        return self.order if self.elimination == 0 else "{}[elim {}]".format(self.order, ",".join(self.variables[: self.elimination]))

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, value):
        return Polynomial(self, {(0,) * self.nvars: self.field(value)})

    def monomial(self, exps, coeff=1):
        return Polynomial(self, {tuple(exps): self.field(coeff)})

    def gen(self, name):
        if name not in self.index:
            raise ValueError("Unknown variable {!r}, ring variables: {}".format(name, self.variables))
        exps = [0] * self.nvars
        exps[self.index[name]] = 1
        return self.monomial(exps)

    def gens(self):
        return [self.gen(ii) for ii in self.variables]

    def parse(self, text):
        from frobenius_singularities.core_algebra.parser import parse_poly

        return parse_poly(text, self)

    def weighted_degree_of(self, exps):
        return Fraction(sum(ww * ee for ww, ee in zip(self.int_weights, exps)), self.weight_denominator)

    def with_weights(self, weights):
        return PolyRing(self.p, self.variables, weights, self.order, self.elimination)

    def with_order(self, order=DEFAULT_ORDER, elimination=0):
        return PolyRing(self.p, self.variables, self.weights, order, elimination)

    def extend(self, new_variables, new_weights=None, eliminate_new=True):
        """ New variables are prepended, as an elimination block if `eliminate_new` """
        new_variables = list(new_variables)
        clash = [ii for ii in new_variables if ii in self.index]
        if len(clash) != 0:
            raise ValueError("Variables already in ring: {}".format(clash))
        new_weights = [1] * len(new_variables) if new_weights is None else list(new_weights)
        elimination = len(new_variables) if eliminate_new else 0
        return PolyRing(self.p, new_variables + list(self.variables), new_weights + list(self.weights), self.order, elimination)

    def eliminating(self, names):
        """ Same variables reordered so that `names` come first as an elimination block """
        names = list(names)
        for name in names:
            if name not in self.index:
                raise ValueError("Unknown variable {!r}".format(name))
        rest = [ii for ii in self.variables if ii not in names]
        weights = [self.weights[self.index[ii]] for ii in names + rest]
        return PolyRing(self.p, names + rest, weights, self.order, len(names))

    def fresh_variable(self, base="t"):
        name, id = base, 0
        while name in self.index:
            id += 1
            name = "{}{}".format(base, id)
        return name

    def __key__(self):
        return (self.p, self.variables, self.weights, self.order, self.elimination)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.__key__() == other.__key__()

    def __hash__(self):
        return hash(self.__key__())

    def __repr__(self):
        weights = ", ".join("{}:{}".format(name, ww) for name, ww in zip(self.variables, self.weights))
        return "PolyRing(F_{}[{}], order={})".format(self.p, weights, self.order_name)


class Polynomial:
    """
    Sparse polynomial over F_p. Immutable, coefficients are ints in `[0, p)`.
    `terms` lists `(coefficient, monomial)` pairs, strictly descending in the ring order.
    """

    __slots__ = ("ring", "coeffs", "_terms", "_hash")

    def __init__(self, ring, coeffs=None, normalized=False):
        self.ring = ring
        if normalized:
            self.coeffs = coeffs
        else:
            pp = ring.p
            self.coeffs = {}
            for mm, cc in (coeffs or {}).items():
                cc = int(cc) % pp
                if cc != 0:
                    self.coeffs[tuple(mm)] = cc
        self._terms, self._hash = None, None

    # Structure

    @property
    def terms(self):
        if self._terms is None:
            key = self.ring.sort_key
            self._terms = tuple((self.coeffs[mm], mm) for mm in sorted(self.coeffs, key=key, reverse=True))
        return self._terms

    def is_zero(self):
        return len(self.coeffs) == 0

    def __bool__(self):
        return len(self.coeffs) != 0

    def __len__(self):
        return len(self.coeffs)

    def leading_monomial(self):
        if self.is_zero():
            raise ValueError("Zero polynomial has no leading monomial")
        return max(self.coeffs, key=self.ring.sort_key)

    def leading_coefficient(self):
        return self.coeffs[self.leading_monomial()] if self.coeffs else 0

    def leading_term(self):
        mm = self.leading_monomial()
        return Polynomial(self.ring, {mm: self.coeffs[mm]}, normalized=True)

    def is_constant(self):
        return all(not any(mm) for mm in self.coeffs)

    def constant_value(self):
        return self.coeffs.get((0,) * self.ring.nvars, 0)

    def is_monomial(self):
        return len(self.coeffs) == 1

    def is_squarefree_monomial(self):
        return len(self.coeffs) == 1 and all(ee <= 1 for ee in next(iter(self.coeffs)))

    def variables_used(self):
        used = set()
        for mm in self.coeffs:
            used.update(id for id, ee in enumerate(mm) if ee > 0)
        return [self.ring.variables[id] for id in sorted(used)]

    def degree_in(self, name):
        id = self.ring.index[name]
        return max((mm[id] for mm in self.coeffs), default=NEG_INF)

    # Grading

    def weighted_degree(self):
        """ Max weighted degree of the terms, `-inf` for the zero polynomial """
        if self.is_zero():
            return NEG_INF
        return max(self.ring.weighted_degree_of(mm) for mm in self.coeffs)

    def is_homogeneous(self):
        return len(set(self.ring.weighted_degree_of(mm) for mm in self.coeffs)) <= 1

    # Arithmetic

    def __check_ring__(self, other, operation):
        if isinstance(other, int):
            return self.ring.constant(other)
        if isinstance(other, Fraction):
            return self.ring.constant(self.ring.field(other))
        if not isinstance(other, Polynomial):
            raise TypeError("Cannot {} Polynomial and {}".format(operation, type(other).__name__))
        if other.ring != self.ring:
            raise RingMismatchError(self.ring, other.ring, operation)
        return other

    def __add__(self, other):
        other = self.__check_ring__(other, "add")
        pp, out = self.ring.p, dict(self.coeffs)
        for mm, cc in other.coeffs.items():
            vv = (out.get(mm, 0) + cc) % pp
            if vv:
                out[mm] = vv
            else:
                out.pop(mm, None)
        return Polynomial(self.ring, out, normalized=True)

    __radd__ = __add__

    def __neg__(self):
        pp = self.ring.p
        return Polynomial(self.ring, {mm: pp - cc for mm, cc in self.coeffs.items()}, normalized=True)

    def __sub__(self, other):
        return self + (-self.__check_ring__(other, "subtract"))

    def __rsub__(self, other):
        return self.__check_ring__(other, "subtract") - self

    def scale(self, scalar):
        scalar = self.ring.field(scalar)
        if scalar == 0:
            return self.ring.zero()
        pp = self.ring.p
        return Polynomial(self.ring, {mm: cc * scalar % pp for mm, cc in self.coeffs.items()}, normalized=True)

    def mul_term(self, coeff, exps):
        """ `coeff * x^exps * self` """
        coeff = coeff % self.ring.p
        if coeff == 0:
            return self.ring.zero()
        pp = self.ring.p
        return Polynomial(self.ring, {monomial_mul(mm, exps): cc * coeff % pp for mm, cc in self.coeffs.items()}, normalized=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self.__check_ring__(other, "multiply")
        pp, out = self.ring.p, {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                mm = monomial_mul(m1, m2)
                out[mm] = (out.get(mm, 0) + c1 * c2) % pp
        return Polynomial(self.ring, {mm: cc for mm, cc in out.items() if cc}, normalized=True)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Exponent must be a nonnegative integer, got {!r}".format(exponent))
        out, base = self.ring.one(), self
        while exponent:
            if exponent & 1:
                out = out * base
            exponent >>= 1
            if exponent:
                base = base * base
        return out

    def frobenius_power(self, ee=1):
        """ f^(p^e), termwise since c^p = c in F_p and (a + b)^p = a^p + b^p """
        qq = self.ring.p**ee
        return Polynomial(self.ring, {tuple(ii * qq for ii in mm): cc for mm, cc in self.coeffs.items()}, normalized=True)

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.ring.field.inverse(self.leading_coefficient()))

    # Evaluation and change of ring

    def evaluate(self, values):
        """ `values` is a dict name -> int or a sequence in variable order """
        if isinstance(values, dict):
            values = [values[name] for name in self.ring.variables]
        pp, total = self.ring.p, 0
        for mm, cc in self.coeffs.items():
            term = cc
            for vv, ee in zip(values, mm):
                if ee:
                    term = term * pow(vv, ee, pp) % pp
            total += term
        return total % pp

    def substitute(self, mapping, target_ring=None):
        """ Replace variables by polynomials of `target_ring`, unmapped variables are carried over by name """
        target_ring = self.ring if target_ring is None else target_ring
        images = []
        for name in self.ring.variables:
            if name in mapping:
                image = mapping[name]
                images.append(target_ring.parse(image) if isinstance(image, str) else image)
            elif name in target_ring.index:
                images.append(target_ring.gen(name))
            else:
                images.append(None)
        out = target_ring.zero()
        for mm, cc in self.coeffs.items():
            term = target_ring.constant(cc)
            for image, ee in zip(images, mm):
                if ee == 0:
                    continue
                if image is None:
                    raise ValueError("No image for a variable of {}".format(self))
                term = term * image**ee
            out = out + term
        return out

    def to_ring(self, target_ring):
        """ Move into a ring sharing variable names, same characteristic """
        if target_ring == self.ring:
            return self
        if target_ring.p != self.ring.p:
            raise RingMismatchError(self.ring, target_ring, "change of ring")
        positions = []
        for name in self.ring.variables:
            positions.append(target_ring.index.get(name))
        out = {}
        for mm, cc in self.coeffs.items():
            exps = [0] * target_ring.nvars
            for pos, ee in zip(positions, mm):
                if ee == 0:
                    continue
                if pos is None:
                    raise RingMismatchError(self.ring, target_ring, "change of ring")
                exps[pos] = ee
            out[tuple(exps)] = cc
        return Polynomial(target_ring, out, normalized=True)

    # Comparison and printing

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.coeffs.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return "Polynomial({!r}, F_{})".format(format_poly(self), self.ring.p)


def format_monomial(exps, variables):
    return "*".join(name if ee == 1 else "{}^{}".format(name, ee) for name, ee in zip(variables, exps) if ee > 0)


def format_poly(poly):
    """ Canonical text, terms in descending order, coefficients in symmetric range `(-p/2, p/2]` """
    if poly.is_zero():
        return "0"
    field, variables, out = poly.ring.field, poly.ring.variables, []
    for cc, mm in poly.terms:
        cc = field.symmetric(cc)
        sign, cc = ("-", -cc) if cc < 0 else ("+", cc)
        mono = format_monomial(mm, variables)
        if len(mono) == 0:
            body = str(cc)
        elif cc == 1:
            body = mono
        else:
            body = "{}*{}".format(cc, mono)
        if len(out) == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append("{} {}".format(sign, body))
    return " ".join(out)
