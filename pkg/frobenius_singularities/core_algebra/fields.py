from fractions import Fraction
from math import gcd
from sympy import isprime

MAX_CHARACTERISTIC = 2**31

# Exact rationals: numerator / positive denominator in lowest terms.
Rational = Fraction


def to_rational(value):
    """ Accepts int, Fraction or strings like `"4/3"`, `"-2"`. """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError("Not a rational value: {!r}".format(value))


def lcm(aa, bb):
    return aa * bb // gcd(aa, bb)


def lcm_of(values):
    out = 1
    for ii in values:
        out = lcm(out, ii)
    return out


class PrimeField:
    """
    The prime field F_p, elements are plain ints in `[0, p)`.

    Example:
    >>> from frobenius_singularities.core_algebra import PrimeField
    >>> ff = PrimeField(7)
    >>> ff.inverse(3), ff.mul(3, 5), ff(Fraction(1, 2))
    # (5, 1, 4)
    """

    __slots__ = ("p",)

    def __init__(self, p):
        if isinstance(p, PrimeField):
            p = p.p
        if not isinstance(p, int) or isinstance(p, bool) or not 2 <= p < MAX_CHARACTERISTIC or not isprime(p):
            raise ValueError("Characteristic must be a prime in [2, 2^31), got: {!r}".format(p))
        self.p = p

    def __call__(self, value):
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError("{} has a denominator divisible by {}".format(value, self.p))
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, aa, bb):
        return (aa + bb) % self.p

    def sub(self, aa, bb):
        return (aa - bb) % self.p

    def mul(self, aa, bb):
        return aa * bb % self.p

    def neg(self, aa):
        return -aa % self.p

    def inverse(self, aa):
        if aa % self.p == 0:
            raise ZeroDivisionError("0 has no inverse in F_{}".format(self.p))
        return pow(aa, -1, self.p)

    def power(self, aa, ee):
        return pow(aa, ee, self.p)

    def symmetric(self, aa):
        """ Representative in `(-p/2, p/2]`, used for printing. """
        return aa if aa <= self.p // 2 else aa - self.p

    def elements(self):
        return range(self.p)

    def is_power_of_characteristic(self, qq):
        if not isinstance(qq, int) or qq < 1:
            return False
        while qq % self.p == 0:
            qq //= self.p
        return qq == 1

    def exponent_of(self, qq):
        """ e with q = p^e, ValueError otherwise. """
        if not self.is_power_of_characteristic(qq):
            raise ValueError("q = {} is not a power of the characteristic {}".format(qq, self.p))
        ee = 0
        while qq > 1:
            qq //= self.p
            ee += 1
        return ee

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return "PrimeField({})".format(self.p)
