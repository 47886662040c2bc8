from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from frobenius_singularities.core_algebra.polynomials import Polynomial


class Status(Enum):
    IN_IDEAL = "InIdeal"
    IN_FROBENIUS_CLOSURE_AT = "InFrobeniusClosureAt"
    NOT_DETECTED_UP_TO = "NotDetectedUpTo"
    F_PURE = "FPure"
    NOT_F_PURE = "NotFPure"
    F_REGULAR = "FRegular"
    NOT_F_REGULAR = "NotFRegular"
    F_RATIONAL = "FRational"
    NOT_F_RATIONAL = "NotFRational"
    INCONCLUSIVE = "Inconclusive"


UNDECIDED = (Status.NOT_DETECTED_UP_TO, Status.INCONCLUSIVE)
DEGREE_RELATIONS = {"<0": lambda xx: xx < 0, ">0": lambda xx: xx > 0, "<=0": lambda xx: xx <= 0, ">=0": lambda xx: xx >= 0}


@dataclass(frozen=True)
class MembershipCheck:
    """ One recheckable claim: `element in ideal` is `expected` """

    element: Polynomial
    ideal: object
    expected: bool = True

    def run(self):
        return self.ideal.reduce(self.element).is_zero() == self.expected

    def to_dict(self):
        return {"element": str(self.element), "ideal": str(self.ideal), "expected": self.expected}


@dataclass(frozen=True)
class DegreeCertificate:
    """ `value` satisfies `relation`, one of `<0`, `>0`, `<=0`, `>=0` """

    value: Fraction
    relation: str
    quantity: str = "degree"

    def run(self):
        return DEGREE_RELATIONS[self.relation](self.value)

    def to_dict(self):
        return {"quantity": self.quantity, "value": str(self.value), "relation": self.relation}


def __to_text__(value):
    if value is None:
        return None
    if isinstance(value, (list, tuple)):
        return [__to_text__(ii) for ii in value]
    if isinstance(value, (int, bool)):
        return value
    return str(value)


@dataclass(frozen=True)
class FrobeniusVerdict:
    """
    Structured result: `status`, a `certificate` (witnessing normal form, colon generator or degree),
    the user asserted `hypotheses` consumed, and `checks` / `degree_certificate` that `recheck` replays.
    `evidence` carries per exponent observations for undecided results.
    """

    status: Status
    certificate: object = None
    hypotheses: tuple = field(default_factory=tuple)
    exponent: int = None
    checks: tuple = field(default_factory=tuple)
    degree_certificate: DegreeCertificate = None
    evidence: tuple = field(default_factory=tuple)
    note: str = ""

    @property
    def decided(self):
        return self.status not in UNDECIDED

    @property
    def label(self):
        if self.status in (Status.IN_FROBENIUS_CLOSURE_AT, Status.NOT_DETECTED_UP_TO):
            return "{}({})".format(self.status.value, self.exponent)
        return self.status.value

    def recheck(self):
        """ Replay the certificate. None for undecided verdicts, which carry nothing to check """
        if not self.decided:
            return None
        if len(self.checks) == 0 and self.degree_certificate is None:
            return False
        if any(not ii.run() for ii in self.checks):
            return False
        return self.degree_certificate is None or self.degree_certificate.run()

    def with_hypotheses(self, hypotheses):
        merged = tuple(sorted(set(self.hypotheses) | set(hypotheses)))
        return FrobeniusVerdict(self.status, self.certificate, merged, self.exponent, self.checks, self.degree_certificate, self.evidence, self.note)

    def to_dict(self):
        return {
            "status": self.label,
            "decided": self.decided,
            "certificate": __to_text__(self.certificate),
            "hypotheses": list(self.hypotheses),
            "exponent": self.exponent,
            "checks": [ii.to_dict() for ii in self.checks],
            "degree_certificate": None if self.degree_certificate is None else self.degree_certificate.to_dict(),
            "evidence": [__to_text__(ii) for ii in self.evidence],
            "note": self.note,
        }

    def __str__(self):
        return self.label
