from frobenius_singularities.core_algebra.errors import HypothesisMissingError

# Assertions the library cannot verify, the user states them explicitly and every verdict echoes the ones it used.
HYPOTHESIS_FLAGS = {
    "normal": "R is a normal domain",
    "domain": "R is a domain",
    "cohen_macaulay": "R is Cohen-Macaulay, implied by normal together with dim2",
    "dim2": "R has Krull dimension two",
    "reduced": "R is reduced",
    "gorenstein": "R is Gorenstein, so the canonical module is R(a)",
    "coprime_order": "the order of the canonical class is prime to p",
    "derivation_bound": "d_S(R) < p for a D-complete set S of homogeneous derivations",
    "char0_surrogate": "p is large enough to stand in for characteristic zero",
    "nonzerodivisor": "the denominator of a divisorial ideal is a nonzerodivisor",
    "pure_height_one": "the divisorial ideal numerator has pure height one",
    "saturator_avoids_minimal_primes": "the saturating element avoids all minimal primes of the numerator",
    "in_r_circ": "the test element c lies in the complement of the minimal primes",
}

# Each entry is a list of requirements, a tuple inside means any one of them.
REQUIRED_HYPOTHESES = {
    "a_invariant": ["cohen_macaulay"],
    "symbolic_power": ["saturator_avoids_minimal_primes"],
    "tight_closure_witness": ["in_r_circ"],
    "f_regular_dim2": ["normal", "dim2", ("derivation_bound", "char0_surrogate")],
    "f_rational_dim2": ["normal", "dim2", ("derivation_bound", "char0_surrogate")],
}

IMPLIED_HYPOTHESES = [(("normal", "dim2"), "cohen_macaulay"), (("normal",), "domain"), (("domain",), "reduced")]


def normalize_flags(flags):
    """ `"Cohen-Macaulay, dim2"` or a list -> sorted tuple of known flag names, ValueError on unknown ones """
    if flags is None:
        return ()
    if isinstance(flags, str):
        flags = flags.split(",")
    out = set()
    for flag in flags:
        flag = flag.strip().lower().replace("-", "_")
        if len(flag) == 0:
            continue
        if flag not in HYPOTHESIS_FLAGS:
            raise ValueError("Unknown hypothesis flag: {}, should be one of {}".format(flag, list(HYPOTHESIS_FLAGS.keys())))
        out.add(flag)
    return tuple(sorted(out))


def close_flags(flags):
    """ Add everything implied by `IMPLIED_HYPOTHESES` """
    out = set(normalize_flags(flags))
    changed = True
    while changed:
        changed = False
        for premises, conclusion in IMPLIED_HYPOTHESES:
            if conclusion not in out and all(ii in out for ii in premises):
                out.add(conclusion)
                changed = True
    return tuple(sorted(out))


def require_hypotheses(flags, consumer, required=None):
    """
    Check `flags` against `REQUIRED_HYPOTHESES[consumer]` or `required`.
    Returns the sorted tuple of flags consumed, raises `HypothesisMissingError` naming what is missing.
    """
    required = REQUIRED_HYPOTHESES.get(consumer, []) if required is None else required
    available = close_flags(flags)
    used, missing = set(), []
    for item in required:
        options = item if isinstance(item, tuple) else (item,)
        hit = [ii for ii in options if ii in available]
        if len(hit) == 0:
            missing.append("|".join(options))
        else:
            used.add(hit[0])
    if len(missing) != 0:
        raise HypothesisMissingError(missing, consumer)
    return tuple(sorted(used))
