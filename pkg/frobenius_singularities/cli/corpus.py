from tqdm import tqdm
from frobenius_singularities.groebner.groebner import ENGINE_STATS
from frobenius_singularities.ideals.ideals import Ideal
from frobenius_singularities.ideals.hilbert import a_invariant
from frobenius_singularities.frobenius.frobenius import (
    frobenius_closure_member,
    frobenius_closure_obstruction,
    fedder_is_f_pure,
    squarefree_monomial_fpure,
)
from frobenius_singularities.divisor.divisor import (
    family_divisor,
    fpure_obstruction,
    fpure_obstruction_formula,
    a_invariant_sectionring,
    a_invariant_sectionring_bruteforce,
    h0_dim,
)
from frobenius_singularities.demazure.demazure import (
    section_basis,
    family_generators,
    generators_up_to,
    verify_quotient_relations,
    family_quotient_ideal,
)
from frobenius_singularities.covers.covers import (
    DivisorialIdeal,
    symbolic_power,
    class_order,
    f_regular_verdict_dim2,
    f_rational_verdict_dim2,
    cover_presentation_check,
    cover_inclusion_check,
)
from frobenius_singularities.cli.job_spec import load_job_spec
from frobenius_singularities.cli.report import Report

CORPUS_JOBS = {
    "sec3-fedder": {"ring_file": "fedder_sec3.ring", "p": 2},
    "sec3-family": {"n": 2, "k": 5, "p": 7},
    "ex61": {
        "ring_file": "ex61.ring",
        "p": 7,
        "n_max": 4,
        "fedder": True,
        # level: (numerator, denominator, shift)
        "powers": {2: (["V^2", "V*W", "W^2"], "T^6", None), 3: (["(V - W)^2"], "T^9", None)},
    },
    "ex62": {
        "ring_file": "ex62.ring",
        "p": 7,
        "n_max": 4,
        "powers": {2: (["A^2", "A*B", "B^2"], None, -4), 3: (["A^2"], None, -6)},
    },
}

CORPUS_ALIASES = {"fclosure-gap": "sec3-fedder", "section-family": "sec3-family", "cover-quartic": "ex61", "cover-cubic": "ex62"}

CORPUS_EXPECTATIONS = {
    "sec3-fedder": {
        "member": False,
        "fclosure": "InFrobeniusClosureAt(1)",
        "closure_obstruction": "NotFPure",
        "fedder_monomial": "FPure",
        "squarefree_monomial": "FPure",
        "fedder_p2": "NotFPure",
        "recheck": True,
    },
    "sec3-family": {
        "section_dimensions": True,
        "generator_levels": [1, 2],
        "quotient_relations": True,
        "fpure_obstruction": "NotFPure",
        "delta_matches_formula": True,
        "a_invariant": "-1",
        "a_invariant_bruteforce": "-1",
        "quotient_squarefree": "FPure",
        "quotient_fedder": "FPure",
        "recheck": True,
    },
    "ex61": {
        "a_invariant": "-1",
        "fedder": "NotFPure",
        "omega_2": True,
        "omega_3": True,
        "order": 3,
        "deg_u": "-1",
        "a_of_cover": "1/3",
        "f_regular": "NotFRegular",
        "f_rational": "FRational",
        "cover_check": True,
        "cover_inclusion": True,
        "recheck": True,
    },
    "ex62": {
        "a_invariant": "-1",
        "omega_2": True,
        "omega_3": True,
        "order": 3,
        "deg_u": "0",
        "a_of_cover": "0",
        "f_regular": "NotFRegular",
        "f_rational": "FRational",
        "cover_check": True,
        "recheck": True,
    },
}


def __fedder_steps__(params, budget):
    job = load_job_spec(params["ring_file"], p=params["p"])
    rr, ff, ideal = job.ring, job.element("f"), job.ideal("I")
    monomial = job.ideal("M")
    verdicts = []

    def closure():
        verdict = frobenius_closure_member(ff, ideal, quotient=rr, budget=budget)
        verdicts.append(verdict)
        return verdict.label

    def obstruction():
        verdict = frobenius_closure_obstruction(ff, ideal, quotient=rr, budget=budget)
        verdicts.append(verdict)
        return verdict.label

    def fedder_monomial():
        verdict = fedder_is_f_pure(monomial, budget=budget)
        verdicts.append(verdict)
        return verdict.label

    def squarefree():
        verdict = squarefree_monomial_fpure(monomial)
        verdicts.append(verdict)
        return verdict.label

    def fedder_p2():
        verdict = fedder_is_f_pure(load_job_spec(params["ring_file"], p=2).ring.defining, budget=budget)
        verdicts.append(verdict)
        return verdict.label

    return [
        ("member", lambda: bool(rr.member(ff, ideal, budget=budget))),
        ("fclosure", closure),
        ("closure_obstruction", obstruction),
        ("fedder_monomial", fedder_monomial),
        ("squarefree_monomial", squarefree),
        ("fedder_p2", fedder_p2),
    ], verdicts


def __family_steps__(params, budget):
    nn, kk, pp = params["n"], params["k"], params["p"]
    dd = family_divisor(nn, kk, p=pp)
    verdicts = []

    def dimensions():
        return all(len(section_basis(dd, mm, pp)) == h0_dim(dd.scale(mm)) for mm in range(4 * nn + 1))

    def generator_levels():
        preferred = {nn: [(name, elem) for level, name, elem in family_generators(dd, nn, pp) if level == nn]}
        return generators_up_to(dd, 4 * nn, pp, preferred=preferred).generator_levels()

    def obstruction():
        verdict = fpure_obstruction(dd, pp)
        verdicts.append(verdict)
        return verdict.label

    def squarefree():
        verdict = squarefree_monomial_fpure(family_quotient_ideal(kk, pp))
        verdicts.append(verdict)
        return verdict.label

    def quotient_fedder():
        verdict = fedder_is_f_pure(family_quotient_ideal(kk, pp), budget=budget)
        verdicts.append(verdict)
        return verdict.label

    return [
        ("section_dimensions", dimensions),
        ("generator_levels", generator_levels),
        ("quotient_relations", lambda: bool(verify_quotient_relations(dd, nn, pp))),
        ("fpure_obstruction", obstruction),
        ("delta_matches_formula", lambda: fpure_obstruction(dd, pp).certificate == fpure_obstruction_formula(nn, kk, pp)),
        ("a_invariant", lambda: str(a_invariant_sectionring(dd))),
        ("a_invariant_bruteforce", lambda: str(a_invariant_sectionring_bruteforce(dd))),
        ("quotient_squarefree", squarefree),
        ("quotient_fedder", quotient_fedder),
    ], verdicts


def __cover_steps__(params, budget):
    job = load_job_spec(params["ring_file"], p=params["p"])
    rr = job.ring
    omega, saturator = job.divisorial("omega")
    verdicts, state = [], {}

    def power_matches(level):
        numerator, denominator, shift = params["powers"][level]
        expected = DivisorialIdeal(rr, Ideal(rr.ambient, numerator), denominator, shift)
        return symbolic_power(omega, level, saturator, budget=budget).equals(expected, budget=budget)

    def order():
        state["order"] = class_order(omega, params["n_max"], saturator, budget=budget)
        return state["order"].order

    def f_regular():
        state["report"] = f_regular_verdict_dim2(rr, omega, params["n_max"], saturator, budget=budget)
        verdicts.append(state["report"].verdict)
        return state["report"].verdict.label

    def f_rational():
        verdict = f_rational_verdict_dim2(rr, budget=budget)
        verdicts.append(verdict)
        return verdict.label

    def fedder():
        verdict = fedder_is_f_pure(rr.defining, budget=budget)
        verdicts.append(verdict)
        return verdict.label

    steps = [("a_invariant", lambda: str(a_invariant(rr, budget=budget).a_invariant))]
    if params.get("fedder"):
        steps.append(("fedder", fedder))
    steps += [
        ("omega_2", lambda: power_matches(2)),
        ("omega_3", lambda: power_matches(3)),
        ("order", order),
        ("deg_u", lambda: str(state["order"].degree)),
        ("f_regular", f_regular),
        ("a_of_cover", lambda: str(state["report"].a_of_cover)),
        ("f_rational", f_rational),
        ("cover_check", lambda: bool(cover_presentation_check(state["report"], job.presentation("cover"), budget=budget))),
    ]
    if len(job.cover_map) != 0:
        steps.append(("cover_inclusion", lambda: bool(cover_inclusion_check(rr, job.presentation("cover"), job.cover_map, budget=budget))))
    return steps, verdicts


CORPUS_STEPS = {"sec3-fedder": __fedder_steps__, "sec3-family": __family_steps__, "ex61": __cover_steps__, "ex62": __cover_steps__}


def corpus_mismatches(name, results):
    """ `[(field, expected, got)]` for every expectation the results miss """
    expected = CORPUS_EXPECTATIONS[name]
    return [(key, value, results.get(key)) for key, value in expected.items() if results.get(key) != value]


def run_corpus(name, p=None, budget=None, verbose=False):
    """
    Run the full pipeline of a corpus job and diff it against `CORPUS_EXPECTATIONS[name]`.
    `name` is a job or one of `CORPUS_ALIASES`, `p` overrides the job characteristic. Returns a Report with status `Match` or `Mismatch`.
    """
    name = CORPUS_ALIASES.get(name, name)
    if name not in CORPUS_JOBS:
        raise ValueError("Unknown corpus job: {}, should be one of {}".format(name, list(CORPUS_JOBS.keys())))
    params = dict(CORPUS_JOBS[name])
    if p is not None:
        params["p"] = p

    ENGINE_STATS.reset()
    steps, verdicts = CORPUS_STEPS[name](params, budget)
    results = {}
    for key, step in tqdm(steps, "Running corpus {}".format(name), disable=not verbose):
        results[key] = step()
    decided = [ii for ii in verdicts if ii.decided]
    results["recheck"] = all(ii.recheck() for ii in decided)
    hypotheses = tuple(sorted(set(hh for ii in verdicts for hh in ii.hypotheses)))

    mismatches = corpus_mismatches(name, results)
    for key, expected, got in mismatches:
        print("[Error] corpus {}: {} expected {!r}, got {!r}".format(name, key, expected, got))
    result = {"results": results, "mismatches": [{"field": key, "expected": expected, "got": got} for key, expected, got in mismatches]}
    inputs = {"name": name, "params": {kk: vv for kk, vv in params.items() if kk != "powers"}}
    status = "Match" if len(mismatches) == 0 else "Mismatch"
    return Report("corpus", status, result, inputs, hypotheses, results["recheck"], ENGINE_STATS.snapshot())
