import argparse
import time
import numpy as np
from frobenius_singularities.core_algebra.errors import BudgetExceededError, HypothesisMissingError, ParseError
from frobenius_singularities.groebner.groebner import ENGINE_STATS, get_default_budget, set_default_budget
from frobenius_singularities.ideals.ideals import colon, saturate
from frobenius_singularities.ideals.hilbert import hilbert, a_invariant
from frobenius_singularities.frobenius.frobenius import (
    DEFAULT_E_MAX,
    bracket_power,
    frobenius_closure_member,
    fedder_is_f_pure,
    tight_closure_witness,
)
from frobenius_singularities.divisor.divisor import (
    family_divisor,
    round_down,
    frac_part,
    h0_dim,
    h1_dim,
    fpure_obstruction,
    a_invariant_sectionring,
    rounding_identity,
    random_divisor,
)
from frobenius_singularities.demazure.demazure import DEFAULT_N_MAX, family_generators, generators_up_to, verify_quotient_relations
from frobenius_singularities.covers.covers import class_order, cyclic_cover_stats, cover_presentation_check, cover_inclusion_check, f_regular_verdict_dim2, f_rational_verdict_dim2
from frobenius_singularities.cli.job_spec import DEFAULT_RING_FILE, load_job_spec
from frobenius_singularities.cli.report import Report, EXIT_ERROR
from frobenius_singularities.cli.corpus import CORPUS_JOBS, CORPUS_ALIASES, run_corpus

COMMANDS = ("gb", "member", "colon", "saturate", "hilbert", "ainv", "bracket", "fclosure", "fedder", "tcwitness", "divisor", "demazure", "cover", "fregular2", "frational2", "corpus")


class UsageError(ValueError):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """ Raises UsageError instead of exiting, `main` turns it into exit code 1 """

    def error(self, message):
        raise UsageError("{}: {}".format(self.prog, message))


def __generators__(ideal):
    return [str(gg) for gg in ideal.generators]


def __modulo_relations__(job, ideal, budget):
    """ Reduced Groebner basis of a lifted ideal with the elements vanishing in the ring dropped """
    return [str(gg) for gg in ideal.gb(budget).elements if not job.ring.reduce(gg, budget).is_zero()]


def __verdict_report__(command, verdict, inputs):
    return Report(command, verdict.label, verdict.to_dict(), inputs, verdict.hypotheses, verdict.recheck())


def __parse_family__(text):
    try:
        nn, kk = [int(ii) for ii in text.split(",")]
    except ValueError:
        raise ValueError("--family expects `n,k`, got: {!r}".format(text)) from None
    return nn, kk


def __divisor_from_args__(job, args, concrete=True):
    """ Family points are `1..k` in F_p when `concrete`, formal otherwise """
    if args.family is not None:
        nn, kk = __parse_family__(args.family)
        return family_divisor(nn, kk, p=job.p if concrete else None), (nn, kk)
    if args.divisor is None:
        raise ValueError("Give a divisor with --divisor or a family with --family n,k")
    return job.divisor(args.divisor), None


def run_gb(job, args, budget):
    ideal = job.ideal(args.ideal)
    gb = ideal.gb(budget)
    result = {"basis": [str(gg) for gg in gb.elements], "order": ideal.ring.order_name, "pairs_processed": gb.pairs_processed, "reductions": gb.reductions}
    return Report("gb", "Computed", result)


def run_member(job, args, budget):
    membership = job.ring.member(job.element(args.elem), job.ideal(args.ideal), budget=budget)
    status = "InIdeal" if membership.member else "NotInIdeal"
    return Report("member", status, {"normal_form": str(membership.normal_form)}, recheck=membership.recheck())


def run_colon(job, args, budget):
    out = colon(job.ring.ideal(job.ideal(args.ideal)), job.ring.ideal(job.ideal(args.by)), budget=budget)
    return Report("colon", "Computed", {"generators": __modulo_relations__(job, out, budget)})


def run_saturate(job, args, budget):
    out = saturate(job.ring.ideal(job.ideal(args.ideal)), job.element(args.elem), budget=budget)
    return Report("saturate", "Computed", {"generators": __modulo_relations__(job, out, budget)})


def run_hilbert(job, args, budget):
    data = hilbert(job.ring if args.ideal is None else job.ideal(args.ideal), budget=budget)
    return Report("hilbert", "Computed", data.to_dict())


def run_ainv(job, args, budget):
    data = a_invariant(job.ring, budget=budget)
    return Report("ainv", "Computed", data.to_dict(), hypotheses=data.hypotheses)


def run_bracket(job, args, budget):
    qq = job.p if args.q is None else args.q
    return Report("bracket", "Computed", {"q": qq, "generators": __generators__(bracket_power(job.ideal(args.ideal), qq))})


def run_fclosure(job, args, budget):
    verdict = frobenius_closure_member(job.element(args.elem), job.ideal(args.ideal), e_max=args.emax, quotient=job.ring, budget=budget)
    return __verdict_report__("fclosure", verdict, {"elem": args.elem, "ideal": args.ideal, "emax": args.emax})


def run_fedder(job, args, budget):
    verdict = fedder_is_f_pure(job.ideal(args.ideal), budget=budget)
    return __verdict_report__("fedder", verdict, {"ideal": args.ideal})


def run_tcwitness(job, args, budget):
    verdict = tight_closure_witness(
        job.element(args.elem), job.ideal(args.ideal), job.element(args.c), e_min=args.emin, e_max=args.emax, quotient=job.ring, budget=budget
    )
    return __verdict_report__("tcwitness", verdict, {"elem": args.elem, "ideal": args.ideal, "c": args.c, "emin": args.emin, "emax": args.emax})


def run_divisor(job, args, budget):
    dd, family = __divisor_from_args__(job, args, concrete=False)
    result = {
        "divisor": str(dd),
        "degree": str(dd.degree),
        "round_down": str(round_down(dd)),
        "frac_part": str(frac_part(dd)),
        "h0": h0_dim(dd),
        "h1": h1_dim(dd),
    }
    if dd.degree > 0:
        result["a_invariant_sectionring"] = a_invariant_sectionring(dd)
    if args.identity_cases:
        rng = np.random.default_rng(args.seed)
        cases = [(random_divisor(rng), int(rng.integers(-12, 13))) for _ in range(args.identity_cases)]
        result["rounding_identity"] = {"cases": len(cases), "holds": all(rounding_identity(ee, nn) for ee, nn in cases)}
    verdict = fpure_obstruction(dd, job.p)
    result["fpure_obstruction"] = verdict.to_dict()
    inputs = {"divisor": args.divisor, "family": None if family is None else list(family)}
    return Report("divisor", verdict.label, result, inputs, verdict.hypotheses, verdict.recheck())


def run_demazure(job, args, budget):
    dd, family = __divisor_from_args__(job, args)
    preferred = None
    if family is not None:
        preferred = {family[0]: [(name, elem) for level, name, elem in family_generators(dd, family[0], job.p) if level == family[0]]}
    sketch = generators_up_to(dd, args.nmax, job.p, preferred=preferred)
    result = {"sketch": sketch.to_dict(), "generator_levels": sketch.generator_levels(), "complete_through": args.nmax}
    status = "Computed"
    if family is not None:
        report = verify_quotient_relations(dd, family[0], job.p)
        result["quotient_relations"] = report.to_dict()
        status = "QuotientConfirmed" if report.confirmed else "QuotientNotConfirmed"
    inputs = {"divisor": args.divisor, "family": None if family is None else list(family), "nmax": args.nmax}
    return Report("demazure", status, result, inputs)


def run_cover(job, args, budget):
    omega, saturator = job.divisorial(args.omega)
    order = class_order(omega, args.nmax, saturator, budget=budget, verbose=args.verbose)
    result = {"class_order": order.to_dict()}
    if order.found:
        stats = cyclic_cover_stats(order.order, order.degree)
        result["cover"] = stats.to_dict()
        if job.object_kind(args.presentation) == "presentation":
            result["presentation_check"] = cover_presentation_check(stats, job.presentation(args.presentation), budget=budget).to_dict()
            if len(job.cover_map) != 0:
                result["inclusion_check"] = cover_inclusion_check(job.ring, job.presentation(args.presentation), job.cover_map, budget=budget).to_dict()
    hypotheses = () if order.power is None else order.power.hypotheses
    return Report("cover", order.label, result, {"omega": args.omega, "nmax": args.nmax}, hypotheses, all(ii.run() for ii in order.checks) if order.found else None)


def run_fregular2(job, args, budget):
    omega, saturator = job.divisorial(args.omega)
    report = f_regular_verdict_dim2(job.ring, omega, args.nmax, saturator, budget=budget, verbose=args.verbose)
    out = __verdict_report__("fregular2", report.verdict, {"omega": args.omega, "nmax": args.nmax})
    out.result = report.to_dict()
    return out


def run_frational2(job, args, budget):
    return __verdict_report__("frational2", f_rational_verdict_dim2(job.ring, budget=budget), {})


def run_corpus_command(job, args, budget):
    return run_corpus(args.name, p=args.p, budget=budget, verbose=args.verbose)


HANDLERS = {
    "gb": run_gb,
    "member": run_member,
    "colon": run_colon,
    "saturate": run_saturate,
    "hilbert": run_hilbert,
    "ainv": run_ainv,
    "bracket": run_bracket,
    "fclosure": run_fclosure,
    "fedder": run_fedder,
    "tcwitness": run_tcwitness,
    "divisor": run_divisor,
    "demazure": run_demazure,
    "cover": run_cover,
    "fregular2": run_fregular2,
    "frational2": run_frational2,
    "corpus": run_corpus_command,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--file", type=str, default=DEFAULT_RING_FILE, help="Ring file, a path or a shipped name. Default: {}".format(DEFAULT_RING_FILE))
    common.add_argument("--p", type=int, default=None, help="Override the characteristic of the ring file")
    common.add_argument("--budget", type=int, default=None, help="Groebner reduction budget per computation")
    common.add_argument("--out", type=str, default=None, help="Write the JSON report to this path")
    common.add_argument("--seed", type=int, default=0, help="Seed for randomized property suites")
    common.add_argument("--assert", dest="flags", type=str, default=None, help="Extra hypothesis flags, like `normal,dim2,coprime-order`")
    common.add_argument("--quiet", dest="verbose", action="store_false", help="Only print errors")

    parser = ArgumentParser(prog="fsing", description="Frobenius singularities of graded rings in characteristic p")
    subparsers = parser.add_subparsers(dest="command", required=True)
    sub = {name: subparsers.add_parser(name, parents=[common]) for name in COMMANDS}

    for name in ["gb", "hilbert", "fedder"]:
        sub[name].add_argument("--ideal", type=str, default=None, help="Object name or generator list, default the ring relations")
    for name in ["member", "colon", "saturate", "bracket", "fclosure", "tcwitness"]:
        sub[name].add_argument("--ideal", type=str, required=True, help="Object name or generator list")
    for name in ["member", "saturate", "fclosure", "tcwitness"]:
        sub[name].add_argument("--elem", type=str, required=True, help="Object name or polynomial")
    sub["colon"].add_argument("--by", type=str, required=True, help="Ideal to divide by")
    sub["bracket"].add_argument("--q", type=int, default=None, help="Power of p, default p")
    sub["fclosure"].add_argument("--emax", type=int, default=DEFAULT_E_MAX)
    sub["tcwitness"].add_argument("--c", type=str, required=True, help="Test element, asserted in R° with `in_r_circ`")
    sub["tcwitness"].add_argument("--emin", type=int, default=1)
    sub["tcwitness"].add_argument("--emax", type=int, default=DEFAULT_E_MAX)
    for name in ["divisor", "demazure"]:
        sub[name].add_argument("--divisor", type=str, default=None, help="Object name or divisor literal")
        sub[name].add_argument("--family", type=str, default=None, help="`n,k` for D = sum (1/n) V(X - i Y), i = 1..k")
    sub["divisor"].add_argument("--identity-cases", type=int, default=0, help="Random cases for -[-nD] = [nD + D']")
    sub["demazure"].add_argument("--nmax", type=int, default=DEFAULT_N_MAX)
    for name in ["cover", "fregular2"]:
        sub[name].add_argument("--omega", type=str, default="omega", help="Divisorial object name")
        sub[name].add_argument("--nmax", type=int, default=DEFAULT_N_MAX)
    sub["cover"].add_argument("--presentation", type=str, default="cover", help="Presentation object of the cover, checked when present")
    sub["corpus"].add_argument("name", choices=list(CORPUS_JOBS.keys()) + list(CORPUS_ALIASES.keys()))
    return parser


def run(args):
    """ Dispatch one parsed command, returns a Report """
    ENGINE_STATS.reset()
    saved_budget = get_default_budget()
    if args.budget is not None:
        set_default_budget(args.budget)
    start = time.time()
    try:
        job = None if args.command == "corpus" else load_job_spec(args.file, p=args.p, flags=args.flags)
        report = HANDLERS[args.command](job, args, None)
    finally:
        set_default_budget(saved_budget)
    if args.command != "corpus":
        report.inputs = dict(report.inputs, ring=job.describe())
        report.engine = ENGINE_STATS.snapshot()
    report.seconds = time.time() - start
    return report


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except UsageError as err:
        print("[Error] Usage: {}".format(err))
        return EXIT_ERROR
    try:
        report = run(args)
    except BudgetExceededError as err:
        print("[Error] Budget exceeded, no answer: {}".format(err))
        return EXIT_ERROR
    except HypothesisMissingError as err:
        print("[Error] Missing hypotheses, pass them with --assert: {}".format(err))
        return EXIT_ERROR
    except ParseError as err:
        print("[Error] Parse error: {}".format(err))
        return EXIT_ERROR
    except (ValueError, TypeError, RuntimeError, OSError) as err:
        print("[Error] {}".format(err))
        return EXIT_ERROR

    if args.verbose:
        print(report.summary())
    if args.out is not None:
        report.save(args.out)
        if args.verbose:
            print(">>>> Saved report to: {}".format(args.out))
    if report.status == "Mismatch":
        return EXIT_ERROR
    return report.exit_code
