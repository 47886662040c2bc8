import pytest
import sympy
import sys
from hypothesis import HealthCheck, assume, given, reject, settings, strategies as st

sys.path.append(".")
from frobenius_singularities import groebner, ideals
from frobenius_singularities.core_algebra import PolyRing, BudgetExceededError
from frobenius_singularities.ideals import Ideal

PROPERTY_SETTINGS = settings(max_examples=40, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])


@st.composite
def exponents(draw, nvars, max_degree=4):
    """ Exponent vector of total degree at most `max_degree` """
    left, out = draw(st.integers(0, max_degree)), []
    for _ in range(nvars):
        ee = draw(st.integers(0, left))
        out.append(ee)
        left -= ee
    return draw(st.permutations(out))


@st.composite
def polys(draw, ring, max_terms=3, max_degree=4):
    out = ring.zero()
    for _ in range(draw(st.integers(1, max_terms))):
        out = out + ring.monomial(list(draw(exponents(ring.nvars, max_degree))), draw(st.integers(1, ring.p - 1)))
    return out


def to_sympy(poly, symbols):
    out = 0
    for mm, cc in poly.coeffs.items():
        term = sympy.Integer(cc)
        for sym, ee in zip(symbols, mm):
            term = term * sym**ee
        out += term
    return out


def test_twisted_cubic():
    ring = PolyRing(7, "A, B, C, D")
    gb = groebner.buchberger([ring.parse(ii) for ii in ["A*C - B^2", "B*D - C^2", "A*D - B*C"]])
    assert str(gb) == "[C^2 - B*D, B*C - A*D, B^2 - A*C]"
    assert groebner.is_groebner_basis(gb.elements)
    assert groebner.normal_form(ring.parse("B^3"), gb) == ring.parse("A^2*D")
    assert gb.contains(ring.parse("B*(A*C - B^2) + D*(A*D - B*C)"))


def test_unit_and_empty():
    ring = PolyRing(5, "x, y")
    assert groebner.buchberger([ring.parse("x + 1"), ring.parse("x")]).is_unit()
    assert len(groebner.buchberger([], ring=ring)) == 0
    with pytest.raises(ValueError):
        groebner.buchberger([])


def test_normal_form_first_divisor():
    ring = PolyRing(5, "u, v, y, z")
    assert groebner.normal_form(ring.parse("y^3*u"), [ring.parse("v"), ring.parse("z")]) == ring.parse("u*y^3")
    assert groebner.normal_form(ring.parse("u*v + z^2"), [ring.parse("v"), ring.parse("z")]).is_zero()


def test_reduce_with_quotients_and_divide_exact():
    ring = PolyRing(7, "x, y")
    ff, gg = ring.parse("x^3 - y^3"), ring.parse("x - y")
    (quotient,), remainder = groebner.reduce_with_quotients(ff, [gg])
    assert remainder.is_zero()
    assert quotient == ring.parse("x^2 + x*y + y^2")
    assert groebner.divide_exact(ff, gg) * gg == ff
    with pytest.raises(ValueError):
        groebner.divide_exact(ring.parse("x^2 + 1"), gg)
    with pytest.raises(ZeroDivisionError):
        groebner.divide_exact(ff, ring.zero())


def test_budget_exceeded():
    ring = PolyRing(7, "A, B, C, D")
    gens = [ring.parse(ii) for ii in ["A*C - B^2", "B*D - C^2", "A*D - B*C"]]
    with pytest.raises(BudgetExceededError) as err:
        groebner.buchberger(gens, budget=1)
    assert err.value.budget == 1
    assert isinstance(err.value, RuntimeError)


def test_default_budget():
    saved = groebner.get_default_budget()
    try:
        groebner.set_default_budget(12345)
        assert groebner.get_default_budget() == 12345
        with pytest.raises(ValueError):
            groebner.set_default_budget(0)
    finally:
        groebner.set_default_budget(saved)


def test_engine_stats():
    ring = PolyRing(7, "A, B, C, D")
    groebner.ENGINE_STATS.reset()
    gb = groebner.buchberger([ring.parse(ii) for ii in ["A*C - B^2", "B*D - C^2", "A*D - B*C"]])
    stats = groebner.ENGINE_STATS.snapshot()
    assert stats["bases_computed"] == 1
    assert stats["pairs_processed"] == gb.pairs_processed
    assert stats["reductions"] >= gb.reductions


@PROPERTY_SETTINGS
@given(data=st.data())
def test_buchberger_properties(data):
    pp = data.draw(st.sampled_from([2, 3, 5, 7]))
    nvars = data.draw(st.integers(1, 4))
    ring = PolyRing(pp, ", ".join("x{}".format(ii) for ii in range(nvars)))
    gens = [gg for gg in data.draw(st.lists(polys(ring), min_size=1, max_size=4)) if not gg.is_zero()]
    assume(len(gens) > 0)
    try:
        gb = groebner.buchberger(gens, budget=20000)
    except BudgetExceededError:
        reject()
    assert groebner.is_groebner_basis(gb.elements)
    # generators reduce to zero
    assert all(gb.contains(gg) for gg in gens)

    again = groebner.buchberger(gb.elements, budget=20000)
    assert set(str(ii) for ii in again.elements) == set(str(ii) for ii in gb.elements)
    assert ideals.equal(Ideal(ring, gens), Ideal(ring, gb.elements))


def test_buchberger_idempotent_on_reduced_basis():
    ring = PolyRing(7, "A, B, C, D")
    gb = groebner.buchberger([ring.parse(ii) for ii in ["A*C - B^2", "B*D - C^2", "A*D - B*C"]])
    assert str(groebner.buchberger(gb.elements)) == str(gb)
    ideal = Ideal(ring, ["A*C - B^2", "B*D - C^2", "A*D - B*C"])
    assert ideals.equal(ideal, Ideal(ring, ideal.gb().elements))


@PROPERTY_SETTINGS
@given(data=st.data())
def test_normal_form_linearity(data):
    ring = PolyRing(5, "x, y, z")
    gb = groebner.buchberger([ring.parse("x^2 - y*z"), ring.parse("y^2 - x*z + z")])
    ff, gg = data.draw(polys(ring)), data.draw(polys(ring))
    aa, bb = data.draw(st.integers(0, 4)), data.draw(st.integers(0, 4))
    assert gb.reduce(ff * aa + gg * bb) == gb.reduce(ff) * aa + gb.reduce(gg) * bb


@PROPERTY_SETTINGS
@given(
    gens=st.lists(st.tuples(*[st.integers(0, 3)] * 3), min_size=1, max_size=3),
    monos=st.lists(st.tuples(*[st.integers(0, 5)] * 3), min_size=1, max_size=10),
)
def test_monomial_membership_oracle(gens, monos):
    ring = PolyRing(3, "x, y, z")
    ideal = Ideal(ring, [ring.monomial(mm) for mm in gens])
    for mono in monos:
        expected = any(all(aa <= bb for aa, bb in zip(gg, mono)) for gg in gens)
        assert (ring.monomial(mono) in ideal) == expected


@settings(max_examples=15, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
@given(data=st.data())
def test_leading_monomials_against_sympy(data):
    pp = data.draw(st.sampled_from([2, 3, 7]))
    ring = PolyRing(pp, "x, y, z")
    symbols = sympy.symbols("x y z")
    gens = [gg for gg in data.draw(st.lists(polys(ring, max_degree=3), min_size=1, max_size=3)) if not gg.is_zero()]
    assume(len(gens) > 0)
    try:
        ours = sorted(groebner.buchberger(gens, budget=20000).leading_monomials)
    except BudgetExceededError:
        reject()
    oracle = sympy.groebner([to_sympy(gg, symbols) for gg in gens], *symbols, order="grevlex", modulus=pp)
    theirs = sorted(sympy.Poly(ii, *symbols, modulus=pp).monoms(order="grevlex")[0] for ii in oracle.exprs)
    assert ours == theirs
