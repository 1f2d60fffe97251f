import json
import random
from fractions import Fraction
from pathlib import Path

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import XY, XYZ, P, W
from oracles import milnor_orlik
from whmilnor.errors import ResourceLimitExceeded
from whmilnor.grading import graded_piece_basis, random_weighted_homogeneous
from whmilnor.ideals import (
    Ideal, clear_cache, groebner, ideal_equal, ideal_member, jacobian_ideal, milnor_algebra,
    normal_form, saito_check,
)
from whmilnor.orders import MonomialOrder
from whmilnor.parser import parse_polynomial
from whmilnor.poly import Polynomial

FIXTURES = sorted((Path(__file__).parent / "fixtures" / "groebner").glob("*.json"))


def _load(path):
    case = json.loads(path.read_text())
    variables = tuple(case["variables"])
    order = MonomialOrder(case["order"])
    gens = [parse_polynomial(g, variables) for g in case["input_generators"]]
    expected = [parse_polynomial(g, variables) for g in case["reduced_basis"]]
    return variables, order, gens, expected


def _naive_remainder(p, basis, order):
    """Plain textbook division, independent of the kernel code."""
    r = Polynomial.zero(p.vars)
    while not p.is_zero():
        lm, lc = p.leading_monomial(order), p.leading_coefficient(order)
        for g in basis:
            gm = g.leading_monomial(order)
            if all(a <= b for a, b in zip(gm, lm)):
                q = tuple(b - a for a, b in zip(gm, lm))
                p = p - g * Polynomial.monomial(q, p.vars, lc / g.leading_coefficient(order))
                break
        else:
            head = Polynomial.monomial(lm, p.vars, lc)
            r, p = r + head, p - head
    return r


def _is_groebner_basis(basis, order):
    for i, f in enumerate(basis):
        for g in basis[i + 1:]:
            a, b = f.leading_monomial(order), g.leading_monomial(order)
            lcm = tuple(max(x, y) for x, y in zip(a, b))
            s = (f * Polynomial.monomial(tuple(l - x for l, x in zip(lcm, a)), f.vars,
                                         1 / f.leading_coefficient(order))
                 - g * Polynomial.monomial(tuple(l - y for l, y in zip(lcm, b)), g.vars,
                                           1 / g.leading_coefficient(order)))
            if not _naive_remainder(s, basis, order).is_zero():
                return False
    return True


@pytest.mark.parametrize("path", FIXTURES, ids=lambda p: p.stem)
def test_reduced_basis_matches_recorded_fixture(path):
    variables, order, gens, expected = _load(path)
    G = groebner(Ideal(gens, variables), order)
    want = sorted((e.monic(order) for e in expected),
                  key=lambda q: order.key(q.leading_monomial(order)), reverse=True)
    assert list(G.polys) == want
    assert _is_groebner_basis(list(G.polys), order)


@pytest.mark.parametrize("path", FIXTURES, ids=lambda p: p.stem)
def test_generators_reduce_to_zero(path):
    variables, order, gens, _ = _load(path)
    G = groebner(Ideal(gens, variables), order)
    for g in gens:
        assert normal_form(g, G).is_zero()
        assert _naive_remainder(g, list(G.polys), order).is_zero()


def test_normal_form_example():
    G = groebner(Ideal([P("x^2 - y"), P("y^2")]))
    assert normal_form(P("x^3"), G) == P("x*y")


def test_basis_is_reduced_and_monic():
    G = groebner(Ideal([P("2*x^2 + 4*x*y"), P("6*y^2 - x*y")]))
    order = G.order
    lms = G.leading_monomials
    for p in G.polys:
        assert p.leading_coefficient(order) == 1
        for m in p.terms:
            for lm in lms:
                if lm != p.leading_monomial(order):
                    assert not all(a <= b for a, b in zip(lm, m))
    assert lms == sorted(lms, key=order.key, reverse=True)


def test_unit_ideal():
    G = groebner(Ideal([P("x*y - 1"), P("x")]))
    assert G.is_unit() and G.texts() == ["1"]


def test_membership_examples():
    I = Ideal([P("x^2"), P("y^2")], weights=W((1, 1), XY))
    assert ideal_member(P("x^2*y + y^3"), I)
    assert not ideal_member(P("x*y"), I)
    for method in ("graded", "groebner"):
        assert ideal_member(P("x^2*y + y^3"), I, method=method)
        assert not ideal_member(P("x*y + x^3"), I, method=method)


def test_membership_non_graded_uses_groebner():
    I = Ideal([P("x + y^2"), P("y - x^3")])
    assert ideal_member(P("x*(x + y^2) + y^5*(y - x^3)"), I)
    with pytest.raises(ValueError):
        ideal_member(P("x"), I, method="graded")


def test_ideal_equal_examples():
    assert ideal_equal(Ideal([P("x"), P("y")]), Ideal([P("x + y"), P("x - y")]))
    assert not ideal_equal(Ideal([P("x^2"), P("y^2")]), Ideal([P("x^2"), P("x*y")]))
    assert ideal_equal(jacobian_ideal(P("x^2 + y^2")), jacobian_ideal(P("x^2 + x*y + y^2")))
    assert ideal_equal(jacobian_ideal(P("x^2 + y^2")), jacobian_ideal(P("x*y")))


def test_saito_examples():
    assert saito_check(P("x^3 + y^3"), W((1, 1), XY))
    assert saito_check(P("x^2*y + z^2", XYZ), W((2, 2, 3), XYZ))
    h = parse_polynomial("x^5 + x^2*y^2 + y^5", XY)
    assert not saito_check(h)


def test_saito_negative_against_sympy():
    xs = sympy.symbols("x y")
    h = xs[0] ** 5 + xs[0] ** 2 * xs[1] ** 2 + xs[1] ** 5
    G = sympy.groebner([sympy.diff(h, v) for v in xs], *xs, order="grevlex")
    assert not G.contains(h)


# -- Milnor algebra ------------------------------------------------------------

def _graded_quotient_dims(f, weights, top):
    """dim of each graded piece of C[x]/J by rank of the spanning matrix (sympy)."""
    Wt = W(weights, f.vars)
    grads = [g for g in f.gradient() if not g.is_zero()]
    degs = [Wt.degree(next(iter(g.terms))) for g in grads]
    out = {}
    for k in range(top + 1):
        cols = graded_piece_basis(Wt, k)
        idx = {m: i for i, m in enumerate(cols)}
        rows = []
        for g, e in zip(grads, degs):
            for q in graded_piece_basis(Wt, k - e) if k >= e else []:
                prod = g * Polynomial.monomial(q, f.vars)
                row = [0] * len(cols)
                for m, c in prod.terms.items():
                    row[idx[m]] = sympy.Rational(c.numerator, c.denominator)
                rows.append(row)
        rank = sympy.Matrix(rows).rank() if rows else 0
        if len(cols) - rank:
            out[k] = len(cols) - rank
    return out


def test_milnor_examples():
    r = milnor_algebra(P("x^3 + y^3"))
    assert r.milnor_number == 4 and r.finite
    assert r.hilbert == {0: 1, 1: 2, 2: 1}
    assert set(r.standard_monomials) == {(0, 0), (1, 0), (0, 1), (1, 1)}

    inf = milnor_algebra(P("x^2*y + z^2", XYZ), weights=W((2, 2, 3), XYZ))
    assert inf.milnor_number == "infinite" and not inf.finite
    # no pure power of y among the leading monomials
    assert not any(m[1] and not m[0] and not m[2] for m in inf.basis.leading_monomials)


@pytest.mark.parametrize("text, weights, d", [
    ("x^3 + y^3", (1, 1), 3),
    ("x^2 + y^3", (3, 2), 6),
    ("x^3 + y^4", (4, 3), 12),
    ("x^3 + x*y^3", (3, 2), 9),
    ("x^3 + y^5", (5, 3), 15),
    ("x^2*y + y^4 + z^2", (3, 2, 4), 8),
    ("x^3 + y^3 + z^3", (1, 1, 1), 3),
])
def test_milnor_hilbert_matches_oracles(text, weights, d):
    variables = XYZ if "z" in text else XY
    f = P(text, variables)
    r = milnor_algebra(f, weights=W(weights, variables))
    oracle = milnor_orlik(weights, d)
    assert r.hilbert == oracle
    assert r.milnor_number == sum(oracle.values())
    assert r.hilbert == _graded_quotient_dims(f, weights, max(oracle) + 2)


def test_non_homogeneous_counts_every_critical_point():
    # global quotient: the origin plus four further nondegenerate critical points
    f = P("x^2 + y^2 + z^2 + x*y*z", XYZ)
    r = milnor_algebra(f)
    x, y, z = sympy.symbols("x y z")
    g = x**2 + y**2 + z**2 + x*y*z
    sols = sympy.solve([sympy.diff(g, v) for v in (x, y, z)], [x, y, z], dict=True)
    assert r.milnor_number == len(sols) == 5
    assert r.hilbert is None


def test_milnor_number_independent_of_order():
    f = P("x^3 + x*y^3")
    counts = {milnor_algebra(f, order=MonomialOrder(k)).milnor_number
              for k in ("wdegrevlex", "wdeglex", "lex")}
    assert counts == {7}


def test_infinite_truncation_counts():
    inf = milnor_algebra(P("x^2*y + z^2", XYZ), weights=W((2, 2, 3), XYZ), truncation=4)
    assert inf.truncation == 4
    assert all(W((2, 2, 3), XYZ).degree(m) <= 4 for m in inf.standard_monomials)


# -- canonicalization ---------------------------------------------------------

def _rand_ideal(rng, variables=XY):
    gens = []
    for _ in range(rng.randint(2, 3)):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            terms[tuple(rng.randint(0, 3) for _ in variables)] = rng.randint(-4, 4) or 1
        gens.append(Polynomial(terms, variables))
    return [g for g in gens if not g.is_zero()]


def test_canonical_under_shuffle_scale_and_recombination(rng):
    for _ in range(25):
        gens = _rand_ideal(rng)
        base = groebner(Ideal(gens, XY)).polys
        shuffled = list(gens)
        rng.shuffle(shuffled)
        scaled = [g.scale(Fraction(rng.choice([-3, 2, 5]), rng.choice([1, 7]))) for g in shuffled]
        mixed = list(scaled)
        if len(mixed) > 1:
            mixed[0] = mixed[0] + mixed[1] * P("x - 2*y")
        assert groebner(Ideal(shuffled, XY)).polys == base
        assert groebner(Ideal(scaled, XY)).polys == base
        assert groebner(Ideal(mixed, XY)).polys == base


def test_graded_and_groebner_equality_agree(rng):
    Wt = W((1, 2), XY)
    for _ in range(25):
        gens = [random_weighted_homogeneous(rng, Wt, rng.randint(1, 5)) for _ in range(2)]
        other = list(gens)
        if rng.random() < 0.5:
            other[0] = other[0] + random_weighted_homogeneous(rng, Wt, 0) * other[0]
        else:
            other.append(random_weighted_homogeneous(rng, Wt, rng.randint(1, 5)))
        I, J = Ideal(gens, XY, Wt), Ideal(other, XY, Wt)
        assert ideal_equal(I, J, method="graded") == ideal_equal(I, J, method="groebner")


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_graded_and_groebner_membership_agree(seed):
    rng = random.Random(seed)
    Wt = W((2, 3), XY)
    I = Ideal([random_weighted_homogeneous(rng, Wt, rng.randint(2, 8)) for _ in range(2)], XY, Wt)
    p = random_weighted_homogeneous(rng, Wt, rng.randint(4, 14))
    assert ideal_member(p, I, method="graded") == ideal_member(p, I, method="groebner")


def test_resource_limit():
    clear_cache()
    gens = [P("x^3*y*z - x*z^2", XYZ), P("x*y^2*z - x*y*z", XYZ), P("x^2*y^2 - z", XYZ)]
    with pytest.raises(ResourceLimitExceeded):
        groebner(Ideal(gens, XYZ), max_steps=2)
