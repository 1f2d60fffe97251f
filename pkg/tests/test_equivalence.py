import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import XY, XYZ, P, W
from whmilnor.equivalence import (
    EQUIVALENT, UNKNOWN, Substitution, apply_substitution, mutual_membership,
    right_equivalent_wh, verify_substitution,
)
from whmilnor.errors import HypothesisViolation
from whmilnor.grading import random_weighted_homogeneous
from whmilnor.ideals import jacobian_ideal, milnor_algebra

W11 = W((1, 1), XY)


def test_quadratic_pairs_equivalent():
    for g in ("x^2 + x*y + y^2", "x*y", "x^2 + y^2"):
        v = right_equivalent_wh(P("x^2 + y^2"), P(g), W11)
        assert v.status == EQUIVALENT
        assert v.certificate["kind"] == "jacobian-ideal-equality"
        assert v.certificate["mutual_membership"] is True


def test_honest_negative():
    f, g = P("x^3 + y^3"), P("x^3 + x*y^2")
    v = right_equivalent_wh(f, g, W11)
    assert v.status == UNKNOWN
    assert v.certificate["witness"] == {"degree": 2, "dim_Jf": 2, "dim_Jg": 2, "dim_sum": 3}
    assert v.invariants["milnor_number"] == {"f": 4, "g": 4}
    assert v.refutation is None
    assert "not necessary" in v.note
    # both are products of three distinct lines, hence linearly equivalent over C
    x, y = sympy.symbols("x y")
    for expr in (x**3 + y**3, x**3 + x*y**2):
        assert sympy.discriminant(expr.subs(y, 1), x) != 0


def test_invariant_separation_refutes():
    v = right_equivalent_wh(P("x^3 + y^3"), P("x^2*y"), W11)
    assert v.status == UNKNOWN
    assert v.refutation["invariant"] == "milnor_number"
    assert v.invariants["milnor_number"] == {"f": 4, "g": "infinite"}


def test_degree_mismatch_is_an_error():
    with pytest.raises(HypothesisViolation):
        right_equivalent_wh(P("x^2"), P("x^3"), W11)
    with pytest.raises(HypothesisViolation):
        right_equivalent_wh(P("x^2 + x^3"), P("x^2"), W11)


def test_apply_substitution_examples():
    swap = Substitution((P("y"), P("x")))
    assert apply_substitution(swap, P("x^2*y")) == P("x*y^2")
    f = P("x^3 - 2*x*y + 7")
    assert apply_substitution(Substitution.identity(XY), f) == f
    X = ("x",)
    assert apply_substitution(Substitution((P("2*x", X),)), P("x^3", X)) == P("8*x^3", X)


def test_verify_swap_substitution():
    rep = verify_substitution(Substitution((P("y"), P("x"))), P("x^2*y"), P("x*y^2"), W11)
    assert rep.ok
    assert rep.checks["pullback_ideal_equals_Jf"]
    assert rep.converse["milnor_numbers_equal"] and rep.converse["hilbert_maps_equal"]
    assert rep.to_json()["converse_check"]["milnor_numbers_equal"]


def test_verify_identity():
    f = P("x^2*y + z^2", XYZ)
    assert verify_substitution(Substitution.identity(XYZ), f, f, W((2, 2, 3), XYZ)).ok


def test_verify_rejects_degree_violation():
    Wt = W((1, 2), XY)
    rep = verify_substitution(Substitution((P("y"), P("x"))), P("x^2*y"), P("y^2"), Wt)
    assert not rep.ok
    assert rep.violations[0].startswith("degree constraint: u*(x) = y")
    assert "degree w_x = 1, got 2" in rep.violations[0]


def test_verify_rejects_singular_map():
    rep = verify_substitution(Substitution((P("x + y"), P("x + y"))), P("x^2 + y^2"), P("x*y"), W11)
    assert not rep.ok
    assert "degree-1 piece" in rep.violations[0]


def test_verify_rejects_wrong_pullback():
    rep = verify_substitution(Substitution.identity(XY), P("x^3 + y^3"), P("x^3 + x*y^2"), W11)
    assert not rep.ok and not rep.checks["pullback_ideal_equals_Jf"]


def test_verify_graded_nonlinear_map():
    # u = (x + y^2, y) is graded for w = (2, 1)
    Wt = W((2, 1), XY)
    g = P("x^2 + y^4")
    u = Substitution((P("x + y^2"), P("y")))
    f = apply_substitution(u, g)
    rep = verify_substitution(u, f, g, Wt)
    assert rep.ok


@pytest.mark.parametrize("weights", [(1, 1), (2, 3), (1, 2)])
def test_scaling_invariance(rng, weights):
    Wt = W(weights, XY)
    for _ in range(8):
        f = random_weighted_homogeneous(rng, Wt, rng.randint(2, 8))
        if f.is_zero() or all(g.is_zero() for g in f.gradient()):
            continue
        c = Fraction(rng.choice([-5, -1, 2, 3]), rng.choice([1, 4, 7]))
        assert right_equivalent_wh(f, f.scale(c), Wt, with_invariants=False).status == EQUIVALENT


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_equivalent_implies_equal_milnor_numbers(seed):
    rng = random.Random(seed)
    Wt = W((1, 1), XY)
    f = random_weighted_homogeneous(rng, Wt, 3)
    g = random_weighted_homogeneous(rng, Wt, 3)
    if f.is_zero() or g.is_zero():
        return
    v = right_equivalent_wh(f, g, Wt)
    if v.status == EQUIVALENT:
        mu = v.invariants["milnor_number"]
        assert mu["f"] == mu["g"]
        assert mutual_membership(jacobian_ideal(f), jacobian_ideal(g))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_linear_change_gives_consistent_invariants(seed):
    rng = random.Random(seed)
    Wt = W((1, 1), XY)
    g = random_weighted_homogeneous(rng, Wt, 4)
    a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
    if a * d - b * c == 0 or g.is_zero():
        return
    u = Substitution((P(f"{a}*x + {b}*y"), P(f"{c}*x + {d}*y")))
    f = apply_substitution(u, g)
    rep = verify_substitution(u, f, g, Wt)
    assert rep.ok
    assert milnor_algebra(f).milnor_number == milnor_algebra(g).milnor_number
