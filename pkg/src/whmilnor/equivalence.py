"""Right-equivalence of weighted homogeneous polynomials.

Equal Jacobian ideals prove equivalence. Unequal ideals prove nothing, so the
verdict is ``Equivalent`` or ``Unknown``; a differing Milnor number is
attached as a separate refutation certificate.
"""

from dataclasses import dataclass, field

from whmilnor.errors import HypothesisViolation, VariableMismatch
from whmilnor.grading import (
    INDETERMINATE, graded_piece_basis, homogeneous_degree_or_raise, is_weighted_homogeneous,
)
from whmilnor.ideals import (
    Ideal, graded_comparison, groebner, hilbert_function, jacobian_ideal, milnor_algebra,
    normal_form,
)
from whmilnor.linalg import MonomialIndex, rank
from whmilnor.poly import Polynomial

EQUIVALENT = "Equivalent"
UNKNOWN = "Unknown"

SUFFICIENCY_NOTE = ("equal Jacobian ideals are sufficient for right-equivalence but not "
                    "necessary; Unknown does not mean inequivalent")


@dataclass(frozen=True)
class EquivalenceVerdict:
    status: str
    certificate: dict
    invariants: dict = field(default_factory=dict)
    refutation: dict | None = None
    note: str = SUFFICIENCY_NOTE

    def to_json(self):
        out = {"status": self.status, "certificate": self.certificate,
               "invariants": self.invariants, "note": self.note}
        if self.refutation is not None:
            out["refutation"] = self.refutation
        return out


def _common_degree(f, g, W):
    df = homogeneous_degree_or_raise(f, W, "f")
    dg = homogeneous_degree_or_raise(g, W, "g")
    if df is INDETERMINATE or dg is INDETERMINATE:
        return dg if df is INDETERMINATE else df
    if df != dg:
        raise HypothesisViolation(f"f has weighted degree {df} but g has weighted degree {dg}")
    return df


def _invariants(f, g, W, d):
    rf, rg = milnor_algebra(f, weights=W), milnor_algebra(g, weights=W)
    out = {"milnor_number": {"f": rf.milnor_number, "g": rg.milnor_number}}
    if rf.finite and rg.finite:
        out["hilbert"] = {"f": rf.hilbert, "g": rg.hilbert}
    else:
        bound = max(2 * d, 1) if isinstance(d, int) else 4
        out["hilbert_truncated"] = {
            "bound": bound,
            "f": hilbert_function(rf.basis, W, bound),
            "g": hilbert_function(rg.basis, W, bound),
        }
    return out


def mutual_membership(I, J):
    """Independent Groebner check that every generator of each ideal lies in the other."""
    GI, GJ = groebner(I), groebner(J)
    return (all(normal_form(p, GJ).is_zero() for p in I.generators)
            and all(normal_form(p, GI).is_zero() for p in J.generators))


def right_equivalent_wh(f, g, W, with_invariants=True):
    if f.vars != g.vars or f.vars != W.variables:
        raise VariableMismatch("f, g and the weight system must share one variable list")
    d = _common_degree(f, g, W)
    Jf, Jg = jacobian_ideal(f, W), jacobian_ideal(g, W)
    cmp = graded_comparison(Jf, Jg, W)
    rows = [{"degree": k, "dim_Jf": a, "dim_Jg": b, "dim_sum": s} for k, a, b, s in cmp.rows]
    invariants = _invariants(f, g, W, d) if with_invariants else {}
    if cmp.equal:
        if not mutual_membership(Jf, Jg):
            raise AssertionError("graded and Groebner ideal-equality paths disagree")
        mu = invariants.get("milnor_number")
        if mu and mu["f"] != mu["g"]:
            raise AssertionError("equal Jacobian ideals with different Milnor numbers")
        cert = {"kind": "jacobian-ideal-equality", "graded_dimensions": rows,
                "mutual_membership": True}
        return EquivalenceVerdict(EQUIVALENT, cert, invariants)
    k, a, b, s = cmp.first_difference()
    cert = {"kind": "jacobian-ideals-differ", "graded_dimensions": rows,
            "witness": {"degree": k, "dim_Jf": a, "dim_Jg": b, "dim_sum": s}}
    refutation = None
    mu = invariants.get("milnor_number")
    if mu and mu["f"] != mu["g"]:
        refutation = {"kind": "invariant-separation", "invariant": "milnor_number",
                      "message": "provably inequivalent by invariant milnor_number"}
    return EquivalenceVerdict(UNKNOWN, cert, invariants, refutation)


@dataclass(frozen=True)
class Substitution:
    """``u*(x_i) = images[i]``."""

    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))

    @classmethod
    def identity(cls, variables):
        return cls(tuple(Polynomial.var(i, variables) for i in range(len(variables))))


def apply_substitution(u, f):
    """``f(L_1, ..., L_n)``."""
    return f.compose(list(u.images))


@dataclass(frozen=True)
class SubstitutionReport:
    ok: bool
    checks: dict
    violations: tuple
    converse: dict | None = None

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"verified": self.ok, "checks": self.checks,
                "violations": list(self.violations), "converse_check": self.converse}


def _graded_action_rank(u, W, delta):
    mons = graded_piece_basis(W, delta)
    index = MonomialIndex(mons)
    rows = [index.vector(apply_substitution(u, Polynomial.monomial(m, W.variables))) for m in mons]
    return rank(rows, len(index)), len(mons)


def verify_substitution(u, f, g, W):
    """Check a graded coordinate change with ``u*(J_g) = J_f``."""
    if len(u.images) != W.n:
        raise VariableMismatch(f"{len(u.images)} images for {W.n} variables")
    d = _common_degree(f, g, W)
    checks = {}
    violations = []
    for i, (L, w) in enumerate(zip(u.images, W.weights)):
        deg = is_weighted_homogeneous(L, W)
        if deg != w:
            got = "zero" if deg is INDETERMINATE else ("mixed degrees" if deg is None else deg)
            violations.append(
                f"degree constraint: u*({W.variables[i]}) = {L.to_text(W.order())} must be "
                f"weighted homogeneous of degree w_{W.variables[i]} = {w}, got {got}")
    checks["graded_images"] = not violations
    if violations:
        return SubstitutionReport(False, checks, tuple(violations))

    pieces = []
    for delta in range(min(W.weights), max(W.weights) + 1):
        r, dim = _graded_action_rank(u, W, delta)
        if dim:
            pieces.append({"degree": delta, "rank": r, "dim": dim})
            if r != dim:
                violations.append(f"u* is not injective on the degree-{delta} piece "
                                  f"(rank {r} < dim {dim})")
    checks["invertible_on_pieces"] = pieces
    if violations:
        return SubstitutionReport(False, checks, tuple(violations))

    pulled = Ideal([apply_substitution(u, gi) for gi in g.gradient()], f.vars, W)
    Jf = jacobian_ideal(f, W)
    cmp = graded_comparison(pulled, Jf, W)
    checks["pullback_ideal_equals_Jf"] = cmp.equal
    if not cmp.equal:
        k, a, b, s = cmp.first_difference()
        violations.append(f"u*(J_g) differs from J_f in degree {k} (dims {a}, {b}, joint {s})")
        return SubstitutionReport(False, checks, tuple(violations))

    gu = apply_substitution(u, g)
    verdict = right_equivalent_wh(gu, f, W, with_invariants=False)
    checks["g_after_u_equivalent_to_f"] = verdict.status == EQUIVALENT
    inv = _invariants(f, g, W, d)
    mu = inv["milnor_number"]
    hil = inv.get("hilbert") or inv.get("hilbert_truncated")
    converse = {
        "milnor_numbers_equal": mu["f"] == mu["g"],
        "hilbert_maps_equal": hil["f"] == hil["g"],
        "invariants": inv,
    }
    ok = checks["g_after_u_equivalent_to_f"] and converse["milnor_numbers_equal"] \
        and converse["hilbert_maps_equal"]
    return SubstitutionReport(ok, checks, tuple(violations), converse)
