"""The pencil f_t = (1-t) f + t g and the rank of its orbit tangent spaces.

Tangent generators ``x^P * df_t/dx_i`` (one per degree-0 monomial field) are
written in an echelon basis of the degree-d part of the Jacobian ideal of f.
Each coordinate is affine in t; the parameters where the resulting matrix
drops rank are the common roots of all its maximal minors.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from whmilnor.errors import HypothesisViolation, ResourceLimitExceeded
from whmilnor.grading import graded_piece_basis, homogeneous_degree_or_raise
from whmilnor.ideals import graded_comparison, jacobian_ideal
from whmilnor.linalg import MonomialIndex, determinant, echelon_coordinates, rank, rref
from whmilnor.poly import Polynomial, format_monomial
from whmilnor.upoly import UPoly, interpolate, irreducible_factors, rank_modulo, upoly_gcd

DEFAULT_MAX_MINORS = 50_000


@dataclass(frozen=True)
class Pencil:
    f: Polynomial
    g: Polynomial
    W: object
    degree: int

    @classmethod
    def build(cls, f, g, W):
        df = homogeneous_degree_or_raise(f, W, "f")
        dg = homogeneous_degree_or_raise(g, W, "g")
        if not isinstance(df, int) and not isinstance(dg, int):
            raise HypothesisViolation("both pencil ends are zero; the degree is indeterminate")
        if isinstance(df, int) and isinstance(dg, int) and df != dg:
            raise HypothesisViolation(f"f has weighted degree {df} but g has degree {dg}")
        return cls(f, g, W, df if isinstance(df, int) else dg)

    def member(self, t):
        t = Fraction(t)
        return self.f.scale(1 - t) + self.g.scale(t)


@dataclass(frozen=True)
class TangentGenerator:
    """``x^P * df_t/dx_i = constant + t * slope``."""

    exponent: tuple
    index: int
    constant: Polynomial
    slope: Polynomial

    def at(self, t):
        return self.constant + self.slope.scale(Fraction(t))

    def label(self, variables):
        mono = format_monomial(self.exponent, variables) or "1"
        return f"{mono}*d{variables[self.index]}"


def tangent_generators(p):
    W = p.W
    out = []
    fg, gg = p.f.gradient(), p.g.gradient()
    for i, wi in enumerate(W.weights):
        for P in graded_piece_basis(W, wi):
            xP = Polynomial.monomial(P, p.f.vars)
            out.append(TangentGenerator(P, i, xP * fg[i], xP * (gg[i] - fg[i])))
    return out


@dataclass(frozen=True)
class GradedJacobianBasis:
    """Echelon basis ``e_1..e_m`` of the degree-d part of a Jacobian ideal."""

    rows: tuple
    pivots: tuple
    index: MonomialIndex
    polys: tuple

    @property
    def m(self):
        return len(self.rows)

    def coordinates(self, p):
        if not self.index.covers(p):
            return None
        return echelon_coordinates(self.rows, self.pivots, self.index.vector(p))


def graded_jacobian_basis(f, W, d):
    index = MonomialIndex(graded_piece_basis(W, d))
    rows = []
    for i, wi in enumerate(W.weights):
        fi = f.derivative(i)
        if fi.is_zero():
            continue
        for Q in graded_piece_basis(W, wi):
            rows.append(index.vector(Polynomial.monomial(Q, f.vars) * fi))
    basis, pivots = rref(rows, len(index))
    polys = tuple(Polynomial({index.monomials[k]: c for k, c in enumerate(r) if c}, f.vars)
                  for r in basis)
    return GradedJacobianBasis(tuple(tuple(r) for r in basis), tuple(pivots), index, polys)


@dataclass(frozen=True)
class TMatrix:
    pencil: Pencil
    generators: tuple
    basis: GradedJacobianBasis
    entries: tuple  # N rows of m UPoly entries, each of degree <= 1
    hypothesis_checked: bool

    @property
    def N(self):
        return len(self.entries)

    @property
    def m(self):
        return self.basis.m

    def at(self, t):
        t = Fraction(t)
        return [[e(t) for e in row] for row in self.entries]

    def rank_at(self, t):
        return rank(self.at(t), self.m)

    def permuted(self, rows=None, cols=None):
        rows = list(range(self.N)) if rows is None else rows
        cols = list(range(self.m)) if cols is None else cols
        return [[self.entries[i][j] for j in cols] for i in rows]


def transformation_matrix(p, override=False):
    """Coordinates of every tangent generator in the echelon basis of ``J_f`` in degree d.

    Without ``override`` the ideals ``J_f`` and ``J_g`` must coincide and the
    matrix is asserted to have full column rank at t=0 and t=1.
    """
    W, d = p.W, p.degree
    if not override:
        cmp = graded_comparison(jacobian_ideal(p.f), jacobian_ideal(p.g), W)
        if not cmp.equal:
            deg, a, b, s = cmp.first_difference()
            raise HypothesisViolation(
                f"Jacobian ideals differ in degree {deg} (dims {a}, {b}, joint {s}); "
                "use the override to explore the matrix anyway")
    basis = graded_jacobian_basis(p.f, W, d)
    gens = tangent_generators(p)
    entries = []
    for gen in gens:
        c0 = basis.coordinates(gen.constant)
        c1 = basis.coordinates(gen.slope)
        if c0 is None or c1 is None:
            raise HypothesisViolation(
                f"tangent generator {gen.label(p.f.vars)} is not in the degree-{d} span of J_f")
        entries.append(tuple(UPoly((a, b)) for a, b in zip(c0, c1)))
    M = TMatrix(p, tuple(gens), basis, tuple(entries), not override)
    if not override and basis.m:
        for t in (0, 1):
            if M.rank_at(t) != basis.m:
                raise AssertionError(f"rank at t={t} is {M.rank_at(t)}, expected {basis.m}")
    return M


@dataclass(frozen=True)
class ExceptionalValues:
    polynomial: UPoly  # squarefree, monic
    rational_roots: tuple
    irreducible_factors: tuple  # nonlinear factors, each certified
    minors_examined: int

    def is_exceptional(self, t):
        return self.polynomial(Fraction(t)) == 0


def _minor_gcd(rows_at_points, xs, m, max_minors):
    N = len(rows_at_points[0])
    acc = UPoly()
    count = 0
    for subset in combinations(range(N), m):
        count += 1
        if count > max_minors:
            raise ResourceLimitExceeded(f"more than {max_minors} maximal minors examined")
        vals = [determinant([mat[i] for i in subset]) for mat in rows_at_points]
        minor = interpolate(xs, vals)
        if minor:
            acc = upoly_gcd(acc, minor) if acc else minor.monic()
            if acc.degree == 0:
                break
    return acc, count


def exceptional_values(M, max_minors=DEFAULT_MAX_MINORS):
    """Squarefree polynomial whose roots are exactly the parameters of rank drop."""
    m = M.m
    if m == 0:
        return ExceptionalValues(UPoly((1,)), (), (), 0)
    # each maximal minor has degree <= m, so m+1 evaluations determine it
    xs = [Fraction(k) for k in range(m + 1)]
    mats = [M.at(x) for x in xs]
    acc, count = _minor_gcd(mats, xs, m, max_minors)
    if acc.is_zero():
        raise HypothesisViolation(f"generic rank of the pencil matrix is below m={m} (degenerate pencil)")
    E = acc.squarefree()
    roots = E.rational_roots()
    for r in roots:
        if M.rank_at(r) >= m:
            raise AssertionError(f"claimed exceptional value {r} keeps full rank")
    others = []
    if E.degree > len(roots):
        for fac, _ in irreducible_factors(E):
            if fac.degree <= 1:
                continue
            if rank_modulo([list(r) for r in M.entries], fac) >= m:
                raise AssertionError(f"factor {fac.to_text()} does not certify a rank drop")
            others.append(fac)
    return ExceptionalValues(E, tuple(roots), tuple(others), count)


@dataclass(frozen=True)
class MatherSample:
    t: Fraction
    direction_in_tangent_space: bool
    rank: int
    m: int

    @property
    def passed(self):
        return self.direction_in_tangent_space and self.rank == self.m


def mather_conditions(p, samples, M=None, exceptional=None):
    """Check the path direction ``g - f`` lies in the orbit tangent space and the rank is m."""
    M = M or transformation_matrix(p)
    exceptional = exceptional or exceptional_values(M)
    direction = p.g - p.f
    out = []
    for t in samples:
        t = Fraction(t)
        if exceptional.is_exceptional(t):
            raise HypothesisViolation(f"sample t={t} is an exceptional value of the pencil")
        rows = [M.basis.index.vector(gen.at(t)) for gen in M.generators]
        ncols = len(M.basis.index)
        if M.basis.index.covers(direction):
            span, piv = rref(rows, ncols)
            inside = echelon_coordinates(span, piv, M.basis.index.vector(direction)) is not None
        else:
            inside = False
        out.append(MatherSample(t, inside, M.rank_at(t), M.m))
    return out
