"""Weighted degrees, graded pieces, filtration orders and weighted jets."""

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from whmilnor.errors import HypothesisViolation, VariableMismatch
from whmilnor.linalg import rank
from whmilnor.poly import Polynomial


class Degree(enum.Enum):
    INDETERMINATE = "indeterminate"

    def __repr__(self):
        return "Degree.INDETERMINATE"


INDETERMINATE = Degree.INDETERMINATE


def _check_dims(f, W):
    if f.nvars != W.n:
        raise VariableMismatch(f"polynomial has {f.nvars} variables, weight system has {W.n}")


def weighted_degree(mono, W):
    if len(mono) != W.n:
        raise VariableMismatch(f"exponent vector {tuple(mono)} does not match {W.n} weights")
    return W.degree(mono)


def is_weighted_homogeneous(f, W):
    """Weighted degree of ``f`` if all terms share it.

    Returns ``INDETERMINATE`` for the zero polynomial and ``None`` when the
    terms have different weighted degrees.
    """
    _check_dims(f, W)
    degrees = {W.degree(m) for m in f.terms}
    if not degrees:
        return INDETERMINATE
    if len(degrees) == 1:
        return degrees.pop()
    return None


def homogeneous_degree_or_raise(f, W, label="f"):
    d = is_weighted_homogeneous(f, W)
    if d is None:
        by_degree = {}
        for m in f.terms:
            by_degree.setdefault(W.degree(m), []).append(m)
        # name the minority terms as the violators
        main = max(by_degree, key=lambda k: (len(by_degree[k]), -k))
        bad = [Polynomial.monomial(m, f.vars, f.terms[m]).to_text(W.order())
               for k, ms in sorted(by_degree.items()) if k != main for m in ms]
        raise HypothesisViolation(
            f"{label} is not weighted homogeneous for weights {W.weights}: "
            f"terms of degree {main} dominate; violating terms: {', '.join(bad)}")
    return d


@dataclass(frozen=True)
class EulerResult:
    holds: bool
    residual: Polynomial

    def __bool__(self):
        return self.holds


def euler_field_image(f, W):
    """The polynomial ``sum_i w_i x_i df/dx_i``."""
    _check_dims(f, W)
    out = {}
    for m, c in f.terms.items():
        s = W.degree(m)
        if s:
            out[m] = c * s
    return Polynomial._raw(out, f.vars)


def euler_check(f, W, d):
    """Compare ``sum_i w_i x_i df/dx_i`` with ``d*f``; the residual is their difference."""
    lhs = Polynomial.constant(0, f.vars)
    for i, w in enumerate(W.weights):
        lhs = lhs + Polynomial.var(i, f.vars) * f.derivative(i).scale(w)
    residual = lhs - f.scale(d)
    return EulerResult(residual.is_zero(), residual)


@lru_cache(maxsize=4096)
def _lattice_points(weights, d):
    n = len(weights)
    out = []
    cur = [0] * n

    def rec(i, remaining):
        if i == n - 1:
            if remaining % weights[i] == 0:
                cur[i] = remaining // weights[i]
                out.append(tuple(cur))
            return
        for k in range(remaining // weights[i] + 1):
            cur[i] = k
            rec(i + 1, remaining - k * weights[i])
        cur[i] = 0

    if n == 0:
        return ((),) if d == 0 else ()
    if d >= 0:
        rec(0, d)
    return tuple(out)


def graded_piece_basis(W, d, order=None):
    """All exponent vectors of weighted degree ``d``, largest first in ``order``."""
    if d < 0:
        return []
    order = order or W.order()
    return order.sorted_desc(_lattice_points(W.weights, d))


def monomials_up_to(W, bound):
    out = []
    for s in range(bound + 1):
        out.extend(_lattice_points(W.weights, s))
    return out


def order_of(f, W):
    """Smallest weighted degree among the terms; ``math.inf`` for zero."""
    _check_dims(f, W)
    return min((W.degree(m) for m in f.terms), default=math.inf)


def jet_truncate(f, W, d):
    """Drop every term of weighted degree greater than ``d``."""
    _check_dims(f, W)
    return Polynomial._raw({m: c for m, c in f.terms.items() if W.degree(m) <= d}, f.vars)


def graded_parts(f, W):
    parts = {}
    for m, c in f.terms.items():
        parts.setdefault(W.degree(m), {})[m] = c
    return {k: Polynomial._raw(v, f.vars) for k, v in sorted(parts.items())}


@dataclass(frozen=True)
class TruncatedDiffeo:
    """A map germ given by n polynomial components without constant terms."""

    components: tuple
    bound: int

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise ValueError("a diffeomorphism needs at least one component")
        if len({c.vars for c in comps}) != 1 or comps[0].nvars != len(comps):
            raise VariableMismatch("components must share one variable list of length n")
        for i, c in enumerate(comps):
            if c.constant_term():
                raise HypothesisViolation(f"component {i} has a nonzero constant term")
        if self.bound < 1:
            raise ValueError("truncation bound must be positive")

    @property
    def vars(self):
        return self.components[0].vars

    @classmethod
    def identity(cls, variables, bound):
        return cls(tuple(Polynomial.var(i, variables) for i in range(len(variables))), bound)

    def pullback(self, f, W=None):
        """``g*f = f o g``, truncated above the bound when weights are given."""
        out = f.compose(list(self.components))
        return jet_truncate(out, W, self.bound) if W is not None else out

    def linear_part_invertible(self):
        n = len(self.components)
        rows = []
        for c in self.components:
            row = []
            for j in range(n):
                e = [0] * n
                e[j] = 1
                row.append(c.terms.get(tuple(e), Fraction(0)))
            rows.append(row)
        return rank(rows, n) == n


def compose_truncated(g, h, W):
    """The germ ``g o h`` truncated at the smaller of the two bounds."""
    bound = min(g.bound, h.bound)
    comps = tuple(jet_truncate(c.compose(list(h.components)), W, bound) for c in g.components)
    return TruncatedDiffeo(comps, bound)


@dataclass(frozen=True)
class DiffeoOrder:
    value: int
    at_least: bool
    bound: int

    def __str__(self):
        return f">= {self.value}" if self.at_least else str(self.value)


def diffeo_order(g, W, B=None):
    """Largest d with ``order(g*m - m) >= deg(m) + d`` for all monomials of degree <= B.

    When ``g* - 1`` kills every tested monomial the result is the sentinel
    ``DiffeoOrder(B, at_least=True)``.
    """
    B = g.bound if B is None else B
    if len(g.components) != W.n:
        raise VariableMismatch("diffeomorphism and weight system differ in dimension")
    best = None
    for s in range(1, B + 1):
        for m in _lattice_points(W.weights, s):
            mono = Polynomial.monomial(m, g.vars)
            diff = g.pullback(mono) - mono
            if diff.is_zero():
                continue
            cand = order_of(diff, W) - s
            if best is None or cand < best:
                best = cand
    if best is None:
        return DiffeoOrder(B, True, B)
    return DiffeoOrder(best, False, B)


def generator_order(g, W):
    """``min_i order(g_i - x_i) - w_i``: the order seen on coordinate functions only.

    Agrees with :func:`diffeo_order` whenever it is nonnegative; for negative
    values the order on higher monomials can be smaller still.
    """
    vals = []
    for i, (c, w) in enumerate(zip(g.components, W.weights)):
        diff = c - Polynomial.var(i, g.vars)
        if not diff.is_zero():
            vals.append(order_of(diff, W) - w)
    return min(vals, default=math.inf)


def random_weighted_homogeneous(rng, W, d, max_terms=4, coeff_range=5, variables=None):
    """A random polynomial supported on the degree-``d`` hyperplane (zero if it is empty)."""
    variables = variables or W.variables
    pts = _lattice_points(W.weights, d)
    if not pts:
        return Polynomial.zero(variables)
    k = rng.randint(1, min(max_terms, len(pts)))
    support = rng.sample(list(pts), k)
    terms = {}
    for m in support:
        c = 0
        while c == 0:
            c = Fraction(rng.randint(-coeff_range, coeff_range), rng.randint(1, 3))
        terms[m] = c
    return Polynomial(terms, variables)
