"""Ideals, reduced Groebner bases, membership, equality and Milnor algebras."""

import contextvars
import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction

from whmilnor import _kernels as K
from whmilnor.errors import ResourceLimitExceeded, VariableMismatch
from whmilnor.grading import graded_parts, graded_piece_basis, is_weighted_homogeneous
from whmilnor.linalg import MonomialIndex, echelon_coordinates, rref
from whmilnor.orders import MonomialOrder
from whmilnor.poly import Polynomial, WeightSystem

DEFAULT_MAX_STEPS = 200_000


_STEP_OVERRIDE = contextvars.ContextVar("whmilnor_max_steps", default=None)


def default_max_steps():
    """Step budget: explicit override, then ``WHMILNOR_MAX_STEPS``, then the default."""
    override = _STEP_OVERRIDE.get()
    if override is not None:
        return override
    env = os.environ.get("WHMILNOR_MAX_STEPS")
    return int(env) if env else DEFAULT_MAX_STEPS


def set_max_steps(n):
    """Override the step budget in the current context; returns a reset token."""
    return _STEP_OVERRIDE.set(n)


def reset_max_steps(token):
    _STEP_OVERRIDE.reset(token)


@dataclass(frozen=True)
class Ideal:
    generators: tuple
    vars: tuple
    weights: WeightSystem | None = None

    def __init__(self, generators, variables=None, weights=None):
        gens = tuple(generators)
        if variables is None:
            if not gens:
                raise ValueError("variables are required for an ideal without generators")
            variables = gens[0].vars
        variables = tuple(variables)
        for g in gens:
            if g.vars != variables:
                raise VariableMismatch(f"generator over {g.vars} in an ideal over {variables}")
        if weights is not None and weights.n != len(variables):
            raise VariableMismatch("weight system does not match the ideal's variables")
        object.__setattr__(self, "generators", tuple(g for g in gens if not g.is_zero()))
        object.__setattr__(self, "vars", variables)
        object.__setattr__(self, "weights", weights)

    def is_zero(self):
        return not self.generators

    def is_graded(self, W=None):
        W = W or self.weights
        if W is None:
            return False
        return all(isinstance(is_weighted_homogeneous(g, W), int) for g in self.generators)

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def jacobian_ideal(f, weights=None):
    """The ideal of first partial derivatives of ``f``."""
    return Ideal(f.gradient(), f.vars, weights)


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic, mutually irreducible, sorted by leading monomial."""

    polys: tuple
    order: MonomialOrder
    vars: tuple
    steps: int = field(default=0, compare=False)

    @property
    def leading_monomials(self):
        return [p.leading_monomial(self.order) for p in self.polys]

    def is_unit(self):
        return any(not any(m) for m in self.leading_monomials)

    def reduce(self, p, max_steps=None):
        return normal_form(p, self, max_steps)

    def contains(self, p):
        return normal_form(p, self).is_zero()

    def texts(self):
        return [p.to_text(self.order) for p in self.polys]


def _pair_key(order, lcm, i, j):
    return (order.key(lcm), i, j)


def _buchberger(gens, order, max_steps):
    key = order.key
    basis = []  # (lm, terms), monic
    pairs = {}  # (i, j) -> lcm
    steps = 0

    def add(terms):
        lm = max(terms, key=key)
        lc = terms[lm]
        terms = {m: c / lc for m, c in terms.items()}
        k = len(basis)
        basis.append((lm, terms))
        # chain criterion: drop (i, j) when the new leading term divides lcm(i, j)
        # and the pairs (i, k), (j, k) are not coprime cases to be recorded
        for (i, j), lcm in list(pairs.items()):
            if (K.mono_divides(lm, lcm) and K.mono_lcm(basis[i][0], lm) != lcm
                    and K.mono_lcm(basis[j][0], lm) != lcm):
                del pairs[(i, j)]
        for i in range(k):
            pairs[(i, k)] = K.mono_lcm(basis[i][0], lm)

    for g in gens:
        if g:
            if not basis:
                add(dict(g))
                continue
            r, used = K.normal_form(g, basis, key, max_steps - steps)
            steps += used
            if r is None:
                raise ResourceLimitExceeded(f"Groebner basis exceeded the step budget of {max_steps}")
            if r:
                add(r)

    while pairs:
        (i, j), lcm = min(pairs.items(), key=lambda kv: _pair_key(order, kv[1], *kv[0]))
        del pairs[(i, j)]
        lmi, fi = basis[i]
        lmj, fj = basis[j]
        if all(a == 0 or b == 0 for a, b in zip(lmi, lmj)):
            continue  # product criterion
        s = K.poly_sub_mul(
            {K.mono_mul(K.mono_quo(lcm, lmi), m): c for m, c in fi.items()},
            Fraction(1), K.mono_quo(lcm, lmj), fj)
        r, used = K.normal_form(s, basis, key, max_steps - steps)
        steps += used + 1
        if r is None or steps > max_steps:
            raise ResourceLimitExceeded(f"Groebner basis exceeded the step budget of {max_steps}")
        if r:
            add(r)
    return basis, steps


def _reduce_basis(basis, order, max_steps):
    key = order.key
    lms = [lm for lm, _ in basis]
    keep = []
    for idx, (lm, g) in enumerate(basis):
        dominated = False
        for jdx, other in enumerate(lms):
            if jdx == idx or not K.mono_divides(other, lm):
                continue
            # equal leading monomials: keep the first occurrence only
            if other != lm or jdx < idx:
                dominated = True
                break
        if not dominated:
            keep.append((lm, g))
    out = []
    for idx, (lm, g) in enumerate(keep):
        others = [b for jdx, b in enumerate(keep) if jdx != idx]
        tail = dict(g)
        del tail[lm]
        r, _ = K.normal_form(tail, others, key, max_steps)
        if r is None:
            raise ResourceLimitExceeded(f"interreduction exceeded the step budget of {max_steps}")
        r[lm] = Fraction(1)
        out.append((lm, r))
    out.sort(key=lambda b: key(b[0]), reverse=True)
    return out


_CACHE = {}
_CACHE_LOCK = threading.Lock()


def clear_cache():
    with _CACHE_LOCK:
        _CACHE.clear()


def groebner(ideal, order=None, max_steps=None):
    """Reduced Groebner basis of ``ideal`` (Buchberger, normal selection strategy)."""
    if order is None:
        order = ideal.weights.order() if ideal.weights is not None else MonomialOrder()
    order.for_nvars(len(ideal.vars))
    max_steps = default_max_steps() if max_steps is None else max_steps
    cache_key = (tuple(ideal.generators), ideal.vars, order)
    with _CACHE_LOCK:
        hit = _CACHE.get(cache_key)
    if hit is not None:
        return hit
    gens = [g.terms for g in ideal.generators]
    basis, steps = _buchberger(gens, order, max_steps)
    reduced = _reduce_basis(basis, order, max_steps)
    gb = GroebnerBasis(tuple(Polynomial._raw(t, ideal.vars) for _, t in reduced),
                       order, ideal.vars, steps)
    with _CACHE_LOCK:
        _CACHE[cache_key] = gb
    return gb


def normal_form(p, G, max_steps=None):
    """Remainder of ``p`` under full multivariate division by ``G``."""
    if p.vars != G.vars:
        raise VariableMismatch(f"polynomial over {p.vars} reduced by a basis over {G.vars}")
    max_steps = default_max_steps() if max_steps is None else max_steps
    basis = [(q.leading_monomial(G.order), q.terms) for q in G.polys]
    r, _ = K.normal_form(p.terms, basis, G.order.key, max_steps)
    if r is None:
        raise ResourceLimitExceeded(f"normal form exceeded the step budget of {max_steps}")
    return Polynomial._raw(r, p.vars)


# -- graded linear-algebra path ------------------------------------------------

class GradedPieces:
    """Degree-by-degree spans ``I_d`` of an ideal with weighted homogeneous generators."""

    def __init__(self, ideal, W):
        self.W = W
        self.order = W.order()
        self.gens = []
        for g in ideal.generators:
            d = is_weighted_homogeneous(g, W)
            if not isinstance(d, int):
                raise ValueError("graded path needs weighted homogeneous generators")
            self.gens.append((d, g))
        self._pieces = {}

    def piece(self, d):
        """``(echelon rows, pivots, column index)`` spanning the ideal in degree d."""
        if d not in self._pieces:
            index = MonomialIndex(graded_piece_basis(self.W, d, self.order))
            rows = []
            for e, g in self.gens:
                if e > d:
                    continue
                for q in graded_piece_basis(self.W, d - e, self.order):
                    rows.append(index.vector(g * Polynomial.monomial(q, g.vars)))
            basis, pivots = rref(rows, len(index))
            self._pieces[d] = (basis, pivots, index)
        return self._pieces[d]

    def dimension(self, d):
        return len(self.piece(d)[0])

    def contains(self, p):
        for d, part in graded_parts(p, self.W).items():
            basis, pivots, index = self.piece(d)
            if echelon_coordinates(basis, pivots, index.vector(part)) is None:
                return False
        return True


def _grading_for(*ideals, weights=None):
    candidates = []
    if weights is not None:
        candidates.append(weights)
    candidates += [I.weights for I in ideals if I.weights is not None]
    candidates.append(WeightSystem.standard(ideals[0].vars))
    for W in candidates:
        if all(I.is_graded(W) for I in ideals):
            return W
    return None


def ideal_member(p, ideal, method="auto", weights=None, max_steps=None):
    """True iff ``p`` lies in ``ideal``.

    ``method`` is ``"groebner"``, ``"graded"`` or ``"auto"`` (graded when the
    generators are weighted homogeneous for some known grading).
    """
    if method not in ("auto", "graded", "groebner"):
        raise ValueError(f"unknown membership method {method!r}")
    if method != "groebner":
        W = _grading_for(ideal, weights=weights)
        if W is not None:
            return GradedPieces(ideal, W).contains(p)
        if method == "graded":
            raise ValueError("graded membership needs weighted homogeneous generators")
    return normal_form(p, groebner(ideal, max_steps=max_steps), max_steps).is_zero()


@dataclass(frozen=True)
class GradedComparison:
    """Per-degree comparison of two graded ideals at their generator degrees."""

    equal: bool
    rows: tuple  # (degree, dim I_d, dim J_d, dim (I_d + J_d))

    def first_difference(self):
        for row in self.rows:
            d, a, b, s = row
            if not (a == b == s):
                return row
        return None


def graded_comparison(I, J, W):
    PI, PJ = GradedPieces(I, W), GradedPieces(J, W)
    degrees = sorted({d for d, _ in PI.gens} | {d for d, _ in PJ.gens})
    rows = []
    for d in degrees:
        bi, _, index = PI.piece(d)
        bj, _, _ = PJ.piece(d)
        both, _ = rref(list(bi) + list(bj), len(index))
        rows.append((d, len(bi), len(bj), len(both)))
    equal = all(a == b == s for _, a, b, s in rows)
    return GradedComparison(equal, tuple(rows))


def ideal_equal(I, J, method="auto", weights=None, max_steps=None):
    """True iff the two ideals coincide."""
    if I.vars != J.vars:
        raise VariableMismatch(f"ideals over {I.vars} and {J.vars}")
    if method not in ("auto", "graded", "groebner"):
        raise ValueError(f"unknown equality method {method!r}")
    if method != "groebner":
        W = _grading_for(I, J, weights=weights)
        if W is not None:
            return graded_comparison(I, J, W).equal
        if method == "graded":
            raise ValueError("graded equality needs weighted homogeneous generators")
    W = weights or I.weights or J.weights
    order = W.order() if W is not None else MonomialOrder()
    return groebner(I, order, max_steps).polys == groebner(J, order, max_steps).polys


def saito_check(f, weights=None, max_steps=None):
    """Whether ``f`` lies in its own Jacobian ideal."""
    if f.is_zero():
        return True
    return ideal_member(f, jacobian_ideal(f, weights), weights=weights, max_steps=max_steps)


# -- Milnor algebra ------------------------------------------------------------

@dataclass(frozen=True)
class MilnorAlgebraReport:
    standard_monomials: tuple
    finite: bool
    milnor_number: object  # int or "infinite"
    hilbert: dict | None
    truncation: int | None
    basis: GroebnerBasis
    weights: WeightSystem


def _standard_monomials(lms, n, within):
    """Monomials not divisible by any of ``lms``, enumerated inside ``within(mono)``."""
    out = []
    cur = [0] * n

    def divisible(m):
        return any(K.mono_divides(l, m) for l in lms)

    def rec(i):
        if i == n:
            m = tuple(cur)
            if not divisible(m):
                out.append(m)
            return
        e = 0
        while True:
            cur[i] = e
            m = tuple(cur[:i + 1]) + (0,) * (n - i - 1)
            # divisibility is monotone in each exponent, so stop at the first hit
            if divisible(m) or not within(m):
                break
            rec(i + 1)
            e += 1
        cur[i] = 0

    rec(0)
    return out


def standard_monomials_up_to(G, W, bound):
    n = len(G.vars)
    return _standard_monomials(G.leading_monomials, n, lambda m: W.degree(m) <= bound)


def hilbert_function(G, W, bound):
    """Dimension of each weighted degree piece of the quotient, up to ``bound``."""
    counts = {d: 0 for d in range(bound + 1)}
    for m in standard_monomials_up_to(G, W, bound):
        counts[W.degree(m)] += 1
    return counts


def milnor_algebra(f, order=None, weights=None, truncation=None, max_steps=None):
    """Standard monomial basis, Milnor number and Hilbert map of the Milnor algebra."""
    n = f.nvars
    if weights is None:
        weights = WeightSystem(f.vars, order.weights) if order is not None and order.weights \
            else WeightSystem.standard(f.vars)
    if order is None:
        order = weights.order()
    J = jacobian_ideal(f, weights)
    G = groebner(J, order, max_steps)
    lms = G.leading_monomials
    pure = set()
    for m in lms:
        nz = [i for i, e in enumerate(m) if e]
        if len(nz) == 1:
            pure.add(nz[0])
        elif not nz:
            pure = set(range(n))
    finite = len(pure) == n
    key = order.key
    d = is_weighted_homogeneous(f, weights)
    if finite:
        bounds = [0] * n
        for m in lms:
            nz = [i for i, e in enumerate(m) if e]
            if len(nz) == 1:
                i = nz[0]
                bounds[i] = m[i] if not bounds[i] else min(bounds[i], m[i])
        std = _standard_monomials(lms, n, lambda m: all(e < b for e, b in zip(m, bounds)))
        std.sort(key=key)
        hilbert = None
        if isinstance(d, int):
            hilbert = {}
            for m in std:
                k = weights.degree(m)
                hilbert[k] = hilbert.get(k, 0) + 1
            hilbert = dict(sorted(hilbert.items()))
        return MilnorAlgebraReport(tuple(std), True, len(std), hilbert, None, G, weights)
    if truncation is None:
        truncation = d if isinstance(d, int) and d > 0 else 4
    std = standard_monomials_up_to(G, weights, truncation)
    std.sort(key=key)
    return MilnorAlgebraReport(tuple(std), False, "infinite", None, truncation, G, weights)
