"""Polynomial vector fields, their filtration order and the degree-0 Lie algebra."""

import math
from dataclasses import dataclass

from whmilnor.errors import VariableMismatch
from whmilnor.grading import graded_piece_basis
from whmilnor.poly import Polynomial, format_coefficient, format_monomial


@dataclass(frozen=True)
class VectorField:
    """``sum_i components[i] * d/dx_i``."""

    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise ValueError("a vector field needs at least one component")
        if len({c.vars for c in comps}) != 1 or comps[0].nvars != len(comps):
            raise VariableMismatch("component count must equal the number of variables")

    @property
    def vars(self):
        return self.components[0].vars

    @classmethod
    def monomial(cls, mono, i, variables, coeff=1):
        n = len(variables)
        comps = [Polynomial.zero(variables) for _ in range(n)]
        comps[i] = Polynomial.monomial(mono, variables, coeff)
        return cls(tuple(comps))

    @classmethod
    def euler(cls, W):
        v = W.variables
        return cls(tuple(Polynomial.var(i, v).scale(w) for i, w in enumerate(W.weights)))

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def __add__(self, other):
        return VectorField(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other):
        return VectorField(tuple(a - b for a, b in zip(self.components, other.components)))

    def scale(self, c):
        return VectorField(tuple(a.scale(c) for a in self.components))

    def times(self, f):
        """The field ``f * v``."""
        return VectorField(tuple(f * a for a in self.components))

    def constituents(self):
        """``(exponents, i, coefficient)`` for every monomial field ``c x^P d_i``."""
        for i, comp in enumerate(self.components):
            for m, c in comp.terms.items():
                yield m, i, c

    def to_text(self, order=None):
        parts = []
        for i, comp in enumerate(self.components):
            d = "d" + self.vars[i]
            terms = comp.sorted_terms(order) if order is not None else comp.sorted_terms()
            for m, c in terms:
                neg = c < 0
                a = -c if neg else c
                mono = format_monomial(m, self.vars)
                body = d if not mono else f"{mono}*{d}"
                if a != 1:
                    body = f"{format_coefficient(a)}*{body}"
                if not parts:
                    parts.append(f"-{body}" if neg else body)
                else:
                    parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts) or "0"

    def __str__(self):
        return self.to_text()


def lie_algebra_a_basis(W):
    """Monomial fields ``x^P d_i`` with ``<P, w> = w_i``: i ascending, then monomial order."""
    order = W.order()
    out = []
    for i, wi in enumerate(W.weights):
        for P in graded_piece_basis(W, wi, order):
            out.append(VectorField.monomial(P, i, W.variables))
    return out


def vf_order(v, W):
    """Minimum of ``<P, w> - w_i`` over constituents; ``math.inf`` for the zero field."""
    if len(v.components) != W.n:
        raise VariableMismatch("field and weight system differ in dimension")
    return min((W.degree(m) - W.weights[i] for m, i, _ in v.constituents()), default=math.inf)


def lie_derivative(v, f):
    """``L_v f = sum_i v_i df/dx_i``."""
    if v.vars != f.vars:
        raise VariableMismatch(f"field over {v.vars} applied to a polynomial over {f.vars}")
    out = Polynomial.zero(f.vars)
    for i, vi in enumerate(v.components):
        if vi:
            out = out + vi * f.derivative(i)
    return out


def lie_bracket(v, u):
    """``[v, u]`` with components ``L_v(u_j) - L_u(v_j)``."""
    if v.vars != u.vars:
        raise VariableMismatch("fields over different variable lists")
    return VectorField(tuple(lie_derivative(v, uj) - lie_derivative(u, vj)
                             for uj, vj in zip(u.components, v.components)))


def field_coordinates(v, basis):
    """Coefficients of ``v`` in a list of monomial basis fields, or ``None`` if outside the span."""
    index = {}
    for k, b in enumerate(basis):
        (m, i, c), = list(b.constituents())
        index[(m, i)] = (k, c)
    coords = [0] * len(basis)
    for m, i, c in v.constituents():
        if (m, i) not in index:
            return None
        k, bc = index[(m, i)]
        coords[k] = c / bc
    return coords
