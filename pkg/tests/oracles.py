"""Independent reference computations built on sympy, shared by the test modules."""

from fractions import Fraction

import sympy

from whmilnor.poly import Polynomial


def to_sympy(p, symbols):
    return sympy.Add(*[sympy.Rational(c.numerator, c.denominator)
                       * sympy.Mul(*[s**e for s, e in zip(symbols, m)])
                       for m, c in p.terms.items()])


def from_sympy(expr, symbols, variables):
    expr = sympy.expand(expr)
    if expr == 0:
        return Polynomial.zero(variables)
    terms = {}
    for mono, c in sympy.Poly(expr, *symbols).terms():
        q = sympy.Rational(c)
        terms[tuple(mono)] = Fraction(int(q.p), int(q.q))
    return Polynomial(terms, variables)


def apply_field(components, phi, symbols):
    """The derivation ``sum_i v_i d/dx_i`` applied to a sympy expression."""
    return sympy.expand(sum(c * sympy.diff(phi, s) for c, s in zip(components, symbols)))


def bracket_by_commutator(v, u):
    """``[v, u]`` recovered from the commutator ``v(u(x_j)) - u(v(x_j))`` on coordinates."""
    variables = v.vars
    xs = sympy.symbols(" ".join(variables) + " ")
    vs = [to_sympy(c, xs) for c in v.components]
    us = [to_sympy(c, xs) for c in u.components]
    out = []
    for x in xs:
        val = apply_field(vs, apply_field(us, x, xs), xs) - apply_field(us, apply_field(vs, x, xs), xs)
        out.append(from_sympy(val, xs, variables))
    return out


def milnor_orlik(weights, d):
    """Hilbert map of the Milnor algebra from the product formula over weights and degree."""
    t = sympy.Symbol("t")
    num = sympy.prod([(1 - t ** (d - w)) for w in weights])
    den = sympy.prod([(1 - t ** w) for w in weights])
    q = sympy.Poly(sympy.cancel(num / den), t)
    return {k: int(c) for (k,), c in sorted(q.terms()) if c}
