"""Presentations of ideals in the local ring at the origin.

A polynomial factor with nonzero constant term is a unit in the local ring,
so dropping it from a generator leaves the localized ideal unchanged. Two
ideals whose unit-stripped presentations agree as polynomial ideals
therefore agree as germs; the converse is not claimed.
"""

from fractions import Fraction

import sympy

from whmilnor.ideals import Ideal
from whmilnor.poly import Polynomial


def _to_sympy(p):
    gens = sympy.symbols(" ".join(p.vars), seq=True)
    data = {m: sympy.Rational(c.numerator, c.denominator) for m, c in p.terms.items()}
    return sympy.Poly.from_dict(data, *gens, domain="QQ")


def _from_sympy(poly, variables):
    terms = {}
    for m, c in poly.terms():
        num, den = sympy.fraction(sympy.Rational(c))
        terms[tuple(m)] = Fraction(int(num), int(den))
    return Polynomial(terms, variables)


def strip_unit_factors(p):
    """Remove every irreducible factor of ``p`` that does not vanish at the origin."""
    if p.is_zero() or p.constant_term():
        return Polynomial.constant(1, p.vars) if not p.is_zero() else p
    _, factors = sympy.factor_list(_to_sympy(p))
    out = Polynomial.constant(1, p.vars)
    for fac, mult in factors:
        q = _from_sympy(fac, p.vars)
        if q.constant_term():
            continue
        out = out * q ** mult
    return out.monic()


def local_presentation(ideal):
    """The same germ ideal, generated by unit-stripped generators."""
    return Ideal([strip_unit_factors(g) for g in ideal.generators], ideal.vars, ideal.weights)
