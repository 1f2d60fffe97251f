"""A family with constant Jacobian ideal that is nevertheless not trivial.

For ``h`` not in its own Jacobian ideal, ``f_t(x, y, z) = h(x) + (1+z+t) h(y)``
has, as a germ at the origin, the t-independent Jacobian ideal
``<dh/dx_i(x), dh/dy_j(y), h(y)>``. The factor ``1+z+t`` is a unit only
locally, so ideals are compared through unit-stripped presentations.
"""

from fractions import Fraction

from whmilnor.errors import HypothesisViolation
from whmilnor.ideals import Ideal, groebner, jacobian_ideal, saito_check
from whmilnor.local import local_presentation
from whmilnor.poly import Polynomial

NONTRIVIAL_NOTE = ("the family is not trivial: f_t is not right-equivalent to f_0 although "
                   "the Jacobian ideal does not depend on t (documented, not computed)")


def _fresh(name, taken):
    cand = name
    k = 0
    while cand in taken:
        k += 1
        cand = f"{name}{k}"
    return cand


def family_variables(h):
    taken = set(h.vars)
    first = [_fresh(v + "1", taken) for v in h.vars]
    taken |= set(first)
    second = [_fresh(v + "2", taken) for v in h.vars]
    taken |= set(second)
    z = _fresh("z", taken)
    return tuple(first + second + [z])


def family_member(h, t, variables=None):
    variables = variables or family_variables(h)
    n = h.nvars
    hx = h.rename(variables, list(range(n)))
    hy = h.rename(variables, list(range(n, 2 * n)))
    unit = Polynomial.constant(1 + Fraction(t), variables) + Polynomial.var(2 * n, variables)
    return hx + unit * hy


def displayed_ideal(h, variables=None):
    variables = variables or family_variables(h)
    n = h.nvars
    hx = h.rename(variables, list(range(n)))
    hy = h.rename(variables, list(range(n, 2 * n)))
    gens = [hx.derivative(i) for i in range(n)] + [hy.derivative(n + j) for j in range(n)] + [hy]
    return Ideal(gens, variables)


def gaffney_hauser_scenario(h, samples, max_steps=None):
    if saito_check(h, max_steps=max_steps):
        raise HypothesisViolation("h lies in its own Jacobian ideal; the scenario needs h outside J_h")
    variables = family_variables(h)
    target = groebner(local_presentation(displayed_ideal(h, variables)), max_steps=max_steps)
    rows = []
    bases = []
    for t in samples:
        t = Fraction(t)
        ft = family_member(h, t, variables)
        J = jacobian_ideal(ft)
        G = groebner(local_presentation(J), max_steps=max_steps)
        bases.append(G.polys)
        rows.append({
            "t": t,
            "f_t": ft,
            "jacobian_generators": J.generators,
            "reduced_basis": G.polys,
            "equals_displayed_ideal": G.polys == target.polys,
        })
    return {
        "h": h,
        "saito": False,
        "variables": variables,
        "displayed_ideal_basis": target.polys,
        "samples": rows,
        "bases_identical": all(b == bases[0] for b in bases),
        "all_equal_displayed": all(r["equals_displayed_ideal"] for r in rows),
        "note": NONTRIVIAL_NOTE,
    }
