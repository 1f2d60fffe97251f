"""Pure-Python hot kernels.

Polynomials are handled here as raw ``dict`` objects mapping exponent tuples
to ``Fraction`` coefficients. The compiled module ``_ckernels`` implements the
same functions with identical semantics; ``whmilnor._kernels`` picks one.
"""

from fractions import Fraction


def mono_mul(a, b):
    return tuple([i + j for i, j in zip(a, b)])


def mono_divides(a, b):
    """True when the monomial ``a`` divides ``b``."""
    for i, j in zip(a, b):
        if i > j:
            return False
    return True


def mono_quo(b, a):
    return tuple([j - i for i, j in zip(a, b)])


def mono_lcm(a, b):
    return tuple([i if i > j else j for i, j in zip(a, b)])


def poly_add(p, q):
    r = dict(p)
    for m, c in q.items():
        s = r.get(m, 0) + c
        if s:
            r[m] = s
        else:
            r.pop(m, None)
    return r


def poly_mul(p, q):
    r = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple([i + j for i, j in zip(m1, m2)])
            s = r.get(m, 0) + c1 * c2
            if s:
                r[m] = s
            else:
                r.pop(m, None)
    return r


def poly_sub_mul(p, c, mono, q):
    """Return ``p - c * x^mono * q`` as a new dict."""
    r = dict(p)
    for m2, c2 in q.items():
        m = tuple([i + j for i, j in zip(mono, m2)])
        s = r.get(m, 0) - c * c2
        if s:
            r[m] = s
        else:
            r.pop(m, None)
    return r


def normal_form(p, basis, key, budget):
    """Fully reduce ``p`` by a list of monic polynomials.

    ``basis`` holds ``(leading_monomial, terms)`` pairs with leading
    coefficient 1. Returns ``(remainder, steps_used)``; stops and returns
    ``(None, steps)`` once ``budget`` reduction steps have been spent.
    """
    p = dict(p)
    r = {}
    steps = 0
    while p:
        lm = max(p, key=key)
        lc = p[lm]
        for glm, g in basis:
            if mono_divides(glm, lm):
                steps += 1
                if steps > budget:
                    return None, steps
                p = poly_sub_mul(p, lc, mono_quo(lm, glm), g)
                break
        else:
            r[lm] = lc
            del p[lm]
    return r, steps


def rref(rows, ncols):
    """Reduced row echelon form over the rationals.

    ``rows`` is a list of lists of ``Fraction``; it is not modified. Returns
    ``(nonzero_rows, pivot_columns)``.
    """
    a = [list(r) for r in rows]
    pivots = []
    rank = 0
    nrows = len(a)
    for col in range(ncols):
        if rank == nrows:
            break
        piv = None
        for i in range(rank, nrows):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = a[rank]
        inv = 1 / Fraction(prow[col])
        if inv != 1:
            prow = [v * inv for v in prow]
            a[rank] = prow
        for i in range(nrows):
            if i != rank:
                row = a[i]
                f = row[col]
                if f:
                    a[i] = [v - f * w for v, w in zip(row, prow)]
        pivots.append(col)
        rank += 1
    return a[:rank], pivots
