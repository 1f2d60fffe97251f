"""Exact rational linear algebra on dense row lists."""

from fractions import Fraction

from whmilnor import _kernels as K


def rref(rows, ncols):
    return K.rref(rows, ncols)


def rank(rows, ncols):
    return len(K.rref(rows, ncols)[0])


def determinant(matrix):
    a = [[Fraction(v) for v in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for i in range(col + 1, n):
            f = a[i][col] / p
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return det


class MonomialIndex:
    """Column bookkeeping for polynomials written as coefficient vectors."""

    def __init__(self, monomials):
        self.monomials = list(monomials)
        self.position = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    def vector(self, p):
        v = [Fraction(0)] * len(self.monomials)
        for m, c in p.terms.items():
            try:
                v[self.position[m]] = c
            except KeyError:
                raise ValueError(f"monomial {m} is outside the column index") from None
        return v

    def covers(self, p):
        return all(m in self.position for m in p.terms)


def echelon_coordinates(basis, pivots, v):
    """Coordinates of ``v`` in a reduced echelon basis, or ``None`` if outside the span."""
    coords = [v[p] for p in pivots]
    residual = list(v)
    for c, row in zip(coords, basis):
        if c:
            residual = [x - c * y for x, y in zip(residual, row)]
    if any(residual):
        return None
    return coords


def in_span(rows, v, ncols):
    basis, pivots = rref(rows, ncols)
    return echelon_coordinates(basis, pivots, v) is not None
