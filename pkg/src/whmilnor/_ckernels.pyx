# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; same contracts as ``whmilnor._pykernels``."""

from fractions import Fraction


cpdef tuple mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([<long>a[i] + <long>b[i] for i in range(n)])


cpdef bint mono_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long>a[i] > <long>b[i]:
            return False
    return True


cpdef tuple mono_quo(tuple b, tuple a):
    cdef Py_ssize_t i, n = len(a)
    return tuple([<long>b[i] - <long>a[i] for i in range(n)])


cpdef tuple mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    out = []
    for i in range(n):
        x = a[i]
        y = b[i]
        out.append(x if x > y else y)
    return tuple(out)


cpdef dict poly_add(dict p, dict q):
    cdef dict r = dict(p)
    for m, c in q.items():
        s = r.get(m, 0) + c
        if s:
            r[m] = s
        else:
            r.pop(m, None)
    return r


cpdef dict poly_mul(dict p, dict q):
    cdef dict r = {}
    cdef tuple m1, m2, m
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = mono_mul(m1, m2)
            s = r.get(m, 0) + c1 * c2
            if s:
                r[m] = s
            else:
                r.pop(m, None)
    return r


cpdef dict poly_sub_mul(dict p, c, tuple mono, dict q):
    cdef dict r = dict(p)
    cdef tuple m2, m
    for m2, c2 in q.items():
        m = mono_mul(mono, m2)
        s = r.get(m, 0) - c * c2
        if s:
            r[m] = s
        else:
            r.pop(m, None)
    return r


def normal_form(dict p, list basis, key, long budget):
    cdef dict r = {}
    cdef long steps = 0
    cdef tuple lm, glm
    cdef bint reduced
    p = dict(p)
    while p:
        lm = max(p, key=key)
        lc = p[lm]
        reduced = False
        for glm, g in basis:
            if mono_divides(glm, lm):
                steps += 1
                if steps > budget:
                    return None, steps
                p = poly_sub_mul(p, lc, mono_quo(lm, glm), g)
                reduced = True
                break
        if not reduced:
            r[lm] = lc
            del p[lm]
    return r, steps


def rref(rows, Py_ssize_t ncols):
    cdef list a = [list(r) for r in rows]
    cdef list pivots = []
    cdef Py_ssize_t rank = 0, nrows = len(a), col, i, k
    cdef list prow, row
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for i in range(rank, nrows):
            if a[i][col]:
                piv = i
                break
        if piv < 0:
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
                    a[i] = [row[k] - f * prow[k] for k in range(ncols)]
        pivots.append(col)
        rank += 1
    return a[:rank], pivots
