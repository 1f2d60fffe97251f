"""Dense univariate polynomials over the rationals, in a parameter ``t``."""

from fractions import Fraction
from math import gcd, lcm


class UPoly:
    """Coefficients stored low to high with no trailing zeros."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def t(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, a):
        return cls((a,))

    @property
    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly.const(other)
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.c), len(other.c))
        a = self.c + (0,) * (n - len(self.c))
        b = other.c + (0,) * (n - len(other.c))
        return UPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly([-x for x in self.c])

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self.c or not other.c:
            return UPoly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    out[i + j] += x * y
        return UPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = _lift(other)
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        q = [Fraction(0)] * max(len(r) - len(other.c) + 1, 0)
        lead = other.c[-1]
        while len(r) >= len(other.c) and r:
            k = len(r) - len(other.c)
            f = r[-1] / lead
            q[k] = f
            for j, y in enumerate(other.c):
                r[k + j] -= f * y
            while r and not r[-1]:
                r.pop()
        return UPoly(q), UPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = Fraction(0)
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def monic(self):
        if not self.c:
            return self
        return UPoly([x / self.c[-1] for x in self.c])

    def derivative(self):
        return UPoly([i * x for i, x in enumerate(self.c)][1:])

    def squarefree(self):
        if self.degree < 1:
            return UPoly((1,)) if self.c else self
        return (self // upoly_gcd(self, self.derivative())).monic()

    def integer_coefficients(self):
        """Primitive integer multiple of the coefficient list."""
        den = lcm(*[x.denominator for x in self.c]) if self.c else 1
        ints = [int(x * den) for x in self.c]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return [v // g for v in ints] if g else ints

    def rational_roots(self):
        """Distinct rational roots, ascending."""
        if self.degree < 1:
            return []
        ints = self.integer_coefficients()
        roots = set()
        # strip the zero root first
        k = 0
        while ints[k] == 0:
            k += 1
        if k:
            roots.add(Fraction(0))
        ints = ints[k:]
        if len(ints) > 1:
            a0, an = abs(ints[0]), abs(ints[-1])
            for p in _divisors(a0):
                for q in _divisors(an):
                    for s in (1, -1):
                        r = Fraction(s * p, q)
                        if UPoly(ints)(r) == 0:
                            roots.add(r)
        return sorted(roots)

    def to_text(self, var="t"):
        if not self.c:
            return "0"
        parts = []
        for i in range(len(self.c) - 1, -1, -1):
            a = self.c[i]
            if not a:
                continue
            neg = a < 0
            a = -a if neg else a
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            coef = str(a) if a.denominator != 1 else str(a.numerator)
            body = coef if not mono else (mono if a == 1 else f"{coef}*{mono}")
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"UPoly({self.to_text()!r})"


def _lift(x):
    return x if isinstance(x, UPoly) else UPoly.const(x)


def _divisors(n):
    if n == 0:
        return [1]
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i * i != n:
                out.append(n // i)
        i += 1
    return out


def upoly_gcd(a, b):
    """Monic gcd; the gcd of two zeros is zero."""
    while b:
        a, b = b, a % b
    return a.monic()


def extended_gcd(a, b):
    """``(g, s, t)`` with ``s*a + t*b = g`` and g monic."""
    r0, r1 = a, b
    s0, s1 = UPoly((1,)), UPoly()
    t0, t1 = UPoly(), UPoly((1,))
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    lc = r0.c[-1]
    return r0.monic(), s0 * (1 / lc), t0 * (1 / lc)


def interpolate(xs, ys):
    """The unique polynomial of degree < len(xs) through the points (Newton form)."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result = UPoly((coef[-1],)) if n else UPoly()
    for i in range(n - 2, -1, -1):
        result = result * UPoly((-xs[i], 1)) + coef[i]
    return result


def irreducible_factors(p):
    """Monic irreducible factors over Q of a nonzero polynomial, with multiplicities."""
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(p.c))
    _, facs = sympy.factor_list(sympy.Poly(expr, t, domain="QQ"))
    out = []
    for f, mult in facs:
        coeffs = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1]))
                  for c in reversed(f.all_coeffs())]
        out.append((UPoly(coeffs).monic(), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].c))
    return out


def rank_modulo(matrix, modulus):
    """Rank of a matrix of UPoly entries over the field Q[t]/(modulus).

    ``modulus`` must be irreducible over Q.
    """
    a = [[e % modulus for e in row] for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    rk = 0
    for col in range(ncols):
        piv = next((i for i in range(rk, nrows) if a[i][col]), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        g, inv, _ = extended_gcd(a[rk][col], modulus)
        if g.degree != 0:
            raise ValueError("modulus is not irreducible")
        a[rk] = [(e * inv) % modulus for e in a[rk]]
        for i in range(nrows):
            if i != rk and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % modulus for x, y in zip(a[i], a[rk])]
        rk += 1
    return rk
