"""Sparse multivariate polynomials with exact rational coefficients."""

from dataclasses import dataclass
from fractions import Fraction

from whmilnor import _kernels as K
from whmilnor.errors import VariableMismatch
from whmilnor.orders import DEFAULT_ORDER, MonomialOrder

MAX_EXPONENT = 2**63 - 1


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact rational coefficient")


@dataclass(frozen=True)
class WeightSystem:
    """Positive integer weights attached to an ordered list of variables."""

    variables: tuple
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.variables) != len(self.weights):
            raise VariableMismatch(
                f"{len(self.weights)} weights given for {len(self.variables)} variables")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive integers")

    @classmethod
    def standard(cls, variables):
        return cls(tuple(variables), (1,) * len(variables))

    @property
    def n(self):
        return len(self.weights)

    def degree(self, mono):
        return sum(w * k for w, k in zip(self.weights, mono))

    def order(self, kind="wdegrevlex"):
        return MonomialOrder(kind, self.weights)


class Polynomial:
    """Immutable sparse polynomial: a map from exponent tuples to rationals.

    Zero coefficients are never stored. Arithmetic requires identical variable
    lists on both operands.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms, variables):
        self.vars = tuple(variables)
        n = len(self.vars)
        clean = {}
        for m, c in dict(terms).items():
            m = tuple(m)
            if len(m) != n:
                raise VariableMismatch(f"exponent vector {m} does not match {n} variables")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = _coerce(c)
            if c:
                clean[m] = clean.get(m, 0) + c
                if not clean[m]:
                    del clean[m]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms, variables):
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.vars = variables
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, variables):
        return cls._raw({}, tuple(variables))

    @classmethod
    def constant(cls, c, variables):
        variables = tuple(variables)
        c = _coerce(c)
        return cls._raw({(0,) * len(variables): c} if c else {}, variables)

    @classmethod
    def monomial(cls, mono, variables, coeff=1):
        return cls({tuple(mono): coeff}, variables)

    @classmethod
    def var(cls, name_or_index, variables):
        variables = tuple(variables)
        i = name_or_index if isinstance(name_or_index, int) else variables.index(name_or_index)
        m = [0] * len(variables)
        m[i] = 1
        return cls._raw({tuple(m): Fraction(1)}, variables)

    @property
    def nvars(self):
        return len(self.vars)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def _check(self, other):
        if self.vars != other.vars:
            raise VariableMismatch(f"variable lists differ: {self.vars} vs {other.vars}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(other, self.vars)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self.vars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other):
        other = self._lift(other)
        return Polynomial._raw(K.poly_add(self.terms, other.terms), self.vars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return Polynomial._raw(K.poly_mul(self.terms, other.terms), self.vars)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c):
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.vars)
        return Polynomial._raw({m: v * c for m, v in self.terms.items()}, self.vars)

    def __truediv__(self, c):
        c = _coerce(c)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self.scale(1 / c)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        if k and self.terms and max(max(m, default=0) for m in self.terms) * k > MAX_EXPONENT:
            raise OverflowError("exponent overflow")
        result = Polynomial.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self, i):
        """Formal partial derivative with respect to the i-th variable."""
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
        return Polynomial._raw(out, self.vars)

    def gradient(self):
        return [self.derivative(i) for i in range(self.nvars)]

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def leading_monomial(self, order=DEFAULT_ORDER):
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order=DEFAULT_ORDER):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order=DEFAULT_ORDER):
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient(order))

    def sorted_terms(self, order=DEFAULT_ORDER):
        return [(m, self.terms[m]) for m in order.sorted_desc(self.terms)]

    def compose(self, images):
        """Substitute ``images[i]`` for the i-th variable."""
        if len(images) != self.nvars:
            raise VariableMismatch(f"{len(images)} images for {self.nvars} variables")
        target = images[0].vars if images else self.vars
        for im in images:
            if im.vars != target:
                raise VariableMismatch("substitution images use different variable lists")
        powers = [dict() for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        acc = {}
        one = Polynomial.constant(1, target)
        for m, c in self.terms.items():
            t = one
            for i, e in enumerate(m):
                if e:
                    t = t * power(i, e)
            acc = K.poly_add(acc, {k: v * c for k, v in t.terms.items()})
        return Polynomial._raw(acc, target)

    def evaluate(self, point):
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t *= Fraction(x) ** e
            total += t
        return total

    def rename(self, variables, positions=None):
        """Embed into a ring with ``variables``; ``positions[i]`` is the new slot of variable i."""
        variables = tuple(variables)
        if positions is None:
            positions = [variables.index(v) for v in self.vars]
        out = {}
        for m, c in self.terms.items():
            nm = [0] * len(variables)
            for i, e in zip(positions, m):
                nm[i] += e
            out[tuple(nm)] = c
        return Polynomial._raw(out, variables)

    def to_text(self, order=DEFAULT_ORDER):
        return format_polynomial(self, order)

    def __str__(self):
        return format_polynomial(self, DEFAULT_ORDER)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self, DEFAULT_ORDER)!r}, vars={self.vars})"


def format_coefficient(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(mono, variables):
    parts = []
    for name, e in zip(variables, mono):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p, order=DEFAULT_ORDER):
    if not p.terms:
        return "0"
    out = []
    for idx, (m, c) in enumerate(p.sorted_terms(order)):
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(m, p.vars)
        if not mono:
            body = format_coefficient(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_coefficient(a)}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
