"""Monomial orders.

An order is represented by a sort key on exponent tuples: ``key(a) > key(b)``
means ``a`` is the larger monomial.
"""

from dataclasses import dataclass, field

ORDER_KINDS = ("wdegrevlex", "wdeglex", "lex")


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "wdegrevlex"
    weights: tuple | None = None
    key: object = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}; expected one of {ORDER_KINDS}")
        if self.weights is not None:
            w = tuple(int(x) for x in self.weights)
            if any(x < 1 for x in w):
                raise ValueError("weights must be positive integers")
            object.__setattr__(self, "weights", w)
        object.__setattr__(self, "key", self._make_key())

    def _make_key(self):
        w = self.weights
        if self.kind == "lex":
            return lambda m: m
        if self.kind == "wdeglex":
            if w is None:
                return lambda m: (sum(m), m)
            return lambda m: (sum([a * b for a, b in zip(w, m)]), m)
        if w is None:
            return lambda m: (sum(m), tuple([-e for e in reversed(m)]))
        return lambda m: (sum([a * b for a, b in zip(w, m)]), tuple([-e for e in reversed(m)]))

    def for_nvars(self, n):
        """Check the weight vector length against ``n`` variables."""
        if self.weights is not None and len(self.weights) != n:
            raise ValueError(f"order has {len(self.weights)} weights but ring has {n} variables")
        return self

    def sorted_desc(self, monomials):
        return sorted(monomials, key=self.key, reverse=True)

    def label(self):
        if self.weights is None:
            return self.kind
        return f"{self.kind}({','.join(map(str, self.weights))})"


DEFAULT_ORDER = MonomialOrder()
