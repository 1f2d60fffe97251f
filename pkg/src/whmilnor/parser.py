"""Recursive-descent parser for polynomial expressions.

Grammar (explicit ``*`` is required between factors)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT | IDENT | "(" expr ")"

Division is only allowed by a nonzero constant. Identifiers are a letter
followed by letters, digits or underscores.
"""


from whmilnor.errors import ParseError
from whmilnor.poly import MAX_EXPONENT, Polynomial

_PUNCT = "+-*/^(),"


def tokenize(text):
    """Return a list of ``(kind, value, position)`` triples."""
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif c.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], i))
            i = j
        elif c in _PUNCT:
            tokens.append((c, c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", i, text)
    tokens.append(("eof", None, n))
    return tokens


def identifiers(text):
    """Identifiers appearing in ``text``, in order of first appearance."""
    seen = []
    for kind, value, _ in tokenize(text):
        if kind == "ident" and value not in seen:
            seen.append(value)
    return seen


class _Parser:
    def __init__(self, text, variables):
        self.text = text
        self.vars = tuple(variables)
        self.index = {v: i for i, v in enumerate(self.vars)}
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {_describe(tok)}", tok[2], self.text)
        return tok

    def expr(self):
        left = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            right = self.term()
            left = left + right if op == "+" else left - right
        return left

    def term(self):
        left = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, at = self.advance()
            right = self.unary()
            if op == "*":
                left = left * right
            else:
                if any(any(m) for m in right.terms) or not right.terms:
                    raise ParseError("division is only allowed by a nonzero constant", at, self.text)
                left = left / right.constant_term()
        return left

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.advance()
            return -self.unary()
        if kind == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.peek()
            if tok[0] == "-":
                raise ParseError("negative exponent", tok[2], self.text)
            tok = self.expect("int")
            if tok[1] > MAX_EXPONENT:
                raise ParseError("exponent overflow", tok[2], self.text)
            base = base ** tok[1]
        return base

    def atom(self):
        kind, value, at = self.advance()
        if kind == "int":
            return Polynomial.constant(value, self.vars)
        if kind == "ident":
            if value not in self.index:
                raise ParseError(f"unknown variable {value!r} (known: {', '.join(self.vars) or 'none'})",
                                 at, self.text)
            return Polynomial.var(self.index[value], self.vars)
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {_describe((kind, value, at))}", at, self.text)


def _describe(tok):
    kind, value, _ = tok
    if kind == "eof":
        return "end of input"
    if kind in ("int", "ident"):
        return f"{kind} {value!r}"
    return repr(kind)


def parse_polynomial(text, variables):
    """Parse ``text`` into a :class:`Polynomial` over ``variables``."""
    p = _Parser(text, variables)
    if p.peek()[0] == "eof":
        raise ParseError("empty expression", 0, text)
    result = p.expr()
    tok = p.peek()
    if tok[0] != "eof":
        raise ParseError(f"unexpected {_describe(tok)}", tok[2], text)
    return result


def parse_polynomial_list(text, variables):
    """Parse ``"(p1, p2, ...)"`` or ``"p1, p2, ..."`` into a list of polynomials."""
    p = _Parser(text, variables)
    toks = p.tokens
    wrapped = False
    if toks[0][0] == "(":
        depth = 0
        for i, tok in enumerate(toks):
            depth += tok[0] == "("
            depth -= tok[0] == ")"
            if depth == 0:
                # "(a, b)" is a wrapped list; "(x+y)*z, y" is not
                wrapped = toks[i + 1][0] == "eof"
                break
    if wrapped:
        p.advance()
    out = []
    if p.peek()[0] not in ("eof", ")"):
        out.append(p.expr())
        while p.peek()[0] == ",":
            p.advance()
            out.append(p.expr())
    if wrapped:
        p.expect(")")
    tok = p.peek()
    if tok[0] != "eof":
        raise ParseError(f"unexpected {_describe(tok)}", tok[2], text)
    return out


def parse_vector_field(text, variables):
    """Parse ``"x^2*dx + y*dz"`` into component polynomials.

    Each term must contain exactly one direction symbol ``d<var>`` to the
    first power.
    """
    variables = tuple(variables)
    dnames = tuple("d" + v for v in variables)
    clash = set(dnames) & set(variables)
    if clash:
        raise ParseError(f"direction symbol collides with a variable: {sorted(clash)}", 0, text)
    big = parse_polynomial(text, variables + dnames)
    n = len(variables)
    comps = [dict() for _ in range(n)]
    for m, c in big.terms.items():
        dpart = m[n:]
        if sum(dpart) != 1:
            raise ParseError("every term of a vector field needs exactly one direction symbol d<var>",
                             0, text)
        i = dpart.index(1)
        comps[i][m[:n]] = c
    return [Polynomial(cpt, variables) for cpt in comps]
