"""Text grammar for polynomials.

Accepted syntax: variables u v x y t s z, integer and rational literals
(`p/q` with positive q), operators + - * ^ (exponent must be a nonnegative
integer literal), and parentheses.  Implicit multiplication is rejected.
At most two distinct variables may appear.

`parse_poly` maps the (at most two) variables that occur onto the BiPoly
slots, by default in the canonical order u v x y t s z; `parse_with_vars`
also reports which names were chosen for the two slots.  Printing back via
`BiPoly.to_text` with the same names round-trips exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import BiPoly, UniPoly, VAR_NAMES


class ParseError(ValueError):
    """Syntax or name error, carrying the byte offset of the failure."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*^/()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _WidePoly:
    """Polynomial in all seven grammar variables, used only during parsing.

    Exponent vectors are 7-tuples aligned with VAR_NAMES; after parsing the
    at most two used positions are compressed into the two BiPoly slots.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c != 0:
                    self.terms[e] = c

    @classmethod
    def const(cls, c):
        c = Fraction(c)
        return cls({(0,) * len(VAR_NAMES): c} if c != 0 else {})

    @classmethod
    def name(cls, idx: int):
        e = [0] * len(VAR_NAMES)
        e[idx] = 1
        return cls({tuple(e): Fraction(1)})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return _WidePoly(out)

    def __neg__(self):
        return _WidePoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return _WidePoly(out)

    def __pow__(self, n: int):
        result = _WidePoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def used_names(self):
        used = set()
        for e in self.terms:
            for k, exp in enumerate(e):
                if exp:
                    used.add(k)
        return sorted(used)


class _Parser:
    """Recursive descent over the token stream.

    Grammar:
        expr    := ['-'] term (('+'|'-') term)*
        term    := factor ('*' factor)*
        factor  := primary ('^' nonneg-int)?
        primary := rational | name | '(' expr ')'
    """

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def advance(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, kind: str):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse_expr(self) -> _WidePoly:
        negate = False
        if self.peek()[0] == "-":
            self.advance()
            negate = True
        acc = self.parse_term()
        if negate:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.parse_term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def parse_term(self) -> _WidePoly:
        acc = self.parse_factor()
        while self.peek()[0] == "*":
            self.advance()
            acc = acc * self.parse_factor()
        return acc

    def parse_factor(self) -> _WidePoly:
        base = self.parse_primary()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.peek()
            if tok[0] == "-":
                raise ParseError("exponent must be a nonnegative integer literal", tok[2])
            tok = self.expect("int")
            base = base ** int(tok[1])
        return base

    def parse_primary(self) -> _WidePoly:
        kind, value, off = self.advance()
        if kind == "int":
            num = int(value)
            if self.peek()[0] == "/":
                self.advance()
                dtok = self.peek()
                if dtok[0] != "int":
                    raise ParseError("malformed rational literal", dtok[2])
                self.advance()
                den = int(dtok[1])
                if den == 0:
                    raise ParseError("malformed rational literal: zero denominator", dtok[2])
                return _WidePoly.const(Fraction(num, den))
            return _WidePoly.const(num)
        if kind == "name":
            if value not in VAR_NAMES:
                raise ParseError(f"unknown variable name {value!r}", off)
            return _WidePoly.name(VAR_NAMES.index(value))
        if kind == "(":
            inner = self.parse_expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected token {value!r}", off)


def parse_with_vars(text: str, vars: tuple[str, str] | None = None) -> tuple[BiPoly, tuple[str, str]]:
    """Parse `text`; return the BiPoly and the variable names of its slots.

    With `vars` given, only those names may occur and they are pinned to the
    slots in the given order.  Otherwise the names that occur are assigned to
    slots in canonical order, defaulting to ("u", "v") when absent.
    """
    parser = _Parser(text)
    wide = parser.parse_expr()
    tail = parser.peek()
    if tail[0] != "end":
        raise ParseError(f"unexpected token {tail[1]!r}", tail[2])

    used = wide.used_names()
    if vars is not None:
        if len(vars) != 2 or vars[0] == vars[1]:
            raise ValueError("vars must be two distinct names")
        for name in vars:
            if name not in VAR_NAMES:
                raise ValueError(f"unknown variable name {name!r}")
        slots = [VAR_NAMES.index(v) for v in vars]
        for k in used:
            if k not in slots:
                raise ParseError(f"variable {VAR_NAMES[k]!r} not allowed here", 0)
        names = (vars[0], vars[1])
    else:
        if len(used) > 2:
            names_str = ", ".join(VAR_NAMES[k] for k in used)
            raise ParseError(f"more than two variables used: {names_str}", 0)
        slots = list(used)
        for k in range(len(VAR_NAMES)):
            if len(slots) == 2:
                break
            if k not in slots:
                slots.append(k)
        slots = sorted(slots)
        names = (VAR_NAMES[slots[0]], VAR_NAMES[slots[1]])

    terms = {}
    for e, c in wide.terms.items():
        terms[(e[slots[0]], e[slots[1]])] = c
    return BiPoly(terms), names


def parse_poly(text: str, vars: tuple[str, str] | None = None) -> BiPoly:
    """Parse `text` into a BiPoly (see `parse_with_vars` for slot rules)."""
    return parse_with_vars(text, vars)[0]


def parse_uni(text: str, var: str) -> UniPoly:
    """Parse a univariate polynomial in the named variable."""
    if var not in VAR_NAMES:
        raise ValueError(f"unknown variable name {var!r}")
    spare = next(n for n in VAR_NAMES if n != var)
    f = parse_poly(text, vars=(var, spare))
    if f.depends_on_v():
        raise ParseError(f"expected a polynomial in {var!r} only", 0)
    coeffs = [f.coeff(i, 0) for i in range(int(f.du) + 1)] if not f.is_zero else []
    return UniPoly(coeffs)
