"""Exact polynomial arithmetic over the rationals.

Two representations cover everything the library needs:

  UniPoly  -- dense univariate polynomial, a tuple of Fraction coefficients
              indexed by exponent, trailing coefficient nonzero.
  BiPoly   -- sparse bivariate polynomial, a dict mapping exponent pairs
              (i, j) to nonzero Fraction coefficients.  The pair (i, j)
              stands for (first variable)^i * (second variable)^j.

Both types are immutable after construction, so every operation returns a
fresh value and instances are safe to hash, cache and share across threads.
The scalar field is Python's Fraction: arbitrary precision, always reduced,
positive denominator.  The zero polynomial reports degree -inf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

NEG_INF = float("-inf")

# Variable names the text grammar accepts, in canonical slot order.
VAR_NAMES = ("u", "v", "x", "y", "t", "s", "z")


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot coerce {value!r} to a rational")


class UniPoly:
    """Dense univariate polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((_frac(c),))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    # -- structure ----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"UniPoly({self.to_text('x')!r})"

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "UniPoly":
        other = _as_uni(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "UniPoly":
        return self + (-_as_uni(other))

    def __rsub__(self, other) -> "UniPoly":
        return _as_uni(other) + (-self)

    def __mul__(self, other) -> "UniPoly":
        other = _as_uni(other)
        if self.is_zero or other.is_zero:
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative exponent")
        result = UniPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "UniPoly":
        c = _frac(c)
        return UniPoly(a * c for a in self.coeffs)

    # -- calculus and evaluation ---------------------------------------

    def eval(self, x) -> Fraction:
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k >= 1)

    def antiderivative(self) -> "UniPoly":
        """Antiderivative with zero constant term."""
        out = [Fraction(0)]
        out.extend(c / (k + 1) for k, c in enumerate(self.coeffs))
        return UniPoly(out)

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly.const(c)
        return acc

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return UniPoly((Fraction(0),) * k + self.coeffs)

    def to_bipoly(self, slot: int) -> "BiPoly":
        """Lift into a bivariate polynomial living in the given slot (0 or 1)."""
        if slot == 0:
            return BiPoly({(k, 0): c for k, c in enumerate(self.coeffs) if c != 0})
        if slot == 1:
            return BiPoly({(0, k): c for k, c in enumerate(self.coeffs) if c != 0})
        raise ValueError("slot must be 0 or 1")

    # -- text ----------------------------------------------------------

    def to_text(self, var: str = "x") -> str:
        return self.to_bipoly(0).to_text((var, "_"))


def _as_uni(value) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return UniPoly.const(value)
    raise TypeError(f"cannot coerce {value!r} to UniPoly")


def _grlex_key(e):
    return (e[0] + e[1], e[0])


class BiPoly:
    """Sparse bivariate polynomial over the rationals.

    `terms` maps exponent pairs to nonzero coefficients.  Degrees d_u, d_v
    and the total degree d are computed once at construction and exposed as
    attributes `du`, `dv`, `deg` (-inf for the zero polynomial).
    """

    __slots__ = ("terms", "du", "dv", "deg", "_uview", "_vview")

    def __init__(self, terms: dict | None = None):
        clean: dict = {}
        if terms:
            for (i, j), c in terms.items():
                c = _frac(c)
                if c != 0:
                    clean[(int(i), int(j))] = c
        object.__setattr__(self, "terms", clean)
        if clean:
            object.__setattr__(self, "du", max(e[0] for e in clean))
            object.__setattr__(self, "dv", max(e[1] for e in clean))
            object.__setattr__(self, "deg", max(e[0] + e[1] for e in clean))
        else:
            object.__setattr__(self, "du", NEG_INF)
            object.__setattr__(self, "dv", NEG_INF)
            object.__setattr__(self, "deg", NEG_INF)
        object.__setattr__(self, "_uview", None)
        object.__setattr__(self, "_vview", None)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls({})

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): _frac(c)})

    @classmethod
    def var_u(cls) -> "BiPoly":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def var_v(cls) -> "BiPoly":
        return cls({(0, 1): Fraction(1)})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "BiPoly":
        return cls({(i, j): _frac(c)})

    # -- structure --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self.terms)

    def depends_on_u(self) -> bool:
        return any(e[0] > 0 for e in self.terms)

    def depends_on_v(self) -> bool:
        return any(e[1] > 0 for e in self.terms)

    def coeff(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == BiPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("BiPoly", frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"BiPoly({self.to_text()!r})"

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "BiPoly":
        other = _as_bi(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "BiPoly":
        return self + (-_as_bi(other))

    def __rsub__(self, other) -> "BiPoly":
        return _as_bi(other) + (-self)

    def __mul__(self, other) -> "BiPoly":
        other = _as_bi(other)
        if self.is_zero or other.is_zero:
            return BiPoly.zero()
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2)
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative exponent")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "BiPoly":
        c = _frac(c)
        if c == 0:
            return BiPoly.zero()
        return BiPoly({e: a * c for e, a in self.terms.items()})

    # -- views and evaluation ----------------------------------------------

    def u_view(self) -> list:
        """Coefficients c_i of (first var)^i, each a UniPoly in the second var."""
        if self._uview is None:
            n = (self.du + 1) if self.terms else 0
            rows: list = [dict() for _ in range(n)]
            for (i, j), c in self.terms.items():
                rows[i][j] = c
            view = []
            for row in rows:
                if row:
                    m = max(row)
                    view.append(UniPoly(row.get(k, 0) for k in range(m + 1)))
                else:
                    view.append(UniPoly.zero())
            object.__setattr__(self, "_uview", view)
        return list(self._uview)

    def v_view(self) -> list:
        """Coefficients of (second var)^j, each a UniPoly in the first var."""
        if self._vview is None:
            n = (self.dv + 1) if self.terms else 0
            rows: list = [dict() for _ in range(n)]
            for (i, j), c in self.terms.items():
                rows[j][i] = c
            view = []
            for row in rows:
                if row:
                    m = max(row)
                    view.append(UniPoly(row.get(k, 0) for k in range(m + 1)))
                else:
                    view.append(UniPoly.zero())
            object.__setattr__(self, "_vview", view)
        return list(self._vview)

    def eval(self, a, b) -> Fraction:
        a = _frac(a)
        b = _frac(b)
        acc = Fraction(0)
        for c in reversed(self.u_view()):
            acc = acc * a + c.eval(b)
        return acc

    def eval_u(self, a) -> UniPoly:
        """Substitute the first variable; result is a UniPoly in the second."""
        a = _frac(a)
        acc = UniPoly.zero()
        for c in reversed(self.u_view()):
            acc = acc.scale(a) + c
        return acc

    def eval_v(self, b) -> UniPoly:
        """Substitute the second variable; result is a UniPoly in the first."""
        b = _frac(b)
        acc = UniPoly.zero()
        for c in reversed(self.v_view()):
            acc = acc.scale(b) + c
        return acc

    def partial(self, var: str) -> "BiPoly":
        """Formal partial derivative; var is 'u' (slot 0) or 'v' (slot 1)."""
        if var in ("u", 0):
            return BiPoly({(i - 1, j): c * i for (i, j), c in self.terms.items() if i >= 1})
        if var in ("v", 1):
            return BiPoly({(i, j - 1): c * j for (i, j), c in self.terms.items() if j >= 1})
        raise ValueError("var must be 'u' or 'v'")

    def swap(self) -> "BiPoly":
        """Exchange the two variables."""
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def compose(self, inner_u: UniPoly, inner_v: UniPoly) -> "BiPoly":
        """Substitute univariate polynomials for both variables."""
        fu = inner_u.to_bipoly(0)
        acc = BiPoly.zero()
        for c in reversed(self.u_view()):
            acc = acc * fu + c.compose(inner_v).to_bipoly(1)
        return acc

    def lt_poly(self) -> "BiPoly":
        """Sum of the terms of maximum total degree."""
        if self.is_zero:
            raise ValueError("zero polynomial has no leading form")
        d = self.deg
        return BiPoly({e: c for e, c in self.terms.items() if e[0] + e[1] == d})

    def leading_term(self):
        """Graded-lex leading (exponent, coefficient) pair."""
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    # -- text ---------------------------------------------------------------

    def to_text(self, vars: Sequence[str] = ("u", "v")) -> str:
        """Canonical form: graded-lex descending, explicit `*` and `^`."""
        if self.is_zero:
            return "0"
        un, vn = vars[0], vars[1]
        parts = []
        for (i, j) in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[(i, j)]
            factors = []
            if i == 1:
                factors.append(un)
            elif i > 1:
                factors.append(f"{un}^{i}")
            if j == 1:
                factors.append(vn)
            elif j > 1:
                factors.append(f"{vn}^{j}")
            mag = abs(c)
            if not factors or mag != 1:
                factors.insert(0, str(mag))
            term = "*".join(factors)
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f" + {term}" if c > 0 else f" - {term}")
        return "".join(parts)


def _as_bi(value) -> BiPoly:
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return BiPoly.const(value)
    raise TypeError(f"cannot coerce {value!r} to BiPoly")


@dataclass(frozen=True)
class CoeffDecomposition:
    """A bivariate polynomial collected by powers of one variable.

    `variable` is the outer variable ('u' or 'v'); `coefficients[i]` is the
    univariate polynomial (in the other variable) multiplying its i-th power.
    Recombining reproduces the source polynomial exactly.
    """

    variable: str
    coefficients: tuple

    def recombine(self) -> BiPoly:
        outer_slot = 0 if self.variable == "u" else 1
        inner_slot = 1 - outer_slot
        acc = BiPoly.zero()
        for i, c in enumerate(self.coefficients):
            mono = BiPoly.monomial(i, 0) if outer_slot == 0 else BiPoly.monomial(0, i)
            acc = acc + c.to_bipoly(inner_slot) * mono
        return acc


def coeff_decomposition(f: BiPoly, variable: str) -> CoeffDecomposition:
    """Collect f by powers of `variable` ('u' for slot 0, 'v' for slot 1)."""
    if variable == "u":
        coeffs = f.u_view()
    elif variable == "v":
        coeffs = f.v_view()
    else:
        raise ValueError("variable must be 'u' or 'v'")
    if not coeffs:
        coeffs = [UniPoly.zero()]
    return CoeffDecomposition(variable, tuple(coeffs))


def lt_poly(f: BiPoly) -> BiPoly:
    return f.lt_poly()


def divide_exact(f: BiPoly, g: BiPoly) -> BiPoly | None:
    """Return q with f = q*g, or None if g does not divide f exactly."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero:
        return BiPoly.zero()
    (ge, gc) = g.leading_term()
    q: dict = {}
    rest = f
    while not rest.is_zero:
        (re, rc) = rest.leading_term()
        i, j = re[0] - ge[0], re[1] - ge[1]
        if i < 0 or j < 0:
            return None
        c = rc / gc
        q[(i, j)] = c
        rest = rest - g * BiPoly.monomial(i, j, c)
        if not rest.is_zero and _grlex_key(rest.leading_term()[0]) >= _grlex_key(re):
            return None
    return BiPoly(q)


def divides(g: BiPoly, f: BiPoly) -> bool:
    return divide_exact(f, g) is not None


# -- normalization ------------------------------------------------------------


def rational_content(f: BiPoly) -> Fraction:
    """Positive rational c such that f/c has coprime integer coefficients.

    The sign is carried separately: content of the zero polynomial is 0.
    """
    if f.is_zero:
        return Fraction(0)
    num = 0
    den = 1
    for c in f.terms.values():
        num = math.gcd(num, c.numerator)
        den = den * c.denominator // math.gcd(den, c.denominator)
    return Fraction(num, den)


def normalize_sign(f: BiPoly) -> BiPoly:
    """Flip sign so the graded-lex leading coefficient is positive."""
    if f.is_zero:
        return f
    return f if f.leading_term()[1] > 0 else -f


def canonical_primitive(f: BiPoly) -> tuple[Fraction, BiPoly]:
    """Split f = unit * prim with prim integer-primitive, positive leading
    coefficient under graded-lex."""
    if f.is_zero:
        return Fraction(0), f
    c = rational_content(f)
    if f.leading_term()[1] < 0:
        c = -c
    return c, f.scale(1 / c)


def uni_canonical_primitive(p: UniPoly) -> tuple[Fraction, UniPoly]:
    """Univariate analogue of canonical_primitive."""
    if p.is_zero:
        return Fraction(0), p
    num = 0
    den = 1
    for c in p.coeffs:
        num = math.gcd(num, c.numerator)
        den = den * c.denominator // math.gcd(den, c.denominator)
    content = Fraction(num, den)
    if p.lc < 0:
        content = -content
    return content, p.scale(1 / content)
