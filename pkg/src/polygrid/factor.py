"""Irreducible factorization over the rationals.

The heavy lifting (univariate Zassenhaus, multivariate lifting) is delegated
to sympy's polynomial engine; this module owns the exact surface: canonical
normalization of factors (integer-primitive, positive graded-lex leading
coefficient), degree caps, a recomposition check on every result, and a fast
irreducibility path that avoids full factorization in the common case.

Factor lists are sorted deterministically, so equal inputs always produce
byte-identical reports downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from .eliminate import uni_gcd
from .poly import (
    BiPoly,
    UniPoly,
    canonical_primitive,
    uni_canonical_primitive,
)

DEFAULT_BI_DEGREE_CAP = 12
DEFAULT_UNI_DEGREE_CAP = 24

_SYM_U, _SYM_V = sympy.symbols("u v")


class DegreeCapError(ValueError):
    """Input degree exceeds the configured desk-scale cap."""


@dataclass(frozen=True)
class Factorization:
    """unit * product(factor^multiplicity) == the factored polynomial.

    Factors are irreducible over Q, integer-primitive, positive leading
    coefficient, pairwise non-associate; the unit soaks up the content.
    """

    unit: Fraction
    factors: tuple

    def recompose(self):
        acc = None
        for poly, mult in self.factors:
            piece = poly ** mult
            acc = piece if acc is None else acc * piece
        if acc is None:
            return self.unit
        return acc.scale(self.unit)

    def is_single_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1


def _bi_to_sympy(f: BiPoly) -> sympy.Poly:
    rep = {e: sympy.Rational(c.numerator, c.denominator) for e, c in f.terms.items()}
    return sympy.Poly.from_dict(rep, _SYM_U, _SYM_V, domain="QQ")


def _bi_from_sympy(p: sympy.Poly) -> BiPoly:
    terms = {}
    for monom, coeff in p.terms():
        q = sympy.Rational(coeff)
        terms[(int(monom[0]), int(monom[1]))] = Fraction(int(q.p), int(q.q))
    return BiPoly(terms)


def _uni_to_sympy(p: UniPoly) -> sympy.Poly:
    rep = {(k,): sympy.Rational(c.numerator, c.denominator) for k, c in enumerate(p.coeffs) if c != 0}
    return sympy.Poly.from_dict(rep, _SYM_U, domain="QQ")


def _uni_from_sympy(p: sympy.Poly) -> UniPoly:
    coeffs = [Fraction(0)] * (p.degree() + 1)
    for (k,), coeff in p.terms():
        q = sympy.Rational(coeff)
        coeffs[int(k)] = Fraction(int(q.p), int(q.q))
    return UniPoly(coeffs)


def _factor_sort_key(item):
    poly, mult = item
    if isinstance(poly, UniPoly):
        return (int(poly.degree), poly.coeffs)
    return (
        int(poly.deg),
        sorted(((e, (c.numerator, c.denominator)) for e, c in poly.terms.items())),
    )


@lru_cache(maxsize=8192)
def _bi_factor_cached(f: BiPoly) -> Factorization:
    content, prim = canonical_primitive(f)
    lead, parts = _bi_to_sympy(prim).factor_list()
    lead = sympy.Rational(lead)
    content *= Fraction(int(lead.p), int(lead.q))
    factors = []
    for spoly, mult in parts:
        fac = _bi_from_sympy(spoly)
        c, prim_fac = canonical_primitive(fac)
        content *= c ** mult
        factors.append((prim_fac, int(mult)))
    factors.sort(key=_factor_sort_key)
    result = Factorization(content, tuple(factors))
    assert result.recompose() == f, "factorization failed to recompose"
    return result


def bi_factor(f: BiPoly, degree_cap: int = DEFAULT_BI_DEGREE_CAP) -> Factorization:
    """Complete irreducible factorization over Q[u, v]."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if f.deg > degree_cap:
        raise DegreeCapError(f"total degree {f.deg} exceeds cap {degree_cap}")
    if f.is_constant:
        return Factorization(f.coeff(0, 0), ())
    return _bi_factor_cached(f)


@lru_cache(maxsize=8192)
def _uni_factor_cached(p: UniPoly) -> Factorization:
    content, prim = uni_canonical_primitive(p)
    lead, parts = _uni_to_sympy(prim).factor_list()
    lead = sympy.Rational(lead)
    content *= Fraction(int(lead.p), int(lead.q))
    factors = []
    for spoly, mult in parts:
        fac = _uni_from_sympy(spoly)
        c, prim_fac = uni_canonical_primitive(fac)
        content *= c ** mult
        factors.append((prim_fac, int(mult)))
    factors.sort(key=_factor_sort_key)
    result = Factorization(content, tuple(factors))
    assert result.recompose() == p, "factorization failed to recompose"
    return result


def uni_factor(p: UniPoly, degree_cap: int = DEFAULT_UNI_DEGREE_CAP) -> Factorization:
    """Complete irreducible factorization over Q[x]."""
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if p.degree > degree_cap:
        raise DegreeCapError(f"degree {p.degree} exceeds cap {degree_cap}")
    if p.is_constant:
        return Factorization(p.coeff(0), ())
    return _uni_factor_cached(p)


# -- irreducibility ---------------------------------------------------------------

_EVAL_POINTS = (0, 1, -1, 2, -2, 3, -3, 5)


def _uni_irreducible(p: UniPoly) -> bool:
    if p.degree == 1:
        return True
    return _uni_to_sympy(p).is_irreducible


def _bi_irreducible_fast(f: BiPoly) -> bool | None:
    """Sound one-sided test: True means proven irreducible, None inconclusive.

    If f is primitive with respect to u and some evaluation f(u, v0) keeps
    full u-degree and is irreducible over Q, then any factorization of f
    would either evaluate to a factorization of f(u, v0) or produce a factor
    in Q[v] dividing the u-content; both are excluded.
    """
    if f.du == 0 or f.dv == 0:
        view = f.v_view() if f.du == 0 else f.u_view()
        coeffs = [c.coeff(0) for c in view]
        return _uni_irreducible(UniPoly(coeffs))

    # Orient so the univariate test runs in the smaller degree.
    g = f if f.du <= f.dv else f.swap()

    cont = UniPoly.zero()
    for c in g.u_view():
        cont = uni_gcd(cont, c)
        if cont.is_constant and not cont.is_zero:
            break
    if not cont.is_constant:
        return False  # nontrivial content in Q[v] splits off
    lead = g.u_view()[int(g.du)]
    for v0 in _EVAL_POINTS:
        if lead.eval(v0) == 0:
            continue
        if _uni_irreducible(g.eval_v(v0)):
            return True
    return None


def is_irreducible(f, degree_cap: int | None = None) -> bool:
    """True iff f is irreducible over Q (constants are rejected)."""
    if isinstance(f, UniPoly):
        if f.is_zero or f.is_constant:
            raise ValueError("irreducibility needs degree >= 1")
        return uni_factor(f, degree_cap or DEFAULT_UNI_DEGREE_CAP).is_single_irreducible()
    if isinstance(f, BiPoly):
        if f.is_zero or f.is_constant:
            raise ValueError("irreducibility needs degree >= 1")
        fast = _bi_irreducible_fast(f)
        if fast is not None:
            return fast
        return bi_factor(f, degree_cap or DEFAULT_BI_DEGREE_CAP).is_single_irreducible()
    raise TypeError("expected UniPoly or BiPoly")
