"""GCDs and eliminants.

Univariate gcds run a primitive pseudo-remainder sequence on integer
coefficient lists (denominators cleared first), which keeps intermediate
growth polynomial instead of the exponential blowup of naive fraction
Euclid.  The bivariate gcd splits off the content in the second variable
and runs a primitive PRS in the first variable with UniPoly coefficients.
Resultants eliminate a shared variable through the Sylvester matrix, whose
determinant is computed exactly by fraction-free Bareiss elimination.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .poly import (
    BiPoly,
    UniPoly,
    canonical_primitive,
    divide_exact,
    uni_canonical_primitive,
)

# -- integer coefficient-list helpers (dense, trailing nonzero) ---------------


def _ints_from_uni(p: UniPoly) -> list[int]:
    _, prim = uni_canonical_primitive(p)
    return [int(c) for c in prim.coeffs]


def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _int_content(cs: list[int]) -> int:
    g = 0
    for c in cs:
        g = math.gcd(g, c)
    return g


def _int_primitive(cs: list[int]) -> list[int]:
    cs = _trim(list(cs))
    if not cs:
        return cs
    g = _int_content(cs)
    if cs[-1] < 0:
        g = -g
    return [c // g for c in cs]


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b (deg a >= deg b >= 0), over the integers."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lead = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for k in range(db + 1):
            r[shift + k] -= lead * b[k]
        r = _trim(r)
    return r


def uni_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """GCD over the rationals, canonical: integer-primitive, positive lead."""
    if p.is_zero and q.is_zero:
        return UniPoly.zero()
    if p.is_zero:
        return uni_canonical_primitive(q)[1]
    if q.is_zero:
        return uni_canonical_primitive(p)[1]
    a = _ints_from_uni(p)
    b = _ints_from_uni(q)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, _int_primitive(r)
    return UniPoly(a)


def uni_divmod(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Quotient and remainder over the rationals."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    q: dict[int, Fraction] = {}
    r = list(a.coeffs)
    db = int(b.degree)
    lb = b.lc
    while len(r) - 1 >= db and any(c != 0 for c in r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        k = len(r) - 1 - db
        c = r[-1] / lb
        q[k] = c
        for i in range(db + 1):
            r[k + i] -= c * b.coeffs[i]
        r.pop()
    qc = [Fraction(0)] * (max(q) + 1 if q else 0)
    for k, c in q.items():
        qc[k] = c
    return UniPoly(qc), UniPoly(r)


def uni_div_exact(a: UniPoly, b: UniPoly) -> UniPoly | None:
    q, r = uni_divmod(a, b)
    return q if r.is_zero else None


def uni_mod_inverse(a: UniPoly, m: UniPoly) -> UniPoly | None:
    """Inverse of a modulo m over the rationals, None if gcd(a, m) != 1."""
    _, a0 = uni_divmod(a, m)
    if a0.is_zero:
        return None
    r0, r1 = m, a0
    s0, s1 = UniPoly.zero(), UniPoly.const(1)
    while not r1.is_zero:
        q, r = uni_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        return None
    inv = s0.scale(1 / r0.coeff(0))
    _, inv = uni_divmod(inv, m)
    return inv


# -- bivariate gcd -------------------------------------------------------------


def _content_u(f: BiPoly) -> UniPoly:
    """GCD in Q[v] of the u-view coefficients."""
    g = UniPoly.zero()
    for c in f.u_view():
        g = uni_gcd(g, c)
        if g.is_constant and not g.is_zero:
            return UniPoly.const(1)
    return g


def _divide_by_content(f: BiPoly, cont: UniPoly) -> list[UniPoly]:
    out = []
    for c in f.u_view():
        if c.is_zero:
            out.append(c)
            continue
        q = uni_div_exact(c, cont)
        assert q is not None, "content division must be exact"
        out.append(q)
    return out


def _coeffs_trim(cs: list[UniPoly]) -> list[UniPoly]:
    while cs and cs[-1].is_zero:
        cs.pop()
    return cs


def _coeffs_content(cs: list[UniPoly]) -> UniPoly:
    g = UniPoly.zero()
    for c in cs:
        g = uni_gcd(g, c)
        if g.is_constant and not g.is_zero:
            return UniPoly.const(1)
    return g


def _coeffs_primitive(cs: list[UniPoly]) -> list[UniPoly]:
    cs = _coeffs_trim(list(cs))
    if not cs:
        return cs
    g = _coeffs_content(cs)
    if g.is_constant:
        return cs
    out = []
    for c in cs:
        if c.is_zero:
            out.append(c)
        else:
            q = uni_div_exact(c, g)
            assert q is not None
            out.append(q)
    return out


def _coeffs_prem(a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
    """Pseudo-remainder in the first variable; coefficients are UniPoly in v."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lead = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for k in range(db + 1):
            r[shift + k] = r[shift + k] - lead * b[k]
        r = _coeffs_trim(r)
    return r


def _bi_from_uview(cs: list[UniPoly]) -> BiPoly:
    acc = BiPoly.zero()
    for i, c in enumerate(cs):
        if not c.is_zero:
            acc = acc + c.to_bipoly(1) * BiPoly.monomial(i, 0)
    return acc


def bi_gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    """Primitive GCD over Q[u,v], positive graded-lex lead, integer content 1."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero polynomials")
    if f.is_zero:
        return canonical_primitive(g)[1]
    if g.is_zero:
        return canonical_primitive(f)[1]

    cont_f = _content_u(f)
    cont_g = _content_u(g)
    cont = uni_gcd(cont_f, cont_g)

    if f.du == 0 or g.du == 0:
        # One side lives in Q[v]: the gcd is univariate in v.
        if f.du == 0 and g.du == 0:
            return canonical_primitive(cont.to_bipoly(1))[1]
        uni_side = cont_f if f.du == 0 else cont_g
        other_cont = cont_g if f.du == 0 else cont_f
        return canonical_primitive(uni_gcd(uni_side, other_cont).to_bipoly(1))[1]

    a = _coeffs_primitive(_divide_by_content(f, cont_f))
    b = _coeffs_primitive(_divide_by_content(g, cont_g))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _coeffs_prem(a, b)
        a, b = b, _coeffs_primitive(r)
    pp_gcd = _bi_from_uview(_coeffs_primitive(a))
    result = pp_gcd * cont.to_bipoly(1)
    return canonical_primitive(result)[1]


# -- resultant ------------------------------------------------------------------


def sylvester_matrix(p: BiPoly, q: BiPoly) -> list[list[BiPoly]]:
    """Sylvester matrix in the shared second slot (z) of p and q.

    Entries are BiPoly in the surviving variables: p's first slot maps to
    result slot 0, q's first slot to result slot 1.
    """
    m = int(p.dv)
    n = int(q.dv)
    a = [c.to_bipoly(0) for c in p.v_view()]
    b = [c.to_bipoly(1) for c in q.v_view()]
    size = m + n
    rows = []
    for r in range(n):
        row = [BiPoly.zero()] * size
        for k in range(m + 1):
            row[r + k] = a[m - k]
        rows.append(row)
    for r in range(m):
        row = [BiPoly.zero()] * size
        for k in range(n + 1):
            row[r + k] = b[n - k]
        rows.append(row)
    return rows


def _bareiss_det(matrix: list[list[BiPoly]]) -> BiPoly:
    m = [row[:] for row in matrix]
    n = len(m)
    sign = 1
    prev = BiPoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero:
            for r in range(k + 1, n):
                if not m[r][k].is_zero:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return BiPoly.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                div = divide_exact(num, prev)
                assert div is not None, "Bareiss division must be exact"
                m[i][j] = div
            m[i][k] = BiPoly.zero()
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant(p: BiPoly, q: BiPoly) -> BiPoly:
    """Resultant eliminating the second slot shared by p and q.

    p is read in the (x, z) view and q in the (y, z) view; the result lives
    in (x, y).  Both inputs must have positive degree in z.
    """
    if p.is_zero or q.is_zero:
        raise ValueError("resultant of a zero polynomial")
    if p.dv < 1 or q.dv < 1:
        raise ValueError("inputs must have positive degree in the eliminated variable")
    return _bareiss_det(sylvester_matrix(p, q))
