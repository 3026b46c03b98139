"""Structural analysis of bivariate polynomials.

The centerpiece is `detect_special`, which decides whether f can be written
as h(phi(u) + psi(v)) or h(phi(u) * psi(v)) with rational univariate
witnesses, and if so produces them.  The additive branch integrates the
separated ratio f_u/f_v; the multiplicative branch recognizes logarithmic
derivatives phi'/phi by reading multiplicities off the squarefree
denominator.  Every candidate is confirmed by exact recomposition before it
is returned, so a non-none verdict is unconditionally sound.

Also here: subring membership f = r(g), full decomposition f = r(q) with
deg r >= 2, the skew form u*p(u)*q(v) + r(v), the associated special-form
polynomial built from the top nonconstant coefficients of f, and shift
reducibility counting.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .eliminate import bi_gcd, uni_divmod, uni_gcd, uni_mod_inverse
from .factor import Factorization, bi_factor, is_irreducible, uni_factor
from .poly import (
    BiPoly,
    UniPoly,
    canonical_primitive,
    divide_exact,
    uni_canonical_primitive,
)


@dataclass(frozen=True)
class Decomposition:
    """f = outer(inner) with deg outer >= 2."""

    outer: UniPoly
    inner: BiPoly

    def recompose(self) -> BiPoly:
        acc = BiPoly.zero()
        for c in reversed(self.outer.coeffs):
            acc = acc * self.inner + BiPoly.const(c)
        return acc

    def to_json(self) -> dict:
        return {"outer": self.outer.to_text("w"), "inner": self.inner.to_text()}


@dataclass(frozen=True)
class SpecialForm:
    """Detector verdict with exact witnesses.

    kind 'additive':        f == h(phi(u) + psi(v))
    kind 'multiplicative':  f == h(phi(u) * psi(v))
    kind 'degenerate-u'/'degenerate-v':  f depends on one variable only
    kind 'none':            no rational witnesses exist
    """

    kind: str
    h: UniPoly | None = None
    phi: UniPoly | None = None
    psi: UniPoly | None = None

    @property
    def is_special(self) -> bool:
        return self.kind != "none"

    def inner(self) -> BiPoly | None:
        if self.kind == "additive" or self.kind == "degenerate-u" or self.kind == "degenerate-v":
            return self.phi.to_bipoly(0) + self.psi.to_bipoly(1)
        if self.kind == "multiplicative":
            return self.phi.to_bipoly(0) * self.psi.to_bipoly(1)
        return None

    def recompose(self) -> BiPoly | None:
        w = self.inner()
        if w is None:
            return None
        acc = BiPoly.zero()
        for c in reversed(self.h.coeffs):
            acc = acc * w + BiPoly.const(c)
        return acc

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.kind != "none":
            out["h"] = self.h.to_text("w")
            out["phi"] = self.phi.to_text("u")
            out["psi"] = self.psi.to_text("v")
        return out


@dataclass(frozen=True)
class SkewForm:
    """f == u*p(u)*q(v) + r(v)."""

    p: UniPoly
    q: UniPoly
    r: UniPoly

    def recompose(self) -> BiPoly:
        up = (UniPoly.x() * self.p).to_bipoly(0)
        return up * self.q.to_bipoly(1) + self.r.to_bipoly(1)

    def to_json(self) -> dict:
        return {"p": self.p.to_text("u"), "q": self.q.to_text("v"), "r": self.r.to_text("v")}


@dataclass(frozen=True)
class AssociatedH:
    """Special-form polynomial associated with f via its coefficient views.

    k is the top u-power whose coefficient (in v) is nonconstant, ell the
    symmetric index; e = deg c_k, e_prime = deg c_{d_u}.  The additive case
    (k < d_u) yields h = c~_ell(u) + scale * c_k(v); the multiplicative case
    (k = d_u) yields h = c~_{d_v}(u)^e_prime * c_{d_u}(v)^{d_v}.
    """

    h: BiPoly
    case: str
    k: int
    ell: int
    e: int
    e_prime: int

    def to_json(self) -> dict:
        return {
            "h": self.h.to_text(),
            "case": self.case,
            "k": self.k,
            "ell": self.ell,
            "e": self.e,
            "e_prime": self.e_prime,
        }


@dataclass(frozen=True)
class SteinReport:
    """Shift reducibility classification over a sample of lambda values."""

    sample: tuple
    reducible_lambdas: tuple
    degree: int

    def to_json(self) -> dict:
        return {
            "sample": [str(x) for x in self.sample],
            "reducible_lambdas": [str(x) for x in self.reducible_lambdas],
            "degree": self.degree,
            "reducible_count": len(self.reducible_lambdas),
        }


# -- membership and decomposition -------------------------------------------------


def membership_in(f: BiPoly, g: BiPoly) -> UniPoly | None:
    """Return r with f = r(g) if f lies in Q[g], else None."""
    if g.is_constant:
        raise ValueError("inner polynomial must be non-constant")
    if f.is_zero:
        return UniPoly.zero()
    dg = int(g.deg)
    lt_g = g.lt_poly()
    coeffs: dict[int, Fraction] = {}
    rest = f
    while not rest.is_zero:
        if rest.is_constant:
            coeffs[0] = rest.coeff(0, 0)
            rest = BiPoly.zero()
            break
        m, rem = divmod(int(rest.deg), dg)
        if rem != 0:
            return None
        lt_rest = rest.lt_poly()
        lt_gm = lt_g ** m
        e, lead = lt_gm.leading_term()
        c = lt_rest.coeff(*e) / lead
        if c == 0 or lt_rest != lt_gm.scale(c):
            return None
        coeffs[m] = c
        rest = rest - (g ** m).scale(c)
        if not rest.is_zero and rest.deg >= m * dg:
            return None
    r = UniPoly(coeffs.get(k, 0) for k in range(max(coeffs) + 1))
    # paranoia: confirm the recomposition bit-exactly
    acc = BiPoly.zero()
    for c in reversed(r.coeffs):
        acc = acc * g + BiPoly.const(c)
    return r if acc == f else None


def _divisor_candidates(fz: Factorization, max_deg: int):
    """Non-constant divisors assembled from a factorization, degree <= max_deg."""
    polys = [p for p, _ in fz.factors]
    mults = [m for _, m in fz.factors]
    seen = set()
    for exps in itertools.product(*(range(m + 1) for m in mults)):
        deg = sum(e * int(p.deg) for e, p in zip(exps, polys))
        if deg < 1 or deg > max_deg:
            continue
        d = BiPoly.const(1)
        for e, p in zip(exps, polys):
            if e:
                d = d * p ** e
        d = canonical_primitive(d)[1]
        if d not in seen:
            seen.add(d)
            yield d


_DECOMPOSE_ANCHORS = ((0, 0), (1, 2), (-1, 3))


def bi_decompose(f: BiPoly) -> Decomposition | None:
    """Find f = r(q) with deg r >= 2, or None if f is indecomposable.

    Candidate inner polynomials are divisors of f - f(a, b): if f = r(q)
    then q - q(a, b) divides that shift, so the divisor search is complete
    for any anchor.  A second anchor is tried before giving up.
    """
    if f.deg < 2:
        raise ValueError("decomposition needs total degree >= 2")
    half = int(f.deg) // 2
    for a, b in _DECOMPOSE_ANCHORS:
        shifted = f - BiPoly.const(f.eval(a, b))
        candidates = sorted(
            _divisor_candidates(bi_factor(shifted), half),
            key=lambda d: (int(d.deg), sorted(d.terms.items())),
        )
        for q in candidates:
            if int(f.deg) % int(q.deg) != 0 or int(f.deg) // int(q.deg) < 2:
                continue
            r = membership_in(f, q)
            if r is not None and r.degree >= 2:
                return Decomposition(r, q)
    return None


def stein_default_sample(f: BiPoly) -> list[Fraction]:
    """Deterministic shift sample 0, 1, -1, 2, -2, ... of size 10*deg f."""
    out = [Fraction(0)]
    k = 1
    while len(out) < 10 * int(f.deg):
        out.append(Fraction(k))
        if len(out) < 10 * int(f.deg):
            out.append(Fraction(-k))
        k += 1
    return out


def stein_count(f: BiPoly, sample) -> SteinReport:
    """Classify each lambda in the sample by reducibility of f - lambda."""
    if f.is_constant:
        raise ValueError("stein_count needs a non-constant polynomial")
    sample = [Fraction(x) for x in sample]
    if len(set(sample)) != len(sample):
        raise ValueError("sample values must be distinct")
    reducible = []
    for lam in sample:
        g = f - BiPoly.const(lam)
        if not is_irreducible(g):
            reducible.append(lam)
    return SteinReport(tuple(sample), tuple(reducible), int(f.deg))


# -- the separated ratio and the detector ------------------------------------------


def _separable_split(h: BiPoly):
    """If h(u,v) factors as H1(u)*H2(v), return (H1, H2) with the anchor
    normalization H2 = h(u0, v)/h(u0, v0); otherwise None.

    One non-vanishing anchor decides: the cross-product identity
    h(u,v)*h(u0,v0) == h(u,v0)*h(u0,v) holds identically iff h separates.
    A nonzero anchor always exists in the (deg+2)^2 grid searched here.
    """
    limit = int(h.deg) + 1
    for u0 in range(limit + 1):
        for v0 in range(limit + 1):
            pivot = h.eval(u0, v0)
            if pivot == 0:
                continue
            left = h.eval_v(v0)   # in u
            right = h.eval_u(u0)  # in v
            if h.scale(pivot) == left.to_bipoly(0) * right.to_bipoly(1):
                return left, right.scale(1 / pivot)
            return None
    return None


def separated_ratio(f: BiPoly):
    """Write f_u/f_v in lowest terms and split it into univariate parts.

    Returns (A_num, A_den, B_num, B_den) with
    f_u/f_v == [A_num(u)/A_den(u)] * [B_num(v)/B_den(v)], or None when the
    reduced numerator or denominator does not separate.
    """
    if not (f.depends_on_u() and f.depends_on_v()):
        raise ValueError("separated_ratio needs dependence on both variables")
    fu = f.partial("u")
    fv = f.partial("v")
    g = bi_gcd(fu, fv)
    p = divide_exact(fu, g)
    q = divide_exact(fv, g)
    assert p is not None and q is not None
    scale, q = canonical_primitive(q)
    p = p.scale(1 / scale)
    ps = _separable_split(p)
    if ps is None:
        return None
    qs = _separable_split(q)
    if qs is None:
        return None
    return ps[0], qs[0], ps[1], qs[1]


def _log_derivative_candidates(num: UniPoly, den: UniPoly, max_deg: int):
    """Monic polynomials phi with phi'/phi proportional to num/den.

    Works by reading t*m_i (t an unknown overall constant, m_i the
    multiplicity of the i-th monic irreducible factor of the squarefree
    denominator) off residues of num modulo each factor, then enumerating
    the integer multiplicity vectors consistent with those ratios.
    """
    if num.is_zero or den.is_zero:
        return
    g = uni_gcd(num, den)
    if not g.is_constant:
        num = uni_divmod(num, g)[0]
        den = uni_divmod(den, g)[0]
    if den.is_constant or den.degree <= num.degree:
        return
    fz = uni_factor(den)
    if any(m != 1 for _, m in fz.factors):
        return
    parts = [p.scale(1 / p.lc) for p, _ in fz.factors]
    scaled = []
    for i, p in enumerate(parts):
        w = p.derivative()
        for j, other in enumerate(parts):
            if j != i:
                w = w * other
        inv = uni_mod_inverse(w, p)
        if inv is None:
            return
        residue = uni_divmod(num * inv, p)[1]
        if not residue.is_constant or residue.is_zero:
            return
        scaled.append(residue.coeff(0))
    ratios = [s / scaled[0] for s in scaled]
    if any(r <= 0 for r in ratios):
        return
    lcm_den = 1
    for r in ratios:
        lcm_den = lcm_den * r.denominator // math.gcd(lcm_den, r.denominator)
    m1 = lcm_den
    while True:
        mults = [r * m1 for r in ratios]
        degree = sum(int(m) * int(p.degree) for m, p in zip(mults, parts))
        if degree > max_deg:
            return
        phi = UniPoly.const(1)
        for m, p in zip(mults, parts):
            phi = phi * p ** int(m)
        yield phi
        m1 += lcm_den


def _degenerate_form(f: BiPoly) -> SpecialForm:
    if f.depends_on_u():
        coeffs = [c.coeff(0) for c in f.u_view()]
        return SpecialForm("degenerate-u", UniPoly(coeffs), UniPoly.x(), UniPoly.zero())
    coeffs = [c.coeff(0) for c in f.v_view()]
    return SpecialForm("degenerate-v", UniPoly(coeffs), UniPoly.zero(), UniPoly.x())


def detect_special(f: BiPoly) -> SpecialForm:
    """Decide whether f is h(phi(u)+psi(v)) or h(phi(u)*psi(v)) over Q.

    Sound unconditionally: a non-none verdict always recomposes exactly.
    Complete for rational witnesses: built-to-be-special inputs are found.
    """
    if f.is_zero:
        raise ValueError("detect_special needs a nonzero polynomial")
    if not (f.depends_on_u() and f.depends_on_v()):
        return _degenerate_form(f)

    split = separated_ratio(f)
    if split is None:
        return SpecialForm("none")
    a_num, a_den, b_num, b_den = split

    # additive: f_u/f_v = phi'(u)/psi'(v) exactly
    if a_den.is_constant and b_num.is_constant:
        phi_prime = a_num.scale(b_num.coeff(0) / a_den.coeff(0))
        psi_prime = b_den
        phi = phi_prime.antiderivative()
        psi = psi_prime.antiderivative()
        w = phi.to_bipoly(0) + psi.to_bipoly(1)
        if not w.is_constant:
            r = membership_in(f, w)
            if r is not None:
                return SpecialForm("additive", r, phi, psi)

    # multiplicative: f_u/f_v = [phi'/phi](u) * [psi/psi'](v)
    for phi in _log_derivative_candidates(a_num, a_den, int(f.du)):
        for psi in _log_derivative_candidates(b_den, b_num, int(f.dv)):
            w = phi.to_bipoly(0) * psi.to_bipoly(1)
            r = membership_in(f, w)
            if r is not None:
                return SpecialForm("multiplicative", r, phi, psi)

    return SpecialForm("none")


# -- skew form -----------------------------------------------------------------------


def detect_skew_form(f: BiPoly) -> SkewForm | None:
    """Write f as u*p(u)*q(v) + r(v) if the u-coefficients allow it."""
    if f.is_zero:
        raise ValueError("detect_skew_form needs a nonzero polynomial")
    view = f.u_view()
    r = view[0] if view else UniPoly.zero()
    tail = view[1:]
    first = next((c for c in tail if not c.is_zero), None)
    if first is None:
        return SkewForm(UniPoly.zero(), UniPoly.const(1), r)
    _, q = uni_canonical_primitive(first)
    lambdas = []
    for c in tail:
        if c.is_zero:
            lambdas.append(Fraction(0))
            continue
        lam = c.lc / q.lc
        if c != q.scale(lam):
            return None
        lambdas.append(lam)
    p = UniPoly(lambdas)
    form = SkewForm(p, q, r)
    assert form.recompose() == f
    return form


# -- associated special-form polynomial ------------------------------------------------


def associated_h(f: BiPoly) -> AssociatedH:
    """Build the special-form polynomial attached to f's coefficient views.

    k (resp. ell) is the largest u-power (resp. v-power) whose coefficient
    polynomial is nonconstant.  k = 0 degenerates to h = f; k < d_u gives an
    additive h; k = d_u a multiplicative one.  In the additive case the
    v-part is scaled by (d_v / e) times the ratio of the two leading
    constants, which is what makes h match across curve-sharing quadruples.
    """
    if not (f.depends_on_u() and f.depends_on_v()):
        raise ValueError("associated_h needs dependence on both variables")
    cs = f.u_view()
    cst = f.v_view()
    du = int(f.du)
    dv = int(f.dv)
    k = max(i for i, c in enumerate(cs) if not c.is_constant)
    ell = max(j for j, c in enumerate(cst) if not c.is_constant)
    e = int(cs[k].degree)
    e_prime = int(cs[du].degree) if not cs[du].is_zero else 0

    if k == 0:
        return AssociatedH(f, "degenerate", k, ell, e, e_prime)

    if k < du:
        scale = Fraction(dv, e)
        if cst[dv].is_constant:
            scale *= cst[dv].coeff(0) / cs[k].lc
        h = cst[ell].to_bipoly(0) + cs[k].to_bipoly(1).scale(scale)
        assert h.deg <= 2 * int(f.deg) ** 2
        return AssociatedH(h, "additive", k, ell, e, e_prime)

    h = cst[dv].to_bipoly(0) ** e_prime * cs[du].to_bipoly(1) ** dv
    assert h.deg <= 2 * int(f.deg) ** 2
    return AssociatedH(h, "multiplicative", k, ell, e, e_prime)
