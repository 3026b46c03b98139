"""Seeded random generators for polynomials, sets and curves.

Everything takes an explicit random.Random so that experiment reports and
the acceptance suite are reproducible bit-for-bit from a single seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .poly import BiPoly, UniPoly


def random_fraction(rng: random.Random, num_range: int = 9, den_range: int = 1) -> Fraction:
    num = rng.randint(-num_range, num_range)
    den = rng.randint(1, den_range) if den_range > 1 else 1
    return Fraction(num, den)


def random_unipoly(
    rng: random.Random,
    degree: int,
    num_range: int = 9,
    nonconstant: bool = False,
) -> UniPoly:
    """Random polynomial of exactly the given degree (lead coefficient nonzero)."""
    while True:
        coeffs = [random_fraction(rng, num_range) for _ in range(degree)]
        lead = Fraction(0)
        while lead == 0:
            lead = random_fraction(rng, num_range)
        p = UniPoly(coeffs + [lead])
        if nonconstant and p.is_constant:
            continue
        return p


def random_bipoly(
    rng: random.Random,
    max_du: int = 3,
    max_dv: int = 3,
    terms: int = 6,
    num_range: int = 9,
    require_both_vars: bool = False,
) -> BiPoly:
    while True:
        d: dict = {}
        for _ in range(terms):
            e = (rng.randint(0, max_du), rng.randint(0, max_dv))
            c = random_fraction(rng, num_range)
            if c != 0:
                d[e] = d.get(e, Fraction(0)) + c
        f = BiPoly(d)
        if f.is_zero or f.is_constant:
            continue
        if require_both_vars and not (f.depends_on_u() and f.depends_on_v()):
            continue
        return f


def random_special(
    rng: random.Random,
    kind: str,
    max_inner_deg: int = 3,
    max_outer_deg: int = 3,
    max_total_deg: int = 12,
):
    """Random f = h(phi(u)+psi(v)) or h(phi(u)*psi(v)), capped in degree.

    Returns (f, h, phi, psi).  phi and psi are nonconstant, deg h >= 1.
    """
    while True:
        dh = rng.randint(1, max_outer_deg)
        dphi = rng.randint(1, max_inner_deg)
        dpsi = rng.randint(1, max_inner_deg)
        inner_deg = max(dphi, dpsi) if kind == "additive" else dphi + dpsi
        if dh * inner_deg > max_total_deg:
            continue
        h = random_unipoly(rng, dh)
        phi = random_unipoly(rng, dphi, nonconstant=True)
        psi = random_unipoly(rng, dpsi, nonconstant=True)
        if kind == "additive":
            w = phi.to_bipoly(0) + psi.to_bipoly(1)
        elif kind == "multiplicative":
            w = phi.to_bipoly(0) * psi.to_bipoly(1)
        else:
            raise ValueError("kind must be 'additive' or 'multiplicative'")
        acc = BiPoly.zero()
        for c in reversed(h.coeffs):
            acc = acc * w + BiPoly.const(c)
        if acc.is_zero or acc.is_constant:
            continue
        return acc, h, phi, psi


def random_rational_set(rng: random.Random, n: int, num_range: int = 50, den_range: int = 4) -> list[Fraction]:
    out: set = set()
    tries = 0
    while len(out) < n:
        out.add(random_fraction(rng, num_range, den_range))
        tries += 1
        if tries > 100 * n + 100:
            raise RuntimeError("could not draw enough distinct rationals")
    return sorted(out)


def random_param_curve(rng: random.Random, dim: int, max_deg: int, line: bool):
    """Random polynomial curve in R^dim; `line` forces the image onto a line."""
    from .apps import ParamCurve

    if line:
        w = random_unipoly(rng, rng.randint(1, max_deg), nonconstant=True)
        coords = []
        for _ in range(dim):
            alpha = random_fraction(rng, 5)
            beta = random_fraction(rng, 5)
            coords.append(w.scale(alpha) + UniPoly.const(beta))
        if all(c.is_constant for c in coords):
            coords[0] = w
        return ParamCurve(tuple(coords))
    if dim < 2 or max_deg < 2:
        raise ValueError("a non-line curve needs dimension >= 2 and degree >= 2")
    while True:
        degrees = [rng.randint(1, max_deg) for _ in range(dim)]
        if max(degrees) < 2:
            degrees[0] = 2
        coords = tuple(random_unipoly(rng, d) for d in degrees)
        curve = ParamCurve(coords)
        if not curve.is_line():
            return curve
