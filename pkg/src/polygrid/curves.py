"""Incidence-curve machinery.

Three curve families are derived from a bivariate polynomial f:

  standard   gamma_{a,b}:  f(a,x) - f(b,y) = 0         (a, b parameters)
  dual       gamma*_{s,e}: f(x,s) - f(y,e) = 0
  projected  gamma_{a,c}:  Res_z(c - f(x,z), y - f(a,z)) = 0

Members are factored into irreducible components to detect components
shared by many curves (compared against the degree thresholds m0), and
point-curve incidences are counted with the shared-component multiplicity
convention: a point on a component lying in k members contributes k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .eliminate import bi_gcd, resultant
from .factor import bi_factor
from .grids import trim_degenerate
from .poly import BiPoly, UniPoly


def curve_poly_std(f: BiPoly, a, b) -> BiPoly:
    """f(a,x) - f(b,y) as a polynomial in (x, y)."""
    return f.eval_u(a).to_bipoly(0) - f.eval_u(b).to_bipoly(1)


def dual_curve_poly(f: BiPoly, xi, eta) -> BiPoly:
    """f(x,xi) - f(y,eta) as a polynomial in (x, y)."""
    return f.eval_v(xi).to_bipoly(0) - f.eval_v(eta).to_bipoly(1)


def proj_curve_poly(f: BiPoly, a, c) -> BiPoly:
    """Projection of {y = f(a,z), c = f(x,z)} to the (x, y) plane.

    Realized as the z-resultant; a zero resultant signals an untrimmed
    input (constant fiber) and is rejected.
    """
    if not f.depends_on_v():
        raise ValueError("projection needs f to depend on its second variable")
    fa = f.eval_u(a)
    if fa.is_constant:
        raise ValueError("degenerate parameter: f(a, .) is constant (untrimmed input)")
    # c - f(x, z): x survives into slot 0; y - f(a, z): y survives into slot 1.
    p = BiPoly.const(c) - f
    q = BiPoly.var_u() - fa.to_bipoly(1)  # y - f(a, z), read in the (y, z) view
    res = resultant(p, q)
    if res.is_zero:
        raise ValueError("identically zero resultant (untrimmed input)")
    return res


@dataclass(frozen=True)
class CurveFamily:
    """A multiset of curves of one kind, tagged with f's degree data."""

    kind: str
    members: tuple
    base_du: int
    base_dv: int
    base_deg: int

    def __len__(self):
        return len(self.members)


def standard_family(f: BiPoly, params_a, params_b) -> CurveFamily:
    members = []
    for a in params_a:
        for b in params_b:
            poly = curve_poly_std(f, a, b)
            if poly.is_zero:
                continue  # a = b with identical fibers carries no curve
            members.append(((Fraction(a), Fraction(b)), poly))
    return CurveFamily("standard", tuple(members), int(f.du), int(f.dv), int(f.deg))


def dual_family(f: BiPoly, params_xi, params_eta) -> CurveFamily:
    members = []
    for xi in params_xi:
        for eta in params_eta:
            poly = dual_curve_poly(f, xi, eta)
            if poly.is_zero:
                continue
            members.append(((Fraction(xi), Fraction(eta)), poly))
    return CurveFamily("dual", tuple(members), int(f.du), int(f.dv), int(f.deg))


def projected_family(f: BiPoly, A, C) -> CurveFamily:
    members = []
    for a in A:
        for c in C:
            members.append(((Fraction(a), Fraction(c)), proj_curve_poly(f, a, c)))
    return CurveFamily("projected", tuple(members), int(f.du), int(f.dv), int(f.deg))


@dataclass(frozen=True)
class ComponentReport:
    """Irreducible components shared across family members.

    multiplicity = number of members (with multiset repetition) the
    component divides.  Thresholds: m0_part1 and its variable-swapped twin
    for the projected setting, m0_part2 = max(d_u^2, d_v^2) for the
    standard/dual setting.  A component is flagged popular when its
    multiplicity exceeds the kind-appropriate threshold.
    """

    components: tuple
    m0_part1: int
    m0_part1_swapped: int
    m0_part2: int
    kind: str

    def popular(self):
        threshold = self.m0_part2 if self.kind in ("standard", "dual") else self.m0_part1
        return [c for c in self.components if c["multiplicity"] > threshold]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "m0_part1": self.m0_part1,
            "m0_part1_swapped": self.m0_part1_swapped,
            "m0_part2": self.m0_part2,
            "components": [
                {
                    "poly": c["poly"].to_text(("x", "y")),
                    "multiplicity": c["multiplicity"],
                    "members": [[str(p) for p in params] for params in c["members"]],
                    "popular_part1": c["multiplicity"] > self.m0_part1,
                    "popular_part2": c["multiplicity"] > self.m0_part2,
                }
                for c in self.components
            ],
        }


def shared_components(family: CurveFamily) -> ComponentReport:
    """Factor every member and bucket irreducible components by canonical form."""
    if not family.members:
        raise ValueError("empty curve family")
    du, dv, d = family.base_du, family.base_dv, family.base_deg
    buckets: dict = {}
    order: list = []
    for params, poly in family.members:
        for comp, _mult in bi_factor(poly).factors:
            if comp not in buckets:
                buckets[comp] = []
                order.append(comp)
            buckets[comp].append(params)
    components = tuple(
        {"poly": comp, "multiplicity": len(buckets[comp]), "members": tuple(buckets[comp])}
        for comp in sorted(order, key=lambda c: (-len(buckets[c]), c.to_text()))
    )
    return ComponentReport(
        components=components,
        m0_part1=du * dv + du * d * (d + dv - 1),
        m0_part1_swapped=du * dv + dv * d * (d + du - 1),
        m0_part2=max(du * du, dv * dv),
        kind=family.kind,
    )


@dataclass(frozen=True)
class IncidenceReport:
    """Point-curve incidences counted per irreducible component."""

    I: int
    per_point: dict
    per_member: tuple

    def to_json(self) -> dict:
        return {
            "I": self.I,
            "per_point": {f"({k[0]},{k[1]})": v for k, v in sorted(self.per_point.items())},
            "per_member": list(self.per_member),
        }


def incidence_count(points, family: CurveFamily) -> IncidenceReport:
    """Count incidences between points and family members.

    Per the multiplicity convention, each (point, member) pair contributes
    the number of distinct irreducible components of the member vanishing
    at the point; a component shared by k members contributes k per point.
    """
    pts = [(Fraction(p), Fraction(q)) for p, q in points]
    per_point = {pt: 0 for pt in pts}
    per_member = []
    factored = [[comp for comp, _ in bi_factor(poly).factors] for _, poly in family.members]
    for comps, (_params, _poly) in zip(factored, family.members):
        member_count = 0
        for comp in comps:
            rows = {}
            for pt in pts:
                x, y = pt
                row = rows.get(x)
                if row is None:
                    row = comp.eval_u(x)
                    rows[x] = row
                if row.eval(y) == 0:
                    per_point[pt] += 1
                    member_count += 1
        per_member.append(member_count)
    total = sum(per_member)
    return IncidenceReport(I=total, per_point=per_point, per_member=tuple(per_member))


def _separated_parts(f: BiPoly):
    """Split f = P(x) - Q(y); None when f has mixed terms.

    The constant term is assigned to P, which leaves degrees and leading
    coefficients (all that the identity check needs) unambiguous.
    """
    p: dict = {}
    q: dict = {}
    for (i, j), c in f.terms.items():
        if i > 0 and j > 0:
            return None
        if j == 0:
            p[i] = c
        else:
            q[j] = -c
    pu = UniPoly([p.get(k, 0) for k in range(max(p) + 1)]) if p else UniPoly.zero()
    qu = UniPoly([q.get(k, 0) for k in range(max(q) + 1)]) if q else UniPoly.zero()
    return pu, qu


def lemma_common_check(f_sep: BiPoly, g_sep: BiPoly):
    """Leading-coefficient power identity for separated polynomials with a
    common factor.

    For f = p1(x) - q1(y), g = p2(x) - q2(y) with deg p_i = deg q_i = d_i,
    nonzero leading coefficients a_i, b_i, and a nontrivial common factor,
    (a1/b1)^{d2} == (a2/b2)^{d1} exactly.  Returns (ok, lhs, rhs).
    """
    fp = _separated_parts(f_sep)
    gp = _separated_parts(g_sep)
    if fp is None or gp is None:
        raise ValueError("inputs must have separated form p(x) - q(y)")
    p1, q1 = fp
    p2, q2 = gp
    if p1.degree != q1.degree or p2.degree != q2.degree:
        raise ValueError("each input needs equal degrees in x and y")
    d1, d2 = int(p1.degree), int(p2.degree)
    if d1 < 1 or d2 < 1:
        raise ValueError("inputs must be nonconstant in both variables")
    a1, b1, a2, b2 = p1.lc, q1.lc, p2.lc, q2.lc
    if 0 in (a1, b1, a2, b2):
        raise ValueError("leading coefficients must be nonzero")
    if bi_gcd(f_sep, g_sep).is_constant:
        raise ValueError("inputs must share a nontrivial common factor")
    lhs = (a1 / b1) ** d2
    rhs = (a2 / b2) ** d1
    return lhs == rhs, lhs, rhs


def cs_incidence_check(f: BiPoly, A, B, C):
    """Exact incidence-side Cauchy-Schwarz bound on trimmed inputs.

    Over the projected family on A x C with points A x C, verifies
    sum_b M_b^2 <= d_v * I + d_u^2 * |B|.  Returns (ok, lhs, rhs).
    """
    A, B, C = list(A), list(B), list(C)
    a2, c2, _report = trim_degenerate(f, A, C)
    if list(a2) != A or list(c2) != C:
        raise ValueError("inputs must be pre-trimmed (trim_degenerate changes them)")
    du, dv = int(f.du), int(f.dv)
    cset = set(C)
    mb = []
    for b in B:
        fb = f.eval_v(b)
        mb.append(sum(1 for a in A if fb.eval(a) in cset))
    family = projected_family(f, A, C)
    points = [(a, c) for a in A for c in C]
    inc = incidence_count(points, family)
    lhs = sum(m * m for m in mb)
    rhs = dv * inc.I + du * du * len(B)
    return lhs <= rhs, lhs, rhs
