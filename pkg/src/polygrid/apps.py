"""Applications: distinct directions, distinct distances, sum-product.

Points live on polynomial curves, distances are compared as exact squared
distances (squaring is injective on nonnegative reals, so the distinct
count is unchanged), and slopes use a dedicated sentinel for vertical
pairs.  The bridge functions run the special-form detector on the slope
and squared-distance polynomials and check the predicted verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import BiPoly, UniPoly, divide_exact
from .structure import SpecialForm, detect_special

VERTICAL = "vertical"


@dataclass(frozen=True)
class ParamCurve:
    """Polynomially parameterized curve t -> (x_1(t), ..., x_d(t))."""

    coords: tuple

    def __post_init__(self):
        if not self.coords:
            raise ValueError("curve needs at least one coordinate")
        if all(c.is_constant for c in self.coords):
            raise ValueError("curve needs a nonconstant coordinate")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def point(self, t) -> tuple:
        return tuple(c.eval(t) for c in self.coords)

    def is_line(self) -> bool:
        return is_line_param(self)

    def to_json(self) -> dict:
        return {"coords": [c.to_text("t") for c in self.coords]}

    @classmethod
    def from_json(cls, obj: dict) -> "ParamCurve":
        from .parse import parse_uni

        return cls(tuple(parse_uni(text, "t") for text in obj["coords"]))


@dataclass(frozen=True)
class PointSet2D:
    points: tuple

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be pairwise distinct")


def slope_poly(fu: UniPoly) -> BiPoly:
    """(f(x) - f(y)) / (x - y); the division is always exact."""
    if fu.is_constant:
        raise ValueError("slope polynomial needs degree >= 1")
    numer = fu.to_bipoly(0) - fu.to_bipoly(1)
    denom = BiPoly.var_u() - BiPoly.var_v()
    q = divide_exact(numer, denom)
    assert q is not None
    return q


def directions_count(points: PointSet2D) -> int:
    """Distinct directions determined by pairs (vertical counts once)."""
    pts = points.points
    if len(pts) < 2:
        raise ValueError("need at least 2 points")
    slopes = set()
    for i in range(len(pts)):
        x1, y1 = pts[i]
        for j in range(i + 1, len(pts)):
            x2, y2 = pts[j]
            if x1 == x2:
                slopes.add(VERTICAL)
            else:
                slopes.add((y2 - y1) / (x2 - x1))
    return len(slopes)


def dist_poly(curve: ParamCurve) -> BiPoly:
    """Squared distance between curve(t) and curve(s), in the (t, s) slots."""
    acc = BiPoly.zero()
    for c in curve.coords:
        diff = c.to_bipoly(0) - c.to_bipoly(1)
        acc = acc + diff * diff
    return acc


def is_line_param(curve: ParamCurve) -> bool:
    """True iff the image lies on a line.

    Tests pairwise proportionality of the shifted coordinates
    x_i(t) - x_i(0); identically-zero coordinates are ignored, and a
    nonlinear parameterization of a line still counts as a line.
    """
    shifted = [c - UniPoly.const(c.eval(0)) for c in curve.coords]
    shifted = [c for c in shifted if not c.is_zero]
    if not shifted:
        return True  # a single point; unreachable for valid curves
    base = shifted[0]
    for other in shifted[1:]:
        if other * base.lc != base * other.lc:
            return False
    return True


def distinct_distances_count(curve: ParamCurve, params) -> int:
    """D(P) for P = {curve(t) : t in params}, via exact squared distances."""
    params = [Fraction(t) for t in params]
    if len(set(params)) != len(params):
        raise ValueError("parameters must be distinct")
    pts = [curve.point(t) for t in params]
    if len(set(pts)) != len(pts):
        raise ValueError("coincident points on the curve")
    dists = set()
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d2 = sum((a - b) ** 2 for a, b in zip(pts[i], pts[j]))
            dists.add(d2)
    return len(dists)


def points_on_graph(fu: UniPoly, params) -> PointSet2D:
    """The planar point set {(t, fu(t))} for a parameter list."""
    pts = tuple((Fraction(t), fu.eval(t)) for t in params)
    return PointSet2D(pts)


def special_form_bridge(case: str, payload) -> SpecialForm:
    """Run the detector on an application polynomial and check the verdict.

    case 'slope': payload is a UniPoly of degree >= 3; the verdict must be
    'none'.  case 'distance': payload is a ParamCurve; the verdict must be
    special iff the curve is a line.
    """
    if case == "slope":
        fu: UniPoly = payload
        if fu.degree < 3:
            raise ValueError("slope bridge needs degree >= 3")
        verdict = detect_special(slope_poly(fu))
        if verdict.is_special:
            raise AssertionError("slope polynomial unexpectedly special")
        return verdict
    if case == "distance":
        curve: ParamCurve = payload
        verdict = detect_special(dist_poly(curve))
        if verdict.is_special != is_line_param(curve):
            raise AssertionError("distance verdict contradicts the line criterion")
        return verdict
    raise ValueError("case must be 'slope' or 'distance'")
