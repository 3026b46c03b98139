"""Finite-grid statistics for a bivariate polynomial.

Counts are exact brute force over rational grids: the intersection count M
of the graph w = f(u,v) with A x B x C, its fibers M_c and M_b, the value
multiset energy Q, image sizes, Cauchy-Schwarz and zero-count checks, a
log-log growth fit, and sum/difference/product set cardinalities.  Sets are
lists of distinct Fractions generated from small declarative specs.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .eliminate import uni_gcd
from .poly import BiPoly, UniPoly


@dataclass(frozen=True)
class SetSpec:
    """Declarative finite set of rationals.

    kinds: explicit (values), arithmetic (start/step/n), geometric
    (start/ratio/n), random (seed/num_range/den_range/n).
    """

    kind: str
    values: tuple = ()
    start: Fraction = Fraction(0)
    step: Fraction = Fraction(1)
    ratio: Fraction = Fraction(2)
    n: int = 0
    seed: int = 0
    num_range: int = 50
    den_range: int = 4

    def with_n(self, n: int) -> "SetSpec":
        return SetSpec(
            kind=self.kind,
            values=self.values,
            start=self.start,
            step=self.step,
            ratio=self.ratio,
            n=n,
            seed=self.seed,
            num_range=self.num_range,
            den_range=self.den_range,
        )

    def to_json(self) -> dict:
        if self.kind == "explicit":
            return {"kind": "explicit", "values": [str(v) for v in self.values]}
        if self.kind == "arithmetic":
            return {"kind": "arithmetic", "start": str(self.start), "step": str(self.step), "n": self.n}
        if self.kind == "geometric":
            return {"kind": "geometric", "start": str(self.start), "ratio": str(self.ratio), "n": self.n}
        return {
            "kind": "random",
            "seed": self.seed,
            "num_range": self.num_range,
            "den_range": self.den_range,
            "n": self.n,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SetSpec":
        kind = obj["kind"]
        if kind == "explicit":
            return cls(kind="explicit", values=tuple(Fraction(v) for v in obj["values"]))
        if kind == "arithmetic":
            return cls(kind="arithmetic", start=Fraction(obj["start"]), step=Fraction(obj["step"]), n=int(obj["n"]))
        if kind == "geometric":
            return cls(kind="geometric", start=Fraction(obj["start"]), ratio=Fraction(obj["ratio"]), n=int(obj["n"]))
        if kind == "random":
            return cls(
                kind="random",
                seed=int(obj["seed"]),
                num_range=int(obj.get("num_range", 50)),
                den_range=int(obj.get("den_range", 4)),
                n=int(obj["n"]),
            )
        raise ValueError(f"unknown set kind {kind!r}")


def gen_set(spec: SetSpec) -> list[Fraction]:
    """Deterministic, distinct, ascending realization of a SetSpec."""
    if spec.kind == "explicit":
        vals = [Fraction(v) for v in spec.values]
        if len(set(vals)) != len(vals):
            raise ValueError("explicit set has duplicate values")
        return sorted(vals)
    if spec.kind == "arithmetic":
        if spec.step == 0:
            raise ValueError("arithmetic step must be nonzero")
        vals = [spec.start + k * spec.step for k in range(spec.n)]
        return sorted(vals)
    if spec.kind == "geometric":
        if spec.ratio in (0, 1, -1):
            raise ValueError("geometric ratio must avoid 0, 1, -1")
        if spec.start == 0:
            raise ValueError("geometric start must be nonzero")
        vals = [spec.start * spec.ratio ** k for k in range(spec.n)]
        return sorted(vals)
    if spec.kind == "random":
        rng = random.Random(spec.seed)
        out: set = set()
        tries = 0
        limit = 200 * max(spec.n, 1)
        while len(out) < spec.n:
            num = rng.randint(-spec.num_range, spec.num_range)
            den = rng.randint(1, spec.den_range)
            out.add(Fraction(num, den))
            tries += 1
            if tries > limit:
                raise ValueError("rejection sampling failed to reach n distinct values")
        return sorted(out)
    raise ValueError(f"unknown set kind {spec.kind!r}")


@dataclass(frozen=True)
class GridReport:
    """Exact grid statistics of f on A x B (x C)."""

    M: int
    fiber_counts_by_c: dict
    fiber_counts_by_b: dict
    Q: int
    image_size: int
    sizes: tuple

    def to_json(self) -> dict:
        return {
            "M": self.M,
            "fibers_by_c": {str(k): v for k, v in sorted(self.fiber_counts_by_c.items())},
            "fibers_by_b": {str(k): v for k, v in sorted(self.fiber_counts_by_b.items())},
            "Q": self.Q,
            "image_size": self.image_size,
            "sizes": {"A": self.sizes[0], "B": self.sizes[1], "C": self.sizes[2]},
        }


def _value_table(f: BiPoly, A, B):
    """f(a, b) for all (a, b), evaluated row by row via partial Horner."""
    table = {}
    for a in A:
        fa = f.eval_u(a)
        for b in B:
            table[(a, b)] = fa.eval(b)
    return table


def count_M(f: BiPoly, A, B, C) -> GridReport:
    """Exact count of {(a,b,c) in AxBxC : f(a,b) = c}, with fibers, Q, image."""
    A, B, C = list(A), list(B), list(C)
    table = _value_table(f, A, B)
    cset = set(C)
    m = 0
    by_c = {c: 0 for c in C}
    by_b = {b: 0 for b in B}
    value_counts: dict = {}
    for (a, b), val in table.items():
        value_counts[val] = value_counts.get(val, 0) + 1
        if val in cset:
            m += 1
            by_c[val] += 1
            by_b[b] += 1
    q = sum(k * k for k in value_counts.values())
    return GridReport(
        M=m,
        fiber_counts_by_c=by_c,
        fiber_counts_by_b=by_b,
        Q=q,
        image_size=len(value_counts),
        sizes=(len(A), len(B), len(C)),
    )


def image(f: BiPoly, A, B) -> set:
    """Exact value set of f on A x B."""
    out = set()
    for a in A:
        fa = f.eval_u(a)
        for b in B:
            out.add(fa.eval(b))
    return out


def count_Q(f: BiPoly, A, B) -> int:
    """Quadruples (a,x,b,y) in (AxB)^2 with f(a,x) = f(b,y)."""
    counts: dict = {}
    for a in A:
        fa = f.eval_u(a)
        for b in B:
            val = fa.eval(b)
            counts[val] = counts.get(val, 0) + 1
    return sum(k * k for k in counts.values())


def cs_check(report: GridReport) -> tuple[bool, int, int]:
    """Exact Cauchy-Schwarz inequalities on the fiber counts.

    Checks M^2 <= (sum_c M_c^2) * |C| and M^2 <= (sum_b M_b^2) * |B|;
    returns (ok, slack_c, slack_b) with slacks = RHS - LHS.
    """
    m2 = report.M ** 2
    sum_c = sum(v * v for v in report.fiber_counts_by_c.values())
    sum_b = sum(v * v for v in report.fiber_counts_by_b.values())
    slack_c = sum_c * report.sizes[2] - m2
    slack_b = sum_b * report.sizes[1] - m2
    return slack_c >= 0 and slack_b >= 0, slack_c, slack_b


def sz_check(g: BiPoly, U, V) -> tuple[bool, int, int]:
    """Zero count of g on U x V against the degree bound.

    Returns (ok, zeros, bound) with bound = deg g * min(|U|, |V|).
    """
    if g.is_zero:
        raise ValueError("sz_check needs a nonzero polynomial")
    U, V = list(U), list(V)
    zeros = 0
    for a in U:
        ga = g.eval_u(a)
        for b in V:
            if ga.eval(b) == 0:
                zeros += 1
    bound = int(g.deg) * min(len(U), len(V))
    return zeros <= bound, zeros, bound


def trim_degenerate(f: BiPoly, A, C):
    """Drop a in A with constant fiber f(a, .) and c in C reachable by a
    u-independent fiber f(., z0).

    The z0 in question are the common roots of the nonconstant-power
    coefficients of the u-view; a value c is dropped when c0(v) - c shares a
    root with that gcd over the algebraic closure, which over-approximates
    the real roots and is therefore safe for the downstream inequalities.
    Returns (A2, C2, report).
    """
    A, C = list(A), list(C)
    a_keep = []
    a_removed = []
    for a in A:
        if f.eval_u(a).is_constant:
            a_removed.append(a)
        else:
            a_keep.append(a)

    cs = f.u_view()
    tail_gcd = UniPoly.zero()
    for c in cs[1:]:
        tail_gcd = uni_gcd(tail_gcd, c)
    c_keep = []
    c_removed = []
    if tail_gcd.is_zero or tail_gcd.is_constant:
        # No value z0 kills every u-power at once (beyond the generic case
        # handled by the A trim), so C survives whole.
        c_keep = list(C)
    else:
        c0 = cs[0]
        for c in C:
            shifted = c0 - UniPoly.const(c)
            if shifted.is_zero or not uni_gcd(tail_gcd, shifted).is_constant:
                c_removed.append(c)
            else:
                c_keep.append(c)
    report = {"removed_a": a_removed, "removed_c": c_removed}
    return a_keep, c_keep, report


@dataclass(frozen=True)
class GrowthFit:
    """Least-squares slope of log(value) against log(n)."""

    schedule: tuple
    measurements: tuple
    fitted_exponent: float

    def to_json(self) -> dict:
        return {
            "schedule": list(self.schedule),
            "measurements": [[n, v] for n, v in self.measurements],
            "fitted_exponent": self.fitted_exponent,
        }

    def to_csv(self) -> str:
        lines = ["n,value"]
        lines.extend(f"{n},{v}" for n, v in self.measurements)
        return "\n".join(lines) + "\n"


def fit_exponent(pairs) -> float:
    xs = [math.log(n) for n, _ in pairs]
    ys = [math.log(v) for _, v in pairs]
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    num = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    den = sum((x - xbar) ** 2 for x in xs)
    return num / den


def growth_fit(f: BiPoly, family: SetSpec, schedule, measure: str = "image") -> GrowthFit:
    """Measure image size (or M with C = image) along a schedule of n."""
    schedule = list(schedule)
    if len(schedule) < 3 or any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ValueError("schedule must be strictly increasing with length >= 3")
    measurements = []
    for n in schedule:
        s = gen_set(family.with_n(n))
        if measure == "image":
            value = len(image(f, s, s))
        elif measure == "M":
            img = image(f, s, s)
            value = count_M(f, s, s, sorted(img)).M
        else:
            raise ValueError("measure must be 'image' or 'M'")
        measurements.append((n, value))
    return GrowthFit(tuple(schedule), tuple(measurements), fit_exponent(measurements))


def sum_product_report(A, f: BiPoly | None = None) -> dict:
    """Exact |A+A|, |A-A|, |A*A| and optionally |f(A,A)|."""
    A = list(A)
    if not A:
        raise ValueError("A must be nonempty")
    sums = {a + b for a in A for b in A}
    diffs = {a - b for a in A for b in A}
    prods = {a * b for a in A for b in A}
    out = {
        "size": len(A),
        "sumset": len(sums),
        "difference_set": len(diffs),
        "product_set": len(prods),
    }
    if f is not None:
        out["f_image"] = len(image(f, A, A))
    return out
