"""
Real sign covers over the strata of a toric resolution.

Over E_w^0 the pullback is f∘σ = U(s) · y^N(w) in the chart (s, y) built from the neighbor v,
and the sign cover is the real curve {t^m U(s) = σ}. Its virtual Poincaré polynomial is
k(1+u) - r, with k circles in the smooth compact model and r points added back at the
removed points of E_w. The circles are found by tracing sheets of t over the arcs of E_w^0
and gluing sheet ends at every removed point and across the chart seam.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Literal

from ...algebra.laurent import LaurentPoly
from ...errors import InconsistentResolution, UnsupportedCover
from ...model.germ import Germ
from ...model.polygon import Ray, dot, multiplicity
from .fan import Fan, is_axis
from .roots import RealRoot, evaluate, isolate_real_roots, sample_points

PointKind = Literal["zero", "root", "infinity"]


@dataclass(frozen=True)
class UnitFunction:
    """U(s) = sum over face(w) of c_I s^<v,I>, as a dense coefficient tuple starting at s^0."""

    ray: Ray
    neighbor: Ray
    coeffs: tuple[int, ...]
    N: int  # N(w)
    a: int

    @property
    def twist(self) -> int:
        """D = a·N(w); the opposite chart sees s^D · U(1/s)."""
        return self.a * self.N

    @property
    def order_at_zero(self) -> int:
        return next(i for i, c in enumerate(self.coeffs) if c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def low_coeff(self) -> int:
        return self.coeffs[self.order_at_zero]

    @property
    def top_coeff(self) -> int:
        return self.coeffs[-1]

    def sign_at(self, s: Fraction) -> int:
        x = evaluate(self.coeffs, s)
        return (x > 0) - (x < 0)


def unit_on_ray(fan: Fan, g: Germ, w: Ray, v: Ray) -> UnitFunction:
    if is_axis(w):
        raise ValueError(f"unit functions live on interior rays, got {w}")
    prev, nxt = fan.neighbors(w)
    if v not in (prev, nxt):
        raise ValueError(f"{v} is not adjacent to {w} in the fan")
    total = (prev[0] + nxt[0], prev[1] + nxt[1])
    a = total[0] // w[0]
    n = multiplicity(g, w)
    exps = [(dot(v, (exps[0], exps[1])), c) for exps, c in g.terms if dot(w, (exps[0], exps[1])) == n]
    dense = [0] * (max(e for e, _ in exps) + 1)
    for e, c in exps:
        dense[e] += c
    unit = UnitFunction(ray=w, neighbor=v, coeffs=tuple(dense), N=n, a=a)
    if unit.order_at_zero != multiplicity(g, v):
        raise InconsistentResolution(f"unit on {w} vanishes to order {unit.order_at_zero} at the {v} point, expected N={multiplicity(g, v)}")
    return unit


@dataclass(frozen=True)
class RemovedPoint:
    """
    A point of E_w missing from E_w^0, with the local form U ~ c·z^e there.

    kind "zero" sits at s = 0, "infinity" at s = ∞ (local coordinate 1/s), "root" at a real
    root isolated in (lo, hi). c is the sign of the local leading coefficient.
    """

    kind: PointKind
    e: int
    c: int
    lo: Fraction = Fraction(0)
    hi: Fraction = Fraction(0)


@dataclass
class _Sheets:
    parent: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)

    def add(self, node: tuple[int, int]) -> None:
        self.parent.setdefault(node, node)

    def find(self, node: tuple[int, int]) -> tuple[int, int]:
        while self.parent[node] != node:
            self.parent[node] = self.parent[self.parent[node]]
            node = self.parent[node]
        return node

    def union(self, a: tuple[int, int], b: tuple[int, int]) -> None:
        self.parent[self.find(a)] = self.find(b)

    def components(self) -> int:
        return len({self.find(n) for n in self.parent})


def cover_beta(unit: UnitFunction, m: int, removed: list[RemovedPoint], sign: int) -> LaurentPoly:
    """β of {t^m U(s) = sign} over E_w^0 (E_w minus the removed points)."""
    finite = sorted((p for p in removed if p.kind != "infinity"), key=lambda p: p.lo)
    at_inf = [p for p in removed if p.kind == "infinity"]
    # arcs: (-inf, p0), (p0, p1), ..., (p_last, +inf); one arc when nothing finite is removed
    samples = sample_points(finite)
    n_arcs = len(samples)
    even = m % 2 == 0
    lam = (1, -1) if even else (0,)

    sheets = _Sheets()
    has: list[bool] = []
    for i, s in enumerate(samples):
        # m even: t real iff sign·U > 0, two sheets t = ±|..|; m odd: exactly one sheet
        ok = not even or sign * unit.sign_at(s) > 0
        has.append(ok)
        if ok:
            for lm in lam:
                sheets.add((i, lm))

    # (-1)^(D/m): sign of s^(D/m) for s < 0, converting t to the opposite chart's t' = t·s^(D/m)
    seam_flip = 1
    if even and unit.twist % m == 0:
        seam_flip = -1 if (unit.twist // m) % 2 else 1
    elif even and (has[0] or has[-1]):
        raise UnsupportedCover(f"twist D={unit.twist} is not divisible by m={m} on ray {unit.ray}")

    r = 0

    def glue(point: RemovedPoint, right: int, left: int, conv_right: int, conv_left: int) -> None:
        nonlocal r
        if not even:
            # odd m: one branch of t^m = σ/(c z^e) through the point joins the two sides
            sheets.union((right, 0), (left, 0))
            r += 1
            return
        g = gcd(m, point.e)
        m_red, e_red = m // g, point.e // g
        if m_red % 2 == 0:
            # z = τ^M', t = ζ τ^-E' with M' even: each real place sits on one side of the point
            # and joins the two sheet ends t > 0, t < 0 of that side
            for side in (right, left):
                if has[side]:
                    sheets.union((side, 1), (side, -1))
                    r += 1
            return
        # M' odd, so e is even and both sides see the sign of c: when σc > 0 the real m-th
        # roots ±ζ0 give two real places, each running from z > 0 to z < 0 with t changing
        # sign by (-1)^E'
        if sign * point.c > 0:
            if not (has[right] and has[left]):
                raise UnsupportedCover(f"sheets on one side only at a removed point of ray {unit.ray}")
            flip = -1 if e_red % 2 else 1
            for lm in (1, -1):
                sheets.union((right, lm * conv_right), (left, lm * flip * conv_left))
            r += 2
        elif has[right] or has[left]:
            raise UnsupportedCover(f"local sign data at a removed point of ray {unit.ray} contradicts the arcs")

    for k, point in enumerate(finite):
        glue(point, right=k + 1, left=k, conv_right=1, conv_left=1)

    last = n_arcs - 1
    if at_inf:
        # local coordinate s' = 1/s: s' > 0 is the arc towards +inf, s' < 0 the arc towards -inf
        glue(at_inf[0], right=last, left=0, conv_right=1, conv_left=seam_flip)
    elif even:
        if has[last]:
            for lm in lam:
                sheets.union((last, lm), (0, lm * seam_flip))
    else:
        sheets.union((last, 0), (0, 0))

    k = sheets.components()
    return LaurentPoly.from_map({0: k - r, 1: k})


def point_cover_beta(m: int, unit_value: int, sign: int) -> int:
    """Number of real solutions of t^m = sign/unit_value."""
    if m % 2:
        return 1
    return 2 if sign * unit_value > 0 else 0


def unit_roots(unit: UnitFunction) -> list[RealRoot]:
    """Nonzero real roots of U: the crossings of E_w with branches of the strict transform."""
    return isolate_real_roots(unit.coeffs)


def removed_points(unit: UnitFunction, fan: Fan, g: Germ) -> list[RemovedPoint]:
    """Removed points of E_w in the chart of unit.neighbor: the fixed points with N >= 1 and the branch crossings."""
    prev, nxt = fan.neighbors(unit.ray)
    other = nxt if unit.neighbor == prev else prev
    out: list[RemovedPoint] = []
    n_here = multiplicity(g, unit.neighbor)
    if n_here >= 1:
        out.append(RemovedPoint("zero", e=n_here, c=1 if unit.low_coeff > 0 else -1))
    for root in unit_roots(unit):
        out.append(RemovedPoint("root", e=1, c=unit.sign_at(root.hi), lo=root.lo, hi=root.hi))
    n_other = multiplicity(g, other)
    if n_other >= 1:
        if unit.twist - unit.degree != n_other:
            raise InconsistentResolution(f"unit on {unit.ray} has order {unit.twist - unit.degree} at infinity, expected {n_other}")
        out.append(RemovedPoint("infinity", e=n_other, c=1 if unit.top_coeff > 0 else -1))
    return out
