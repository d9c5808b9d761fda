"""
Exact isolation of the nonzero real roots of a square-free integer polynomial.

Sturm's theorem: for a, b not roots of p, the number of distinct roots in (a, b] is
V(a) - V(b), where V counts sign changes along the Sturm sequence evaluated at the point.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Protocol

import sympy

from ...errors import InconsistentResolution
from ...model.germ import Germ
from ...model.polygon import Edge, UniPoly, as_sympy, face, face_polynomial, is_square_free


@dataclass(frozen=True)
class RealRoot:
    """A root isolated in the open interval (lo, hi); p does not vanish at either endpoint."""

    lo: Fraction
    hi: Fraction
    sign_left: int  # sign of p at lo
    sign_right: int  # sign of p at hi

    @property
    def positive(self) -> bool:
        return self.lo >= 0


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def evaluate(p: UniPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _variations(seq: list[sympy.Poly], x: Fraction) -> int:
    r = sympy.Rational(x.numerator, x.denominator)
    signs = [s for s in (int(sympy.sign(q.eval(r))) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:], strict=False) if a != b)


def _cauchy_bound(p: UniPoly) -> Fraction:
    lead = abs(p[-1])
    # strict bound on |root|, plus one so the endpoints are never roots
    return 2 + max(Fraction(abs(c), lead) for c in p[:-1])


def _root_gap(p: UniPoly) -> Fraction:
    # every root z satisfies |z| > |p0| / (|p0| + max|p_i|), so (-gap, gap) holds no root
    low = abs(p[0])
    return Fraction(low, low + max(abs(c) for c in p[1:]))


def _non_root_between(p: UniPoly, lo: Fraction, hi: Fraction) -> Fraction:
    # finitely many roots: some dyadic point of (lo, hi) avoids them
    denom = 2
    while True:
        for k in range(1, denom, 2):
            x = lo + (hi - lo) * Fraction(k, denom)
            if evaluate(p, x) != 0:
                return x
        denom *= 2


def isolate_real_roots(p: UniPoly) -> list[RealRoot]:
    """Nonzero real roots of p, ascending, each alone in its interval."""
    # s = 0 is excluded; strip the factor s^k
    k = next(i for i, c in enumerate(p) if c)
    p = p[k:]
    if len(p) <= 1:
        return []
    if not is_square_free(p):
        raise InconsistentResolution("root isolation needs a square-free polynomial")

    seq = list(sympy.sturm(as_sympy(p)))
    bound = _cauchy_bound(p)
    out: list[RealRoot] = []

    def split(lo: Fraction, hi: Fraction, count: int) -> None:
        if count == 0:
            return
        if count == 1:
            out.append(RealRoot(lo, hi, _sign(evaluate(p, lo)), _sign(evaluate(p, hi))))
            return
        mid = _non_root_between(p, lo, hi)
        left = _variations(seq, lo) - _variations(seq, mid)
        split(lo, mid, left)
        split(mid, hi, count - left)

    gap = _root_gap(p)
    for lo, hi in ((-bound, -gap), (gap, bound)):
        split(lo, hi, _variations(seq, lo) - _variations(seq, hi))
    return out


def real_roots(g: Germ, edge: Edge) -> list[RealRoot]:
    """Real branches of f through the exceptional curve of the edge, in the chart coordinate."""
    return isolate_real_roots(face_polynomial(edge.normal, face(g, edge.normal)))


class Interval(Protocol):
    @property
    def lo(self) -> Fraction: ...

    @property
    def hi(self) -> Fraction: ...


def sample_points(points: Sequence[Interval]) -> list[Fraction]:
    """
    One rational point in each gap between isolated points, left to right.

    points are sorted, each alone in its closed interval [lo, hi] (lo == hi for an exact
    point such as s = 0); neighbouring intervals may share an endpoint only when it is
    none of the points.
    """
    if not points:
        return [Fraction(0)]
    pts = [points[0].lo - 1]
    for a, b in zip(points, points[1:], strict=False):
        if a.hi > b.lo:
            raise InconsistentResolution(f"overlapping isolating intervals [{a.lo}, {a.hi}] and [{b.lo}, {b.hi}]")
        pts.append((a.hi + b.lo) / 2)
    pts.append(points[-1].hi + 1)
    return pts
