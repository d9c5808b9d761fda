"""
Newton polygon of a two-variable germ.

Only the compact part of the boundary of conv(supp f + R^2_+) is kept. Each compact
edge carries its primitive inward normal w (w1, w2 >= 1) and the monomials of f lying on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import sympy
from sympy.core.intfunc import igcdex

from ..errors import DimensionUnsupported
from .germ import Germ

Point = tuple[int, int]
Ray = tuple[int, int]

# dense univariate polynomial over Z, coeffs[k] is the coefficient of s^k
UniPoly = tuple[int, ...]

_S = sympy.Symbol("s")


def dot(w: Ray, p: Point) -> int:
    return w[0] * p[0] + w[1] * p[1]


def det(v: Ray, w: Ray) -> int:
    return v[0] * w[1] - v[1] * w[0]


@dataclass(frozen=True)
class Edge:
    start: Point  # smaller first coordinate
    end: Point
    normal: Ray
    N: int  # value of <normal, I> on the edge
    support: tuple[tuple[Point, int], ...]  # monomials of f on the edge, by first coordinate

    def __str__(self) -> str:
        return f"{self.start}-{self.end} (normal {self.normal})"


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple[Point, ...]
    edges: tuple[Edge, ...]

    @property
    def normals(self) -> tuple[Ray, ...]:
        return tuple(e.normal for e in self.edges)


def _require_plane(g: Germ) -> None:
    if g.d != 2:
        raise DimensionUnsupported(g.d)


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def polygon(g: Germ) -> NewtonPolygon:
    _require_plane(g)
    lowest: dict[int, int] = {}
    for (i, j), _ in g.terms:
        lowest[i] = min(j, lowest.get(i, j))
    pts = sorted(lowest.items())

    # lower hull, monotone chain; collinear points are dropped
    hull: list[Point] = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)

    # the compact part runs from the leftmost vertex to the first vertex of minimal height
    min_y = min(p[1] for p in hull)
    stop = next(k for k, p in enumerate(hull) if p[1] == min_y)
    vertices = tuple(hull[: stop + 1])

    support = g.support
    edges: list[Edge] = []
    for a, b in zip(vertices, vertices[1:], strict=False):
        dx, dy = b[0] - a[0], b[1] - a[1]
        k = gcd(dx, dy)
        w = (-dy // k, dx // k)
        n = dot(w, a)
        on_edge = tuple(sorted(((i, j), c) for (i, j), c in support.items() if dot(w, (i, j)) == n))
        edges.append(Edge(start=a, end=b, normal=w, N=n, support=on_edge))
    return NewtonPolygon(vertices=vertices, edges=tuple(edges))


def multiplicity(g: Germ, w: Ray) -> int:
    """min over supp f of <w, I>: the order of f along the ray w."""
    return min(dot(w, (exps[0], exps[1])) for exps, _ in g.terms)


def face(g: Germ, w: Ray) -> tuple[tuple[Point, int], ...]:
    """Monomials of f minimizing <w, I>, sorted by exponent."""
    n = multiplicity(g, w)
    return tuple(sorted(((exps[0], exps[1]), c) for exps, c in g.terms if dot(w, (exps[0], exps[1])) == n))


def chart_neighbor(w: Ray) -> Ray:
    """Some v with det(v, w) = 1; (v, w) is then a lattice basis."""
    x, y, _ = igcdex(w[1], w[0])
    return (int(x), -int(y))


def face_polynomial(w: Ray, terms: tuple[tuple[Point, int], ...]) -> UniPoly:
    """
    Face polynomial in the coordinate s of the exceptional curve E_w.

    With v = chart_neighbor(w), p(s) = sum c_I s^(<v,I> - min). For an edge its degree is the
    lattice length and p(0) != 0; its real roots are the real branches of f through E_w.
    """
    v = chart_neighbor(w)
    exps = [(dot(v, pt), c) for pt, c in terms]
    low = min(e for e, _ in exps)
    dense = [0] * (max(e for e, _ in exps) - low + 1)
    for e, c in exps:
        dense[e - low] += c
    return tuple(dense)


def chart_polynomial(edge: Edge) -> UniPoly:
    return face_polynomial(edge.normal, edge.support)


def as_sympy(p: UniPoly) -> sympy.Poly:
    return sympy.Poly(list(reversed(p)), _S, domain="QQ")


def is_square_free(p: UniPoly) -> bool:
    if len(p) <= 2:
        return True
    return bool(as_sympy(p).is_sqf)


def degenerate_edges(g: Germ) -> list[Edge]:
    return [e for e in polygon(g).edges if not is_square_free(chart_polynomial(e))]


def nondegenerate(g: Germ) -> bool:
    return not degenerate_edges(g)
