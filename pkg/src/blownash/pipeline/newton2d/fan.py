from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from ...errors import Degenerate, InconsistentResolution
from ...model.germ import Germ
from ...model.polygon import NewtonPolygon, Point, Ray, chart_polynomial, det, face, is_square_free, multiplicity, polygon

X_AXIS: Ray = (1, 0)
Y_AXIS: Ray = (0, 1)


@dataclass(frozen=True)
class Fan:
    """Primitive rays of the closed first quadrant from (1,0) to (0,1), sorted by angle."""

    rays: tuple[Ray, ...]

    def __post_init__(self) -> None:
        if len(self.rays) < 2 or self.rays[0] != X_AXIS or self.rays[-1] != Y_AXIS:
            raise ValueError(f"fan must start at (1,0) and end at (0,1): {self.rays}")
        for v, w in zip(self.rays, self.rays[1:], strict=False):
            if det(v, w) != 1:
                raise ValueError(f"fan is not unimodular at {v}, {w}")

    def __len__(self) -> int:
        return len(self.rays)

    def index(self, w: Ray) -> int:
        return self.rays.index(w)

    def neighbors(self, w: Ray) -> tuple[Ray, Ray]:
        i = self.index(w)
        if i == 0 or i == len(self.rays) - 1:
            raise ValueError(f"axis ray {w} has only one neighbor")
        return self.rays[i - 1], self.rays[i + 1]

    def interior(self) -> tuple[Ray, ...]:
        return self.rays[1:-1]


def is_axis(w: Ray) -> bool:
    return w in (X_AXIS, Y_AXIS)


def _angle_key(w: Ray) -> Fraction:
    return Fraction(w[1], w[0])


def _subdivide(v: Ray, r: Ray) -> list[Ray]:
    # rays strictly between v and r making every consecutive det equal to 1
    delta = det(v, r)
    if delta == 1:
        return []
    k = next(k for k in range(1, delta) if (r[0] + k * v[0]) % delta == 0 and (r[1] + k * v[1]) % delta == 0)
    w = ((r[0] + k * v[0]) // delta, (r[1] + k * v[1]) // delta)
    return [w, *_subdivide(w, r)]


def build_fan(p: NewtonPolygon) -> Fan:
    """Minimal unimodular fan containing both axes and every edge normal."""
    cones = [X_AXIS, *sorted(set(p.normals), key=_angle_key), Y_AXIS]
    rays: list[Ray] = [X_AXIS]
    for v, r in zip(cones, cones[1:], strict=False):
        rays.extend(_subdivide(v, r))
        rays.append(r)
    return Fan(tuple(rays))


def refine_fan(fan: Fan, positions: Iterable[int]) -> Fan:
    """
    Insert v+w between rays[i] and rays[i+1] for each position i.

    Positions are applied in order, each against the fan produced so far.
    """
    rays = list(fan.rays)
    for i in positions:
        if not 0 <= i < len(rays) - 1:
            raise ValueError(f"refinement position {i} is outside 0..{len(rays) - 2}")
        v, w = rays[i], rays[i + 1]
        rays.insert(i + 1, (v[0] + w[0], v[1] + w[1]))
    return Fan(tuple(rays))


@dataclass(frozen=True)
class RayData:
    ray: Ray
    N: int
    nu: int
    a: int | None  # v_prev + v_next = a * ray; None on the axes
    face: tuple[tuple[Point, int], ...]  # monomials of f minimizing <ray, I>

    @property
    def interior(self) -> bool:
        return self.a is not None


def ray_data(fan: Fan, g: Germ) -> list[RayData]:
    """Multiplicity N, discrepancy nu and self-intersection datum a for every ray of the fan."""
    for edge in polygon(g).edges:
        if not is_square_free(chart_polynomial(edge)):
            raise Degenerate(edge)
    out: list[RayData] = []
    for i, w in enumerate(fan.rays):
        a: int | None = None
        if not is_axis(w):
            prev, nxt = fan.rays[i - 1], fan.rays[i + 1]
            total = (prev[0] + nxt[0], prev[1] + nxt[1])
            # w is primitive with w1 >= 1, so the first coordinate determines a
            a = total[0] // w[0]
            if (a * w[0], a * w[1]) != total:
                raise InconsistentResolution(f"neighbors of {w} do not sum to a multiple of it")
        out.append(RayData(ray=w, N=multiplicity(g, w), nu=w[0] + w[1], a=a, face=face(g, w)))
    return out
