"""
Toric resolution data for nondegenerate germs in two variables.

The divisors are the interior rays of the fan (exceptional curves E_w), the axis rays with
N >= 1 (components x = 0 / y = 0 of the strict transform) and one branch divisor per real
root of each face polynomial. Strata are emitted ray by ray in fan order.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from math import gcd

from ...algebra.laurent import ONE, ZERO, LaurentPoly
from ...model.germ import Germ
from ...model.polygon import Ray, dot, polygon
from ...model.resolution import Divisor, ResolutionData, Stratum
from .covers import cover_beta, point_cover_beta, removed_points, unit_on_ray
from .fan import Fan, RayData, build_fan, is_axis, ray_data, refine_fan
from .roots import real_roots

log = logging.getLogger(__name__)

NOTE = "newton2d"
_CIRCLE = LaurentPoly.from_map({0: 1, 1: 1})  # β(real P^1) = 1 + u


def ray_id(w: Ray) -> str:
    return f"E{w[0]}_{w[1]}"


def branch_id(w: Ray, k: int) -> str:
    return f"B{w[0]}_{w[1]}_{k}"


@dataclass(frozen=True)
class _RayInfo:
    data: RayData
    in_j: bool
    roots: int


def minimal_fan(g: Germ) -> Fan:
    """build_fan, plus the ray (1,1) when f is a monomial and the fan has no interior ray."""
    fan = build_fan(polygon(g))
    if len(fan) == 2:
        fan = refine_fan(fan, [0])
    return fan


def _ray_infos(fan: Fan, g: Germ) -> list[_RayInfo]:
    # rays that are not edge normals see a monomial face: no branches cross them
    edges = {e.normal: e for e in polygon(g).edges}
    infos: list[_RayInfo] = []
    for rd in ray_data(fan, g):
        if rd.interior:
            roots = len(real_roots(g, edges[rd.ray])) if rd.ray in edges else 0
            infos.append(_RayInfo(rd, True, roots))
        else:
            infos.append(_RayInfo(rd, rd.N >= 1, 0))
    return infos


def strata_table(fan: Fan, g: Germ) -> list[Stratum]:
    """β of every stratum; covers are left empty."""
    return [Stratum(st.I, st.beta) for st in _strata(fan, g, with_covers=False)]


def _vertex_coeff(g: Germ, v: Ray, w: Ray) -> int:
    # the monomial at the fixed point E_v ∩ E_w: unique minimizer of <v+w, I>
    s = (v[0] + w[0], v[1] + w[1])
    n = min(dot(s, (e[0], e[1])) for e, _ in g.terms)
    (c,) = [c for e, c in g.terms if dot(s, (e[0], e[1])) == n]
    return c


def _point_stratum(ids: tuple[str, str], m: int, unit_value: int, with_covers: bool) -> Stratum:
    if not with_covers:
        return Stratum(ids, ONE)
    plus = LaurentPoly.constant(point_cover_beta(m, unit_value, 1))
    minus = LaurentPoly.constant(point_cover_beta(m, unit_value, -1))
    return Stratum(ids, ONE, plus, minus)


def _strata(fan: Fan, g: Germ, with_covers: bool) -> list[Stratum]:
    infos = _ray_infos(fan, g)
    zero_cover = (ZERO, ZERO) if with_covers else (None, None)
    out: list[Stratum] = []
    for i, info in enumerate(infos):
        w = info.data.ray
        if not info.in_j:
            continue
        if is_axis(w):
            out.append(Stratum((ray_id(w),), ZERO, *zero_cover))
        else:
            neighbors_in_j = int(infos[i - 1].in_j) + int(infos[i + 1].in_j)
            beta = _CIRCLE - neighbors_in_j - info.roots
            if with_covers:
                unit = unit_on_ray(fan, g, w, fan.rays[i - 1])
                removed = removed_points(unit, fan, g)
                plus = cover_beta(unit, info.data.N, removed, 1)
                minus = cover_beta(unit, info.data.N, removed, -1)
                out.append(Stratum((ray_id(w),), beta, plus, minus))
            else:
                out.append(Stratum((ray_id(w),), beta))
            for k in range(1, info.roots + 1):
                b = branch_id(w, k)
                out.append(Stratum((b,), ZERO, *zero_cover))
                # a branch meets E_w transversally with N = 1: m = gcd(N(w), 1) = 1
                out.append(_point_stratum((ray_id(w), b), 1, 1, with_covers))
        if i + 1 < len(infos) and infos[i + 1].in_j:
            nxt = infos[i + 1].data
            m = gcd(info.data.N, nxt.N)
            out.append(_point_stratum((ray_id(w), ray_id(nxt.ray)), m, _vertex_coeff(g, w, nxt.ray), with_covers))
    return out


def resolve_fan(g: Germ, fan: Fan) -> ResolutionData:
    infos = _ray_infos(fan, g)
    divisors: list[Divisor] = []
    for info in infos:
        w = info.data.ray
        if not info.in_j:
            continue
        divisors.append(Divisor(ray_id(w), info.data.N, info.data.nu, exceptional=not is_axis(w)))
        for k in range(1, info.roots + 1):
            divisors.append(Divisor(branch_id(w, k), 1, 1, exceptional=False))
    strata = _strata(fan, g, with_covers=True)
    log.debug("resolve_done", extra={"fan": [list(w) for w in fan.rays], "divisors": len(divisors), "strata": len(strata)})
    return ResolutionData(d=2, divisors=tuple(divisors), strata=tuple(strata), note=NOTE)


def resolve(g: Germ, extra_rays: Sequence[int] = ()) -> ResolutionData:
    """
    Resolution data of a nondegenerate two-variable germ.

    extra_rays refines the minimal fan by point blow-ups (see refine_fan); the zeta
    functions do not depend on it.
    """
    fan = minimal_fan(g)
    if extra_rays:
        fan = refine_fan(fan, extra_rays)
    return resolve_fan(g, fan)

