from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest

from blownash.algebra.closed_form import closed_equal, expand, single_term
from blownash.algebra.laurent import ZERO, LaurentPoly
from blownash.errors import BlownashError, Degenerate, DimensionUnsupported, InconsistentResolution
from blownash.io_adapters.germ_parser import parse
from blownash.io_adapters.resolution_file import load_resolution
from blownash.model.polygon import polygon
from blownash.model.resolution import ResolutionData, validate
from blownash.pipeline.arcspace import zeta_direct
from blownash.pipeline.denef_loeser import dl_naive, dl_sign
from blownash.pipeline.newton2d.covers import point_cover_beta, removed_points, unit_on_ray, unit_roots
from blownash.pipeline.newton2d.fan import Fan, build_fan, ray_data, refine_fan
from blownash.pipeline.newton2d.resolve import minimal_fan, resolve, strata_table
from blownash.pipeline.newton2d.roots import evaluate, isolate_real_roots, real_roots, sample_points

REFDATA = Path(__file__).resolve().parents[2] / "refdata"
CORPUS = ["x^2+y^2", "x^2+y^4", "x^4+y^4", "x^2+y^8", "x^4+y^6", "x^6+y^6"]
# odd exponents and mixed signs: branches cross the exceptional curves at nonzero points
MIXED = ["x^3-y^2", "x^2+y^3", "y^3-x^2*y+x^4", "y^3+x^2*y+x^4", "x^5+y^2", "x^4+x*y+y^4", "x^2-y^2", "x^4-y^6"]
U = LaurentPoly.monomial(1)
ONE_PLUS_U = LaurentPoly.from_map({0: 1, 1: 1})
U_MINUS_1 = LaurentPoly.from_map({1: 1, 0: -1})
U2_MINUS_1 = LaurentPoly.from_map({2: 1, 0: -1})


def _cover(res: ResolutionData, divisor_id: str, sign: int = 1) -> LaurentPoly | None:
    (st,) = [st for st in res.strata if st.I == (divisor_id,)]
    return st.cover(sign)


# ------------------------------- fan -------------------------------


def test_fan_of_x2_y4() -> None:
    fan = build_fan(polygon(parse("x^2+y^4")))
    assert fan.rays == ((1, 0), (2, 1), (1, 1), (0, 1))


def test_fan_of_cusp_is_the_classical_resolution() -> None:
    fan = build_fan(polygon(parse("x^3-y^2")))
    assert fan.rays == ((1, 0), (1, 1), (2, 3), (1, 2), (0, 1))
    data = {rd.ray: (rd.N, rd.nu) for rd in ray_data(fan, parse("x^3-y^2"))}
    assert data[(1, 1)] == (2, 2)
    assert data[(2, 3)] == (6, 5)
    assert data[(1, 2)] == (3, 3)


def test_ray_data_of_x2_y4() -> None:
    data = {rd.ray: rd for rd in ray_data(minimal_fan(parse("x^2+y^4")), parse("x^2+y^4"))}
    assert (data[(2, 1)].N, data[(2, 1)].nu, data[(2, 1)].a) == (4, 3, 1)
    assert (data[(1, 1)].N, data[(1, 1)].nu, data[(1, 1)].a) == (2, 2, 2)
    assert data[(1, 0)].a is None and not data[(1, 0)].interior


def test_fan_rejects_gaps_and_bad_endpoints() -> None:
    with pytest.raises(ValueError):
        Fan(((1, 0), (0, 1), (1, 1)))
    with pytest.raises(ValueError):
        Fan(((1, 0), (2, 1), (0, 1)))


def test_refine_inserts_sums() -> None:
    fan = build_fan(polygon(parse("x^2+y^2")))
    finer = refine_fan(fan, [0, 0])
    assert finer.rays == ((1, 0), (3, 1), (2, 1), (1, 1), (0, 1))
    with pytest.raises(ValueError):
        refine_fan(fan, [2])


def test_monomial_gets_an_exceptional_ray() -> None:
    assert minimal_fan(parse("x", d=2)).rays == ((1, 0), (1, 1), (0, 1))


def test_degenerate_germ_is_refused() -> None:
    with pytest.raises(Degenerate):
        resolve(parse("x^2 + 2*x*y + y^2"))
    with pytest.raises(DimensionUnsupported):
        resolve(parse("x^2+y^2+z^2"))


# ------------------------------- roots -------------------------------


def test_isolate_real_roots_brackets_each_root() -> None:
    # s^2 - 2
    roots = isolate_real_roots((-2, 0, 1))
    assert len(roots) == 2
    assert roots[0].hi <= 0 <= roots[1].lo
    for r in roots:
        assert evaluate((-2, 0, 1), r.lo) * evaluate((-2, 0, 1), r.hi) < 0
    assert roots[0].lo < -Fraction(141, 100) and roots[1].hi > Fraction(141, 100)


def test_isolate_close_roots() -> None:
    # (s - 1)(s - 2)(s - 3)(s + 5)
    p = _expand([1, 2, 3, -5])
    roots = isolate_real_roots(p)
    assert len(roots) == 4
    for x, r in zip([-5, 1, 2, 3], roots, strict=True):
        assert r.lo < x < r.hi


def _expand(roots: list[int]) -> tuple[int, ...]:
    p = [1]
    for r in roots:
        q = [0] * (len(p) + 1)
        for i, c in enumerate(p):
            q[i] -= r * c
            q[i + 1] += c
        p = q
    return tuple(p)


def test_isolate_skips_zero_and_complex_roots() -> None:
    assert isolate_real_roots((1, 0, 1)) == []
    assert isolate_real_roots((0, 0, 0, 0, 1)) == []
    assert len(isolate_real_roots((0, -1, 0, 1))) == 2
    with pytest.raises(ValueError):
        isolate_real_roots((1, 2, 1))


def test_root_intervals_stay_clear_of_zero() -> None:
    # s^3 (s - 1) and s (s + 1)(s - 2)
    for p in [(0, 0, 0, -1, 1), (0, -2, -1, 1)]:
        roots = isolate_real_roots(p)
        assert all(r.hi < 0 or r.lo > 0 for r in roots)
        assert 0 not in sample_points(roots)
    assert len(isolate_real_roots((0, -2, -1, 1))) == 2


def test_real_roots_on_edges() -> None:
    def roots_of(text: str) -> list:
        g = parse(text)
        (edge,) = polygon(g).edges
        return real_roots(g, edge)

    assert roots_of("x^2+y^4") == []
    assert len(roots_of("x^2-y^2")) == 2
    (r,) = roots_of("x^2+y^3")
    assert r.lo < -1 < r.hi
    for text in MIXED:
        g = parse(text)
        for edge in polygon(g).edges:
            roots = real_roots(g, edge)
            for r in roots:
                assert isinstance(r.lo, Fraction) and isinstance(r.hi, Fraction)
                assert r.hi < 0 or r.lo > 0
            for a, b in zip(roots, roots[1:], strict=False):
                assert a.hi <= b.lo


def test_overlapping_points_are_inconsistent() -> None:
    (a,) = isolate_real_roots((-1, 1))
    with pytest.raises(InconsistentResolution) as info:
        sample_points([a, a])
    assert isinstance(info.value, BlownashError)


def test_sample_points_fall_between_roots() -> None:
    roots = isolate_real_roots(_expand([-1, 1]))
    pts = sample_points(roots)
    assert len(pts) == 3
    assert pts[0] < -1 < pts[1] < 1 < pts[2]
    assert sample_points([]) == [Fraction(0)]


# ------------------------------- units and covers -------------------------------


def test_unit_of_x2_y4_on_its_edge_ray() -> None:
    g = parse("x^2+y^4")
    fan = minimal_fan(g)
    unit = unit_on_ray(fan, g, (2, 1), (1, 0))
    assert unit.coeffs == (1, 0, 1)
    assert unit.twist == 4
    (point,) = removed_points(unit, fan, g)
    assert point.kind == "infinity" and point.e == 2


def test_unit_on_a_vertex_ray_is_a_monomial() -> None:
    g = parse("x^2+y^4")
    fan = minimal_fan(g)
    unit = unit_on_ray(fan, g, (1, 1), (2, 1))
    assert unit.coeffs == (0, 0, 0, 0, 1)
    assert unit_roots(unit) == []
    (point,) = removed_points(unit, fan, g)
    assert point.kind == "zero" and point.e == 4 and point.c == 1


def test_unit_of_two_lines_has_two_crossings() -> None:
    g = parse("x^2-y^2")
    fan = minimal_fan(g)
    unit = unit_on_ray(fan, g, (1, 1), (1, 0))
    assert len(unit_roots(unit)) == 2
    kinds = [p.kind for p in removed_points(unit, fan, g)]
    assert kinds == ["root", "root"]


def test_unit_on_a_fan_of_another_germ_is_inconsistent() -> None:
    fan = minimal_fan(parse("x^2+y^2"))
    with pytest.raises(InconsistentResolution) as info:
        unit_on_ray(fan, parse("x^2+y^3"), (1, 1), (1, 0))
    assert isinstance(info.value, BlownashError)


def test_point_covers() -> None:
    assert point_cover_beta(3, -1, 1) == 1
    assert point_cover_beta(2, 1, 1) == 2
    assert point_cover_beta(2, 1, -1) == 0
    assert point_cover_beta(4, -7, -1) == 2


# ------------------------------- resolve -------------------------------


def test_resolve_x2_y2_is_one_blow_up() -> None:
    res = resolve(parse("x^2+y^2"))
    assert [(d.id, d.N, d.nu, d.exceptional) for d in res.divisors] == [("E1_1", 2, 2, True)]
    (st,) = res.strata
    assert st.beta == ONE_PLUS_U
    assert st.cover_plus == ONE_PLUS_U
    assert st.cover_minus == ZERO
    assert validate(res) == []


def test_resolve_x2_y4_cover_values() -> None:
    res = resolve(parse("x^2+y^4"))
    assert _cover(res, "E1_1") == U * 2
    assert _cover(res, "E2_1") == U_MINUS_1
    assert _cover(res, "E1_1", -1) == ZERO
    assert res.strata == load_resolution(REFDATA / "x2y4.json").strata


def test_strata_table_matches_resolve_betas() -> None:
    g = parse("x^2+y^4")
    table = strata_table(minimal_fan(g), g)
    assert [(st.I, st.beta) for st in table] == [(st.I, st.beta) for st in resolve(g).strata]
    assert all(not st.has_covers for st in table)


def test_resolve_two_lines_adds_branch_divisors() -> None:
    res = resolve(parse("x^2-y^2"))
    ids = [d.id for d in res.divisors]
    assert ids == ["E1_1", "B1_1_1", "B1_1_2"]
    assert res.divisor("B1_1_1").N == 1 and not res.divisor("B1_1_1").exceptional
    (st,) = [st for st in res.strata if st.I == ("E1_1",)]
    assert st.beta == U_MINUS_1
    assert st.cover_plus == U_MINUS_1 and st.cover_minus == U_MINUS_1
    assert validate(res) == []


def test_resolve_smooth_germ() -> None:
    res = resolve(parse("x", d=2))
    z, zp, zm = zeta_direct(parse("x", d=2), 10)
    assert expand(dl_naive(res), 10).coeffs == z.coeffs
    assert zp is None and zm is None
    assert _cover(res, "E1_1") == U and _cover(res, "E1_1", -1) == U


@pytest.mark.parametrize("k", [2, 4, 6])
def test_plane_brieskorn_closed_forms(k: int) -> None:
    pos = resolve(parse(f"x^{k}+y^{k}"))
    assert closed_equal(dl_naive(pos), single_term(U2_MINUS_1, (2, k)))
    assert closed_equal(dl_sign(pos, 1), single_term(ONE_PLUS_U, (2, k)))
    assert dl_sign(pos, -1).is_zero()
    neg = resolve(parse(f"-(x^{k}+y^{k})"))
    assert closed_equal(dl_naive(neg), single_term(U2_MINUS_1, (2, k)))
    assert closed_equal(dl_sign(neg, -1), single_term(ONE_PLUS_U, (2, k)))
    assert dl_sign(neg, 1).is_zero()


@pytest.mark.parametrize("text", CORPUS)
def test_resolution_agrees_with_arc_enumeration(text: str) -> None:
    g = parse(text)
    res = resolve(g)
    z, zp, zm = zeta_direct(g, 20)
    assert zp is not None and zm is not None
    assert expand(dl_naive(res), 20).coeffs == z.coeffs
    assert expand(dl_sign(res, 1), 20).coeffs == zp.coeffs
    assert expand(dl_sign(res, -1), 20).coeffs == zm.coeffs


@pytest.mark.parametrize("positions", [(0,), (1,), (0, 0), (0, 2, 1)])
@pytest.mark.parametrize("text", CORPUS)
def test_refinement_leaves_zeta_functions_unchanged(text: str, positions: tuple[int, ...]) -> None:
    g = parse(text)
    base, finer = resolve(g), resolve(g, positions)
    assert finer != base
    assert closed_equal(dl_naive(base), dl_naive(finer))
    assert closed_equal(dl_sign(base, 1), dl_sign(finer, 1))
    assert closed_equal(dl_sign(base, -1), dl_sign(finer, -1))


@pytest.mark.parametrize("text", [*CORPUS, "x^2-y^2", "x^3+y^3", "-(x^4+y^6)"])
def test_euler_characteristic_relation(text: str) -> None:
    res = resolve(parse(text))
    order = 20
    z = expand(dl_naive(res), order)
    zp = expand(dl_sign(res, 1), order)
    zm = expand(dl_sign(res, -1), order)
    for n in range(1, order + 1):
        assert z.coeff(n).evaluate_unit(-1) == -(zp.coeff(n).evaluate_unit(-1) + zm.coeff(n).evaluate_unit(-1))


def _sign_euler_holds(res: ResolutionData, order: int = 16) -> bool:
    z = expand(dl_naive(res), order)
    zp = expand(dl_sign(res, 1), order)
    zm = expand(dl_sign(res, -1), order)
    return all(z.coeff(n).evaluate_unit(-1) == -(zp.coeff(n).evaluate_unit(-1) + zm.coeff(n).evaluate_unit(-1)) for n in range(1, order + 1))


@pytest.mark.parametrize("text", MIXED)
def test_germs_with_branches_resolve(text: str) -> None:
    g = parse(text)
    res = resolve(g)
    assert validate(res) == []
    assert _sign_euler_holds(res)
    last = len(minimal_fan(g).rays) - 2
    for positions in [(0,), (last,), (0, 0), (last, 0, 1)]:
        finer = resolve(g, positions)
        assert validate(finer) == []
        assert closed_equal(dl_naive(res), dl_naive(finer))
        assert closed_equal(dl_sign(res, 1), dl_sign(finer, 1))
        assert closed_equal(dl_sign(res, -1), dl_sign(finer, -1))


def test_cusp_sign_zeta_functions_are_mirror_images() -> None:
    # x -> -x carries one germ to the other
    a, b = resolve(parse("x^3-y^2")), resolve(parse("-x^3-y^2"))
    assert closed_equal(dl_naive(a), dl_naive(b))
    assert closed_equal(dl_sign(a, 1), dl_sign(b, 1))
    assert not dl_sign(a, 1).is_zero() and not dl_sign(a, -1).is_zero()


def test_negative_cover_over_a_ray_with_a_root_next_to_zero() -> None:
    # on E_(1,2) the unit is s^3 (s - 1): negative on (0, 1)
    res = resolve(parse("y^3-x^2*y+x^4"))
    assert _cover(res, "E1_2", -1) not in (None, ZERO)
    assert _sign_euler_holds(res)
