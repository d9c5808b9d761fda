from __future__ import annotations

import pytest

from blownash.errors import DimensionUnsupported
from blownash.io_adapters.germ_parser import parse
from blownash.model.polygon import chart_neighbor, chart_polynomial, degenerate_edges, det, dot, face, multiplicity, nondegenerate, polygon


def test_polygon_of_diagonal_germ() -> None:
    p = polygon(parse("x^2+y^4"))
    assert p.vertices == ((0, 4), (2, 0))
    (edge,) = p.edges
    assert edge.normal == (2, 1)
    assert edge.N == 4
    assert chart_polynomial(edge) == (1, 0, 1)


def test_polygon_drops_points_above_the_hull() -> None:
    p = polygon(parse("x^4 + x*y + y^4 + x*y^5 + x^3*y^3"))
    assert p.vertices == ((0, 4), (1, 1), (4, 0))
    assert p.normals == ((3, 1), (1, 3))


def test_collinear_support_gives_one_edge() -> None:
    p = polygon(parse("x^4 - 5*x^2*y^2 + 4*y^4"))
    (edge,) = p.edges
    assert edge.normal == (1, 1)
    assert len(edge.support) == 3
    # s^4 - 5 s^2 + 4 has four simple real roots
    assert nondegenerate(parse("x^4 - 5*x^2*y^2 + 4*y^4"))


def test_polygon_with_two_edges() -> None:
    p = polygon(parse("y^5 + x^2*y^2 + x^6"))
    assert p.vertices == ((0, 5), (2, 2), (6, 0))
    assert p.normals == ((3, 2), (1, 2))
    assert [e.N for e in p.edges] == [10, 6]


def test_monomial_has_no_edges() -> None:
    p = polygon(parse("x^2*y^3"))
    assert p.vertices == ((2, 3),)
    assert p.edges == ()


def test_multiplicity_and_face() -> None:
    g = parse("x^2+y^4")
    assert multiplicity(g, (1, 1)) == 2
    assert face(g, (1, 1)) == (((2, 0), 1),)
    assert multiplicity(g, (2, 1)) == 4
    assert len(face(g, (2, 1))) == 2


@pytest.mark.parametrize("w", [(1, 1), (2, 1), (1, 2), (3, 2), (5, 7), (1, 0), (0, 1)])
def test_chart_neighbor_is_unimodular(w: tuple[int, int]) -> None:
    assert det(chart_neighbor(w), w) == 1


def test_cusp_face_polynomial_is_linear() -> None:
    (edge,) = polygon(parse("x^3 - y^2")).edges
    assert edge.normal == (2, 3)
    p = chart_polynomial(edge)
    assert len(p) == 2 and p[0] * p[1] < 0


def test_degenerate_germ_is_detected() -> None:
    g = parse("x^2 + 2*x*y + y^2")
    assert not nondegenerate(g)
    (edge,) = degenerate_edges(g)
    assert edge.normal == (1, 1)
    assert nondegenerate(parse("x^2 - y^2"))


def test_polygon_needs_two_variables() -> None:
    with pytest.raises(DimensionUnsupported):
        polygon(parse("x^2+y^2+z^2"))


@pytest.mark.parametrize(
    "text",
    ["x^2+y^4", "x^3-y^2", "y^5 + x^2*y^2 + x^6", "x^4 + x*y + y^4 + x*y^5 + x^3*y^3", "x^4 - 5*x^2*y^2 + 4*y^4", "y^3-x^2*y+x^4"],
)
def test_edge_normal_is_minimal_exactly_on_the_edge(text: str) -> None:
    g = parse(text)
    for edge in polygon(g).edges:
        on_edge = {pt for pt, _ in edge.support}
        assert {edge.start, edge.end} <= on_edge
        for exps, _ in g.terms:
            pt = (exps[0], exps[1])
            if pt in on_edge:
                assert dot(edge.normal, pt) == edge.N
            else:
                assert dot(edge.normal, pt) > edge.N
