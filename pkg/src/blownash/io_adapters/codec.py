"""
JSON-ready structures for the exact types.

Integers that can grow without bound (coefficients) are written as decimal strings;
readers accept plain ints too. Exponents, orders and multiplicities stay plain ints.
"""

from __future__ import annotations

from typing import Any

from ..algebra.closed_form import ClosedTerm, RationalBlock, ZetaClosedForm
from ..algebra.laurent import LaurentPoly
from ..algebra.series import IntSeries, SeriesKind, ZetaSeries
from ..model.germ import Germ, render_germ
from ..pipeline.invariants import INVARIANT_NAMES, Classification, Comparison, InvariantProfile
from ..pipeline.run import ZetaResult


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int | str):
        raise ValueError(f"{what} must be an integer or a decimal string, got {value!r}")
    try:
        return int(value)
    except ValueError as exc:
        raise ValueError(f"{what} is not a decimal integer: {value!r}") from exc


def laurent_to_json(p: LaurentPoly) -> list[list[Any]]:
    return [[e, str(c)] for e, c in p.terms]


def laurent_from_json(data: Any) -> LaurentPoly:
    if not isinstance(data, list):
        raise ValueError(f"Laurent polynomial must be a list of [exponent, coefficient] pairs, got {data!r}")
    pairs: list[tuple[int, int]] = []
    for item in data:
        if not isinstance(item, list) or len(item) != 2:
            raise ValueError(f"Laurent term must be [exponent, coefficient], got {item!r}")
        pairs.append((_int(item[0], "exponent"), _int(item[1], "coefficient")))
    return LaurentPoly.from_pairs(pairs)


def series_to_json(s: ZetaSeries) -> dict[str, Any]:
    return {"kind": s.kind.value, "d": s.d, "order": s.order, "coeffs": [laurent_to_json(c) for c in s.coeffs]}


def series_from_json(data: dict[str, Any]) -> ZetaSeries:
    try:
        coeffs = tuple(laurent_from_json(c) for c in data["coeffs"])
        return ZetaSeries(int(data["order"]), coeffs, SeriesKind(data.get("kind", "naive")), data.get("d"))
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"malformed series: {exc!r}") from exc


def int_series_to_json(s: IntSeries) -> dict[str, Any]:
    return {"order": s.order, "modulus": s.modulus, "coeffs": [str(c) for c in s.coeffs]}


def closed_to_json(c: ZetaClosedForm) -> dict[str, Any]:
    return {
        "kind": c.kind.value,
        "d": c.d,
        "terms": [{"coeff": laurent_to_json(t.coeff), "blocks": [[b.nu, b.N] for b in t.blocks]} for t in c.terms],
    }


def closed_from_json(data: dict[str, Any]) -> ZetaClosedForm:
    try:
        terms = tuple(ClosedTerm.of(laurent_from_json(t["coeff"]), (RationalBlock(int(nu), int(n)) for nu, n in t["blocks"])) for t in data["terms"])
        return ZetaClosedForm(terms, SeriesKind(data.get("kind", "naive")), data.get("d"))
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"malformed closed form: {exc!r}") from exc


def germ_to_json(g: Germ) -> dict[str, Any]:
    return {"d": g.d, "terms": [{"exps": list(e), "coeff": str(c)} for e, c in g.terms]}


def germ_from_json(data: dict[str, Any]) -> Germ:
    try:
        support = {tuple(int(x) for x in t["exps"]): _int(t["coeff"], "coefficient") for t in data["terms"]}
        return Germ.from_map(int(data["d"]), support)
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"malformed germ: {exc!r}") from exc


def profile_to_json(p: InvariantProfile) -> dict[str, Any]:
    out: dict[str, Any] = {"order": p.order, "signs": p.has_signs}
    for name in INVARIANT_NAMES:
        s = p.get(name)
        out[name] = None if s is None else int_series_to_json(s)
    return out


def comparison_to_json(c: Comparison) -> dict[str, Any]:
    w = c.witness
    return {
        "a": c.a,
        "b": c.b,
        "verdict": "distinguished" if c.distinguished else "indistinguishable",
        "order": c.order,
        "witness_invariant": None if w is None else w.name,
        "witness_order": None if w is None else w.first_difference,
        "invariants": {v.name: {"verdict": v.verdict, "first_difference": v.first_difference} for v in c.verdicts},
    }


def report_to_json(comparisons: list[Comparison]) -> dict[str, Any]:
    return {"pairs": [comparison_to_json(c) for c in comparisons]}


def classification_to_json(c: Classification) -> dict[str, Any]:
    return {
        "order": c.order,
        "classes": [list(group) for group in c.classes],
        "pairs": [comparison_to_json(s) for s in c.separations],
        "failures": [{"germ": name, "error": err} for name, err in c.failures],
    }


def zeta_to_json(name: str, r: ZetaResult, germ: Germ | None = None) -> dict[str, Any]:
    """The `zeta --format machine` record; zeta_from_json reads it back."""
    return {
        "input": name,
        "germ": None if germ is None else germ_to_json(germ),
        "method": r.method,
        "naive": series_to_json(r.naive),
        "plus": None if r.plus is None else series_to_json(r.plus),
        "minus": None if r.minus is None else series_to_json(r.minus),
        "closed": None if r.closed is None else closed_to_json(r.closed),
        "closed_plus": None if r.closed_plus is None else closed_to_json(r.closed_plus),
        "closed_minus": None if r.closed_minus is None else closed_to_json(r.closed_minus),
    }


def zeta_from_json(data: Any) -> tuple[str, ZetaResult, Germ | None]:
    """Rebuild (name, result, germ) from a zeta record. The name is the germ's canonical print when the record has one."""
    if not isinstance(data, dict) or "naive" not in data:
        raise ValueError("zeta record must be an object with a 'naive' series")

    def opt_series(key: str) -> ZetaSeries | None:
        return None if data.get(key) is None else series_from_json(data[key])

    def opt_closed(key: str) -> ZetaClosedForm | None:
        return None if data.get(key) is None else closed_from_json(data[key])

    plus, minus = opt_series("plus"), opt_series("minus")
    if (plus is None) != (minus is None):
        raise ValueError("zeta record has only one of 'plus' and 'minus'")
    result = ZetaResult(
        method=str(data.get("method", "file")),
        naive=series_from_json(data["naive"]),
        plus=plus,
        minus=minus,
        closed=opt_closed("closed"),
        closed_plus=opt_closed("closed_plus"),
        closed_minus=opt_closed("closed_minus"),
    )
    germ = None if data.get("germ") is None else germ_from_json(data["germ"])
    name = str(data.get("input", "zeta")) if germ is None else render_germ(germ)
    return name, result, germ
