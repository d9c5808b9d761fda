"""Plain-text views of series, closed forms, profiles and comparison reports."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from ..algebra.closed_form import ClosedTerm, RationalBlock, ZetaClosedForm
from ..algebra.laurent import LaurentPoly
from ..algebra.series import IntSeries, ZetaSeries
from ..model.resolution import ResolutionData, Violation
from ..pipeline.invariants import INVARIANT_NAMES, Classification, Comparison, InvariantProfile


def _md_table(headers: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    line1 = "| " + " | ".join(headers) + " |"
    line2 = "| " + " | ".join("---" for _ in headers) + " |"
    lines = [line1, line2]
    for row in rows:
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines)


def _t_power(n: int) -> str:
    return "T" if n == 1 else f"T^{n}"


def _paren(p: LaurentPoly) -> str:
    s = str(p)
    return s if len(p.terms) == 1 and not s.startswith("-") else f"({s})"


def render_block(b: RationalBlock) -> str:
    """u^-nu T^N / (1 - u^-nu T^N)"""
    x = f"u^-{b.nu} {_t_power(b.N)}"
    return f"[{x}/(1-{x})]"


def render_term(t: ClosedTerm) -> str:
    if not t.blocks:
        return str(t.coeff)
    blocks = " ".join(render_block(b) for b in t.blocks)
    if t.coeff == LaurentPoly.constant(1):
        return blocks
    return f"{_paren(t.coeff)} {blocks}"


def render_closed(c: ZetaClosedForm) -> str:
    terms = c.nonzero_terms()
    if not terms:
        return "0"
    return "\n  + ".join(render_term(t) for t in terms)


def render_series(s: ZetaSeries) -> str:
    parts = [f"{_paren(c)} {_t_power(n)}" for n, c in enumerate(s.coeffs, start=1) if not c.is_zero()]
    body = " + ".join(parts) if parts else "0"
    return f"{body} + O(T^{s.order + 1})"


def render_int_series(s: IntSeries) -> str:
    parts: list[str] = []
    for n, c in enumerate(s.coeffs, start=1):
        if c == 0:
            continue
        mono = _t_power(n)
        body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def render_zeta(label: str, series: ZetaSeries | None, closed: ZetaClosedForm | None) -> str:
    if series is None:
        return f"{label}: unavailable for this germ"
    lines = [f"{label}:"]
    if closed is not None:
        lines.append(f"  closed: {render_closed(closed)}")
    lines.append(f"  series: {render_series(series)}")
    return "\n".join(lines)


def render_profile(p: InvariantProfile) -> str:
    rows = []
    for name in INVARIANT_NAMES:
        s = p.get(name)
        rows.append([name, "n/a" if s is None else render_int_series(s)])
    return f"order {p.order}\n" + _md_table(["invariant", "value"], rows)


def render_comparison(c: Comparison) -> str:
    w = c.witness
    if w is None:
        head = f"{c.a} vs {c.b}: {c.verdict}"
    else:
        head = f"{c.a} vs {c.b}: distinguished by {w.name} at {_t_power(w.first_difference or 0)}"
    rows = [[v.name, v.verdict, "" if v.first_difference is None else _t_power(v.first_difference)] for v in c.verdicts]
    return head + "\n" + _md_table(["invariant", "verdict", "first difference"], rows)


def render_classification(c: Classification) -> str:
    lines = [f"order {c.order}: {len(c.classes)} classes"]
    for k, group in enumerate(c.classes, start=1):
        lines.append(f"  class {k}: {', '.join(group)}")
    if c.separations:
        rows = []
        for s in c.separations:
            w = s.witness
            rows.append([s.a, s.b, "" if w is None else w.name, "" if w is None else _t_power(w.first_difference or 0)])
        lines.append(_md_table(["a", "b", "witness", "at"], rows))
    for name, err in c.failures:
        lines.append(f"  skipped {name}: {err}")
    return "\n".join(lines)


def render_resolution(r: ResolutionData) -> str:
    rows = [[d.id, str(d.N), str(d.nu), "yes" if d.exceptional else "no"] for d in r.divisors]
    out = [f"d = {r.d}" + (f" ({r.note})" if r.note else ""), _md_table(["divisor", "N", "nu", "exceptional"], rows)]
    srows = []
    for st in r.strata:
        srows.append(
            [
                "{" + ", ".join(st.I) + "}",
                str(st.beta),
                "-" if st.cover_plus is None else str(st.cover_plus),
                "-" if st.cover_minus is None else str(st.cover_minus),
            ]
        )
    out.append(_md_table(["I", "beta", "cover +", "cover -"], srows))
    return "\n".join(out)


def render_violations(violations: Sequence[Violation]) -> str:
    if not violations:
        return "ok"
    return "\n".join(f"- {v}" for v in violations)
