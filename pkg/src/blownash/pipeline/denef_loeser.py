from __future__ import annotations

from ..algebra.closed_form import ClosedTerm, RationalBlock, ZetaClosedForm
from ..algebra.laurent import U_MINUS_1
from ..algebra.series import SeriesKind
from ..errors import InvalidData, MissingCoverData
from ..model.resolution import ResolutionData, Stratum, validate


def _blocks(r: ResolutionData, st: Stratum) -> list[RationalBlock]:
    return [RationalBlock(r.divisor(i).nu, r.divisor(i).N) for i in st.I]


def _checked(r: ResolutionData) -> None:
    violations = validate(r)
    if violations:
        raise InvalidData(violations)


def dl_naive(r: ResolutionData) -> ZetaClosedForm:
    """sum over strata of (u-1)^|I| β(E_I^0 ∩ σ^-1(0)) prod_{i in I} u^-nu_i T^N_i / (1 - u^-nu_i T^N_i)."""
    _checked(r)
    terms = tuple(ClosedTerm.of(U_MINUS_1 ** len(st.I) * st.beta, _blocks(r, st)) for st in r.strata if not st.beta.is_zero())
    return ZetaClosedForm(terms, SeriesKind.NAIVE, r.d)


def dl_sign(r: ResolutionData, sign: int) -> ZetaClosedForm:
    """Same sum with (u-1)^(|I|-1) and the β of the sign covers t^m = ±1/unit."""
    _checked(r)
    terms: list[ClosedTerm] = []
    for st in r.strata:
        cover = st.cover(sign)
        if cover is None:
            if not st.beta.is_zero():
                raise MissingCoverData(st.I)
            continue
        if cover.is_zero():
            continue
        terms.append(ClosedTerm.of(U_MINUS_1 ** (len(st.I) - 1) * cover, _blocks(r, st)))
    return ZetaClosedForm(tuple(terms), SeriesKind.PLUS if sign > 0 else SeriesKind.MINUS, r.d)


def has_cover_data(r: ResolutionData) -> bool:
    return any(st.has_covers for st in r.strata)
