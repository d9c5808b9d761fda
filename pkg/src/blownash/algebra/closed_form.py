"""
Closed forms of zeta functions: finite sums of coeff * prod u^-nu T^N / (1 - u^-nu T^N).

Terms are kept as written (never normalized to one fraction); equality is decided by
clearing every block to the common denominator prod (u^nu - T^N) and comparing numerators.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .laurent import ZERO, LaurentPoly
from .series import SeriesKind, ZetaSeries


@dataclass(frozen=True, order=True)
class RationalBlock:
    """u^-nu T^N / (1 - u^-nu T^N), equivalently T^N / (u^nu - T^N)."""

    nu: int
    N: int

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValueError(f"block multiplicity N must be >= 1, got {self.N}")


@dataclass(frozen=True)
class ClosedTerm:
    coeff: LaurentPoly
    blocks: tuple[RationalBlock, ...]

    @classmethod
    def of(cls, coeff: LaurentPoly, blocks: Iterable[RationalBlock]) -> ClosedTerm:
        return cls(coeff, tuple(sorted(blocks)))

    @property
    def t_order(self) -> int:
        return sum(b.N for b in self.blocks)


@dataclass(frozen=True)
class ZetaClosedForm:
    terms: tuple[ClosedTerm, ...] = ()
    kind: SeriesKind = SeriesKind.NAIVE
    d: int | None = None

    def is_zero(self) -> bool:
        return all(t.coeff.is_zero() for t in self.terms)

    def nonzero_terms(self) -> tuple[ClosedTerm, ...]:
        return tuple(t for t in self.terms if not t.coeff.is_zero())


# ------------------------------ expansion ------------------------------

# dense T-series helpers: index i holds the coefficient of T^i, i = 0..order
_Dense = list[LaurentPoly]


def _dense_mul(a: _Dense, b: _Dense, order: int) -> _Dense:
    out: _Dense = [ZERO] * (order + 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j in range(0, order + 1 - i):
            y = b[j]
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def _block_series(block: RationalBlock, order: int) -> _Dense:
    out: _Dense = [ZERO] * (order + 1)
    k = 1
    while block.N * k <= order:
        out[block.N * k] = LaurentPoly.monomial(-block.nu * k)
        k += 1
    return out


def expand(closed: ZetaClosedForm, order: int) -> ZetaSeries:
    """Exact T^1..T^order coefficients of the rational function."""
    if order < 1:
        raise ValueError(f"truncation order must be >= 1, got {order}")
    total: _Dense = [ZERO] * (order + 1)
    cache: dict[RationalBlock, _Dense] = {}
    for term in closed.terms:
        if term.coeff.is_zero() or term.t_order > order:
            continue
        acc: _Dense = [ZERO] * (order + 1)
        acc[0] = term.coeff
        for block in term.blocks:
            if block not in cache:
                cache[block] = _block_series(block, order)
            acc = _dense_mul(acc, cache[block], order)
        total = [x + y for x, y in zip(total, acc, strict=True)]
    return ZetaSeries(order, tuple(total[1:]), closed.kind, closed.d)


# ------------------------------- equality -------------------------------


@dataclass
class _TPoly:
    """Polynomial in T with Laurent-polynomial coefficients (numerators only)."""

    coeffs: dict[int, LaurentPoly] = field(default_factory=dict)

    @classmethod
    def monomial(cls, t_exp: int, c: LaurentPoly) -> _TPoly:
        return cls({t_exp: c} if not c.is_zero() else {})

    def __add__(self, other: _TPoly) -> _TPoly:
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, ZERO) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return _TPoly(out)

    def __mul__(self, other: _TPoly) -> _TPoly:
        out: dict[int, LaurentPoly] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out.get(i + j, ZERO) + a * b
        return _TPoly({k: c for k, c in out.items() if not c.is_zero()})


def _denominator_factor(block: RationalBlock) -> _TPoly:
    # u^nu - T^N
    return _TPoly({0: LaurentPoly.monomial(block.nu), block.N: LaurentPoly.constant(-1)})


def _numerator(terms: Sequence[ClosedTerm], common: Counter[RationalBlock]) -> _TPoly:
    total = _TPoly()
    for term in terms:
        if term.coeff.is_zero():
            continue
        num = _TPoly.monomial(term.t_order, term.coeff)
        missing = common - Counter(term.blocks)
        for block, mult in sorted(missing.items()):
            for _ in range(mult):
                num = num * _denominator_factor(block)
        total = total + num
    return total


def closed_equal(a: ZetaClosedForm, b: ZetaClosedForm) -> bool:
    """True iff a and b are equal as rational functions of (u, T)."""
    common: Counter[RationalBlock] = Counter()
    for term in (*a.terms, *b.terms):
        if not term.coeff.is_zero():
            common |= Counter(term.blocks)
    return _numerator(a.terms, common).coeffs == _numerator(b.terms, common).coeffs


def single_term(coeff: LaurentPoly, *blocks: tuple[int, int], kind: SeriesKind = SeriesKind.NAIVE, d: int | None = None) -> ZetaClosedForm:
    """Shorthand: single_term(c, (nu, N), ...)."""
    return ZetaClosedForm((ClosedTerm.of(coeff, (RationalBlock(nu, n) for nu, n in blocks)),), kind, d)


