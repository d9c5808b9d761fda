from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..errors import NotDivisible
from .laurent import ZERO, LaurentPoly


class SeriesKind(str, Enum):
    NAIVE = "naive"
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class ZetaSeries:
    """
    Truncated power series in T over Z[u, u^-1].

    coeffs[i] is the coefficient of T^(i+1); the T^0 coefficient is implicitly 0.
    """

    order: int
    coeffs: tuple[LaurentPoly, ...]
    kind: SeriesKind = SeriesKind.NAIVE
    d: int | None = None

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"truncation order must be >= 1, got {self.order}")
        if len(self.coeffs) != self.order:
            raise ValueError(f"expected {self.order} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls, order: int, kind: SeriesKind = SeriesKind.NAIVE, d: int | None = None) -> ZetaSeries:
        return cls(order, (ZERO,) * order, kind, d)

    def coeff(self, n: int) -> LaurentPoly:
        """Coefficient of T^n (1 <= n <= order)."""
        if not 1 <= n <= self.order:
            raise IndexError(f"T^{n} is outside the truncation 1..{self.order}")
        return self.coeffs[n - 1]

    def truncate(self, order: int) -> ZetaSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series truncated at {self.order} to {order}")
        return ZetaSeries(order, self.coeffs[:order], self.kind, self.d)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def with_coeffs(self, coeffs: tuple[LaurentPoly, ...]) -> ZetaSeries:
        return ZetaSeries(self.order, coeffs, self.kind, self.d)

    def __add__(self, other: ZetaSeries) -> ZetaSeries:
        _same_order(self.order, other.order)
        return self.with_coeffs(tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __sub__(self, other: ZetaSeries) -> ZetaSeries:
        _same_order(self.order, other.order)
        return self.with_coeffs(tuple(a - b for a, b in zip(self.coeffs, other.coeffs, strict=True)))


@dataclass(frozen=True)
class IntSeries:
    """
    Truncated power series in T with integer coefficients (T^1..T^order).

    modulus=2 marks a series read in Z/2Z[[T]]; coefficients are then 0 or 1.
    """

    order: int
    coeffs: tuple[int, ...]
    modulus: int | None = None

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.order:
            raise ValueError(f"expected {self.order} coefficients, got {len(self.coeffs)}")

    def coeff(self, n: int) -> int:
        return self.coeffs[n - 1]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def first_difference(self, other: IntSeries) -> int | None:
        """Smallest n with differing T^n coefficients, or None when equal."""
        _same_order(self.order, other.order)
        for i, (a, b) in enumerate(zip(self.coeffs, other.coeffs, strict=True)):
            if a != b:
                return i + 1
        return None

    def __neg__(self) -> IntSeries:
        return IntSeries(self.order, tuple(-c for c in self.coeffs), self.modulus)

    def __add__(self, other: IntSeries) -> IntSeries:
        _same_order(self.order, other.order)
        return IntSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)), self.modulus)

    def __mul__(self, k: int) -> IntSeries:
        return IntSeries(self.order, tuple(k * c for c in self.coeffs), self.modulus)

    __rmul__ = __mul__


def _same_order(a: int, b: int) -> None:
    if a != b:
        raise ValueError(f"series truncation orders differ: {a} vs {b}")


# ---------------------------- u-specializations ----------------------------


def div_u_minus_1(s: ZetaSeries) -> ZetaSeries:
    """Divide every coefficient by (u-1); NotDivisible names the first offending T^n."""
    out: list[LaurentPoly] = []
    for n, c in enumerate(s.coeffs, start=1):
        q = c.exact_div_u_minus_1()
        if q is None:
            raise NotDivisible(n)
        out.append(q)
    return s.with_coeffs(tuple(out))


def deriv_u(s: ZetaSeries) -> ZetaSeries:
    return s.with_coeffs(tuple(c.derivative() for c in s.coeffs))


def eval_u(s: ZetaSeries, v: int) -> IntSeries:
    """Substitute u := v for v in {-1, 1}."""
    if v not in (-1, 1):
        raise ValueError(f"u can only be specialized to 1 or -1, got {v}")
    return IntSeries(s.order, tuple(c.evaluate_unit(v) for c in s.coeffs))


def mod2(s: IntSeries) -> IntSeries:
    return IntSeries(s.order, tuple(c % 2 for c in s.coeffs), modulus=2)
