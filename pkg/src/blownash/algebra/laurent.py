from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class LaurentPoly:
    """
    Exact Laurent polynomial in u over the integers.

    terms: (exponent, coefficient) pairs sorted by exponent, no zero coefficients.
    The zero polynomial has no terms; its degree and valuation are None (minus infinity).
    """

    terms: tuple[tuple[int, int], ...] = ()

    # --- construction -------------------------------------------------

    @classmethod
    def from_map(cls, coeffs: Mapping[int, int]) -> LaurentPoly:
        return cls(tuple(sorted((int(e), int(c)) for e, c in coeffs.items() if c)))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> LaurentPoly:
        acc: dict[int, int] = {}
        for e, c in pairs:
            acc[e] = acc.get(e, 0) + c
        return cls.from_map(acc)

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls(((0, c),)) if c else cls()

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls(((exponent, coeff),)) if coeff else cls()

    def __post_init__(self) -> None:
        prev: int | None = None
        for e, c in self.terms:
            if c == 0:
                raise ValueError("LaurentPoly terms must not store zero coefficients")
            if prev is not None and e <= prev:
                raise ValueError("LaurentPoly terms must be sorted by strictly increasing exponent")
            prev = e

    # --- views --------------------------------------------------------

    def coeff(self, exponent: int) -> int:
        for e, c in self.terms:
            if e == exponent:
                return c
        return 0

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | None:
        return self.terms[-1][0] if self.terms else None

    @property
    def valuation(self) -> int | None:
        return self.terms[0][0] if self.terms else None

    # --- ring operations ----------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        o = _coerce(other)
        acc = dict(self.terms)
        for e, c in o.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly.from_map(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly(tuple((e, c * other) for e, c in self.terms))
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_map(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self.terms) == 1 and self.terms[0][1] in (1, -1):
                e, c = self.terms[0]
                return LaurentPoly.monomial(e * k, 1 if k % 2 == 0 else c)
            raise ValueError("only units u^k and -u^k can be inverted")
        out = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by u^k."""
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms))

    # --- calculus / specialization -------------------------------------

    def derivative(self) -> LaurentPoly:
        return LaurentPoly.from_map({e - 1: e * c for e, c in self.terms if e != 0})

    def evaluate(self, v: int | Fraction) -> Fraction:
        if v == 0 and self.terms and self.terms[0][0] < 0:
            raise ZeroDivisionError("cannot evaluate a negative power of u at 0")
        x = Fraction(v)
        return sum((Fraction(c) * x**e for e, c in self.terms), Fraction(0))

    def evaluate_unit(self, v: int) -> int:
        """Exact value at u = 1 or u = -1 (both are units, so negative powers are fine)."""
        if v == 1:
            return sum(c for _, c in self.terms)
        if v == -1:
            return sum(c if e % 2 == 0 else -c for e, c in self.terms)
        raise ValueError(f"u can only be specialized to 1 or -1 here, got {v}")

    def exact_div_u_minus_1(self) -> LaurentPoly | None:
        """Return self/(u-1) when the division is exact, else None."""
        if not self.terms:
            return self
        low = self.terms[0][0]
        dense = [0] * (self.terms[-1][0] - low + 1)
        for e, c in self.terms:
            dense[e - low] = c
        # synthetic division by (u - 1), highest degree first
        quot = [0] * (len(dense) - 1)
        carry = 0
        for i in range(len(dense) - 1, 0, -1):
            carry += dense[i]
            quot[i - 1] = carry
        if carry + dense[0] != 0:
            return None
        return LaurentPoly.from_map({low + i: c for i, c in enumerate(quot)})

    # --- rendering -----------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for e, c in reversed(self.terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "u" if e == 1 else f"u^{e}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _coerce(x: LaurentPoly | int) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly.constant(int(x))


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
U = LaurentPoly.monomial(1)
U_MINUS_1 = LaurentPoly(((0, -1), (1, 1)))
