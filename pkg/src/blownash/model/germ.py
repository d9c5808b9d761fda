from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from ..errors import ConstantTerm, ZeroPolynomial

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class Germ:
    """
    Polynomial germ f: (R^d, 0) -> (R, 0) with exact integer coefficients.

    terms: (exponent vector, coefficient) pairs, sorted by exponent vector, no zero coefficients.
    """

    d: int
    terms: tuple[tuple[Exponents, int], ...]

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"germ dimension must be >= 1, got {self.d}")
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial is not a germ")
        for exps, c in self.terms:
            if len(exps) != self.d:
                raise ValueError(f"exponent vector {exps} does not have length d={self.d}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if c == 0:
                raise ValueError("zero coefficients must not be stored")
            if not any(exps):
                raise ConstantTerm(f"f(0) = {c} != 0")

    @classmethod
    def from_map(cls, d: int, support: Mapping[Exponents, int]) -> Germ:
        return cls(d, tuple(sorted((tuple(e), int(c)) for e, c in support.items() if c)))

    @property
    def support(self) -> dict[Exponents, int]:
        return dict(self.terms)

    def coefficient(self, exps: Exponents) -> int:
        return self.support.get(tuple(exps), 0)

    def __neg__(self) -> Germ:
        return Germ(self.d, tuple((e, -c) for e, c in self.terms))

    def embed(self, d: int) -> Germ:
        """Same polynomial viewed in d >= self.d variables."""
        if d < self.d:
            raise ValueError(f"cannot embed a germ in {self.d} variables into {d}")
        pad = (0,) * (d - self.d)
        return Germ(d, tuple((e + pad, c) for e, c in self.terms))


@dataclass(frozen=True)
class SupportClass:
    cancellation_free: bool
    diagonal: bool
    two_var: bool
    global_sign: int  # +1 or -1 when all coefficients share a sign, else 0


def classify(g: Germ) -> SupportClass:
    """
    Syntactic support flags.

    cancellation_free: all coefficients of one sign and either every exponent even or a single
    monomial; then the leading coefficient of f∘γ can never vanish. diagonal: additionally
    every exponent even and every monomial in one variable.
    """
    all_even = all(e % 2 == 0 for exps, _ in g.terms for e in exps)
    signs = {1 if c > 0 else -1 for _, c in g.terms}
    one_sign = len(signs) == 1
    single_var = all(sum(1 for e in exps if e) == 1 for exps, _ in g.terms)
    return SupportClass(
        cancellation_free=one_sign and (all_even or len(g.terms) == 1),
        diagonal=one_sign and all_even and single_var,
        two_var=g.d == 2,
        global_sign=signs.pop() if one_sign else 0,
    )


# ------------------------------ printing ------------------------------


def variable_names(d: int) -> list[str]:
    if d <= 3:
        return ["x", "y", "z"][:d]
    return [f"x{i}" for i in range(1, d + 1)]


def render_germ(g: Germ) -> str:
    """Canonical text form; parse(render_germ(g), d=g.d) == g."""
    names = variable_names(g.d)
    parts: list[str] = []
    for exps, c in sorted(g.terms, key=lambda t: t[0], reverse=True):
        factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps, strict=True) if e]
        mono = "*".join(factors)
        mag = abs(c)
        body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
