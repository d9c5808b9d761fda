from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..algebra.laurent import LaurentPoly


@dataclass(frozen=True)
class Divisor:
    id: str
    N: int  # multiplicity of f∘σ along the divisor
    nu: int  # 1 + multiplicity of jac σ along the divisor
    exceptional: bool  # lies over the origin


@dataclass(frozen=True)
class Stratum:
    """E_I^0 ∩ σ^-1(0) for a set I of divisor ids, with its β and optional sign-cover β values."""

    I: tuple[str, ...]
    beta: LaurentPoly
    cover_plus: LaurentPoly | None = None
    cover_minus: LaurentPoly | None = None

    @property
    def has_covers(self) -> bool:
        return self.cover_plus is not None and self.cover_minus is not None

    def cover(self, sign: int) -> LaurentPoly | None:
        return self.cover_plus if sign > 0 else self.cover_minus


@dataclass(frozen=True)
class ResolutionData:
    d: int
    divisors: tuple[Divisor, ...]
    strata: tuple[Stratum, ...]
    note: str = ""

    def divisor(self, divisor_id: str) -> Divisor:
        for div in self.divisors:
            if div.id == divisor_id:
                return div
        raise KeyError(divisor_id)


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str

    def __str__(self) -> str:
        return f"{self.code}: {self.detail}"


def validate(r: ResolutionData) -> list[Violation]:
    """Every broken invariant of the data, in a stable order; empty when the data is usable."""
    out: list[Violation] = []

    ids = Counter(div.id for div in r.divisors)
    for div_id, n in sorted(ids.items()):
        if n > 1:
            out.append(Violation("DuplicateDivisor", f"divisor {div_id!r} is declared {n} times"))
    for div in r.divisors:
        if div.N < 1 or div.nu < 1:
            out.append(Violation("BadMultiplicity", f"divisor {div.id!r} has N={div.N}, nu={div.nu}; both must be >= 1"))
    if not any(div.exceptional for div in r.divisors):
        out.append(Violation("NoExceptional", "no divisor lies over the origin"))

    seen: Counter[frozenset[str]] = Counter()
    for st in r.strata:
        label = "{" + ", ".join(st.I) + "}"
        if not st.I:
            out.append(Violation("EmptyStratum", "a stratum has an empty index set"))
            continue
        for div_id in st.I:
            if div_id not in ids:
                out.append(Violation("UnknownDivisor", f"stratum {label} references undeclared divisor {div_id!r}"))
        if len(set(st.I)) > r.d:
            out.append(Violation("StratumTooLarge", f"stratum {label} meets {len(set(st.I))} divisors in dimension {r.d}"))
        if (st.cover_plus is None) != (st.cover_minus is None):
            out.append(Violation("CoverIncomplete", f"stratum {label} has only one of cover_plus/cover_minus"))
        seen[frozenset(st.I)] += 1
    for key, n in seen.items():
        if n > 1:
            out.append(Violation("DuplicateStratum", f"stratum {{{', '.join(sorted(key))}}} appears {n} times"))

    for div in r.divisors:
        if div.exceptional and frozenset((div.id,)) not in seen:
            out.append(Violation("MissingSingleton", f"exceptional divisor {div.id!r} has no singleton stratum"))
    return out
