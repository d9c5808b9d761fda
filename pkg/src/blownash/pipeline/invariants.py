"""
Blow-Nash invariants read off the zeta functions.

With Z = sum_{l>=1} (u-1)^l z_l, the invariants are pinned to values at u = 1:
z1(1,T) = (Z/(u-1))(1,T) and z2(1,T) = d/du (Z/(u-1)) at u = 1, read mod 2; likewise
z0^± = Z^±(1,T) and z1^± = d/du Z^± at u = 1, read mod 2. The u = -1 values are the
compactly supported Euler characteristic zeta functions.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Literal

from ..algebra.series import IntSeries, ZetaSeries, deriv_u, div_u_minus_1, eval_u, mod2
from ..errors import BlownashError, OrderMismatch
from ..model.germ import Germ

log = logging.getLogger(__name__)

Verdict = Literal["equal", "distinct", "unknown"]

# witness priority when two invariants first differ at the same power of T
INVARIANT_NAMES = (
    "z1",
    "z2_mod2",
    "z0_plus",
    "z0_minus",
    "z1_plus_mod2",
    "z1_minus_mod2",
    "kp_naive",
    "kp_plus",
    "kp_minus",
)


@dataclass(frozen=True)
class InvariantProfile:
    order: int
    z1: IntSeries
    z2_mod2: IntSeries
    kp_naive: IntSeries
    z0_plus: IntSeries | None = None
    z0_minus: IntSeries | None = None
    z1_plus_mod2: IntSeries | None = None
    z1_minus_mod2: IntSeries | None = None
    kp_plus: IntSeries | None = None
    kp_minus: IntSeries | None = None

    @property
    def has_signs(self) -> bool:
        return self.z0_plus is not None

    def get(self, name: str) -> IntSeries | None:
        if name not in INVARIANT_NAMES:
            raise KeyError(name)
        value: IntSeries | None = getattr(self, name)
        return value


def profile(z: ZetaSeries, zp: ZetaSeries | None = None, zm: ZetaSeries | None = None) -> InvariantProfile:
    for s in (zp, zm):
        if s is not None and s.order != z.order:
            raise OrderMismatch(z.order, s.order)
    q = div_u_minus_1(z)
    plus = {} if zp is None else {"z0_plus": eval_u(zp, 1), "z1_plus_mod2": mod2(eval_u(deriv_u(zp), 1)), "kp_plus": eval_u(zp, -1)}
    minus = {} if zm is None else {"z0_minus": eval_u(zm, 1), "z1_minus_mod2": mod2(eval_u(deriv_u(zm), 1)), "kp_minus": eval_u(zm, -1)}
    return InvariantProfile(
        order=z.order,
        z1=eval_u(q, 1),
        z2_mod2=mod2(eval_u(deriv_u(q), 1)),
        kp_naive=eval_u(z, -1),
        **plus,
        **minus,
    )


@dataclass(frozen=True)
class InvariantVerdict:
    name: str
    verdict: Verdict
    first_difference: int | None = None  # lowest T-power where the series differ


@dataclass(frozen=True)
class Comparison:
    a: str
    b: str
    order: int
    verdicts: tuple[InvariantVerdict, ...]

    @property
    def distinguished(self) -> bool:
        return any(v.verdict == "distinct" for v in self.verdicts)

    @property
    def verdict(self) -> str:
        return "distinguished" if self.distinguished else f"indistinguishable at order {self.order}"

    @property
    def witness(self) -> InvariantVerdict | None:
        """The distinct invariant differing at the lowest power of T (ties by listing order)."""
        distinct = [v for v in self.verdicts if v.verdict == "distinct"]
        if not distinct:
            return None
        return min(distinct, key=lambda v: (v.first_difference or 0, INVARIANT_NAMES.index(v.name)))


def compare(a: InvariantProfile, b: InvariantProfile, names: tuple[str, str] = ("a", "b")) -> Comparison:
    if a.order != b.order:
        raise OrderMismatch(a.order, b.order)
    verdicts: list[InvariantVerdict] = []
    for name in INVARIANT_NAMES:
        sa, sb = a.get(name), b.get(name)
        if sa is None or sb is None:
            verdicts.append(InvariantVerdict(name, "unknown"))
            continue
        n = sa.first_difference(sb)
        verdicts.append(InvariantVerdict(name, "equal" if n is None else "distinct", n))
    return Comparison(names[0], names[1], a.order, tuple(verdicts))


@dataclass(frozen=True)
class Classification:
    order: int
    classes: tuple[tuple[str, ...], ...]
    separations: tuple[Comparison, ...]  # one per pair of germs in different classes
    failures: tuple[tuple[str, str], ...]  # (name, error) for germs no pipeline could handle


ProfileFn = Callable[[Germ, int], InvariantProfile]


def classify(germs: Sequence[tuple[str, Germ]], order: int, compute: ProfileFn | None = None) -> Classification:
    """
    Group germs whose profiles are pairwise indistinguishable at the given order.

    compute defaults to the automatic pipeline choice; a germ it rejects is reported as a
    failure and left out of the classes.
    """
    if compute is None:
        from .run import germ_profile

        compute = germ_profile

    profiles: dict[str, InvariantProfile] = {}
    failures: list[tuple[str, str]] = []
    for name, g in germs:
        try:
            profiles[name] = compute(g, order)
        except BlownashError as exc:
            log.warning("classify_germ_failed", extra={"germ": name, "error": type(exc).__name__})
            failures.append((name, f"{type(exc).__name__}: {exc}"))

    classes: list[list[str]] = []
    for name, prof in profiles.items():
        for group in classes:
            if all(not compare(prof, profiles[other]).distinguished for other in group):
                group.append(name)
                break
        else:
            classes.append([name])

    separations: list[Comparison] = []
    names = list(profiles)
    cls_of = {name: k for k, group in enumerate(classes) for name in group}
    for i, x in enumerate(names):
        for y in names[i + 1 :]:
            if cls_of[x] != cls_of[y]:
                separations.append(compare(profiles[x], profiles[y], (x, y)))
    return Classification(order, tuple(tuple(c) for c in classes), tuple(separations), tuple(failures))


def kp_sign_zeta(p: InvariantProfile, scaling: Literal["derived", "published"] = "derived") -> tuple[IntSeries | None, IntSeries | None]:
    """
    Euler-characteristic sign zeta functions from Z^±(-1, T).

    "derived" is -Z^±(-1,T), which satisfies Z(-1,T) = sum of both; "published" is
    -2 Z^±(-1,T), kept for comparison with the literature value.
    """
    factor = {"derived": -1, "published": -2}[scaling]
    return (
        None if p.kp_plus is None else p.kp_plus * factor,
        None if p.kp_minus is None else p.kp_minus * factor,
    )