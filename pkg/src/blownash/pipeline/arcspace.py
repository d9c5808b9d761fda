"""
Arc-space enumeration of β(X_n) and β(X_n^±) for germs without cancellation.

Arcs in L_n are stratified by the order vector a in {1..n, ∞}^d of their coordinates. On a
stratum the coordinate i contributes (u-1)u^(n-a_i) (nonzero leading coefficient, free tail)
when a_i is finite and a single point when it is ∞. When every exponent is even and all
coefficients share a sign, the leading coefficient of f∘γ is a sum of terms of one sign and
never vanishes, so the stratum lies in X_n iff min_j <E_j, a> = n.

Cost is O((n+1)^d) order vectors per coefficient: fine for d <= 3 and n <= 30.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from functools import cache

from ..algebra.laurent import ZERO, LaurentPoly, U_MINUS_1
from ..algebra.series import SeriesKind, ZetaSeries
from ..errors import UnsupportedGerm
from ..model.germ import Germ, classify

log = logging.getLogger(__name__)

INF = None  # coordinate identically zero in L_n


def _orders(n: int) -> list[int | None]:
    return [*range(1, n + 1), INF]


def _monomial_order(exps: tuple[int, ...], a: tuple[int | None, ...]) -> int | None:
    total = 0
    for e, ai in zip(exps, a, strict=True):
        if e == 0:
            continue
        if ai is None:
            return None
        total += e * ai
    return total


@cache
def _u_minus_1_pow(k: int) -> LaurentPoly:
    return U_MINUS_1**k


def beta_sphere(q: int) -> LaurentPoly:
    """
    β of {c_1 l_1^e_1 + ... + c_q l_q^e_q = 1} with even e_i and c_i > 0.

    It is a compact nonsingular variety with the Z/2 Betti numbers of the (q-1)-sphere, and β
    agrees with Betti numbers on such varieties: 1 + u^(q-1), so 2 points for q = 1 and a
    circle 1 + u for q = 2. Empty for q = 0.
    """
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    if q == 0:
        return ZERO
    return LaurentPoly.from_pairs([(0, 1), (q - 1, 1)])


@cache
def leading_variety_beta(size: int) -> LaurentPoly:
    """β of {sum_{i in S} c_i l_i^e_i = 1, all l_i != 0}: inclusion-exclusion over the vanishing l_i."""
    total = ZERO
    for r in range(size + 1):
        total = total + beta_sphere(size - r) * (-1 if r % 2 else 1) * _binomial(size, r)
    return total


def _binomial(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def naive_coeff(g: Germ, n: int) -> LaurentPoly:
    """β(X_n)·u^(-nd)."""
    if not classify(g).cancellation_free:
        raise UnsupportedGerm("arc enumeration needs even exponents and coefficients of one sign")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    exps = [e for e, _ in g.terms]
    # (number of finite coordinates, exponent of u) -> number of order vectors
    counts: Counter[tuple[int, int]] = Counter()
    for a in itertools.product(_orders(n), repeat=g.d):
        orders = [o for o in (_monomial_order(e, a) for e in exps) if o is not None]
        if not orders or min(orders) != n:
            continue
        finite = [ai for ai in a if ai is not None]
        counts[(len(finite), len(finite) * n - sum(finite) - n * g.d)] += 1
    total = ZERO
    for (k, shift), mult in sorted(counts.items()):
        total = total + _u_minus_1_pow(k).shift(shift) * mult
    return total


def sign_coeff(g: Germ, n: int, sign: int) -> LaurentPoly:
    """β(X_n^±)·u^(-nd) for diagonal germs."""
    cls = classify(g)
    if not cls.diagonal:
        raise UnsupportedGerm("sign enumeration needs a diagonal germ (sum of c_i x_i^e_i, e_i even, one sign)")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if sign != cls.global_sign:
        return ZERO

    # only the lowest power of each variable can reach the minimal order
    lowest: list[int | None] = [None] * g.d
    for exps, _ in g.terms:
        i = next(k for k, e in enumerate(exps) if e)
        lowest[i] = exps[i] if lowest[i] is None else min(exps[i], lowest[i])

    # (finite coordinates off S, |S|, exponent of u) -> count
    counts: Counter[tuple[int, int, int]] = Counter()
    for a in itertools.product(_orders(n), repeat=g.d):
        orders = [e * ai for e, ai in zip(lowest, a, strict=True) if e is not None and ai is not None]
        if not orders or min(orders) != n:
            continue
        achieving = {i for i, (e, ai) in enumerate(zip(lowest, a, strict=True)) if e is not None and ai is not None and e * ai == n}
        free = [ai for i, ai in enumerate(a) if i not in achieving and ai is not None]
        leading = [ai for i, ai in enumerate(a) if i in achieving and ai is not None]
        shift = sum(n - ai for ai in leading) + sum(n - ai for ai in free) - n * g.d
        counts[(len(free), len(achieving), shift)] += 1
    total = ZERO
    for (k, s_size, shift), mult in sorted(counts.items()):
        total = total + (_u_minus_1_pow(k) * leading_variety_beta(s_size)).shift(shift) * mult
    return total


def zeta_direct(g: Germ, order: int) -> tuple[ZetaSeries, ZetaSeries | None, ZetaSeries | None]:
    """(Z, Z+, Z-) truncated at T^order; the sign series are None unless g is diagonal."""
    cls = classify(g)
    naive = ZetaSeries(order, tuple(naive_coeff(g, n) for n in range(1, order + 1)), SeriesKind.NAIVE, g.d)
    if not cls.diagonal:
        log.debug("arcspace_signs_absent", extra={"d": g.d, "order": order})
        return naive, None, None
    plus = ZetaSeries(order, tuple(sign_coeff(g, n, 1) for n in range(1, order + 1)), SeriesKind.PLUS, g.d)
    minus = ZetaSeries(order, tuple(sign_coeff(g, n, -1) for n in range(1, order + 1)), SeriesKind.MINUS, g.d)
    return naive, plus, minus
