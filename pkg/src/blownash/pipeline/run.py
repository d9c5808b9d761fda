from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal

from ..algebra.closed_form import ZetaClosedForm, expand
from ..algebra.series import ZetaSeries
from ..errors import DimensionUnsupported, PipelineUnavailable
from ..model.germ import Germ, classify
from ..model.polygon import nondegenerate
from ..model.resolution import ResolutionData
from .arcspace import zeta_direct
from .denef_loeser import dl_naive, dl_sign, has_cover_data
from .invariants import InvariantProfile, profile
from .newton2d.resolve import resolve

log = logging.getLogger(__name__)

Method = Literal["direct", "newton", "file", "auto"]
METHODS: tuple[str, ...] = ("direct", "newton", "file", "auto")


@dataclass(frozen=True)
class ZetaRequest:
    order: int
    method: str = "auto"
    germ: Germ | None = None
    resolution: ResolutionData | None = None  # required for method "file"


@dataclass(frozen=True)
class ZetaResult:
    method: str  # the pipeline that actually ran
    naive: ZetaSeries
    plus: ZetaSeries | None = None
    minus: ZetaSeries | None = None
    closed: ZetaClosedForm | None = None
    closed_plus: ZetaClosedForm | None = None
    closed_minus: ZetaClosedForm | None = None
    resolution: ResolutionData | None = None

    @property
    def has_signs(self) -> bool:
        return self.plus is not None and self.minus is not None


def select_method(g: Germ) -> str:
    """newton for nondegenerate germs in two variables, direct for cancellation-free germs."""
    if g.d == 2 and nondegenerate(g):
        return "newton"
    if classify(g).cancellation_free:
        return "direct"
    raise PipelineUnavailable("germ is neither a nondegenerate two-variable germ nor free of cancellation")


def _from_resolution(res: ResolutionData, order: int, method: str) -> ZetaResult:
    closed = dl_naive(res)
    if not has_cover_data(res):
        return ZetaResult(method, expand(closed, order), closed=closed, resolution=res)
    cp, cm = dl_sign(res, 1), dl_sign(res, -1)
    return ZetaResult(
        method,
        expand(closed, order),
        expand(cp, order),
        expand(cm, order),
        closed=closed,
        closed_plus=cp,
        closed_minus=cm,
        resolution=res,
    )


def compute_zeta(req: ZetaRequest) -> ZetaResult:
    if req.order < 1:
        raise ValueError(f"truncation order must be >= 1, got {req.order}")
    method = req.method
    if method == "file":
        if req.resolution is None:
            raise PipelineUnavailable("method 'file' needs a resolution file")
        return _from_resolution(req.resolution, req.order, "file")
    if req.germ is None:
        raise PipelineUnavailable(f"method {method!r} needs a germ")
    g = req.germ
    if method == "auto":
        method = select_method(g)
    log.info("zeta_start", extra={"method": method, "order": req.order, "d": g.d})
    if method == "newton":
        if g.d != 2:
            raise DimensionUnsupported(g.d)
        return _from_resolution(resolve(g), req.order, "newton")
    if method == "direct":
        naive, plus, minus = zeta_direct(g, req.order)
        return ZetaResult("direct", naive, plus, minus)
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def result_profile(result: ZetaResult) -> InvariantProfile:
    return profile(result.naive, result.plus, result.minus)


def germ_profile(g: Germ, order: int, method: str = "auto") -> InvariantProfile:
    return result_profile(compute_zeta(ZetaRequest(order=order, method=method, germ=g)))
