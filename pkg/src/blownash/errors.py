from __future__ import annotations

from collections.abc import Sequence
from typing import Any


class BlownashError(ValueError):
    """Base for every math/domain error raised by the package."""


class GermSyntaxError(BlownashError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        caret = " " * position + "^"
        super().__init__(f"{message} at position {position}\n  {text}\n  {caret}")


class ConstantTerm(BlownashError):
    pass


class ZeroPolynomial(BlownashError):
    pass


class DimensionUnsupported(BlownashError):
    def __init__(self, d: int, expected: int = 2):
        self.d = d
        super().__init__(f"germ has d={d}; only d={expected} is supported here")


class UnsupportedGerm(BlownashError):
    pass


class NotDivisible(BlownashError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"T^{n} coefficient is not divisible by (u-1)")


class InvalidData(BlownashError):
    def __init__(self, violations: Sequence[Any]):
        self.violations = list(violations)
        super().__init__("invalid resolution data: " + "; ".join(str(v) for v in self.violations))


class MissingCoverData(BlownashError):
    def __init__(self, stratum: Sequence[str]):
        self.stratum = tuple(stratum)
        super().__init__(f"stratum {{{', '.join(self.stratum)}}} has nonzero beta but no cover data")


class Degenerate(BlownashError):
    def __init__(self, edge: Any):
        self.edge = edge
        super().__init__(f"germ is degenerate on the Newton edge {edge}")


class UnsupportedCover(BlownashError):
    pass


class OrderMismatch(BlownashError):
    def __init__(self, a: int, b: int):
        super().__init__(f"truncation orders differ: {a} vs {b}")


class ConfigError(BlownashError):
    pass


class PipelineUnavailable(BlownashError):
    pass


class InconsistentResolution(BlownashError):
    """Toric data that should agree by construction does not (unit orders, fan neighbours, root intervals)."""
