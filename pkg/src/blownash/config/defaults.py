from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Defaults:
    default_order: int
    default_method: str
    output_format: str
    logs_root: str | None
    log_level: str


DEFAULTS = Defaults(
    default_order=20,
    default_method="auto",
    output_format="text",
    logs_root=None,  # no JSON log file unless set
    log_level="WARNING",
)
