from __future__ import annotations

import json
import logging
import sys
from datetime import UTC, datetime
from pathlib import Path
from typing import Any

_RECORD_FIELDS = frozenset(logging.makeLogRecord({}).__dict__) | {"message", "asctime", "taskName"}


class JsonFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        payload: dict[str, Any] = {
            "ts": datetime.fromtimestamp(record.created, tz=UTC).isoformat(timespec="milliseconds"),
            "level": record.levelname,
            "logger": record.name,
            "msg": record.getMessage(),
        }
        if record.exc_info:
            payload["exc_info"] = self.formatException(record.exc_info)
        # extras passed via extra={...}
        for k, v in record.__dict__.items():
            if k not in _RECORD_FIELDS:
                payload[k] = v
        return json.dumps(payload, ensure_ascii=False, default=str)


def get_logger(name: str, logs_root: Path | None = None, run_id: str | None = None, console_level: int = logging.WARNING) -> logging.Logger:
    """
    Create/get a logger with a brief console handler on stderr and, when logs_root is
    given, JSON lines in logs_root/YYYYMMDD/<run_id>.log. stdout is left to the renderers.
    """
    logger = logging.getLogger(name)
    if getattr(logger, "_blownash_configured", False):
        return logger

    logger.setLevel(logging.DEBUG)
    logger.propagate = False

    ch = logging.StreamHandler(sys.stderr)
    ch.setLevel(console_level)
    ch.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    logger.addHandler(ch)

    if logs_root is not None:
        date_part = datetime.now().strftime("%Y%m%d")
        run_part = run_id or datetime.now().strftime("%H%M%S")
        log_dir = Path(logs_root) / date_part
        log_dir.mkdir(parents=True, exist_ok=True)
        fh_path = log_dir / f"{run_part}.log"
        fh = logging.FileHandler(fh_path, encoding="utf-8")
        fh.setLevel(logging.DEBUG)
        fh.setFormatter(JsonFormatter())
        logger.addHandler(fh)
        logger.debug("logger_initialized", extra={"log_file": str(fh_path)})

    logger._blownash_configured = True  # type: ignore[attr-defined]
    return logger


def reset_logger(name: str) -> None:
    """Drop handlers installed by get_logger so the next call reconfigures."""
    logger = logging.getLogger(name)
    for h in list(logger.handlers):
        logger.removeHandler(h)
        h.close()
    if hasattr(logger, "_blownash_configured"):
        delattr(logger, "_blownash_configured")
