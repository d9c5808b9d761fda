from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from ..model.resolution import Divisor, ResolutionData, Stratum
from .codec import laurent_from_json, laurent_to_json


def resolution_to_json(r: ResolutionData) -> dict[str, Any]:
    strata: list[dict[str, Any]] = []
    for st in r.strata:
        row: dict[str, Any] = {"I": list(st.I), "beta": laurent_to_json(st.beta)}
        if st.cover_plus is not None:
            row["cover_plus"] = laurent_to_json(st.cover_plus)
        if st.cover_minus is not None:
            row["cover_minus"] = laurent_to_json(st.cover_minus)
        strata.append(row)
    return {
        "d": r.d,
        "divisors": [{"id": div.id, "N": div.N, "nu": div.nu, "exceptional": div.exceptional} for div in r.divisors],
        "strata": strata,
        "note": r.note,
    }


def _list(data: dict[str, Any], key: str, where: str = "resolution file") -> list[Any]:
    value = data[key]
    if not isinstance(value, list):
        raise ValueError(f"{where}: {key!r} must be a list, got {type(value).__name__}")
    return value


def _divisor(row: Any) -> Divisor:
    if not isinstance(row, dict):
        raise ValueError(f"divisor entry must be an object, got {row!r}")
    try:
        return Divisor(id=str(row["id"]), N=int(row["N"]), nu=int(row["nu"]), exceptional=bool(row.get("exceptional", False)))
    except KeyError as exc:
        raise ValueError(f"divisor entry {row!r} is missing {exc.args[0]!r}") from exc
    except (TypeError, ValueError) as exc:
        raise ValueError(f"divisor entry {row!r}: N and nu must be integers") from exc


def _stratum(row: Any) -> Stratum:
    if not isinstance(row, dict) or "I" not in row:
        raise ValueError(f"stratum entry must be an object with 'I', got {row!r}")
    ids = _list(row, "I", "stratum entry")
    cp = row.get("cover_plus")
    cm = row.get("cover_minus")
    return Stratum(
        I=tuple(str(i) for i in ids),
        beta=laurent_from_json(row.get("beta", [])),
        cover_plus=None if cp is None else laurent_from_json(cp),
        cover_minus=None if cm is None else laurent_from_json(cm),
    )


def resolution_from_json(data: Any) -> ResolutionData:
    """Shape errors raise ValueError; semantic problems are left to validate()."""
    if not isinstance(data, dict):
        raise ValueError("resolution file must hold a JSON object at the top level")
    for key in ("d", "divisors", "strata"):
        if key not in data:
            raise ValueError(f"resolution file is missing {key!r}")
    divisors = [_divisor(row) for row in _list(data, "divisors")]
    strata = [_stratum(row) for row in _list(data, "strata")]
    try:
        d = int(data["d"])
    except (TypeError, ValueError) as exc:
        raise ValueError(f"resolution file: 'd' must be an integer, got {data['d']!r}") from exc
    return ResolutionData(d=d, divisors=tuple(divisors), strata=tuple(strata), note=str(data.get("note", "")))


def dumps(r: ResolutionData) -> str:
    return json.dumps(resolution_to_json(r), indent=2, ensure_ascii=False) + "\n"


def load_resolution(path: Path) -> ResolutionData:
    return resolution_from_json(json.loads(Path(path).read_text(encoding="utf-8")))


def store_resolution(r: ResolutionData, path: Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(r), encoding="utf-8")
