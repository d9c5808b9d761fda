from __future__ import annotations

from pathlib import Path
from typing import Any

import yaml

from ..model.germ import Germ
from .germ_parser import parse


def _expand_family(row: dict[str, Any]) -> list[tuple[str, str]]:
    name = str(row.get("name") or "")
    template = row.get("template")
    params = row.get("params") or []
    if not name or not isinstance(template, str):
        raise ValueError(f"family entry needs 'name' and 'template': {row!r}")
    if not isinstance(params, list):
        raise ValueError(f"families.{name}.params must be a list of mappings")
    out: list[tuple[str, str]] = []
    for values in params:
        if not isinstance(values, dict):
            raise ValueError(f"families.{name}.params entries must be mappings, got {values!r}")
        try:
            out.append((name.format(**values), template.format(**values)))
        except KeyError as exc:
            raise ValueError(f"families.{name}: parameter {exc.args[0]!r} is not given") from exc
    return out


def load_corpus(path: Path) -> list[tuple[str, Germ]]:
    """
    Load a YAML germ corpus into (name, Germ) pairs, in file order.

    germs:    [{name, germ}]
    families: [{name, template, params: [{...}, ...]}], name and template use str.format fields
    """
    data = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise ValueError("Invalid corpus YAML: expected a mapping")

    entries: list[tuple[str, str]] = []
    germs_raw = data.get("germs") or []
    if not isinstance(germs_raw, list):
        raise ValueError("corpus.germs must be a list")
    for row in germs_raw:
        if not isinstance(row, dict) or "germ" not in row:
            raise ValueError(f"germ entry needs a 'germ' field: {row!r}")
        text = str(row["germ"])
        entries.append((str(row.get("name") or text), text))

    families_raw = data.get("families") or []
    if not isinstance(families_raw, list):
        raise ValueError("corpus.families must be a list")
    for row in families_raw:
        if not isinstance(row, dict):
            raise ValueError(f"family entry must be a mapping, got {row!r}")
        entries.extend(_expand_family(row))

    names = [n for n, _ in entries]
    dupes = sorted({n for n in names if names.count(n) > 1})
    if dupes:
        raise ValueError(f"duplicate germ names in corpus: {', '.join(dupes)}")
    return [(name, parse(text)) for name, text in entries]
