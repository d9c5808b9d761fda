from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from datetime import datetime
from pathlib import Path
from typing import Any

import yaml

from . import __version__
from .config.loader import FORMATS, METHODS, Config, load_config
from .errors import BlownashError, GermSyntaxError, PipelineUnavailable
from .io_adapters import codec
from .io_adapters.corpus_loader import load_corpus
from .io_adapters.germ_parser import parse
from .io_adapters.resolution_file import dumps as dump_resolution
from .io_adapters.resolution_file import load_resolution, resolution_to_json, store_resolution
from .model.germ import Germ, render_germ
from .model.resolution import validate
from .pipeline.invariants import classify, compare
from .pipeline.newton2d.resolve import resolve
from .pipeline.run import ZetaRequest, ZetaResult, compute_zeta, result_profile
from .tools import render
from .utils.logging import get_logger, reset_logger

LOGGER = "blownash"


def _add_common(p: argparse.ArgumentParser, *, inputs: bool = True) -> None:
    p.add_argument("--config", type=Path, default=None, help="Optional YAML settings file")
    p.add_argument("--format", choices=FORMATS, default=None, help="Output format (default from config: text)")
    if inputs:
        p.add_argument("--germ", action="append", default=[], help='Germ polynomial, e.g. "x^2+y^4" (repeatable)')
        p.add_argument("--dim", type=int, default=None, help="Embed germs in this many variables")
        p.add_argument("--resolution", action="append", type=Path, default=[], help="Resolution file (JSON, repeatable)")
        p.add_argument("--zeta", action="append", type=Path, default=[], help="Stored zeta record from `zeta --format machine` (repeatable)")
        p.add_argument("--method", choices=METHODS, default=None, help="Pipeline (default from config: auto)")
        p.add_argument("--order", type=int, default=None, help="Truncation order in T (default from config: 20)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="blownash", description="Real motivic zeta functions and blow-Nash invariants of polynomial germs")
    sub = p.add_subparsers(dest="cmd", required=False)

    sub.add_parser("version", help="print version")

    doctor = sub.add_parser("doctor", help="print the resolved configuration")
    doctor.add_argument("--config", type=Path, default=None, help="Optional YAML settings file")

    zeta = sub.add_parser("zeta", help="naive and sign zeta functions of one germ, resolution file or stored record")
    _add_common(zeta)

    res = sub.add_parser("resolve", help="toric resolution data of a nondegenerate two-variable germ")
    _add_common(res)
    res.add_argument("--extra-ray", action="append", type=int, default=[], help="Blow up between rays at this fan position (repeatable)")
    res.add_argument("--out", type=Path, default=None, help="Write the resolution file here instead of stdout")

    inv = sub.add_parser("invariants", help="blow-Nash invariant profile of one germ")
    _add_common(inv)

    cmp_ = sub.add_parser("compare", help="compare the invariant profiles of two germs")
    _add_common(cmp_)

    cls = sub.add_parser("classify", help="group germs by invariant profile")
    _add_common(cls)
    cls.add_argument("--corpus", type=Path, default=None, help="YAML germ corpus")

    val = sub.add_parser("validate", help="check a resolution file")
    val.add_argument("file", type=Path, help="Resolution file (JSON)")
    _add_common(val, inputs=False)

    return p


def _emit(data: Any) -> None:
    print(json.dumps(data, indent=2, ensure_ascii=False))


def _germs(args: argparse.Namespace) -> list[tuple[str, Germ]]:
    out = []
    for text in args.germ:
        g = parse(text, args.dim)
        out.append((render_germ(g), g))
    return out


def _inputs(args: argparse.Namespace, cfg: Config) -> list[tuple[str, ZetaRequest]]:
    """One ZetaRequest per --germ and per --resolution, germs first."""
    order = args.order if args.order is not None else cfg.default_order
    method = args.method or cfg.default_method
    reqs = [(name, ZetaRequest(order=order, method=method, germ=g)) for name, g in _germs(args)]
    for path in args.resolution:
        if method not in ("file", "auto"):
            raise PipelineUnavailable(f"a resolution file needs method 'file', got {method!r}")
        reqs.append((str(path), ZetaRequest(order=order, method="file", resolution=load_resolution(path))))
    return reqs


def _load_zeta(path: Path, order: int | None) -> tuple[str, ZetaResult, Germ | None]:
    """A stored `zeta --format machine` record, cut to --order when one is given."""
    name, r, germ = codec.zeta_from_json(json.loads(path.read_text(encoding="utf-8")))
    if order is None:
        return name, r, germ
    plus = None if r.plus is None else r.plus.truncate(order)
    minus = None if r.minus is None else r.minus.truncate(order)
    return name, replace(r, naive=r.naive.truncate(order), plus=plus, minus=minus), germ


def _results(args: argparse.Namespace, cfg: Config) -> list[tuple[str, ZetaResult, Germ | None]]:
    """Computed inputs first, then stored --zeta records."""
    out = [(name, compute_zeta(req), req.germ) for name, req in _inputs(args, cfg)]
    out.extend(_load_zeta(path, args.order) for path in args.zeta)
    return out


def _single(args: argparse.Namespace, cfg: Config) -> tuple[str, ZetaResult, Germ | None]:
    n = len(args.germ) + len(args.resolution) + len(args.zeta)
    if n != 1:
        raise ValueError(f"{args.cmd} needs exactly one --germ, --resolution or --zeta, got {n}")
    return _results(args, cfg)[0]


def _cmd_zeta(args: argparse.Namespace, cfg: Config, fmt: str) -> int:
    name, r, germ = _single(args, cfg)
    if fmt == "machine":
        _emit(codec.zeta_to_json(name, r, germ))
        return 0
    print(f"{name}  [method {r.method}, order {r.naive.order}]")
    print(render.render_zeta("Z", r.naive, r.closed))
    print(render.render_zeta("Z+", r.plus, r.closed_plus))
    print(render.render_zeta("Z-", r.minus, r.closed_minus))
    return 0


def _cmd_resolve(args: argparse.Namespace, cfg: Config, fmt: str) -> int:
    germs = _germs(args)
    if len(germs) != 1 or args.resolution or args.zeta:
        raise ValueError("resolve needs exactly one --germ")
    res = resolve(germs[0][1], args.extra_ray)
    if args.out is not None:
        store_resolution(res, args.out)
        if fmt == "machine":
            _emit({"written": str(args.out)})
        else:
            print(f"wrote {args.out}")
            print(render.render_resolution(res))
        return 0
    if fmt == "machine":
        _emit(resolution_to_json(res))
    else:
        sys.stdout.write(dump_resolution(res))
    return 0


def _cmd_invariants(args: argparse.Namespace, cfg: Config, fmt: str) -> int:
    name, r, _ = _single(args, cfg)
    prof = result_profile(r)
    if fmt == "machine":
        _emit({"input": name, **codec.profile_to_json(prof)})
    else:
        print(name)
        print(render.render_profile(prof))
    return 0


def _cmd_compare(args: argparse.Namespace, cfg: Config, fmt: str) -> int:
    profs = [(name, result_profile(r)) for name, r, _ in _results(args, cfg)]
    if len(profs) != 2:
        raise ValueError(f"compare needs exactly two inputs, got {len(profs)}")
    (na, pa), (nb, pb) = profs
    c = compare(pa, pb, (na, nb))
    if fmt == "machine":
        _emit(codec.report_to_json([c]))
    else:
        print(render.render_comparison(c))
    return 0


def _cmd_classify(args: argparse.Namespace, cfg: Config, fmt: str) -> int:
    if args.resolution or args.zeta:
        raise ValueError("classify takes germs only (--germ or --corpus)")
    germs = _germs(args)
    if args.corpus is not None:
        germs.extend(load_corpus(args.corpus))
    if not germs:
        raise ValueError("classify needs at least one --germ or a --corpus")
    order = args.order if args.order is not None else cfg.default_order
    method = args.method or cfg.default_method
    result = classify(germs, order, lambda g, n: result_profile(compute_zeta(ZetaRequest(order=n, method=method, germ=g))))
    if fmt == "machine":
        _emit(codec.classification_to_json(result))
    else:
        print(render.render_classification(result))
    return 0


def _cmd_validate(args: argparse.Namespace, cfg: Config, fmt: str) -> int:
    violations = validate(load_resolution(args.file))
    if fmt == "machine":
        _emit({"file": str(args.file), "valid": not violations, "violations": [{"code": v.code, "detail": v.detail} for v in violations]})
    else:
        print(f"{args.file}: {render.render_violations(violations)}")
    return 1 if violations else 0


_COMMANDS = {
    "zeta": _cmd_zeta,
    "resolve": _cmd_resolve,
    "invariants": _cmd_invariants,
    "compare": _cmd_compare,
    "classify": _cmd_classify,
    "validate": _cmd_validate,
}


def _doctor(cfg: Config) -> int:
    run_id = datetime.now().strftime("%Y%m%d-%H%M%S")
    reset_logger(LOGGER)
    log = get_logger(LOGGER, logs_root=cfg.logs_root, run_id=run_id, console_level=cfg.log_level_no)

    print("env ok")
    print(f"config.default_order  = {cfg.default_order}")
    print(f"config.default_method = {cfg.default_method}")
    print(f"config.output_format  = {cfg.output_format}")
    print(f"config.logs_root      = {cfg.logs_root}")
    print(f"config.log_level      = {cfg.log_level}")
    log.info(
        "doctor_config",
        extra={
            "default_order": cfg.default_order,
            "default_method": cfg.default_method,
            "output_format": cfg.output_format,
            "logs_root": None if cfg.logs_root is None else str(cfg.logs_root),
            "log_level": cfg.log_level,
            "run_id": run_id,
        },
    )
    return 0


def _run(args: argparse.Namespace) -> int:
    cfg = load_config(args.config)
    if args.cmd == "doctor":
        return _doctor(cfg)
    reset_logger(LOGGER)
    get_logger(LOGGER, logs_root=cfg.logs_root, console_level=cfg.log_level_no)
    if getattr(args, "order", None) is not None and args.order < 1:
        raise ValueError(f"--order must be >= 1, got {args.order}")
    return _COMMANDS[args.cmd](args, cfg, args.format or cfg.output_format)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.cmd is None:
        parser.print_help()
        return 0

    if args.cmd == "version":
        print(__version__)
        return 0

    try:
        return _run(args)
    except GermSyntaxError as exc:
        print(f"GermSyntaxError: {exc}", file=sys.stderr)
        return 2
    except BlownashError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError, yaml.YAMLError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
