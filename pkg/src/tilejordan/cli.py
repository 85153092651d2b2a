"""Command-line front end.

Exit codes: 0 ok, 1 analysis negative, 2 usage, 3 sampler exhausted,
4 rendering precondition, 5 input/output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .cells import Kind
from .curves import (
    CurveKind,
    PreconditionError,
    classify_closed,
    classify_open,
    jordan_kind_problem,
    rosenfeld_report,
    well_behaved_witness,
)
from .generators import build_hexagonal_window, build_square_window, build_triangular_window
from .jordan import (
    DEFAULT_MARGIN,
    ComplementError,
    MarginError,
    curve_order,
    interior_adjacency_check,
    is_jordan_curve,
    is_jordan_curve_by_deletion,
    jordan_complement,
    same_cycle,
)
from .render import RenderError, render_svg
from .sampler import SampleKind, SamplerConfig, sample_curves
from .selftest import DEFAULT_WINDOWS, SUITES, run_selftest
from .space import DigitalSpace
from .tiling import TilingError, UnknownCellError, validate_tiling
from .tilingio import TilingParseError, curve_document, dump_curve, dump_tiling, load_curve, read_tiling

OK, NEGATIVE, USAGE, EXHAUSTED, RENDER, IO = 0, 1, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot write {out}: {exc.strerror}", IO) from None


def _load_window(ref: str):
    try:
        return read_tiling(ref)
    except OSError as exc:
        raise CliError(f"cannot read tiling {ref}: {exc.strerror}", IO) from None
    except TilingParseError as exc:
        raise CliError(f"cannot parse tiling {ref}: {exc}", IO) from None
    except ValueError as exc:  # bad builtin spec
        raise CliError(str(exc), USAGE) from None


def _load_curve(window, path: str):
    try:
        doc = load_curve(Path(path).read_text(encoding="utf-8"))
        return doc, doc.resolve(window)
    except OSError as exc:
        raise CliError(f"cannot read curve {path}: {exc.strerror}", IO) from None
    except (TilingParseError, UnknownCellError) as exc:
        raise CliError(f"bad curve file {path}: {exc}", IO) from None


def _text(report: dict, indent: str = "") -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_text(value, indent + "  ").rstrip("\n"))
        elif isinstance(value, list):
            lines.append(f"{indent}{key}: {' '.join(map(str, value)) if value else '-'}")
        else:
            lines.append(f"{indent}{key}: {value}")
    return "\n".join(lines) + "\n"


def _render_report(report: dict, fmt: str) -> str:
    if fmt == "structured":
        return json.dumps(report, indent=2) + "\n"
    return _text(report)


# ------------------------------------------------------------------ commands


def cmd_generate(args) -> int:
    try:
        if args.shape == "square":
            if len(args.size) != 2:
                raise CliError("square needs two sizes: WIDTH HEIGHT", USAGE)
            window = build_square_window(*args.size)
        else:
            if len(args.size) != 1:
                raise CliError(f"{args.shape} needs one size", USAGE)
            build = build_hexagonal_window if args.shape == "hex" else build_triangular_window
            window = build(args.size[0])
    except ValueError as exc:
        raise CliError(f"bad size: {exc}", USAGE) from None
    _emit(dump_tiling(window), args.out)
    return OK


def cmd_validate(args) -> int:
    window = _load_window(args.tiling)
    report = validate_tiling(window)
    doc = {
        "ok": report.ok,
        "cells": {k.prefix: window.count(k) for k in Kind},
        "violations": [
            {"axiom": v.axiom, "cells": [window.name(c) for c in v.cells], "message": v.message}
            for v in report.violations
        ],
    }
    if args.format == "structured":
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = [f"{'ok' if report.ok else 'INVALID'}: {window.count(Kind.VERTEX)} vertices, "
                 f"{window.count(Kind.EDGE)} edges, {window.count(Kind.FACE)} faces"]
        lines += [f"  [{v['axiom']}] {v['message']} ({', '.join(v['cells'])})" for v in doc["violations"]]
        _emit("\n".join(lines) + "\n", args.out)
    return OK if report.ok else NEGATIVE


def analyze(window, cells, margin: int = DEFAULT_MARGIN) -> tuple[dict, int]:
    """Full report on a listed curve, and the exit code it implies."""
    space = DigitalSpace(window)
    name = window.name
    fast, slow = is_jordan_curve(space, cells), is_jordan_curve_by_deletion(space, cells)
    report: dict = {
        "cells": len(cells),
        "is_jordan": fast.is_jordan,
        "induced_cycle": fast.describe(name),
        "deletion": slow.describe(name),
    }
    if fast.is_jordan != slow.is_jordan:
        report["error"] = "the two Jordan tests disagree"
        return report, NEGATIVE
    if not fast:
        return report, NEGATIVE
    order = curve_order(space, cells)
    report["cyclic_order"] = [name(c) for c in order]
    if not same_cycle(order, cells):
        report["error"] = "file order is not a cyclic order of the curve"
        return report, NEGATIVE
    try:
        split = jordan_complement(space, cells, margin)
    except (MarginError, ComplementError) as exc:
        report["error"] = str(exc)
        return report, NEGATIVE
    report["interior_size"] = len(split.interior)
    report["exterior_size"] = len(split.exterior)
    report["interior"] = [name(c) for c in sorted(split.interior)]
    report["interior_kinds"] = {k.prefix: sum(1 for c in split.interior if c.kind is k) for k in Kind}
    report["exterior_evidence"] = name(split.evidence)
    report["interior_adjacency"] = interior_adjacency_check(space, cells, split)
    closed = classify_closed(space, cells, split, margin)
    opened = classify_open(space, cells, split, margin)
    report["closed"] = {**closed.as_dict(), "coherent": closed.coherent}
    report["open"] = {**opened.as_dict(), "coherent": opened.coherent}
    witness = well_behaved_witness(space, cells)
    report["well_behaved"] = witness is None
    if witness is not None:
        report["well_behaved_witness"] = [name(c) for c in witness]
    code = OK if closed.coherent and opened.coherent and report["interior_adjacency"] else NEGATIVE
    for kind in CurveKind:
        problem = jordan_kind_problem(space, cells, kind)
        entry: dict = {"applies": problem is None}
        if problem is not None:
            entry["reason"] = problem
        else:
            try:
                r = rosenfeld_report(space, cells, kind, split, margin)
                entry.update(r.as_dict())
                entry["consistent"] = r.consistent
                if not r.consistent:
                    code = NEGATIVE
            except (MarginError, PreconditionError) as exc:
                entry["skipped"] = str(exc)
        report[kind.value] = entry
    return report, code


def cmd_analyze(args) -> int:
    window = _load_window(args.tiling)
    _, cells = _load_curve(window, args.curve)
    report, code = analyze(window, cells, args.margin)
    _emit(_render_report(report, args.format), args.out)
    return code


def cmd_sample(args) -> int:
    window = _load_window(args.tiling)
    try:
        config = SamplerConfig(seed=args.seed, target_length=(args.min_length, args.max_length),
                               kind=SampleKind(args.kind), max_attempts=args.max_attempts, margin=args.margin)
    except ValueError as exc:
        raise CliError(str(exc), USAGE) from None
    curves = sample_curves(DigitalSpace(window), config, args.samples)
    if not curves and args.samples > 0:
        print(f"sampler exhausted after {config.max_attempts} attempts with no curve", file=sys.stderr)
        return EXHAUSTED
    if len(curves) < args.samples:
        print(f"warning: only {len(curves)} of {args.samples} curves found", file=sys.stderr)
    docs = [curve_document(window, args.tiling, c) for c in curves]
    if args.out:
        outdir = Path(args.out)
        try:
            outdir.mkdir(parents=True, exist_ok=True)
            for i, doc in enumerate(docs):
                (outdir / f"curve_{i:04d}.curve").write_text(dump_curve(doc), encoding="utf-8")
        except OSError as exc:
            raise CliError(f"cannot write to {outdir}: {exc.strerror}", IO) from None
        print(f"wrote {len(docs)} curve(s) to {outdir}")
    elif args.format == "structured":
        sys.stdout.write(json.dumps([{"tiling": d.tiling_ref, "cells": list(d.cells)} for d in docs], indent=1) + "\n")
    else:
        sys.stdout.write("\n".join(dump_curve(d) for d in docs))
    return OK


def cmd_selftest(args) -> int:
    refs = args.tilings or list(DEFAULT_WINDOWS)
    windows = [(ref, _load_window(ref)) for ref in refs]
    for name in args.suite or ():
        if name not in SUITES:
            raise CliError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}", USAGE)
    results = run_selftest(windows, samples=args.samples, seed=args.seed, margin=args.margin,
                           fault=args.inject_fault, only=args.suite)
    passed = all(r.passed for r in results)
    if args.format == "structured":
        sys.stdout.write(json.dumps({"passed": passed, "suites": [r.as_dict() for r in results]}, indent=1) + "\n")
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.name} (checked {r.checked})")
            for w in r.warnings:
                print(f"  warning: {w}")
            if r.failures:
                print(f"  {len(r.failures)} counterexample(s); first: {json.dumps(r.failures[0])}")
        print("selftest passed" if passed else "selftest FAILED")
    if args.out:
        outdir = Path(args.out)
        try:
            outdir.mkdir(parents=True, exist_ok=True)
            for r in results:
                if r.failures:
                    (outdir / f"{r.name}.json").write_text(json.dumps(r.as_dict(), indent=1) + "\n")
        except OSError as exc:
            raise CliError(f"cannot write to {outdir}: {exc.strerror}", IO) from None
    return OK if passed else NEGATIVE


def cmd_render(args) -> int:
    window = _load_window(args.tiling)
    cells, split = (), None
    if args.curve:
        _, cells = _load_curve(window, args.curve)
        if args.split:
            space = DigitalSpace(window)
            verdict = is_jordan_curve(space, cells)
            if not verdict:
                print(f"cannot shade interior: {verdict.describe(window.name)}", file=sys.stderr)
                return NEGATIVE
            try:
                split = jordan_complement(space, cells, args.margin)
            except (MarginError, ComplementError) as exc:
                print(f"cannot shade interior: {exc}", file=sys.stderr)
                return NEGATIVE
    elif args.split:
        raise CliError("--split needs --curve", USAGE)
    try:
        svg = render_svg(window, cells, split)
    except RenderError as exc:
        raise CliError(str(exc), RENDER) from None
    _emit(svg, args.out)
    return OK


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tilejordan", description="Digital Jordan curves on plane tilings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True, margin=False):
        p.add_argument("--out", help="output path (default: stdout)")
        if fmt:
            p.add_argument("--format", choices=("text", "structured"), default="text")
        if margin:
            p.add_argument("--margin", type=int, default=DEFAULT_MARGIN, help="completeness margin around the curve")

    p = sub.add_parser("generate", help="write a built-in tiling window")
    p.add_argument("shape", choices=("square", "hex", "tri"))
    p.add_argument("size", type=int, nargs="+", help="square: WIDTH HEIGHT; hex: RADIUS; tri: SIZE")
    common(p, fmt=False)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("validate", help="check a tiling file against the tiling axioms")
    p.add_argument("tiling", help="tiling file or builtin:...")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="full report on one curve")
    p.add_argument("tiling")
    p.add_argument("curve", help="curve file")
    common(p, margin=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sample", help="draw random verified curves")
    p.add_argument("tiling")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--kind", choices=[k.value for k in SampleKind], default="any")
    p.add_argument("--min-length", type=int, default=4)
    p.add_argument("--max-length", type=int, default=64)
    p.add_argument("--max-attempts", type=int, default=10_000)
    common(p, margin=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("selftest", help="run every property suite")
    p.add_argument("tilings", nargs="*", help=f"windows to test (default: {' '.join(DEFAULT_WINDOWS)})")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    p.add_argument("--inject-fault", choices=("adjacency",), help="corrupt the adjacency cache first")
    common(p, margin=True)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("render", help="draw a window, optionally with a curve, as SVG")
    p.add_argument("tiling")
    p.add_argument("--curve")
    p.add_argument("--split", action="store_true", help="shade the interior of the curve")
    common(p, fmt=False, margin=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except TilingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NEGATIVE
