"""Command-line surface.

Subcommands:

    build            construct a family member and emit a .plesken.json document
    analyze          skew-part structure report for a document
    verify-cellular  full cellularity verification and certificate
    paper-suite      run the whole verification battery

Exit codes: 0 success or certificate, 1 refutation or failed battery item
(a mathematically meaningful negative outcome), 2 input or validation
error, 3 internal inconsistency.  The only environment variable honored is
PLESKEN_OUT_DIR, an output-directory override for relative --out paths.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from .algebra import InternalConsistencyError
from .builders import (
    GroupTable,
    group_algebra,
    matrix_algebra,
    matrix_over_algebra,
    planar_rook,
    quaternions,
    temperley_lieb,
)
from .cellular import (
    cell_datum_matrix,
    cell_datum_planar_rook,
    cell_datum_temperley_lieb,
)
from .interchange import FILE_SUFFIX, document_from_algebra, emit, load
from .report import (
    DocumentInvalid,
    analysis_report,
    cellular_report,
    dumps,
    render_markdown,
    validate_algebra,
)
from .suite import run_suite

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3

FAMILIES = (
    "quaternions",
    "matrix",
    "matrix-conj",
    "group",
    "matrix-over",
    "planar-rook",
    "temperley-lieb",
)


def _out_path(out: str | None, default_name: str) -> Path | None:
    if out is None and default_name is None:
        return None
    target = Path(out) if out is not None else Path(default_name)
    base = os.environ.get("PLESKEN_OUT_DIR")
    if base and not target.is_absolute():
        target = Path(base) / target
    return target


def _write_or_print(text: str, path: Path | None):
    if path is None:
        sys.stdout.write(text)
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        print(f"wrote {path}")


def _sanitize(text: str) -> str:
    return text.replace("/", "_").replace("+", "p").replace("-", "m")


def _build(args) -> int:
    family = args.family
    cell = None
    if family == "quaternions":
        name = "quaternions"
        algebra, sigma = quaternions()
    elif family in ("matrix", "matrix-conj"):
        if args.n is None:
            raise DocumentInvalid("--n is required for matrix families")
        involution = "transpose" if family == "matrix" else "conj_transpose"
        algebra, sigma = matrix_algebra(args.n, involution)
        if family == "matrix":
            cell = cell_datum_matrix(args.n, sigma)
        name = f"{family}-n{args.n}"
    elif family == "group":
        if args.table is None:
            raise DocumentInvalid("--table is required for the group family")
        import json

        try:
            raw = json.loads(Path(args.table).read_text())
        except OSError as exc:
            raise DocumentInvalid(f"cannot read {args.table}: {exc}") from exc
        try:
            table = GroupTable(raw["product"], labels=raw.get("labels"))
        except (KeyError, TypeError) as exc:
            raise DocumentInvalid(f"malformed group table: {exc}") from exc
        algebra, sigma = group_algebra(table)
        name = raw.get("name", Path(args.table).stem)
    elif family == "matrix-over":
        if args.n is None or args.inner is None:
            raise DocumentInvalid("--n and --inner are required for matrix-over")
        try:
            inner_doc = load(args.inner)
        except OSError as exc:
            raise DocumentInvalid(f"cannot read {args.inner}: {exc}") from exc
        inner, inner_sigma, _ = inner_doc.to_algebra()
        algebra, sigma = matrix_over_algebra(args.n, inner, inner_sigma)
        name = f"matrix-over-{inner_doc.name}-n{args.n}"
    elif family == "planar-rook":
        if args.n is None:
            raise DocumentInvalid("--n is required for planar-rook")
        algebra, sigma = planar_rook(args.n, cap=args.cap)
        cell = cell_datum_planar_rook(args.n, sigma)
        name = f"planar-rook-n{args.n}"
    elif family == "temperley-lieb":
        if args.n is None or args.delta is None:
            raise DocumentInvalid("--n and --delta are required for temperley-lieb")
        algebra, sigma = temperley_lieb(args.n, args.delta, cap=args.cap)
        cell = cell_datum_temperley_lieb(args.n, sigma)
        name = f"temperley-lieb-n{args.n}-delta{_sanitize(args.delta)}"
    else:
        raise DocumentInvalid(f"unknown family {family!r}")
    validate_algebra(algebra, sigma)  # refuse to emit invalid documents
    doc = document_from_algebra(args.name or name, algebra, sigma, cell=cell)
    path = _out_path(args.out, (args.name or name) + FILE_SUFFIX)
    _write_or_print(emit(doc), path)
    return EXIT_OK


def _load_validated(path: str):
    try:
        doc = load(path)
    except OSError as exc:
        raise DocumentInvalid(f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise DocumentInvalid(f"cannot parse {path}: {exc}") from exc
    algebra, sigma, datum = doc.to_algebra()
    return doc, algebra, sigma, datum


def _emit_report(report: dict, args) -> None:
    if getattr(args, "timing", False):
        report["timing_ms"] = int((time.monotonic() - args.started) * 1000)
    text = render_markdown(report) if args.format == "md" else dumps(report)
    _write_or_print(text, _out_path(args.out, None))


def _analyze(args) -> int:
    doc, algebra, sigma, _ = _load_validated(args.document)
    report = analysis_report(
        doc.name, algebra, sigma, bracket_cap=args.bracket_cap, seed=args.seed
    )
    _emit_report(report, args)
    return EXIT_OK


def _verify_cellular(args) -> int:
    doc, algebra, sigma, datum = _load_validated(args.document)
    if datum is None:
        raise DocumentInvalid("document has no cell section")
    report = cellular_report(
        doc.name, algebra, sigma, datum, bracket_cap=args.bracket_cap, seed=args.seed
    )
    _emit_report(report, args)
    if not report["cellularity"]["valid"]:
        return EXIT_INVALID
    return EXIT_OK if report["theorem"]["certified"] else EXIT_REFUTED


def _paper_suite(args) -> int:
    results = run_suite(cap=args.cap, seed=args.seed)
    statuses = {info["status"] for info in results.values()}
    payload = {
        "cap": args.cap,
        "seed": args.seed,
        "results": results,
        "failed": sorted(k for k, v in results.items() if v["status"] == "fail"),
        "skipped": sorted(k for k, v in results.items() if v["status"] == "skip"),
    }
    if getattr(args, "timing", False):
        payload["timing_ms"] = int((time.monotonic() - args.started) * 1000)
    _write_or_print(dumps(payload), _out_path(args.out, None))
    if "fail" in statuses:
        return EXIT_REFUTED
    if "skip" in statuses and not args.allow_skips:
        return EXIT_REFUTED
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plesken",
        description="Exact verification of skew-part Lie structure for algebras "
        "with anti-involution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="construct a family member")
    build.add_argument("--family", required=True, choices=FAMILIES)
    build.add_argument("--n", type=int)
    build.add_argument("--delta", help="exact scalar string, e.g. 0, 3, 1/2")
    build.add_argument("--table", help="group multiplication table (JSON)")
    build.add_argument("--inner", help="inner algebra document for matrix-over")
    build.add_argument("--cap", type=int, default=6)
    build.add_argument("--name")
    build.add_argument("--out")
    build.set_defaults(func=_build)

    for key, func in (("analyze", _analyze), ("verify-cellular", _verify_cellular)):
        cmd = sub.add_parser(key)
        cmd.add_argument("document")
        cmd.add_argument("--format", choices=("json", "md"), default="json")
        cmd.add_argument("--seed", type=int, default=0)
        cmd.add_argument("--bracket-cap", type=int, default=12)
        cmd.add_argument("--out")
        cmd.add_argument("--timing", action="store_true")
        cmd.set_defaults(func=func)

    suite = sub.add_parser("paper-suite", help="run the verification battery")
    suite.add_argument("--cap", type=int, default=6)
    suite.add_argument("--seed", type=int, default=0)
    suite.add_argument("--allow-skips", action="store_true")
    suite.add_argument("--out")
    suite.add_argument("--timing", action="store_true")
    suite.set_defaults(func=_paper_suite)
    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    args.started = time.monotonic()
    try:
        return args.func(args)
    except DocumentInvalid as exc:
        _report_error(args, "invalid-input", str(exc))
        return EXIT_INVALID
    except InternalConsistencyError as exc:
        _report_error(args, "internal-inconsistency", str(exc))
        return EXIT_INTERNAL
    except ValueError as exc:
        _report_error(args, "invalid-input", str(exc))
        return EXIT_INVALID


def _report_error(args, kind: str, message: str):
    if getattr(args, "format", None) == "json":
        sys.stdout.write(dumps({"error": {"kind": kind, "message": message}}))
    print(f"error: {message}", file=sys.stderr)


if __name__ == "__main__":
    raise SystemExit(main())
