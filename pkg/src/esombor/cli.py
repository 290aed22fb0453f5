"""Command-line interface.

Exit codes separate mathematical outcomes from operational errors:
  0  certified / success
  1  usage or validation error
  2  refuted (the expected outcome of `refute` off the r2 residue class)
  3  inconclusive
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from . import __version__
from .enumeration import EnumerationConfig, count_chemical_trees, enumerate_chemical_trees
from .errors import EsomborError
from .extremal import extremal_certificate
from .indices import exp_reduced_sombor, reduced_sombor
from .scalars import DEFAULT_PRECISION
from .trees import parse, serialize
from .verify import (
    refute_conjecture,
    verify_class_lemmas,
    verify_lemma0,
    verify_theorem,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUTED = 2
EXIT_INCONCLUSIVE = 3

_STATUS_EXIT = {"certified": EXIT_OK, "refuted": EXIT_REFUTED,
                "inconclusive": EXIT_INCONCLUSIVE}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="esombor",
                description="Chemical-tree enumeration and certified "
                            "verification of exponential reduced Sombor "
                            "index extremal results.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, verification=False):
        sp.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                        help="working decimal precision (>= 15)")
        sp.add_argument("--format", choices=["json", "csv", "text"],
                        default="text")
        sp.add_argument("--output", default=None, help="output path (default stdout)")
        sp.add_argument("--deterministic", action="store_true",
                        help="byte-stable output (zeroes wall-clock fields)")
        sp.add_argument("--workers", type=int, default=1,
                        help="parallelism bound (current implementation is sequential)")
        sp.add_argument("--max-classes", type=int, default=None,
                        help="abort if an enumeration exceeds this many classes")

    sp = sub.add_parser("enumerate", help="list all chemical-tree classes of order n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--format", choices=["edge-list", "graph6"], default="edge-list")
    sp.add_argument("--output", default=None)
    sp.add_argument("--max-classes", type=int, default=None)
    sp.add_argument("--deterministic", action="store_true")

    sp = sub.add_parser("count", help="number of chemical-tree classes of order n")
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("index", help="index values of a tree read from a file")
    sp.add_argument("--tree", required=True, help="path to a serialized tree")
    sp.add_argument("--input-format", choices=["edge-list", "graph6"],
                    default="edge-list")
    common(sp)

    sp = sub.add_parser("extremal", help="construct the extremal tree of order n")
    sp.add_argument("--n", type=int, required=True)
    common(sp)

    sp = sub.add_parser("verify-lemma0", help="certify the coefficient inequality chains")
    common(sp)

    sp = sub.add_parser("verify-theorem", help="brute-force check of the closed-form maxima")
    sp.add_argument("--n-max", type=int, required=True)
    common(sp)

    sp = sub.add_parser("verify-classes", help="stratified per-class lemma checks at order n")
    sp.add_argument("--n", type=int, required=True)
    common(sp)

    sp = sub.add_parser("refute", help="compare the maximizer against the conjectured bound")
    sp.add_argument("--n", type=int, required=True)
    common(sp)

    sp = sub.add_parser("report-all", help="full verification report up to n-max")
    sp.add_argument("--n-max", type=int, required=True)
    common(sp)

    return p


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_precision(args) -> None:
    if getattr(args, "precision", DEFAULT_PRECISION) < 15:
        raise EsomborError("precision must be >= 15 digits")


def _report_text(report) -> str:
    lines = [f"subject: {report.subject}",
             f"status: {report.status}",
             f"precision: {report.precision_used}"]
    for m in report.margins:
        lines.append(f"  margin {m.label}: {m.gap.midpoint_str(20)} "
                     f"± {m.gap.radius_str()}")
    for row in report.rows:
        lines.append("  " + " ".join(f"{k}={v}" for k, v in row.items()))
    for w in report.witnesses:
        lines.append("witness:")
        lines.extend("  " + ln for ln in
                     serialize(w).decode("ascii").strip().splitlines())
    return "\n".join(lines) + "\n"


def _report_csv(report) -> str:
    buf = io.StringIO()
    if report.rows:
        writer = csv.DictWriter(buf, fieldnames=list(report.rows[0].keys()),
                                lineterminator="\n")
        writer.writeheader()
        for row in report.rows:
            writer.writerow(row)
    else:
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["label", "midpoint", "radius"])
        for m in report.margins:
            j = m.to_json()
            writer.writerow([j["label"], j["midpoint"], j["radius"]])
    return buf.getvalue()


def _emit_report(report, args) -> int:
    if args.format == "json":
        text = json.dumps(report.to_json(deterministic=args.deterministic),
                          indent=2) + "\n"
    elif args.format == "csv":
        text = _report_csv(report)
    else:
        text = _report_text(report)
    _emit(text, args.output)
    return _STATUS_EXIT[report.status]


def _cmd_enumerate(args) -> int:
    cfg = EnumerationConfig(n=args.n, max_classes=args.max_classes)
    chunks: List[str] = []
    for t in enumerate_chemical_trees(cfg):
        rec = serialize(t, args.format).decode("ascii")
        chunks.append(rec if rec.endswith("\n") else rec + "\n")
    _emit("".join(chunks), args.output)
    return EXIT_OK


def _cmd_count(args) -> int:
    print(count_chemical_trees(args.n))
    return EXIT_OK


def _cmd_index(args) -> int:
    _check_precision(args)
    with open(args.tree, "rb") as fh:
        t = parse(fh.read(), args.input_format)
    so = reduced_sombor(t, args.precision)
    eso = exp_reduced_sombor(t, args.precision)
    if args.format == "json":
        text = json.dumps({
            "order": t.order,
            "reduced_sombor": so.to_json(),
            "exp_reduced_sombor": eso.to_json(),
        }, indent=2) + "\n"
    else:
        text = (f"order: {t.order}\n"
                f"reduced_sombor: {so.midpoint_str(20)} ± {so.radius_str()}\n"
                f"exp_reduced_sombor: {eso.midpoint_str(20)} ± {eso.radius_str()}\n")
    _emit(text, args.output)
    return EXIT_OK


def _cmd_extremal(args) -> int:
    _check_precision(args)
    cert = extremal_certificate(args.n, args.precision)
    payload = {
        "n": args.n,
        "residue": cert.residue,
        "conditions": cert.conditions,
        "value": cert.value.to_json(),
        "bound": cert.bound.to_json(),
        "tree": serialize(cert.tree).decode("ascii"),
    }
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [f"n: {args.n}", f"residue: {cert.residue}"]
        lines += [f"condition {k}: {v}" for k, v in cert.conditions.items()]
        lines.append(f"value: {cert.value.midpoint_str(20)} ± {cert.value.radius_str()}")
        lines.append(f"bound: {cert.bound.midpoint_str(20)} ± {cert.bound.radius_str()}")
        lines.append("tree:")
        lines += ["  " + ln for ln in payload["tree"].strip().splitlines()]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def _cmd_report_all(args) -> int:
    _check_precision(args)
    p = args.precision
    reports = [verify_lemma0(p), verify_theorem(args.n_max, p)]
    for n in range(5, args.n_max + 1):
        reports.append(verify_class_lemmas(n, p))
    for n in range(5, args.n_max + 1):
        reports.append(refute_conjecture(n, p))
    statuses = {r.status for r in reports}
    expected_refutations = {f"conjecture({n})" for n in range(5, args.n_max + 1)
                            if n % 3 != 2}
    as_expected = all(
        (r.status == "refuted") == (r.subject in expected_refutations)
        for r in reports)
    if args.format == "json":
        text = json.dumps({
            "reports": [r.to_json(deterministic=args.deterministic)
                        for r in reports],
            "all_as_expected": as_expected,
        }, indent=2) + "\n"
    else:
        text = "".join(_report_text(r) + "\n" for r in reports)
        text += f"all_as_expected: {as_expected}\n"
    _emit(text, args.output)
    if "inconclusive" in statuses or not as_expected:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "count":
            return _cmd_count(args)
        if args.command == "index":
            return _cmd_index(args)
        if args.command == "extremal":
            return _cmd_extremal(args)
        if args.command == "verify-lemma0":
            _check_precision(args)
            return _emit_report(verify_lemma0(args.precision), args)
        if args.command == "verify-theorem":
            _check_precision(args)
            return _emit_report(verify_theorem(args.n_max, args.precision), args)
        if args.command == "verify-classes":
            _check_precision(args)
            return _emit_report(verify_class_lemmas(args.n, args.precision), args)
        if args.command == "refute":
            _check_precision(args)
            return _emit_report(refute_conjecture(args.n, args.precision), args)
        if args.command == "report-all":
            return _cmd_report_all(args)
    except (EsomborError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    raise SystemExit(main())
