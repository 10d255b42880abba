"""Command-line interface.

Usage:
    tinvariant compute "-1; (2,1) (2,1) (2,1)"
    tinvariant classify 5 2
    tinvariant classify "-1; (2,1) (2,1) (5,2)"
    tinvariant sweep --format csv -o sweep.csv --report-dir reports/
    tinvariant table
    tinvariant selfcheck --seed 7
    tinvariant dump-constants

Exit codes: 0 success, 1 invalid input, 2 internal inconsistency.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from pathlib import Path

from . import checks
from .closed_form import DEFAULT_CONVENTION, Convention, classify, format_report, reconcile, t_closed
from .errors import DomainError, InconsistencyError
from .fibers import class_of, fiber_vector, fiber_word, labeled_orbit, printed_correspondence
from .golden import GoldenNum, to_real
from .seifert import (
    ParseError,
    SeifertPresentation,
    fiber_classes,
    h1,
    normalize,
    parse_presentation,
    sweep_all_classes,
    t_invariant,
)
from .tensors import SUBGRAPHS, constants

__all__ = ["main", "parse_presentation", "compute_record"]

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2


def _vec_json(v) -> list[dict]:
    return [x.to_json() for x in v]


def _vec_str(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def compute_record(p: SeifertPresentation, convention: Convention = DEFAULT_CONVENTION) -> dict:
    t = t_invariant(p)
    closed = t_closed(p, convention)
    group = h1(p)
    return {
        "presentation": str(p),
        "normalized": str(normalize(p)),
        "classes": [str(c) for c in fiber_classes(p)],
        "t": t.to_json(),
        "t_float": to_real(t),
        "t_closed": closed.to_json(),
        "routes_agree": t == closed,
        "h1": group.to_json(),
    }


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_compute(args) -> int:
    p = parse_presentation(args.presentation)
    rec = compute_record(p, args.convention)
    t = GoldenNum.from_json(rec["t"])
    if args.format == "json":
        out = json.dumps(rec, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["presentation", "t", "t_float", "t_closed", "routes_agree", "h1"])
        w.writerow([rec["presentation"], str(t), rec["t_float"], str(GoldenNum.from_json(rec["t_closed"])),
                    rec["routes_agree"], str(h1(p))])
        out = buf.getvalue()
    else:
        out = (
            f"presentation: {rec['presentation']}\n"
            f"normalized:   {rec['normalized']}\n"
            f"classes:      {' '.join(rec['classes'])}\n"
            f"t (tensor):   {t}  ~ {rec['t_float']:.10f}\n"
            f"t (closed):   {GoldenNum.from_json(rec['t_closed'])}\n"
            f"routes agree: {'yes' if rec['routes_agree'] else 'NO'}\n"
            f"H1:           {h1(p)}\n"
        )
    _emit(out, args.output)
    return EXIT_OK if rec["routes_agree"] else EXIT_INCONSISTENT


def _classify_fiber(alpha: int, beta: int) -> dict:
    rec = {"fiber": [alpha, beta], "class": str(class_of(alpha, beta))}
    if alpha >= 1 and beta >= 1:
        rec["word"] = "".join(fiber_word(alpha, beta))
        vec = fiber_vector(alpha, beta)
    else:
        rec["word"] = None
        vec = labeled_orbit()[class_of(alpha, beta)]
    rec["vector"] = _vec_json(vec)
    rec["vector_str"] = _vec_str(vec)
    return rec


def _cmd_classify(args) -> int:
    if len(args.target) == 2:
        try:
            alpha, beta = (int(x) for x in args.target)
        except ValueError:
            raise DomainError(f"ALPHA and BETA must be integers, got {args.target}") from None
        recs = [_classify_fiber(alpha, beta)]
        case = None
    elif len(args.target) == 1:
        p = parse_presentation(args.target[0])
        n = normalize(p)
        recs = [_classify_fiber(a, b) for a, b in n.fibers]
        c = classify(n, args.convention)
        case = {"tag": c.tag, "fibers": [list(f) for f in c.fibers], "params": c.params}
    else:
        raise DomainError("classify takes ALPHA BETA or a presentation string")
    if args.format == "json":
        out = json.dumps({"fibers": recs, "case": case}, indent=2) + "\n"
    else:
        lines = []
        for r in recs:
            word = r["word"] if r["word"] is not None else "-"
            lines.append(f"({r['fiber'][0]},{r['fiber'][1]})  word={word or '(empty)'}  class={r['class']}  vector={r['vector_str']}")
        if case:
            lines.append(f"case: {case['tag']} {case['params']}")
        out = "\n".join(lines) + "\n"
    _emit(out, args.output)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    sweep = sweep_all_classes()
    rows = []
    for triple, value in sweep.items():
        rows.append({
            "class1": str(triple[0]), "class2": str(triple[1]), "class3": str(triple[2]),
            "t_a": value.a, "t_b": value.b, "t_float": to_real(value), "t": str(value),
        })
    census = Counter(r["t"] for r in rows)
    status = EXIT_OK if len(census) == 12 else EXIT_INCONSISTENT

    if args.report_dir:
        try:
            report = reconcile(sweep, args.convention)
        except InconsistencyError as exc:
            print(f"reconcile failed: {exc}", file=sys.stderr)
            report, status = None, EXIT_INCONSISTENT
        if report is not None:
            d = Path(args.report_dir)
            d.mkdir(parents=True, exist_ok=True)
            (d / "reconcile.json").write_text(json.dumps(report, indent=2) + "\n")
            (d / "reconcile.txt").write_text(format_report(report) + "\n")

    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["class1", "class2", "class3", "t_a", "t_b", "t_float"],
                           extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        out = buf.getvalue()
    elif args.format == "json":
        out = json.dumps({"triples": rows, "distinct_values": dict(census), "count": len(census)}, indent=2) + "\n"
    else:
        lines = [f"{len(rows)} class triples, {len(census)} distinct values"]
        for value, n in sorted(census.items(), key=lambda kv: -kv[1]):
            lines.append(f"  {value:10s} {n:4d}")
        out = "\n".join(lines) + "\n"
    _emit(out, args.output)
    return status


def _cmd_table(args) -> int:
    rows = []
    ok = True
    for text, torsion, want in checks.COMPARISON_TABLE:
        p = parse_presentation(text)
        rec = compute_record(p, args.convention)
        t = GoldenNum.from_json(rec["t"])
        match = t == want and tuple(rec["h1"]["torsion"]) == torsion and rec["routes_agree"]
        ok &= match
        rows.append({"presentation": text, "h1": str(h1(p)), "t": str(t), "expected_t": str(want), "match": match})
    if args.format == "json":
        out = json.dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        out = buf.getvalue()
    else:
        out = "".join(f"{r['presentation']:24s} {r['h1']:12s} {r['t']:10s} {'ok' if r['match'] else 'MISMATCH'}\n"
                      for r in rows)
    _emit(out, args.output)
    return EXIT_OK if ok else EXIT_INCONSISTENT


def _cmd_selfcheck(args) -> int:
    results = checks.run_all(seed=args.seed, convention=args.convention)
    if args.format == "json":
        out = json.dumps([r.__dict__ for r in results], indent=2) + "\n"
    else:
        out = "".join(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}\n" for r in results)
    _emit(out, args.output)
    return EXIT_OK if all(r.passed for r in results) else EXIT_INCONSISTENT


def _cmd_dump(args) -> int:
    c = constants()
    data = {
        "subgraph_order": list(SUBGRAPHS),
        "phi_E": _vec_json(c.phi_E),
        "phi_J": [_vec_json(r) for r in c.phi_J],
        "phi_T": [[_vec_json(r) for r in m] for m in c.phi_T],
        "phi_23": [_vec_json(r) for r in c.phi_23],
        "phi_13": [_vec_json(r) for r in c.phi_13],
        "orbit": [{"class": str(k), "vector": _vec_json(v)} for k, v in labeled_orbit().items()],
        "printed_correspondence": printed_correspondence(),
    }
    if args.format == "text":
        lines = [f"phi_E = {_vec_str(c.phi_E)}"]
        for k, v in labeled_orbit().items():
            lines.append(f"{str(k):8s} {_vec_str(v)}")
        out = "\n".join(lines) + "\n"
    else:
        out = json.dumps(data, indent=2) + "\n"
    _emit(out, args.output)
    return EXIT_OK


def _convention(value: str) -> Convention:
    try:
        return Convention.from_id(value)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=None,
                        help="output format (default text; json for dump-constants)")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    common.add_argument("--convention", type=_convention, default=DEFAULT_CONVENTION,
                        help=f"closed-form sign convention (default {DEFAULT_CONVENTION.id})")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized self-check subsets")

    parser = argparse.ArgumentParser(prog="tinvariant", description="t-invariant of small Seifert manifolds")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="t by both routes and H1")
    p.add_argument("presentation", help='e.g. "-1; (2,1) (2,1) (3,2)"')
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("classify", parents=[common], help="fiber word, class and vector")
    p.add_argument("target", nargs="+", help="ALPHA BETA, or a presentation string")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("sweep", parents=[common], help="all 364 class triples")
    p.add_argument("--report-dir", help="write reconcile.json and reconcile.txt here")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("table", parents=[common], help="t versus H1 comparison table")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("selfcheck", parents=[common], help="run every acceptance property")
    p.set_defaults(func=_cmd_selfcheck)

    p = sub.add_parser("dump-constants", parents=[common], help="matrices and the 12 orbit vectors")
    p.set_defaults(func=_cmd_dump, default_format="json")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = getattr(args, "default_format", "text")
    try:
        return args.func(args)
    except (ParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
