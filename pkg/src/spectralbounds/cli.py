"""Command-line front end.

Exit status is 0 when every check passes, 1 when any check fails and 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .bounds import closed_form_dsl, counterexample_star
from .graph import FAMILY_KINDS, FamilySpec, GraphError, parse_edge_list
from .harness import (
    FamilyCorpus,
    RandomCorpus,
    VerificationResult,
    results_to_csv,
    results_to_json,
    sweep,
    verify_family,
    verify_graph,
)

OK, FAIL, USAGE = 0, 1, 2


def _num(x) -> str:
    return "-" if x is None else f"{x:.10g}"


def _mark(flag) -> str:
    if flag is None:
        return "?"
    return "✓" if flag else "✗"


def format_text(res: VerificationResult) -> str:
    lines = [f"graph {res.label}: n={res.n} m={res.m}"]
    if res.error:
        lines.append(f"error: {res.error}")
        return "\n".join(lines) + "\n"
    for rep in res.reports:
        lines.append("")
        sym = {"q1": "q_1", "delta1Q": "delta_1^Q", "delta1": "delta_1"}[rep.radius_name]
        lines.append(f"{sym} = {_num(rep.radius)}   sandwich: {'ok' if rep.sandwich_ok else 'FAILED'}")
        lines.append(f"  {'bound':<18} {'side':<6} {'value':>18}  pred obs")
        for b in rep.bounds:
            lines.append(
                f"  {b.name:<18} {b.side:<6} {_num(b.value):>18}  "
                f"{_mark(b.equality_predicted):^4} {_mark(b.equality_observed):^3}"
            )
    lines.append("")
    lines.append("checks:")
    for name, ok in res.checks.items():
        lines.append(f"  {_mark(ok)} {name}")
    if res.findings:
        lines.append("findings:")
        lines.extend(f"  - {f}" for f in res.findings)
    lines.append(f"result: {'PASS' if res.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _emit(res: VerificationResult, fmt: str, out) -> None:
    if fmt == "json":
        out.write(results_to_json([res]))
    elif fmt == "csv":
        out.write(results_to_csv([res]))
    else:
        out.write(format_text(res))


def cmd_analyze(args, out, err) -> int:
    try:
        text = Path(args.edge_list).read_text()
    except OSError as exc:
        err.write(f"error: cannot read {args.edge_list}: {exc.strerror or exc}\n")
        return USAGE
    try:
        g = parse_edge_list(text)
    except GraphError as exc:
        err.write(f"error: {args.edge_list}: {exc}\n")
        return USAGE
    res = verify_graph(g, Path(args.edge_list).stem, {"file": str(args.edge_list)})
    _emit(res, args.format, out)
    return OK if res.passed else FAIL


def cmd_family(args, out, err) -> int:
    try:
        spec = FamilySpec(args.kind, args.n, args.a)
    except GraphError as exc:
        err.write(f"error: {exc}\n")
        return USAGE
    res = verify_family(spec)
    _emit(res, args.format, out)
    if args.format == "text" and res.error is None:
        try:
            cf = closed_form_dsl(spec)
        except ValueError:
            out.write("closed form: none\n")
        else:
            ok = res.checks.get("closed_form", False)
            out.write(f"closed form: {cf} ({'match' if ok else 'MISMATCH'})\n")
    return OK if res.passed else FAIL


def cmd_verify(args, out, err) -> int:
    if args.random:
        if args.n_min < 2 or args.n_max < args.n_min:
            err.write("error: need 2 <= --n-min <= --n-max\n")
            return USAGE
        corpus = RandomCorpus(args.n_min, args.n_max, tuple(args.p), args.count, args.seed)
    else:
        corpus = FamilyCorpus(n_max=args.max_n)
    result = sweep(corpus, workers=args.workers)
    fmt = args.format or ("csv" if args.out and str(args.out).endswith(".csv") else "json")
    text = results_to_json(result.results) if fmt == "json" else results_to_csv(result.results)
    summary = result.summary
    summary_line = (
        f"verified {summary['count']} graphs: {summary['passed']} passed, "
        f"{summary['failed']} failed, {summary['findings']} findings\n"
    )
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            err.write(f"error: cannot write {args.out}: {exc.strerror or exc}\n")
            return USAGE
        out.write(summary_line)
        for label in summary["failures"]:
            out.write(f"  FAIL {label}\n")
    else:
        out.write(text)
        err.write(summary_line)
    return OK if result.all_passed else FAIL


def cmd_counterexample(args, out, err) -> int:
    n_max = args.n_max or args.n
    if args.n < 3 or n_max < args.n:
        err.write("error: need 3 <= --n <= --n-max\n")
        return USAGE
    records = [counterexample_star(n) for n in range(args.n, n_max + 1)]
    if args.format == "json":
        payload = [
            {
                "n": r.n,
                "q1": r.q1,
                "prop27_bound": r.prop27_bound,
                "printed_bound": r.printed_bound,
                "bipartite_semiregular": r.bipartite_semiregular,
                "equality_holds": r.equality_holds,
                "corrected_equality_holds": r.corrected_equality_holds,
                "prop27_refuted": r.prop27_refuted,
            }
            for r in records
        ]
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(f"{'n':>4} {'q1':>14} {'bound (s=nbr deg)':>20} {'bound (s=2n-3)':>16}  semi-reg  equality\n")
        for r in records:
            out.write(
                f"{r.n:>4} {_num(r.q1):>14} {_num(r.prop27_bound):>20} {_num(r.printed_bound):>16}  "
                f"{_mark(r.bipartite_semiregular):^8}  {_mark(r.equality_holds):^8}\n"
            )
        for r in records:
            if r.prop27_refuted:
                verdict = "equality fails; Proposition 2.7 refuted"
            else:
                verdict = ("equality holds; S_n attains the bound, so it does not refute "
                           "Proposition 2.7 and contradicts the regular-only condition")
            out.write(f"S_{r.n}: q1 = {_num(r.q1)}, Cor-2.9 bound = {_num(r.prop27_bound)}: {verdict}\n")
    ok = all(r.q1_is_n and r.prop27_refuted for r in records)
    return OK if ok else FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectralbounds",
        description="Spectral-radius bounds for signless and distance signless Laplacians.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = dict(choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("analyze", help="all bounds for a graph in edge-list format")
    p.add_argument("edge_list")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("family", help="bounds for a named graph family member")
    p.add_argument("--kind", required=True, choices=FAMILY_KINDS)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="batch verification sweep")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--random", action="store_true")
    mode.add_argument("--families", action="store_true")
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=30)
    p.add_argument("--p", type=float, nargs="+", default=[0.5])
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "csv"))
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counterexample", help="pairwise degree bound on star graphs")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_counterexample)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    return args.func(args, out, err)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
