"""Command-line front end.

Exit codes: 0 success, 1 fixture or cross-check mismatch, 2 validation
failure, 3 unreadable input, 4 budget exhausted, 5 conjecture counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import enumeration as en
from .documents import load_monoid, monoid_to_document
from .errors import (BudgetExceeded, ClosureViolation, ConjectureCounterexample, ParseError,
                     UnimonError)
from .fixtures import fixture_names, run_fixture
from .report import analyze

EXIT_MISMATCH, EXIT_INVALID, EXIT_PARSE, EXIT_BUDGET, EXIT_COUNTEREXAMPLE = 1, 2, 3, 4, 5


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2)


def cmd_analyze(args) -> int:
    rep = analyze(load_monoid(args.file))
    _emit(rep.to_text() if args.format == "text" else _dumps(rep.to_json()), args.out)
    return 0


def cmd_mingen(args) -> int:
    rep = analyze(load_monoid(args.file))
    if args.format == "text":
        text = f"e={rep.e}\n" + "\n".join(str(p) for p in rep.min_gens)
    else:
        text = _dumps({"e": rep.e, "min_gens": [list(p) for p in rep.min_gens],
                       "matrices": [m.to_literal() for m in rep.min_gens.matrices()]})
    _emit(text, args.out)
    return 0


def cmd_check_wilf(args) -> int:
    rep = analyze(load_monoid(args.file))
    v = rep.verdict
    if args.format == "text":
        lines = [ln for ln in rep.to_text().splitlines()
                 if ln.startswith(("unipotent", "generalized", "ratio", "theorem"))]
        text = "\n".join(lines)
    else:
        text = _dumps(v.to_json())
    _emit(text, args.out)
    return 0


def cmd_paper_examples(args) -> int:
    names = args.names or fixture_names()
    failed = 0
    rows = []
    for name in names:
        res = run_fixture(name)
        failed += not res.ok
        rows.append({"fixture": name, "ok": res.ok,
                     "failures": [f"{c.case}: {c.describe()}" for c in res.failures()]})
        if args.format == "text":
            print(f"{'PASS' if res.ok else 'FAIL'}  {name}")
            for c in res.failures():
                print(f"      {c.case}: {c.describe()}")
    if args.format == "json":
        _emit(_dumps(rows), args.out)
    else:
        print(f"{len(names) - failed}/{len(names)} fixtures pass")
    return EXIT_MISMATCH if failed else 0


def _crosscheck(d: int, g_max: int) -> list[int]:
    return [g for g in range(g_max + 1) if en.tree_hole_sets(d, g) != en.brute_force_oracle(d, g)]


def cmd_oracle_crosscheck(args) -> int:
    bad = _crosscheck(args.dim, args.genus)
    print("oracle agreement: OK" if not bad else f"oracle agreement: MISMATCH at genus {bad}")
    return EXIT_MISMATCH if bad else 0


def cmd_enumerate(args) -> int:
    keep_rows = args.format == "csv"
    resume = en.read_checkpoint(args.resume) if args.resume else None
    try:
        stats = en.sweep(args.dim, args.genus, workers=args.workers,
                         node_budget=args.node_budget, keep_rows=keep_rows, resume=resume)
    except BudgetExceeded as exc:
        path = args.checkpoint or "unimon-checkpoint.json"
        en.write_checkpoint(path, args.dim, args.genus, exc, keep_rows)
        print(f"{exc}; checkpoint written to {path}", file=sys.stderr)
        return EXIT_BUDGET
    en.log_timing(stats)
    if args.format == "csv":
        if args.out:
            with open(args.out, "w", newline="") as fh:
                en.write_csv(stats, fh)
        else:
            en.write_csv(stats, sys.stdout)
    elif args.format == "text":
        counts = stats.to_json()["counts_by_genus"]
        lines = [f"dim={args.dim} genus<={args.genus} total={stats.total}",
                 "counts by genus: " + ",".join(map(str, counts)),
                 f"thick={stats.thick} thin={stats.thin} both={stats.thick_and_thin}",
                 "conjecture violations: " + json.dumps(stats.conjecture_violations),
                 "theorem failures: " + json.dumps(stats.theorem_failures)]
        _emit("\n".join(lines), args.out)
    else:
        _emit(_dumps(stats.to_json()), args.out)
    if args.oracle_crosscheck:
        bad = _crosscheck(args.dim, args.genus)
        print("oracle agreement: OK" if not bad else f"oracle agreement: MISMATCH at genus {bad}")
        if bad:
            return EXIT_MISMATCH
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="unimon",
                                description="Unipotent numerical monoids: invariants, "
                                            "minimal generators, Wilf-type checks, enumeration.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_format(sp, choices=("json", "text"), default="json"):
        sp.add_argument("--format", choices=choices, default=default)
        sp.add_argument("--out", help="write output to this file instead of stdout")

    for name, fn, helptext in (("analyze", cmd_analyze, "full invariant report for a monoid file"),
                               ("mingen", cmd_mingen, "minimal generating set of a monoid file"),
                               ("check-wilf", cmd_check_wilf, "Wilf-type verdicts for a monoid file")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("file")
        with_format(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("paper-examples", help="run the reference fixtures")
    sp.add_argument("names", nargs="*", help=f"subset of: {', '.join(fixture_names())}")
    with_format(sp, default="text")
    sp.set_defaults(func=cmd_paper_examples)

    sp = sub.add_parser("enumerate", help="sweep every monoid in N^d up to a genus")
    sp.add_argument("-d", "--dim", type=int, required=True)
    sp.add_argument("-g", "--genus", type=int, required=True)
    sp.add_argument("--workers", type=int, default=None,
                    help="process count (default: $UNIMON_WORKERS or 1)")
    sp.add_argument("--node-budget", type=int, default=None)
    sp.add_argument("--checkpoint", help="where to write the frontier if the budget runs out")
    sp.add_argument("--resume", help="continue from a checkpoint file")
    sp.add_argument("--oracle-crosscheck", action="store_true")
    with_format(sp, choices=("json", "text", "csv"))
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("oracle-crosscheck", help="compare the tree with the brute-force oracle")
    sp.add_argument("-d", "--dim", type=int, required=True)
    sp.add_argument("-g", "--genus", type=int, required=True)
    sp.set_defaults(func=cmd_oracle_crosscheck)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", None) is not None and args.workers < 1:
        print("error: --workers must be at least 1", file=sys.stderr)
        return EXIT_INVALID
    if getattr(args, "node_budget", None) is not None and args.node_budget < 1:
        print("error: --node-budget must be positive", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ClosureViolation as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        print(f"witness: {exc.y} * {exc.z} = {exc.product}", file=sys.stderr)
        return EXIT_INVALID
    except ConjectureCounterexample as exc:
        print(f"COUNTEREXAMPLE to the {exc.name} inequality: {exc.record}", file=sys.stderr)
        print(json.dumps(monoid_to_document(exc.monoid)), file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    except (UnimonError, ValueError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
