"""Command line front end: ``holospin kernel | table | variants | verify``.

Exit codes: 0 success, 1 a property or table row failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import output
from .catalog import ConstraintError, HolonomyId
from .engine import (FixedSpaceReport, TableRow, enumerate_ids, fixed_space,
                     orientation_variants, theorem_table)
from .spinors import GramReport
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


def _hid(args) -> HolonomyId:
    try:
        return HolonomyId.parse(args.group, args.p, args.q)
    except ConstraintError as exc:
        raise _UsageError(str(exc)) from None


def _gram_text(g: GramReport, indent: str = "  ") -> list[str]:
    lines = [indent + line for line in g.gram.pretty().splitlines()]
    lines.append(f"{indent}causal: {', '.join(c.value for c in g.causal)}")
    return lines


def _split_text(split) -> str:
    if split is None:
        return "n/a (odd dimension)"
    text = f"{split.plus} in Delta+, {split.minus} in Delta-"
    return text + " (plus mixed vectors)" if split.mixed else text


def _report_text(rep: FixedSpaceReport, show_basis: bool, gram: bool) -> list[str]:
    sig = rep.signature
    lines = [f"{rep.hid.label()}  signature {sig.label()}  n={sig.n} r={sig.r}",
             f"N = {rep.dim}"]
    if rep.dim:
        lines.append(f"chirality: {_split_text(rep.chirality)}")
    if show_basis:
        for k, v in enumerate(rep.basis, 1):
            lines.append(f"  v{k} = {v}")
    if gram:
        if rep.gram is None:
            lines.append("Gram: n/a" + (" (no timelike direction)" if sig.r == 0 else ""))
        else:
            lines.append("Gram:")
            lines += _gram_text(rep.gram)
    return lines


def _variants_text(variants, problems) -> list[str]:
    lines = []
    for v in variants.values():
        op = " ".join(f"e{k}" for k in v.operator) or "id"
        lines.append(f"{v.label} = {op} . V   chirality: {_split_text(v.chirality)}")
        for k, x in enumerate(v.basis, 1):
            lines.append(f"    v{k} = {x}")
        if v.gram is not None:
            lines += _gram_text(v.gram, "    ")
        for name, ok in v.checks.items():
            lines.append(f"    {name}: {'pass' if ok else 'FAIL'}")
    lines += [f"note: {p}" for p in problems]
    return lines


def _variants_ok(variants) -> bool:
    return all(all(v.checks.values()) for v in variants.values())


def cmd_kernel(args):
    hid = _hid(args)
    rep = fixed_space(hid)
    results = {"report": output.encode_report(rep)}
    ok = True
    if args.variants:
        variants, problems = orientation_variants(rep)
        results["variants"] = output.encode_variants(variants, problems)
        ok = _variants_ok(variants)
    if args.format == "json":
        return results, None, ok
    lines = _report_text(rep, args.show_basis, args.gram)
    if args.variants:
        lines += _variants_text(variants, problems)
    return results, "\n".join(lines), ok


def cmd_variants(args):
    hid = _hid(args)
    rep = fixed_space(hid)
    variants, problems = orientation_variants(rep)
    results = {"report": output.encode_report(rep), "variants": output.encode_variants(variants, problems)}
    ok = _variants_ok(variants)
    if args.format == "json":
        return results, None, ok
    lines = _report_text(rep, False, False) + _variants_text(variants, problems)
    return results, "\n".join(lines), ok


def _row_chirality(row: TableRow) -> str:
    split = row.report.chirality
    if not row.report.dim or split is None:
        return "-"
    return f"{split.plus}+ / {split.minus}-" + (" mixed" if split.mixed else "")


def _row_causal(row: TableRow) -> str:
    g = row.report.gram
    if g is None:
        return "-"
    tags = ", ".join(c.value for c in g.causal)
    if row.report.dim == 2 and g.gram[0, 1]:
        tags += f" (<v1,v2> = {g.gram[0, 1]})"
    return tags


def table_markdown(rows: list[TableRow]) -> str:
    head = "| H | n | r | N | chirality | causal type | expected N | status |"
    lines = [head, "|---|---|---|---|---|---|---|---|"]
    for row in rows:
        e = row.expected
        status = "pass" if row.passed else "FAIL: " + "; ".join(row.failures)
        lines.append(f"| {e.hid.label()} | {e.n} | {e.r} | {row.report.dim} | {_row_chirality(row)} "
                     f"| {_row_causal(row)} | {e.expected_N} | {status} |")
    return "\n".join(lines)


def cmd_table(args):
    if args.max_n < 4:
        raise _UsageError("--max-n must be at least 4")
    if args.workers is not None and args.workers < 1:
        raise _UsageError("--workers must be positive")
    rows = theorem_table(args.max_n, enumerate_ids(args.max_n), workers=args.workers)
    results = {"rows": [output.encode_row(r) for r in rows],
               "passed": sum(r.passed for r in rows), "failed": sum(not r.passed for r in rows)}
    ok = all(r.passed for r in rows)
    if args.format == "json":
        return results, None, ok
    return results, table_markdown(rows), ok


def cmd_verify(args):
    res = run_suite(args.suite)
    results = {"properties": [output.encode_property(r) for r in res]}
    ok = all(r.passed for r in res)
    if args.format == "json":
        return results, None, ok
    lines = []
    for r in res:
        line = f"{'PASS' if r.passed else 'FAIL'}  [{r.suite}] {r.name}  ({r.checked} cases)"
        if not r.passed:
            line += f"\n      counterexample: {r.counterexample}"
        lines.append(line)
    return results, "\n".join(lines), ok


def _add_group(p):
    p.add_argument("--group", required=True, help="holonomy family, e.g. su, sp, g2, g2star, spin7c")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="holospin",
                                     description="Fixed spinors of holonomy algebras, computed exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    k = sub.add_parser("kernel", help="fixed-spinor space of one holonomy algebra")
    _add_group(k)
    k.add_argument("--show-basis", action="store_true")
    k.add_argument("--gram", action="store_true")
    k.add_argument("--variants", action="store_true", help="also apply the orientation variants")
    k.add_argument("--format", choices=["text", "json"], default="text")
    k.set_defaults(func=cmd_kernel)

    t = sub.add_parser("table", help="theorem table over all admissible parameters up to --max-n")
    t.add_argument("--max-n", type=int, required=True)
    t.add_argument("--format", choices=["markdown", "json"], default="markdown")
    t.add_argument("--workers", type=int, default=None, help="process count (capped by HOLOSPIN_THREADS)")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run property suites")
    v.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("variants", help="orientation variants H', H'', H''' of one algebra")
    _add_group(w)
    w.add_argument("--format", choices=["text", "json"], default="text")
    w.set_defaults(func=cmd_variants)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        results, text, ok = args.func(args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"holospin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"holospin: property failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    seconds = time.perf_counter() - start
    if args.format == "json":
        cmd_args = {k: v for k, v in vars(args).items() if k not in ("func", "command")}
        print(output.dumps(output.document(args.command, cmd_args, results, seconds)))
    else:
        print(text)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
