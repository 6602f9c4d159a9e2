"""Command-line interface: ``nedlib {dist,path,align,compose,check,bench}``.

Exit codes: 0 success, 1 property failure, 2 size limit, 3 undefined
composition or invalid path chain, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from fractions import Fraction

from nedlib import metrics, oracle, propcheck
from nedlib.compose import Undefined, compose
from nedlib.edit_model import (
    PAD,
    EditError,
    InvalidPath,
    apply,
    format_path,
    infer_subscripts,
    is_bare,
    parse_path,
    path_to_json,
    render_alignment,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_LIMIT = 2
EXIT_UNDEFINED = 3
EXIT_USAGE = 64

CSV_HEADER = ("metric", "a", "b", "num", "den", "decimal")
WITNESS_METRICS = ("ned", "ed")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def fmt_decimal(value: Fraction) -> str:
    return format(float(value), ".6g")


def dump_json(obj) -> str:
    """The one JSON rendering used for all output, so that re-rendering parsed output is byte-identical."""
    return json.dumps(obj, ensure_ascii=False)


def _check_word(word: str, pad: str) -> str:
    if pad and pad in word:
        raise UsageError(f"word {word!r} contains the pad glyph {pad!r}")
    return word


def distance_record(metric: str, a: str, b: str, witness: bool) -> dict:
    if witness and metric in WITNESS_METRICS:
        res = metrics.METRICS[metric](a, b)
    elif metric in ("ced", "cedp") and witness:
        res = metrics.METRICS[metric](a, b)
    else:
        res = metrics.DistanceResult(metric, metrics.VALUE_FUNCS[metric](a, b))
    rec = {
        "metric": metric,
        "a": a,
        "b": b,
        "value": {"num": res.value.numerator, "den": res.value.denominator},
        "value_decimal": fmt_decimal(res.value),
        "witness": None,
    }
    if res.witness is not None:
        top, bottom = render_alignment(res.witness, a)
        rec["witness"] = path_to_json(res.witness)
        rec["path"] = format_path(res.witness)
        rec["alignment"] = [top, bottom]
    if res.chain is not None:
        rec["chain"] = list(res.chain)
    return rec


def _human_dist(rec: dict, witness: bool) -> str:
    value = Fraction(rec["value"]["num"], rec["value"]["den"])
    lines = [f"{fmt_fraction(value)} ({rec['value_decimal']})"]
    if witness:
        if "path" in rec:
            lines.append(f"path: {rec['path'] or 'ε'}")
            lines += rec["alignment"]
        elif "chain" in rec:
            lines.append("chain: " + " -> ".join(w or "ε" for w in rec["chain"]))
        else:
            lines.append(f"(no witness for {rec['metric']})")
    return "\n".join(lines)


def _csv_rows(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rec in records:
        w.writerow((rec["metric"], rec["a"], rec["b"], rec["value"]["num"], rec["value"]["den"], rec["value_decimal"]))
    return buf.getvalue().rstrip("\n")


def read_pairs(path: str) -> list[tuple[str, str]]:
    """One pair per line, the two words separated by a tab; blank lines are skipped."""
    pairs = []
    handle = sys.stdin if path == "-" else open(path, encoding="utf-8")
    with handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.rstrip("\r\n")
            if not line:
                continue
            if line.count("\t") != 1:
                raise UsageError(f"{path}:{lineno}: expected two tab-separated words")
            a, b = line.split("\t")
            pairs.append((a, b))
    return pairs


def cmd_dist(args, witness: bool = False) -> int:
    witness = witness or args.witness
    if args.file:
        if args.a is not None or args.b is not None:
            raise UsageError("give either two words or --file, not both")
        pairs = read_pairs(args.file)
    else:
        if args.a is None or args.b is None:
            raise UsageError("two words are required (use \"\" for the empty word)")
        pairs = [(args.a, args.b)]
    records = []
    for a, b in pairs:
        records.append(distance_record(args.metric, _check_word(a, args.pad), _check_word(b, args.pad), witness))

    if args.csv or (args.file and not args.json):
        print(_csv_rows(records))
    elif args.json:
        print(dump_json(records[0] if not args.file else {"results": records}))
    else:
        print("\n".join(_human_dist(rec, witness) for rec in records))
    return EXIT_OK


def cmd_align(args) -> int:
    a, b = _check_word(args.a, args.pad), _check_word(args.b, args.pad)
    res = metrics.METRICS[args.metric](a, b)
    top, bottom = render_alignment(res.witness, a, pad=args.pad)
    if args.json:
        print(dump_json({"metric": args.metric, "a": a, "b": b, "path": format_path(res.witness), "alignment": [top, bottom]}))
    else:
        marks = "".join(" " if s == t else "^" for s, t in zip(top, bottom))
        print(top)
        print(bottom)
        print(marks.rstrip())
    return EXIT_OK


def _parse_input_path(text: str, source, target, label: str):
    if is_bare(text):
        if source is None or target is None:
            raise UsageError(f"bare path {label} needs --s2 and --s3 to infer symbols")
        return infer_subscripts(text, source, target)
    return parse_path(text)


def cmd_compose(args) -> int:
    s1 = args.s1
    try:
        p12 = _parse_input_path(args.p12, s1, args.s2, "p12")
        p23 = _parse_input_path(args.p23, args.s2, args.s3, "p23")
    except InvalidPath as exc:
        print(f"invalid chain: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    try:
        out = compose(p12, p23)
    except Undefined as exc:
        print(f"undefined: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    try:
        s2 = apply(p12, s1)
        s3 = apply(p23, s2)
    except InvalidPath as exc:
        print(f"invalid chain: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    for given, actual, name in ((args.s2, s2, "s2"), (args.s3, s3, "s3")):
        if given is not None and given != actual:
            print(f"invalid chain: paths produce {name} = {actual!r}, not {given!r}", file=sys.stderr)
            return EXIT_UNDEFINED
    correct = apply(out.projected, s1) == s3
    rec = {
        "s1": s1,
        "s2": s2,
        "s3": s3,
        "raw": format_path(out.raw),
        "projected": format_path(out.projected),
        "wgt_raw": out.wgt_raw,
        "len_raw": out.len_raw,
        "wgt_12": out.wgt_12,
        "len_12": out.len_12,
        "wgt_23": out.wgt_23,
        "len_23": out.len_23,
        "wgt_projected": out.wgt_proj,
        "len_projected": out.len_proj,
        "applies_correctly": correct,
        "weight_bound": out.weight_bound,
        "length_bound": out.length_bound,
    }
    if args.json:
        print(dump_json(rec))
        return EXIT_OK
    print(f"raw:       {rec['raw'] or 'ε'}")
    print(f"projected: {rec['projected'] or 'ε'}")
    print(f"wgt: raw={out.wgt_raw} p12={out.wgt_12} p23={out.wgt_23} projected={out.wgt_proj}")
    print(f"len: raw={out.len_raw} p12={out.len_12} p23={out.len_23} projected={out.len_proj}")
    print(f"apply(projected, s1) = s3: {correct}")
    print(f"wgt_raw <= wgt_12 + wgt_23: {out.weight_bound}")
    print(f"len_raw >= max(len_12, len_23): {out.length_bound}")
    return EXIT_OK


def _selection(args) -> list[str]:
    if args.oracle:
        names = list(propcheck.ORACLE_PROPERTIES)
        if args.property != "all":
            names += [p for p in args.property.split(",") if p not in names]
        return names
    if args.property == "all":
        return list(propcheck.PROPERTIES)
    names = [p.strip() for p in args.property.split(",") if p.strip()]
    unknown = [p for p in names if p not in propcheck.PROPERTIES]
    if unknown:
        raise UsageError(f"unknown property {', '.join(unknown)}; choose from {', '.join(propcheck.PROPERTIES)}")
    return names


def cmd_check(args) -> int:
    names = _selection(args)
    try:
        cfg = propcheck.FuzzConfig(seed=args.seed, trials=args.trials, alphabet_size=args.alphabet, max_word_len=args.max_len)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.alphabet > 26:
        raise UsageError("--alphabet is limited to 26 letters")
    reports = []
    for name in names:
        report = propcheck.PROPERTIES[name](cfg)
        reports.append(report)
        if not args.json:
            print(_human_report(report), flush=True)
    ok = all(r.passed for r in reports)
    if args.json:
        print(dump_json({"seed": cfg.seed, "trials": cfg.trials, "passed": ok, "reports": [r.to_json() for r in reports]}))
    else:
        print(f"{sum(r.passed for r in reports)}/{len(reports)} properties passed")
    return EXIT_OK if ok else EXIT_FAIL


def _human_report(report: propcheck.PropertyReport) -> str:
    head = f"{'PASS' if report.passed else 'FAIL'} {report.property_id}: {report.claim} ({report.mode}, {report.trials_run} trials, {report.elapsed:.2f}s)"
    lines = [head] + [f"    {note}" for note in report.notes]
    if report.counterexample is not None:
        lines.append(f"    counterexample: {dump_json(report.counterexample)}")
    return "\n".join(lines)


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    alphabet = "abc"
    rows = []
    for metric in args.metrics.split(","):
        if metric not in metrics.VALUE_FUNCS:
            raise UsageError(f"unknown metric {metric!r}")
        max_len = min(args.max_len, 6) if metric in ("ced", "cedp") else args.max_len
        pairs = [(propcheck.random_word(rng, alphabet, max_len), propcheck.random_word(rng, alphabet, max_len)) for _ in range(args.pairs)]
        f = metrics.VALUE_FUNCS[metric]
        f("ab", "ba")  # compile / warm caches outside the timed loop
        start = time.perf_counter()
        for a, b in pairs:
            f(a, b)
        elapsed = time.perf_counter() - start
        rows.append({"metric": metric, "pairs": args.pairs, "max_len": max_len, "seconds": elapsed, "us_per_pair": 1e6 * elapsed / args.pairs})
    if args.json:
        print(dump_json({"bench": rows}))
    else:
        for row in rows:
            print(f"{row['metric']:>8}  {row['pairs']} pairs, len <= {row['max_len']}: {row['us_per_pair']:.1f} us/pair")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nedlib", description="Exact normalized edit distance and friends.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def word_opts(p):
        p.add_argument("--pad", default=PAD, help="pad glyph reserved for alignments (default %(default)r)")

    for name in ("dist", "path"):
        p = sub.add_parser(name, help="distance between two words" if name == "dist" else "distance with witness path")
        p.add_argument("metric", choices=sorted(metrics.VALUE_FUNCS))
        p.add_argument("a", nargs="?")
        p.add_argument("b", nargs="?")
        if name == "dist":
            p.add_argument("--witness", action="store_true", help="print the witness path and alignment")
        p.add_argument("--file", help="tab-separated word pairs, one per line ('-' for stdin); CSV output")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true")
        fmt.add_argument("--csv", action="store_true")
        word_opts(p)

    p = sub.add_parser("align", help="render an optimal alignment")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--metric", choices=WITNESS_METRICS, default="ned")
    p.add_argument("--json", action="store_true")
    word_opts(p)

    p = sub.add_parser("compose", help="compose p12 (s1 -> s2) with p23 (s2 -> s3)")
    p.add_argument("p12", help="path such as 'n(a).c(b>c).v(d)', or bare 'ncv'")
    p.add_argument("p23")
    p.add_argument("s1")
    p.add_argument("--s2", help="middle word (required for bare paths)")
    p.add_argument("--s3", help="final word (required for bare paths)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", help="run the property suite")
    p.add_argument("--property", default="all", help="property id, comma-separated ids, or 'all'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--alphabet", type=int, default=3, help="alphabet size for random words")
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--oracle", action="store_true", help="run the brute-force oracle sweeps")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bench", help="time the distance functions (no assertions)")
    p.add_argument("--metrics", default="ned,ged,ed,ced")
    p.add_argument("--pairs", type=int, default=1000)
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    handlers = {
        "dist": cmd_dist,
        "path": lambda a: cmd_dist(a, witness=True),
        "align": cmd_align,
        "compose": cmd_compose,
        "check": cmd_check,
        "bench": cmd_bench,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"nedlib: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (metrics.LimitExceeded, oracle.BudgetExceeded) as exc:
        print(f"nedlib: limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except EditError as exc:
        print(f"nedlib: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"nedlib: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
