"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or schema error,
3 enumeration budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import os
import sys
from pathlib import Path

from . import catalog, codec, explorer, serialize
from .errors import BudgetExceeded, DyadicError, NonTotalInput, OutOfRange, SchemaError
from .region import AbstractPoint, Point, frac
from .subbase import DyadicSubbase, MembershipOracle, validate
from .tword import all_words, as_seq

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def load_space(source: str):
    """A catalog name or the path of a subbase JSON document."""
    if source.lower() in catalog.names():
        return catalog.get(source).subbase
    if os.path.exists(source):
        return serialize.load_subbase(source)
    raise SchemaError(f"{source!r} is neither a catalog entry ({', '.join(catalog.names())}) "
                      "nor a readable file")


def parse_point(text: str, S):
    """``1/2``, ``1/4,3/4``, ``c2:1/3`` or ``@id``."""
    text = text.strip()
    if text.startswith("@"):
        return AbstractPoint(text[1:])
    if isinstance(S, MembershipOracle):
        return int(text) if text.isdigit() else frac(text)
    comp = 0
    if text.startswith("c") and ":" in text:
        head, text = text.split(":", 1)
        comp = int(head[1:])
    text = text.strip("()")
    return Point(comp, tuple(frac(c) for c in text.split(",")))


def _emit(text: str, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _tsv(rows) -> str:
    from io import StringIO
    buf = StringIO()
    w = csv.writer(buf, delimiter="\t", lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def cmd_catalog(args) -> int:
    if args.action == "list":
        rows = [("name", "kind", "description")]
        for n in catalog.names():
            e = catalog.get(n)
            rows.append((n, "regions" if e.region_backed else "oracle", e.title))
        _emit(_tsv(rows), None)
        return EXIT_OK
    if not args.name:
        raise SchemaError("catalog export needs a NAME")
    e = catalog.get(args.name)
    if not e.region_backed:
        raise SchemaError(f"{args.name!r} is oracle-backed and has no region export")
    _emit(serialize.dumps(serialize.subbase_to_json(e.subbase, args.depth)), args.output)
    return EXIT_OK


def _poset_rows(S, P):
    rows = [("word", "status", "level")]
    for w in all_words(P.depth):
        if w in P:
            rows.append((w, "in", P.levels[w]))
        else:
            rows.append((w, "absent", ""))
    return rows


def cmd_explore(args) -> int:
    S = load_space(args.space)
    P = explorer.build(S, args.depth, args.kind, budget=args.budget)
    if args.format == "dot":
        text = explorer.to_dot(P)
    elif args.format == "json":
        text = serialize.dumps(P.to_dict())
    else:
        text = _tsv(_poset_rows(S, P))
    _emit(text, args.output)
    if args.figure:
        from .plotting import plot_hasse
        plot_hasse(P, args.figure)
    return EXIT_OK


def run_checks(S, depth: int, kind: str, adhesive_depth: int, budget=None) -> dict:
    checks: dict = {}
    notes = [f"all verdicts are certified only for words of length <= {depth}"]
    ok = True
    if isinstance(S, DyadicSubbase):
        v = validate(S, depth)
        checks["validate"] = v.to_dict()
        ok = ok and v.ok
    else:
        checks["validate"] = None
        notes.append("oracle-backed entry: region validation skipped")
    c = explorer.cusl_check(S, depth, kind, budget=budget)
    checks["cusl"] = c.to_dict()
    fb = explorer.finite_branching_report(S, depth, kind, budget=budget)
    checks["finite_branching"] = fb.to_dict()
    ad = explorer.adhesive_probe(S, min(depth, adhesive_depth), budget=budget)
    checks["adhesive"] = ad.to_dict()
    ok = ok and c.ok and fb.all_stable
    notes.append("independence and adhesiveness are informational")
    return {"space": getattr(S, "name", "?"), "depth": depth, "kind": explorer._kind(kind),
            "ok": ok, "checks": checks, "notes": notes}


def _words(ws) -> str:
    return " ".join(w if w else "⊥" for w in ws or [] if w is not None)


def _summary_rows(report: dict):
    rows = [("check", "ok", "witness", "detail")]
    v = report["checks"].get("validate")
    if v:
        for k in ("pairing", "proper", "independent", "separation"):
            rows.append((k, v[k]["ok"], v[k]["witness"] or "", v[k]["detail"]))
    c = report["checks"]["cusl"]
    rows.append(("cusl", c["ok"], _words(c["witness"]), ""))
    fb = report["checks"]["finite_branching"]
    rows.append(("finite_branching", fb["all_stable"], _words(fb["growing"]),
                 f"max succ {fb['max_succ']}"))
    ad = report["checks"]["adhesive"]
    w = ad["nonadhesive_witness"]
    rows.append(("nonadhesive", w is not None, _words(w), ""))
    return rows


def cmd_check(args) -> int:
    S = load_space(args.space)
    report = run_checks(S, args.depth, args.kind, args.adhesive_depth, args.budget)
    if args.format == "text":
        text = _tsv(_summary_rows(report))
    else:
        text = serialize.dumps(report)
    _emit(text, args.output)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_report(args) -> int:
    """Check report plus delimited tables and figures written into one directory."""
    S = load_space(args.space)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    report = run_checks(S, args.depth, args.kind, args.adhesive_depth, args.budget)
    (out / "report.json").write_text(serialize.dumps(report), encoding="utf-8")
    (out / "summary.tsv").write_text(_tsv(_summary_rows(report)), encoding="utf-8")
    P = explorer.build(S, min(args.depth, args.poset_depth), args.kind, budget=args.budget)
    (out / "poset.tsv").write_text(_tsv(_poset_rows(S, P)), encoding="utf-8")
    (out / "hasse.dot").write_text(explorer.to_dot(P), encoding="utf-8")
    from .plotting import plot_hasse, plot_subbase
    written = ["report.json", "summary.tsv", "poset.tsv", "hasse.dot"]
    plot_hasse(P, out / "hasse.png")
    written.append("hasse.png")
    if isinstance(S, DyadicSubbase):
        plot_subbase(S, args.depth, out / "subbase.png")
        written.append("subbase.png")
    sys.stdout.write(_tsv([("file",)] + [(str(out / f),) for f in written]))
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_encode(args) -> int:
    S = load_space(args.space)
    x = parse_point(args.point, S)
    _emit(S.encode(x, args.depth) + "\n", None)
    return EXIT_OK


def cmd_decode(args) -> int:
    S = load_space(args.space)
    if isinstance(S, MembershipOracle):
        raise SchemaError("decode needs a region-backed space")
    p = as_seq(args.word)
    depth = args.depth if args.depth is not None else (len(p) if isinstance(p, str) else 8)
    res = codec.rho_prime(S, p, depth) if args.total else codec.decode(S, p, depth)
    if args.format == "json":
        text = serialize.dumps(res.to_dict())
    else:
        text = str(res.region) + "\n"
    _emit(text, None)
    return EXIT_OK


def cmd_convert(args) -> int:
    fn = codec.gray_to_binary if args.dir == "g2b" else codec.binary_to_gray
    _emit(fn(args.word) + "\n", None)
    return EXIT_OK


def cmd_plot(args) -> int:
    S = load_space(args.space)
    if isinstance(S, MembershipOracle):
        raise SchemaError("plot needs a region-backed space")
    from .plotting import plot_subbase
    plot_subbase(S, args.depth, args.out)
    return EXIT_OK


def _kind_arg(text: str) -> str:
    try:
        return explorer._kind(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dyadic", description="Exact workbench for dyadic subbases.")
    sub = ap.add_subparsers(dest="command", required=True)

    def space_opts(p, depth=None):
        p.add_argument("--space", required=True, help="catalog name or subbase JSON file")
        if depth is not None:
            p.add_argument("--depth", type=_nonneg, default=depth)

    def budget_opt(p):
        p.add_argument("--budget", type=int, default=None,
                       help=f"max words to enumerate (default 3^12 or ${explorer.BUDGET_ENV})")

    p = sub.add_parser("catalog", help="list or export built-in entries")
    p.add_argument("action", choices=["list", "export"])
    p.add_argument("name", nargs="?")
    p.add_argument("--depth", type=_nonneg, default=8, help="number of pairs to export")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("explore", help="truncated compact-element poset")
    space_opts(p, 3)
    p.add_argument("--kind", type=_kind_arg, default="ks")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--figure", help="also draw the Hasse diagram to this file")
    p.add_argument("-o", "--output")
    budget_opt(p)
    p.set_defaults(func=cmd_explore)

    for name, func, fmt in (("check", cmd_check, "json"), ("report", cmd_report, None)):
        p = sub.add_parser(name, help="structural checks" if name == "check"
                           else "checks, tables and figures into a directory")
        space_opts(p, 4)
        p.add_argument("--kind", type=_kind_arg, default="ks")
        p.add_argument("--adhesive-depth", type=_nonneg, default=3)
        budget_opt(p)
        if fmt:
            p.add_argument("--format", choices=["json", "text"], default=fmt)
            p.add_argument("-o", "--output")
        else:
            p.add_argument("--out", required=True, help="output directory")
            p.add_argument("--poset-depth", type=_nonneg, default=4)
        p.set_defaults(func=func)

    p = sub.add_parser("encode", help="code of a point to a depth")
    space_opts(p, 8)
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="closed region named by a word or stream")
    p.add_argument("--space", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--depth", type=_nonneg, default=None)
    p.add_argument("--total", action="store_true", help="require a total sequence")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("convert", help="Gray/binary conversion of total words")
    p.add_argument("--dir", choices=["g2b", "b2g"], required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("plot", help="draw the first pairs of a subbase")
    space_opts(p, 6)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_plot)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (SchemaError, NonTotalInput, OutOfRange, KeyError, ValueError, DyadicError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
