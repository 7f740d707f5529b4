"""Command-line entry point: ``azindex {compute,family,verify,enumerate,ng-scan}``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from . import __version__
from .arith import to_decimal, to_pq
from .enumeration import EnumSpec, enumerate_graphs
from .families import Family, FamilyError, FamilySpec
from .graph import GraphError
from .indices import DegenerateEdge, IndexDomainError, abc, azi
from .ng_verify import ng_scan, records_summary_csv, records_to_jsonl, verify_ng
from .report import (
    PASS,
    SKIPPED,
    GraphParseError,
    emit_certificates,
    from_edge_list,
    read_graph6_lines,
    to_edge_list,
    to_graph6,
)
from .verify import verify_class_bounds, verify_huang, verify_lemma1, verify_pendant_bound, verify_wang

log = logging.getLogger("azindex")

BUDGETS = {
    "t5": 10,
    "lemma1": 10,
    "unicyclic": 12,
    "ng": 8,
    "wang": 7,
    "huang": 7,
    "pendant": 7,
}
MIN_ORDER = {"t5": 4, "lemma1": 4, "unicyclic": 3, "ng": 4, "wang": 3, "huang": 3, "pendant": 3}

THEOREMS = {
    "t5": lambda n, w: verify_class_bounds("bicyclic", n, w),
    "unicyclic": lambda n, w: verify_class_bounds("unicyclic", n, w),
    "lemma1": verify_lemma1,
    "ng": verify_ng,
    "wang": verify_wang,
    "huang": verify_huang,
    "pendant": verify_pendant_bound,
}


def parse_range(text: str) -> range:
    """``"7"`` or ``"4..11"`` (inclusive)."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use N or LO..HI") from None
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def _workers(args) -> int:
    if args.workers is not None:
        return max(1, args.workers)
    try:
        return max(1, int(os.environ.get("AZINDEX_WORKERS", "1")))
    except ValueError:
        return 1


def _config_echo(args, workers: int) -> dict:
    skip = {"func"}
    params = {}
    for k, v in sorted(vars(args).items()):
        if k in skip:
            continue
        params[k] = f"{v.start}..{v.stop - 1}" if isinstance(v, range) else v
    params["workers"] = workers
    return {"tool": "azindex", "version": __version__, "parameters": params, "budgets": dict(BUDGETS)}


def _read_input(args) -> str:
    if args.graph6:
        return "\n".join(args.graph6) + "\n"
    if args.input in (None, "-"):
        return sys.stdin.read()
    with open(args.input, encoding="ascii") as fh:
        return fh.read()


def _emit_graph(g, fmt: str, out):
    if fmt == "edgelist":
        out.write(to_edge_list(g))
    else:
        out.write(to_graph6(g) + "\n")


def cmd_compute(args) -> int:
    text = _read_input(args)
    if args.input_format == "edgelist":
        try:
            graphs = [(1, from_edge_list(text))]
        except GraphParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        graphs = list(read_graph6_lines(text.splitlines()))
    status = 0
    out = sys.stdout
    for lineno, g in graphs:
        if isinstance(g, GraphParseError):
            print(f"line {lineno}: parse error: {g}", file=sys.stderr)
            status = 2
            continue
        fields = []
        try:
            if args.index in ("azi", "all"):
                v = azi(g)
                fields.append(f"{to_pq(v)} ({to_decimal(v)})")
            if args.index in ("abc", "all"):
                fields.append(repr(abc(g)))
        except (DegenerateEdge, IndexDomainError) as exc:
            print(f"line {lineno}: error: {exc}", file=sys.stderr)
            out.write(f"error: {exc}\n")
            status = status or 1
            continue
        if args.show_graph:
            fields.insert(0, to_graph6(g))
        out.write("\t".join(fields) + "\n")
    return status


def cmd_family(args) -> int:
    name = args.name
    try:
        if name in ("b-prime", "u-prime"):
            if args.k is None:
                raise FamilyError(f"{name} needs --k")
            spec = FamilySpec(Family(name), (args.k,))
        elif name == "psi":
            if args.n is None or args.cls is None:
                raise FamilyError("psi needs --n and --class")
            spec = FamilySpec(Family.PSI_UNICYCLIC if args.cls == "unicyclic" else Family.PSI_BICYCLIC, (args.n,))
        else:
            if not args.params:
                raise FamilyError(f"{name} needs --params")
            params = tuple(int(x) for x in args.params.split(","))
            spec = FamilySpec(Family(name), params)
        g = spec.build()
    except (FamilyError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit_graph(g, args.format, sys.stdout)
    v = azi(g)
    sys.stdout.write(f"n={g.n} m={g.m} azi={to_pq(v)} ({to_decimal(v)})\n")
    return 0


def cmd_verify(args) -> int:
    theorem = args.theorem
    workers = _workers(args)
    budget = BUDGETS[theorem]
    if args.n.stop - 1 > budget and not args.allow_large:
        print(f"error: n up to {args.n.stop - 1} exceeds the default budget {budget} for "
              f"{theorem}; pass --allow-large to override", file=sys.stderr)
        return 2
    if args.n.start < MIN_ORDER[theorem]:
        print(f"error: {theorem} needs n >= {MIN_ORDER[theorem]}", file=sys.stderr)
        return 2
    certs = []
    for n in args.n:
        t0 = time.perf_counter()
        cert = THEOREMS[theorem](n, workers)
        log.info("%s n=%d: %s (%.2fs)", theorem, n, cert.status, time.perf_counter() - t0)
        certs.append(cert)
    config = _config_echo(args, workers)
    if args.format == "json":
        doc = {"config": config, "certificates": [c.as_dict() for c in certs]}
        payload = (json.dumps(doc, indent=2, ensure_ascii=True) + "\n").encode("ascii")
    else:
        payload = emit_certificates(certs, "csv")
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(payload)
        if args.format == "csv":
            with open(args.output + ".config.json", "w", encoding="ascii") as fh:
                json.dump(config, fh, indent=2)
                fh.write("\n")
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
    failed = [c for c in certs if not c.passed]
    for c in failed:
        for ce in c.counterexamples:
            print(f"FAIL {c.claim} n={c.n}: {ce.get('graph6')} violates {ce.get('violates', ce.get('reason'))}",
                  file=sys.stderr)
    if failed:
        return 1
    if any(c.status == SKIPPED for c in certs) and not args.allow_skipped:
        return 1
    return 0


def cmd_enumerate(args) -> int:
    m = None
    max_degree = args.max_degree
    if args.cls:
        m = args.n - 1 + {"tree": 0, "unicyclic": 1, "bicyclic": 2}[args.cls]
        max_degree = 4 if max_degree is None else max_degree
    elif args.m is not None:
        m = (args.m.start, args.m.stop - 1) if len(args.m) > 1 else args.m.start
    try:
        spec = EnumSpec(args.n, m, max_degree, connected_only=not args.all,
                        complement_connected=args.complement_connected)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    graphs = enumerate_graphs(spec, _workers(args))
    if args.count:
        print(sum(1 for _ in graphs))
        return 0
    for g in graphs:
        _emit_graph(g, args.format, sys.stdout)
    return 0


def cmd_ng_scan(args) -> int:
    workers = _workers(args)
    if args.n.start < 4:
        print("error: ng-scan needs n >= 4", file=sys.stderr)
        return 2
    if args.n.stop - 1 > BUDGETS["ng"] and not args.allow_large:
        print(f"error: n exceeds the default budget {BUDGETS['ng']}; pass --allow-large", file=sys.stderr)
        return 2
    records = [r for n in args.n for r in ng_scan(n, workers)]
    text = records_to_jsonl(records) if args.format == "jsonl" else records_summary_csv(records)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if any(r.status not in (PASS, SKIPPED) for r in records) else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="azindex", description=__doc__)
    p.add_argument("--version", action="version", version=f"azindex {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="evaluate AZI/ABC on graphs")
    c.add_argument("input", nargs="?", help="file of graph6 lines or an edge list ('-' for stdin)")
    c.add_argument("--graph6", action="append", help="inline graph6 string (repeatable)")
    c.add_argument("--input-format", choices=["graph6", "edgelist"], default="graph6")
    c.add_argument("--index", choices=["azi", "abc", "all"], default="azi")
    c.add_argument("--show-graph", action="store_true", help="prefix each line with the graph6 string")
    c.set_defaults(func=cmd_compute)

    f = sub.add_parser("family", help="build an extremal family member")
    f.add_argument("--name", required=True, choices=["b-prime", "u-prime", "psi", "theta",
                                                      "bridged-cycles", "shared-vertex-cycles"])
    f.add_argument("--k", type=int)
    f.add_argument("--n", type=int)
    f.add_argument("--class", dest="cls", choices=["unicyclic", "bicyclic"])
    f.add_argument("--params", help="comma-separated integers for the pendant-free shapes")
    f.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    f.set_defaults(func=cmd_family)

    v = sub.add_parser("verify", help="exhaustively check a bound and write certificates")
    v.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    v.add_argument("--n", type=parse_range, required=True, help="order or inclusive range LO..HI")
    v.add_argument("--format", choices=["json", "csv"], default="json")
    v.add_argument("-o", "--output", help="write certificates here instead of stdout")
    v.add_argument("--workers", type=int)
    v.add_argument("--allow-large", action="store_true", help="permit orders above the default budget")
    v.add_argument("--allow-skipped", action="store_true", help="exit 0 when verdicts are only PASS/SKIPPED")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="list one graph per isomorphism class")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--m", type=parse_range, help="edge count or range LO..HI")
    e.add_argument("--max-degree", type=int)
    e.add_argument("--class", dest="cls", choices=["tree", "unicyclic", "bicyclic"],
                   help="chemical class shortcut (sets m and max degree 4)")
    e.add_argument("--all", action="store_true", help="include disconnected graphs")
    e.add_argument("--complement-connected", action="store_true")
    e.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    e.add_argument("--count", action="store_true", help="print only the number of classes")
    e.add_argument("--workers", type=int)
    e.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("ng-scan", help="per-graph records for the complement-sum bound")
    s.add_argument("--n", type=parse_range, required=True)
    s.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    s.add_argument("-o", "--output")
    s.add_argument("--workers", type=int)
    s.add_argument("--allow-large", action="store_true")
    s.set_defaults(func=cmd_ng_scan)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
