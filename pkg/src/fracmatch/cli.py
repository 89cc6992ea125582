"""Command-line front end.

Subcommands: construct, nu-star, matching, count, bound, family-max,
convexity, verify, batch, gen-corpus.  Structured results go to stdout as
JSON (counts as decimal strings); diagnostics go to stderr.  Exit codes:
0 success/verified, 1 bound violated or counterexample found, 2 invalid
arguments, 3 I/O or format error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import formulas
from .constructions import build_extremal, describe_extremal, family_max_count
from .corpus import default_corpus_path, write_corpus
from .counting import count_motif, parse_motif
from .formulas import ExtremalParams
from .graphs import Graph6Error, from_graph6, to_graph6
from .matching import fractional_certificate, matching_number, nu_star_fast
from .verifier import DEFAULT_CONVEXITY_GRIDS, VerifySpec, verify_bound, \
    verify_convexity, verify_nonexistence


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _iter_input_graphs(source: str):
    """graph6 lines from a file path or '-' (stdin), skipping blanks."""
    if source == "-":
        lines = sys.stdin
    else:
        lines = open(source, "r", encoding="ascii")
    try:
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith(">>graph6<<"):
                line = line[len(">>graph6<<"):]
                if not line:
                    continue
            try:
                yield from_graph6(line)
            except Graph6Error as exc:
                raise Graph6Error(f"line {lineno}: {exc}") from None
    finally:
        if source != "-":
            lines.close()


def _extremal_params(args) -> ExtremalParams:
    return ExtremalParams(args.n, args.s2, args.t, args.delta)


def cmd_construct(args) -> int:
    p = _extremal_params(args)
    g = build_extremal(p)
    print(to_graph6(g))
    if args.describe:
        _emit(describe_extremal(p))
    return 0


def cmd_nu_star(args) -> int:
    for g in _iter_input_graphs(args.input):
        if args.certificate:
            cert = fractional_certificate(g)
            _emit({"doubled": cert.total_doubled,
                   "certificate": cert.to_json_dict()})
        else:
            _emit({"doubled": nu_star_fast(g).doubled})
    return 0


def cmd_matching(args) -> int:
    for g in _iter_input_graphs(args.input):
        _emit({"nu": matching_number(g)})
    return 0


def cmd_count(args) -> int:
    motif = parse_motif(args.motif)
    for g in _iter_input_graphs(args.input):
        _emit({"motif": str(motif), "count": str(count_motif(g, motif))})
    return 0


def cmd_bound(args) -> int:
    theorem = args.theorem
    if theorem == "1.1":
        if args.k is None:
            raise ValueError("--theorem 1.1 needs --k")
        val = formulas.bound_edges_matching(args.n, args.k)
    elif theorem == "1.2":
        if args.s2 is None or args.d is None:
            raise ValueError("--theorem 1.2 needs --s2 and --d")
        val = formulas.bound_edges_max_degree(args.n, args.s2, args.d)
    elif theorem == "1.4":
        if args.s2 is None:
            raise ValueError("--theorem 1.4 needs --s2")
        val = formulas.bound_edges_min_degree_one(args.n, args.s2)
    elif theorem in ("1.6", "1.9"):
        if args.s2 is None or args.delta is None or args.motif is None:
            raise ValueError(f"--theorem {theorem} needs --s2, --delta and --motif")
        motif = parse_motif(args.motif)
        if args.delta_mode == "exact":
            val = formulas.bound_motif(args.n, args.s2, args.delta, motif)
        else:
            val = formulas.bound_motif_at_least(args.n, args.s2, args.delta, motif)
    else:
        raise ValueError(f"unknown theorem id {theorem!r}")
    _emit({"theorem": theorem, "bound": str(val)})
    return 0


def cmd_family_max(args) -> int:
    p = _extremal_params(args)
    motif = parse_motif(args.motif)
    val = family_max_count(args.family, p, motif)
    _emit({"family": args.family, "motif": str(motif), "max": str(val)})
    return 0


def cmd_convexity(args) -> int:
    grid = dict(DEFAULT_CONVEXITY_GRIDS[args.family])
    if args.s2_min is not None or args.s2_max is not None:
        lo, hi = grid["s2"]
        grid["s2"] = (args.s2_min or lo, args.s2_max or hi)
    report = verify_convexity(args.family, grid)
    _emit(report.to_json_dict())
    return 0 if report.all_nonnegative else 1


def _spec_from_args(args) -> VerifySpec:
    motif = parse_motif(args.motif) if args.motif else None
    corpus = args.corpus
    if args.source == "graph6-stream" and corpus is None:
        corpus = str(default_corpus_path(args.n))
    return VerifySpec(
        theorem=args.theorem, n=args.n, s2=args.s2, delta=args.delta,
        motif=motif, delta_mode=args.delta_mode, source=args.source,
        corpus=corpus, k=args.k, d=args.d, jobs=args.jobs,
    )


def cmd_verify(args) -> int:
    if args.nonexistence:
        if args.s2 is None or args.delta is None:
            raise ValueError("--nonexistence needs --s2 and --delta")
        corpus = args.corpus
        if args.source == "graph6-stream" and corpus is None:
            corpus = str(default_corpus_path(args.n))
        report = verify_nonexistence(args.n, args.s2, args.delta,
                                     source=args.source, corpus=corpus,
                                     jobs=args.jobs)
        _emit(report.to_json_dict())
        return 0 if report.verdict == "no-graphs" else 1
    if args.theorem is None:
        raise ValueError("verify needs --theorem (or --nonexistence)")
    report = verify_bound(_spec_from_args(args))
    _emit(report.to_json_dict())
    return 0 if report.verdict != "bound-violated" else 1


def _spec_from_config(entry: dict, jobs: int | None) -> VerifySpec:
    if not isinstance(entry, dict):
        raise ValueError(f"config entries must be objects, got {entry!r}")
    known = {"theorem", "n", "s2", "delta", "motif", "delta_mode", "source",
             "corpus", "k", "d"}
    extra = set(entry) - known
    if extra:
        raise ValueError(f"unknown config keys {sorted(extra)}")
    motif = parse_motif(entry["motif"]) if "motif" in entry else None
    corpus = entry.get("corpus")
    if entry.get("source") == "graph6-stream" and corpus is None:
        corpus = str(default_corpus_path(int(entry["n"])))
    return VerifySpec(
        theorem=str(entry["theorem"]), n=int(entry["n"]),
        s2=entry.get("s2"), delta=entry.get("delta"), motif=motif,
        delta_mode=entry.get("delta_mode", "exact"),
        source=entry.get("source", "native"), corpus=corpus,
        k=entry.get("k"), d=entry.get("d"), jobs=jobs,
    )


def cmd_batch(args) -> int:
    with open(args.config, "r", encoding="utf-8") as fh:
        entries = json.load(fh)
    if not isinstance(entries, list):
        raise ValueError("batch config must be a JSON array of verify specs")
    # validate everything up front; nothing runs if any spec is bad
    specs = [_spec_from_config(e, args.jobs) for e in entries]
    reports = [verify_bound(s) for s in specs]
    aggregated = {
        "reports": [r.to_json_dict() for r in reports],
        "all_exact": all(r.verdict == "exact-match" for r in reports),
        "violations": sum(r.verdict == "bound-violated" for r in reports),
    }
    text = json.dumps(aggregated, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["params", "bound", "observed", "verdict"])
            for r in reports:
                writer.writerow([
                    json.dumps(r.spec.to_json_dict(), sort_keys=True),
                    r.bound,
                    "" if r.observed_max is None else r.observed_max,
                    r.verdict,
                ])
    return 1 if any(r.verdict == "bound-violated" for r in reports) else 0


def cmd_gen_corpus(args) -> int:
    out = Path(args.out) if args.out else default_corpus_path(args.n)
    count = write_corpus(out, args.n)
    _emit({"n": args.n, "classes": count, "path": str(out)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="fracmatch",
        description="exact fractional-matching extremal bounds toolkit",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_params(p, t_flag=True):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--s2", type=int, required=True,
                       help="doubled fractional matching number 2s")
        if t_flag:
            p.add_argument("--t", type=int, required=True)
        p.add_argument("--delta", type=int, required=True)

    p = sub.add_parser("construct", help="build the extremal graph G(n, s, t)")
    add_params(p)
    p.add_argument("--describe", action="store_true",
                   help="also print part sizes and deletion list as JSON")
    p.set_defaults(func=cmd_construct)

    for name, func, extra in (
        ("nu-star", cmd_nu_star, None),
        ("matching", cmd_matching, None),
        ("count", cmd_count, "motif"),
    ):
        p = sub.add_parser(name, help=f"{name} of graph6 input")
        p.add_argument("--in", dest="input", default="-",
                       help="graph6 file or - for stdin")
        if extra:
            p.add_argument("--motif", required=True,
                           help="clique:L or biclique:R1,R2")
        if name == "nu-star":
            p.add_argument("--certificate", action="store_true",
                           help="include an optimal half-integral weighting")
        p.set_defaults(func=func)

    p = sub.add_parser("bound", help="evaluate a theorem bound")
    p.add_argument("--theorem", required=True, choices=["1.1", "1.2", "1.4", "1.6", "1.9"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s2", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--motif")
    p.add_argument("--k", type=int, help="matching number (theorem 1.1)")
    p.add_argument("--d", type=int, help="maximum degree cap (theorem 1.2)")
    p.add_argument("--delta-mode", default="exact", choices=["exact", "at-least"])
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("family-max", help="maximum motif count over F1/F2")
    p.add_argument("--family", required=True, choices=["F1", "F2"])
    add_params(p)
    p.add_argument("--motif", required=True)
    p.set_defaults(func=cmd_family_max)

    p = sub.add_parser("convexity", help="second-difference sweep")
    p.add_argument("--family", required=True, choices=["lemma23", "lemma24", "lemma27"])
    p.add_argument("--s2-min", type=int)
    p.add_argument("--s2-max", type=int)
    p.set_defaults(func=cmd_convexity)

    p = sub.add_parser("verify", help="exhaustive scan against a bound")
    p.add_argument("--theorem", choices=["1.1", "1.2", "1.4", "1.6", "1.9"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s2", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--motif")
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--delta-mode", default="exact", choices=["exact", "at-least"])
    p.add_argument("--source", default="native", choices=["native", "graph6-stream"])
    p.add_argument("--corpus", help="graph6 corpus file for the stream source")
    p.add_argument("--jobs", type=int, help="worker count for the scan")
    p.add_argument("--nonexistence", action="store_true",
                   help="certify that no graph matches (delta beyond the feasible cap)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="run a JSON array of verify specs")
    p.add_argument("--config", required=True)
    p.add_argument("--out", help="aggregated JSON report path (default stdout)")
    p.add_argument("--csv", help="CSV summary path")
    p.add_argument("--jobs", type=int)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("gen-corpus", help="generate a non-isomorphic graph6 corpus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="output path (default corpus dir)")
    p.set_defaults(func=cmd_gen_corpus)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 3
    except json.JSONDecodeError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
