"""``indpoly`` command line.

Exit codes: 0 success, 1 counterexample or fixture mismatch (hunt and
fixtures only), 2 usage, parse, or resource-limit error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Iterable, Iterator, Sequence

from . import __version__
from .classifiers import DEFAULT_PERFECT_MAX_N
from .corpus import all_graphs_up_to, random_star_graphs
from .dsl import build
from .formats import ParseError, parse_edge_list, read_graph6_lines, write_graph6
from .graph import Graph, GraphError
from .independence import DEFAULT_MAX_N, InstanceTooLarge
from .polyseq import render
from .verifiers import PREDICATES, PROPERTIES, Facts, hunt, resolve_checks, roller_coaster_window, verify_all
from .fixtures import POLYNOMIALS, CHECKS as FIXTURE_CHECKS, run_catalog

EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would sys.exit(2) itself
        raise UsageError(f"{self.prog}: {message}")


def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=["json", "csv", "text"], default=default, help="output format (default json)")
    parser.add_argument("--max-n", type=int, default=default, help=f"vertex-count ceiling (default {DEFAULT_MAX_N})")
    parser.add_argument("--perfect-max-n", type=int, default=default, help=f"ceiling for the perfection check (default {DEFAULT_PERFECT_MAX_N})")


def _inputs(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--g6", metavar="FILE", help="graph6 file, one graph per line ('-' for stdin)")
    group.add_argument("--edges", metavar="FILE", help="edge-list file ('-' for stdin)")
    group.add_argument("--expr", metavar="STRING", help="construction expression, e.g. 'K24 + (K3 | K3 | K4)'")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="indpoly", description="Independence polynomials and coefficient inequalities.")
    parser.add_argument("--version", action="version", version=f"indpoly {__version__}")
    _common(parser, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="independence polynomial and its shape")
    _inputs(p)
    _common(p, suppress=True)

    p = sub.add_parser("classify", help="well-covered / quasi-regularizable / perfect / ...")
    _inputs(p)
    _common(p, suppress=True)

    p = sub.add_parser("verify", help="run inequality checks")
    _inputs(p)
    p.add_argument("--checks", default="all", help="'all' or comma-separated names: lemma1,prop1,prop2,prop3,cor1,cor2_cor3,main,finbow")
    _common(p, suppress=True)

    p = sub.add_parser("hunt", help="search a corpus for counterexamples")
    p.add_argument(
        "--corpus",
        required=True,
        help="graph6 file, or a built-in corpus: 'exhaustive:N' (all labeled graphs on <= N vertices), 'stars:COUNT:NMAX[:SEED]' (G* of random G)",
    )
    p.add_argument("--predicate", required=True, help=f"one of {', '.join(PREDICATES)}")
    p.add_argument("--property", required=True, dest="prop", help=f"one of {', '.join(PROPERTIES)}")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    _common(p, suppress=True)

    p = sub.add_parser("fixtures", help="the built-in catalog of worked examples")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--list", action="store_true")
    mode.add_argument("--run", action="store_true")
    p.add_argument("--include-reconstructed", action="store_true", help="also run graphs rebuilt from drawings")
    _common(p, suppress=True)
    return parser


def _open_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise ParseError(f"{path}: not ASCII text") from None


def load_graphs(args: argparse.Namespace) -> list[tuple[dict, Graph]]:
    if args.expr is not None:
        return [({"source": "expr", "value": args.expr}, build(args.expr))]
    if args.edges is not None:
        return [({"source": "edges", "value": args.edges}, parse_edge_list(_open_text(args.edges)))]
    lines = _open_text(args.g6).splitlines()
    graphs = list(read_graph6_lines(lines))
    if not graphs:
        raise ParseError(f"{args.g6}: no graphs")
    return [({"source": "g6", "value": args.g6, "index": i}, G) for i, G in enumerate(graphs)]


def iter_corpus(source: str) -> Iterator[Graph]:
    if source.startswith("exhaustive:"):
        n = _corpus_int(source, source.split(":", 1)[1])
        if n > 7:
            raise UsageError("exhaustive corpora are limited to n <= 7")
        return all_graphs_up_to(n)
    if source.startswith("stars:"):
        fields = source.split(":")[1:]
        if len(fields) not in (2, 3):
            raise UsageError(f"bad corpus source {source!r}; expected stars:COUNT:NMAX[:SEED]")
        count, nmax = _corpus_int(source, fields[0]), _corpus_int(source, fields[1])
        seed = _corpus_int(source, fields[2]) if len(fields) == 3 else 0
        return random_star_graphs(count, nmax, seed)
    return iter(list(read_graph6_lines(_open_text(source).splitlines())))


def _corpus_int(source: str, token: str) -> int:
    if not token.isdigit():
        raise UsageError(f"bad corpus source {source!r}")
    return int(token)


def _base_record(origin: dict, G: Graph, facts: Facts) -> dict:
    coeffs = facts.coeffs
    rec: dict[str, Any] = {
        "input": origin,
        "n": G.n,
        "m": G.m,
        "graph6": write_graph6(G),
        "alpha": coeffs.degree,
        "coeffs": coeffs.to_json(),
        "polynomial": render(coeffs),
        "shape": facts.shape.to_json(),
        "window": roller_coaster_window(coeffs.degree).to_json() if coeffs.degree >= 1 else None,
    }
    return rec


def _meta(args: argparse.Namespace) -> dict:
    return {"tool": "indpoly", "version": __version__, "max_n": args.max_n, "perfect_max_n": args.perfect_max_n}


def cmd_compute(args: argparse.Namespace) -> tuple[int, dict]:
    graphs = []
    for origin, G in load_graphs(args):
        f = Facts(G, args.max_n, args.perfect_max_n)
        graphs.append(_base_record(origin, G, f))
    return EXIT_OK, {"meta": _meta(args), "graphs": graphs}


def cmd_classify(args: argparse.Namespace) -> tuple[int, dict]:
    graphs = []
    for origin, G in load_graphs(args):
        if G.n == 0:
            raise UsageError("classifiers reject the empty graph")
        f = Facts(G, args.max_n, args.perfect_max_n)
        rec = _base_record(origin, G, f)
        rec["classes"] = f.classes.to_json()
        rec["omega_profile"] = f.profile.to_json()
        graphs.append(rec)
    return EXIT_OK, {"meta": _meta(args), "graphs": graphs}


def cmd_verify(args: argparse.Namespace) -> tuple[int, dict]:
    try:
        names = resolve_checks(args.checks)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    graphs = []
    for origin, G in load_graphs(args):
        if G.n == 0:
            raise UsageError("verifiers need at least one vertex")
        f = Facts(G, args.max_n, args.perfect_max_n)
        rec = _base_record(origin, G, f)
        rec["classes"] = f.classes.to_json()
        rec["verdicts"] = [v.to_json() for v in verify_all(f, names)]
        graphs.append(rec)
    return EXIT_OK, {"meta": _meta(args), "graphs": graphs}


def cmd_hunt(args: argparse.Namespace) -> tuple[int, dict]:
    if args.predicate not in PREDICATES or args.prop not in PROPERTIES:
        raise UsageError(f"unknown predicate/property; predicates: {', '.join(PREDICATES)}; properties: {', '.join(PROPERTIES)}")
    corpus = iter_corpus(args.corpus)
    counted = _Counter(corpus)
    records = [r.to_json() for r in hunt(counted, args.predicate, args.prop, args.max_n, args.perfect_max_n, args.jobs)]
    meta = _meta(args) | {"corpus": args.corpus, "predicate": args.predicate, "property": args.prop, "graphs_scanned": counted.count}
    return (EXIT_FOUND if records else EXIT_OK), {"meta": meta, "counterexamples": records}


class _Counter:
    def __init__(self, items: Iterable[Graph]) -> None:
        self.items = items
        self.count = 0

    def __iter__(self) -> Iterator[Graph]:
        for item in self.items:
            self.count += 1
            yield item


def cmd_fixtures(args: argparse.Namespace) -> tuple[int, dict]:
    if args.list:
        entries = [
            {"name": fx.name, "kind": "polynomial", "expected": [str(c) for c in fx.expected], "label": fx.label, "reconstructed": fx.reconstructed}
            for fx in POLYNOMIALS
        ]
        entries += [{"name": c.name, "kind": "check", "reconstructed": c.reconstructed} for c in FIXTURE_CHECKS]
        return EXIT_OK, {"meta": _meta(args), "fixtures": entries}
    results = run_catalog(args.include_reconstructed)
    failed = sum(not r.ok for r in results)
    payload = {"meta": _meta(args), "passed": len(results) - failed, "failed": failed, "results": [r.to_json() for r in results]}
    return (EXIT_FOUND if failed else EXIT_OK), payload


COMMANDS = {
    "compute": cmd_compute,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "hunt": cmd_hunt,
    "fixtures": cmd_fixtures,
}


# -- rendering ----------------------------------------------------------------


def dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _rows(command: str, payload: dict) -> tuple[list[str], list[list[Any]]]:
    if command == "fixtures":
        if "results" in payload:
            return ["name", "ok", "detail"], [[r["name"], r["ok"], r["detail"]] for r in payload["results"]]
        return ["name", "kind", "reconstructed"], [[f["name"], f["kind"], f["reconstructed"]] for f in payload["fixtures"]]
    if command == "hunt":
        header = ["index", "graph6", "n", "coeffs", "unimodal", "log_concave"]
        return header, [
            [r["index"], r["graph6"], r["n"], ";".join(r["coeffs"]), r["shape"]["unimodal"], r["shape"]["log_concave"]]
            for r in payload["counterexamples"]
        ]
    header = ["source", "value", "n", "m", "alpha", "coeffs", "unimodal", "log_concave"]
    extra: list[str] = []
    graphs = payload["graphs"]
    if graphs and "classes" in graphs[0]:
        extra = ["well_covered", "very_well_covered", "quasi_regularizable", "perfect", "bipartite", "tree"]
    checks = [v["statement_id"] for v in graphs[0].get("verdicts", [])] if graphs else []
    header += extra + [f"{c}_premise" for c in checks] + [f"{c}_conclusion" for c in checks]
    rows = []
    for g in graphs:
        row = [g["input"]["source"], g["input"]["value"], g["n"], g["m"], g["alpha"], ";".join(g["coeffs"]), g["shape"]["unimodal"], g["shape"]["log_concave"]]
        row += [g["classes"][k] for k in extra]
        row += [v["premise_holds"] for v in g.get("verdicts", [])]
        row += [v["conclusion_holds"] for v in g.get("verdicts", [])]
        rows.append(row)
    return header, rows


def dump_csv(command: str, payload: dict) -> str:
    header, rows = _rows(command, payload)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()


def dump_text(command: str, payload: dict) -> str:
    lines = []
    if command == "fixtures":
        if "results" in payload:
            for r in payload["results"]:
                lines.append(f"{'PASS' if r['ok'] else 'FAIL'}  {r['name']}: {r['detail']}")
            lines.append(f"{payload['passed']} passed, {payload['failed']} failed")
        else:
            for f in payload["fixtures"]:
                lines.append(f"{f['kind']:<10} {f['name']}{'  (reconstructed)' if f['reconstructed'] else ''}")
        return "\n".join(lines) + "\n"
    if command == "hunt":
        meta = payload["meta"]
        lines.append(f"scanned {meta['graphs_scanned']} graphs; {len(payload['counterexamples'])} counterexamples")
        for r in payload["counterexamples"]:
            lines.append(f"#{r['index']} {r['graph6']}  I = {render(int(c) for c in r['coeffs'])}")
        return "\n".join(lines) + "\n"
    for g in payload["graphs"]:
        lines.append(f"{g['input']['value']}  (n={g['n']}, m={g['m']}, alpha={g['alpha']})")
        lines.append(f"  I(G;x) = {g['polynomial']}")
        sh = g["shape"]
        lines.append(f"  unimodal={sh['unimodal']} log_concave={sh['log_concave']} modes={sh['modes']}")
        if "classes" in g:
            c = g["classes"]
            flags = [k for k in ("well_covered", "very_well_covered", "quasi_regularizable", "bipartite", "tree") if c[k]]
            lines.append(f"  classes: {', '.join(flags) or 'none'}; perfect={c['perfect']}; girth={c['girth']}")
        for v in g.get("verdicts", []):
            status = "holds" if v["conclusion_holds"] else "FAILS"
            fv = v["first_violation"]
            where = "" if fv is None else f" at k={fv['k']} ({fv['relation']}: {fv['left']} vs {fv['right']})"
            lines.append(f"  {v['statement_id']}: premise={v['premise_holds']} conclusion {status}{where}")
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for name, default in (("format", "json"), ("max_n", DEFAULT_MAX_N), ("perfect_max_n", DEFAULT_PERFECT_MAX_N)):
            if getattr(args, name, None) is None:
                setattr(args, name, default)
        code, payload = COMMANDS[args.command](args)
    except (UsageError, ParseError, GraphError, InstanceTooLarge) as exc:
        print(f"indpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        sys.stdout.write(dump_json(payload))
    elif args.format == "csv":
        sys.stdout.write(dump_csv(args.command, payload))
    else:
        sys.stdout.write(dump_text(args.command, payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
