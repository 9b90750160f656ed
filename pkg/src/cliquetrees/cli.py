"""Command-line front end.

Every command reads an edge list (see ``cliquetrees.io``) and writes either an
aligned text report or, with ``--json``, the same content as JSON.  Text
reports are rendered from the JSON-compatible dictionaries, so parsing the
JSON output and rendering it again reproduces the text exactly.

Exit codes: 0 success, 1 verification failure, 2 unsupported input (not
chordal or disconnected), 3 resource guard exceeded, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any, NoReturn

from . import boundary as bd
from . import chordal as ch
from . import clique_tree as ct
from . import relation as rel
from .errors import (
    DisconnectedGraphError,
    InvalidArgumentError,
    NotChordalError,
    ResourceLimitError,
    UnsupportedInputError,
)
from .generate import METHODS, exhaustive_corpus, random_chordal_graph, random_corpus
from .graph import Graph, is_connected
from .io import (
    ParseError,
    format_bipartite,
    format_edge_list,
    format_tree,
    format_walk_log,
    graph_hash,
    parse_tree,
    read_edge_list,
)
from .verify import CHECKS, run_checks

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_UNSUPPORTED = 2
EXIT_GUARD = 3
EXIT_USAGE = 64

EXHAUSTIVE_MAX_N = 7
ANALYSIS_ENUMERATION_MAX_K = 8
ANALYSIS_MAX_PAIRS = 100_000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- output helpers ---------------------------------------------------------


def _sets(vs: Sequence[int]) -> str:
    return "{" + ", ".join(map(str, vs)) + "}"


def _table(rows: list[list[str]]) -> list[str]:
    if not rows:
        return []
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]


def _emit(args: argparse.Namespace, payload: dict[str, Any], render: Callable[[dict[str, Any]], str]) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n" if args.json else render(payload)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(args: argparse.Namespace) -> Graph:
    return read_edge_list(args.graph)


def render_finding(d: dict[str, Any]) -> str:
    lines = [
        f"vertices    {d['n']}",
        f"edges       {d['edges']}",
        f"chordal     {_flag(d['chordal'])}",
        f"connected   {_flag(d['connected'])}",
        f"finding     {d['finding']}",
    ]
    return "\n".join(lines) + "\n"


def _unsupported(args: argparse.Namespace, g: Graph, exc: UnsupportedInputError) -> int:
    finding = {
        "n": len(g),
        "edges": len(g.edges),
        "chordal": not isinstance(exc, NotChordalError),
        "connected": is_connected(g),
        "finding": str(exc),
    }
    _emit(args, finding, render_finding)
    return EXIT_UNSUPPORTED


# -- analyze ----------------------------------------------------------------


def analysis_report(g: Graph) -> dict[str, Any]:
    """Everything ``analyze`` prints, as a JSON-compatible dictionary."""
    report: dict[str, Any] = {"n": len(g), "edges": len(g.edges), "chordal": True, "connected": True}
    if len(g) == 0:
        report.update(K=0, cliques=[], separators=[], tree_count=None, unique=None, arbitrary=None)
        return report
    ch.require_connected_chordal(g)
    classes = bd.classify_cliques(g)
    cliques = []
    for idx, c in enumerate(ch.maximal_cliques(g)):
        simp, sep = ch.simp_sep_partition(g, idx)
        cliques.append(
            {
                "index": idx,
                "vertices": list(c),
                "simp": list(simp),
                "sep": list(sep),
                "class": classes[idx].kind.value,
                "dominant": classes[idx].dominant,
            }
        )
    k = len(cliques)
    trees = ct.classify_trees(g)
    report.update(
        K=k,
        cliques=cliques,
        separators=[{"set": list(s), "nu": nu} for s, nu in sorted(ch.minimal_separators(g).items())],
        tree_count=trees.count,
        unique=trees.unique,
        arbitrary=trees.arbitrary if k >= 2 else None,
    )
    if k <= ANALYSIS_ENUMERATION_MAX_K:
        try:
            enumerated = ct.enumerate_clique_trees(g)
        except ResourceLimitError:
            return report
        sequences = ch.all_perfect_sequences(g, max_K=ANALYSIS_ENUMERATION_MAX_K)
        report["enumeration"] = {"trees": len(enumerated), "sequences": len(sequences)}
        if len(enumerated) * len(sequences) <= ANALYSIS_MAX_PAIRS:
            b = rel.build_bipartite(g)
            report["bipartite"] = {
                "edges": len(b.edges),
                "connected": rel.is_connected(b),
                "complete": b.is_complete(),
            }
    return report


def _flag(value: bool | None) -> str:
    return "n/a" if value is None else str(value).lower()


def render_analysis(d: dict[str, Any]) -> str:
    lines = [f"vertices    {d['n']}", f"edges       {d['edges']}", f"chordal     {_flag(d['chordal'])}"]
    lines.append(f"cliques     {d['K']}")
    rows = [["#", "clique", "simp", "sep", "class", "dominant"]]
    for c in d["cliques"]:
        dom = "-" if c["dominant"] is None else str(c["dominant"])
        rows.append([str(c["index"]), _sets(c["vertices"]), _sets(c["simp"]), _sets(c["sep"]), c["class"], dom])
    if d["cliques"]:
        lines += ["  " + row for row in _table(rows)]
    lines.append(f"separators  {len(d['separators'])}")
    lines += [f"  {_sets(s['set'])}  nu={s['nu']}" for s in d["separators"]]
    count = "n/a" if d["tree_count"] is None else str(d["tree_count"])
    lines += [f"trees       {count}", f"unique      {_flag(d['unique'])}", f"arbitrary   {_flag(d['arbitrary'])}"]
    if "enumeration" in d:
        e = d["enumeration"]
        lines.append(f"enumerated  {e['trees']} trees, {e['sequences']} perfect sequences")
    if "bipartite" in d:
        b = d["bipartite"]
        lines.append(
            f"bipartite   {b['edges']} edges, connected={_flag(b['connected'])}, complete={_flag(b['complete'])}"
        )
    return "\n".join(lines) + "\n"


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _load(args)
    try:
        report = analysis_report(g)
    except UnsupportedInputError as exc:
        return _unsupported(args, g, exc)
    _emit(args, report, render_analysis)
    return EXIT_OK


# -- trees ------------------------------------------------------------------


def cmd_trees(args: argparse.Namespace) -> int:
    g = _load(args)
    try:
        ch.require_connected_chordal(g)
    except UnsupportedInputError as exc:
        return _unsupported(args, g, exc)
    if args.check:
        return _check_tree(args, g)
    count = ct.count_clique_trees(g)
    if not args.enumerate:
        _emit(args, {"count": count}, lambda d: f"{d['count']}\n")
        return EXIT_OK
    try:
        trees = ct.enumerate_clique_trees(g, max_K=args.max_k)
    except ResourceLimitError as exc:
        _emit(args, {"count": count, "error": str(exc)}, lambda d: f"{d['count']}\n")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    payload = {"count": count, "trees": [format_tree(t) for t in trees]}
    _emit(args, payload, lambda d: "\n".join(f"# tree {i}\n{t}" for i, t in enumerate(d["trees"])))
    return EXIT_OK


def _check_tree(args: argparse.Namespace, g: Graph) -> int:
    t = parse_tree(Path(args.check).read_text(), g)
    if not ct.is_tree(t):
        verdict = {"valid": False, "reason": "not a spanning tree on the maximal cliques", "separator": None}
    else:
        sep = ct.junction_violation(g, t)
        verdict = {
            "valid": sep is None,
            "reason": None if sep is None else f"junction property violated at S={_sets(sep)}",
            "separator": None if sep is None else list(sep),
        }
    _emit(args, verdict, lambda d: "valid clique tree\n" if d["valid"] else d["reason"] + "\n")
    return EXIT_OK if verdict["valid"] else EXIT_FAILED


# -- sequences --------------------------------------------------------------


def _parse_order(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad clique order {text!r}; expected comma-separated indices") from None


def cmd_sequences(args: argparse.Namespace) -> int:
    g = _load(args)
    try:
        ch.require_connected_chordal(g)
    except UnsupportedInputError as exc:
        return _unsupported(args, g, exc)
    if args.check is not None:
        order = _parse_order(args.check)
        ok = ch.is_perfect_sequence(g, order)
        _emit(args, {"order": order, "perfect": ok}, lambda d: f"perfect={_flag(d['perfect'])}\n")
        return EXIT_OK if ok else EXIT_FAILED
    try:
        seqs = ch.all_perfect_sequences(g, max_K=args.max_k)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    payload = {"count": len(seqs), "sequences": [list(s.order) for s in seqs]}
    if args.count:
        _emit(args, {"count": len(seqs)}, lambda d: f"{d['count']}\n")
    else:
        _emit(args, payload, lambda d: "".join(",".join(map(str, s)) + "\n" for s in d["sequences"]))
    return EXIT_OK


# -- boundary ---------------------------------------------------------------


def render_boundary(d: dict[str, Any]) -> str:
    rows = [["#", "clique", "class", "dominant", "separator"]]
    for c in d["cliques"]:
        dom = "-" if c["dominant"] is None else str(c["dominant"])
        sep = "-" if c["separator"] is None else _sets(c["separator"])
        rows.append([str(c["index"]), _sets(c["vertices"]), c["class"], dom, sep])
    return "\n".join(_table(rows)) + "\n"


def cmd_boundary(args: argparse.Namespace) -> int:
    g = _load(args)
    try:
        classes = bd.classify_cliques(g)
    except UnsupportedInputError as exc:
        return _unsupported(args, g, exc)
    cliques = ch.maximal_cliques(g)
    payload = {
        "cliques": [
            {
                "index": c.clique,
                "vertices": list(cliques[c.clique]),
                "class": c.kind.value,
                "dominant": c.dominant,
                "separator": None if c.boundary_separator is None else list(c.boundary_separator),
            }
            for c in classes
        ]
    }
    _emit(args, payload, render_boundary)
    return EXIT_OK


# -- relation ---------------------------------------------------------------


def render_relation(d: dict[str, Any]) -> str:
    if "related" in d:
        return f"related={_flag(d['related'])}\n"
    lines = [
        f"trees       {d['trees']}",
        f"sequences   {d['sequences']}",
        f"edges       {d['edges']}",
        f"connected   {_flag(d['connected'])}",
        f"complete    {_flag(d['complete'])}",
    ]
    text = "\n".join(lines) + "\n"
    return text + d["listing"] if d.get("listing") else text


def cmd_relation(args: argparse.Namespace) -> int:
    g = _load(args)
    try:
        ch.require_connected_chordal(g)
    except UnsupportedInputError as exc:
        return _unsupported(args, g, exc)
    if args.pair:
        tree_file, order = args.pair
        t = parse_tree(Path(tree_file).read_text(), g)
        pi = ch.make_sequence(g, _parse_order(order))
        related = rel.in_relation(t, pi)
        _emit(args, {"related": related}, render_relation)
        return EXIT_OK if related else EXIT_FAILED
    try:
        b = rel.build_bipartite(g)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    payload = {
        "trees": len(b.trees),
        "sequences": len(b.sequences),
        "edges": len(b.edges),
        "connected": rel.is_connected(b),
        "complete": b.is_complete(),
        "listing": format_bipartite(b) if args.list else None,
    }
    _emit(args, payload, render_relation)
    return EXIT_OK if payload["connected"] else EXIT_FAILED


# -- walk -------------------------------------------------------------------


def cmd_walk(args: argparse.Namespace) -> int:
    g = _load(args)
    try:
        ch.require_connected_chordal(g)
    except UnsupportedInputError as exc:
        return _unsupported(args, g, exc)
    if args.steps < 0:
        raise UsageError("--steps must be non-negative")
    log = rel.random_walk(g, rel.initial_state(g, args.start), steps=args.steps, seed=args.seed)
    trees = {ws.key for ws in log if ws.side == "tree"}
    seqs = {ws.key for ws in log if ws.side == "sequence"}
    if args.json:
        payload = {
            "seed": args.seed,
            "graph": graph_hash(g),
            "log": [{"step": ws.step, "side": ws.side, "key": ws.key} for ws in log],
            "coverage": {"trees": len(trees), "sequences": len(seqs)},
        }
        _emit(args, payload, lambda d: "")
    else:
        text = format_walk_log(g, args.seed, log)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
    print(f"coverage: {len(trees)} trees, {len(seqs)} sequences", file=sys.stderr)
    return EXIT_OK


# -- generate ---------------------------------------------------------------


def cmd_generate(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    g = random_chordal_graph(args.n, args.seed, args.method)
    if args.json:
        _emit(args, {"n": len(g), "edges": [list(e) for e in g.edges]}, lambda d: "")
    else:
        text = format_edge_list(g)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
    return EXIT_OK


# -- verify -----------------------------------------------------------------


def render_verify(d: dict[str, Any]) -> str:
    rows = [["check", "passed", "failed", "skipped"]]
    for name, t in d["checks"].items():
        rows.append([name, str(t["passed"]), str(t["failed"]), str(t["skipped"])])
    lines = [f"graphs      {d['graphs']}", f"seconds     {d['seconds']}", ""]
    lines += _table(rows)
    for name, t in d["checks"].items():
        lines += [f"FAIL {name}: {ex}" for ex in t["examples"]]
    lines += ["", "ok" if d["ok"] else "FAILED"]
    return "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n > EXHAUSTIVE_MAX_N:
        print(f"error: --max-n {args.max_n} exceeds the exhaustive guard {EXHAUSTIVE_MAX_N}", file=sys.stderr)
        return EXIT_GUARD
    graphs = list(exhaustive_corpus(args.max_n))
    if args.random:
        graphs += random_corpus(args.random, args.seed, max_n=args.random_max_n, max_K=8, min_n=3)
    checks = {name: CHECKS[name] for name in args.check} if args.check else None
    report = run_checks(graphs, checks)
    _emit(args, report.to_dict(), render_verify)
    return EXIT_OK if report.ok else EXIT_FAILED


# -- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 0)")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output to this file")

    parser = _Parser(prog="cliquetrees", description="Clique trees and perfect sequences of chordal graphs.")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    parser.add_argument("--out", default=None, help="write output to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, func: Callable[[argparse.Namespace], int], help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = command("analyze", cmd_analyze, "full structural report")
    p.add_argument("graph")

    p = command("trees", cmd_trees, "count, enumerate or check clique trees")
    p.add_argument("graph")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the number of clique trees (default)")
    mode.add_argument("--enumerate", action="store_true", help="list every clique tree")
    mode.add_argument("--check", metavar="TREEFILE", help="test a tree file for the junction property")
    p.add_argument("--max-k", type=int, default=ct.MAX_ENUMERATION_K, help="enumeration guard on K")

    p = command("sequences", cmd_sequences, "enumerate or validate perfect sequences")
    p.add_argument("graph")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print only the number of perfect sequences")
    mode.add_argument("--check", metavar="ORDER", help="comma-separated clique indices to validate")
    p.add_argument("--max-k", type=int, default=ch.DEFAULT_MAX_K, help="enumeration guard on K")

    p = command("boundary", cmd_boundary, "classify maximal cliques")
    p.add_argument("graph")

    p = command("relation", cmd_relation, "tree/sequence bipartite graph")
    p.add_argument("graph")
    p.add_argument("--list", action="store_true", help="also list trees, sequences and related pairs")
    p.add_argument("--pair", nargs=2, metavar=("TREEFILE", "ORDER"), help="test one tree/sequence pair")

    p = command("walk", cmd_walk, "seeded random walk on the bipartite graph")
    p.add_argument("graph")
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--start", choices=("tree", "sequence"), default="tree")

    p = command("generate", cmd_generate, "random connected chordal graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="tree-of-cliques")

    p = command("verify", cmd_verify, "run every structural check over a corpus")
    p.add_argument("--max-n", type=int, default=6, help=f"exhaustive tier size (at most {EXHAUSTIVE_MAX_N})")
    p.add_argument("--random", type=int, default=0, metavar="M", help="number of random graphs to add")
    p.add_argument("--random-max-n", type=int, default=10)
    p.add_argument("--check", action="append", choices=sorted(CHECKS), help="restrict to these checks")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cliquetrees: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotChordalError, DisconnectedGraphError) as exc:
        print(f"unsupported input: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except InvalidArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
