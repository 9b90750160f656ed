"""Text formats: edge lists, clique-tree files, walk logs and bipartite exports.

Edge list::

    # comment
    1 2
    2 3
    7          <- isolated vertex

Clique tree (clique table first, then one line per edge with its separator)::

    0 : 1 2
    1 : 2 3
    0 1 | 2
"""

from __future__ import annotations

import hashlib
from collections.abc import Iterable
from pathlib import Path

from .chordal import maximal_cliques
from .clique_tree import CliqueTree
from .errors import InvalidArgumentError
from .graph import Graph
from .relation import BipartiteGraph, WalkState, state_key


class ParseError(InvalidArgumentError):
    def __init__(self, message: str, lineno: int | None = None):
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(where + message)
        self.lineno = lineno


def _int_tokens(tokens: list[str], lineno: int) -> list[int]:
    try:
        values = [int(tok) for tok in tokens]
    except ValueError:
        raise ParseError(f"expected non-negative integers, got {' '.join(tokens)!r}", lineno) from None
    if any(v < 0 for v in values):
        raise ParseError("vertex ids must be non-negative", lineno)
    return values


def parse_edge_list(text: str) -> Graph:
    vertices: list[int] = []
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        values = _int_tokens(line.split(), lineno)
        if len(values) == 1:
            vertices.append(values[0])
        elif len(values) == 2:
            if values[0] == values[1]:
                raise ParseError(f"self-loop at vertex {values[0]}", lineno)
            edges.append((values[0], values[1]))
        else:
            raise ParseError(f"expected 'u v' or 'v', got {len(values)} fields", lineno)
    return Graph(vertices, edges)


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges]
    lines += [str(v) for v in g.vertices if not g.adj(v)]
    return "".join(line + "\n" for line in lines)


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(format_edge_list(g).encode()).hexdigest()[:16]


# -- clique trees -----------------------------------------------------------


def format_tree(t: CliqueTree) -> str:
    lines = [f"{i} : {' '.join(map(str, c))}" for i, c in enumerate(t.cliques)]
    for (i, j), sep in zip(t.edges, t.labels):
        lines.append(f"{i} {j} | {' '.join(map(str, sep))}".rstrip())
    return "\n".join(lines) + "\n"


def parse_tree(text: str, g: Graph) -> CliqueTree:
    """Read a tree file against ``g``; the clique table, if present, must match."""
    cliques = maximal_cliques(g)
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" in line:
            head, _, body = line.partition(":")
            idx = _int_tokens(head.split(), lineno)
            members = tuple(sorted(_int_tokens(body.split(), lineno)))
            if len(idx) != 1 or not 0 <= idx[0] < len(cliques) or cliques[idx[0]] != members:
                raise ParseError(f"clique table entry does not match the graph's clique {head.strip()}", lineno)
            continue
        pair = _int_tokens(line.partition("|")[0].split(), lineno)
        if len(pair) != 2:
            raise ParseError("expected 'i j | separator'", lineno)
        edges.append((pair[0], pair[1]))
    try:
        return CliqueTree(cliques, tuple(edges))
    except InvalidArgumentError as exc:
        raise ParseError(str(exc)) from None


# -- walks and bipartite graphs --------------------------------------------


def format_walk_log(g: Graph, seed: int | None, log: Iterable[WalkState]) -> str:
    lines = [f"# seed={seed} graph={graph_hash(g)}"]
    lines += [f"{ws.step} {ws.side} {ws.key}" for ws in log]
    return "\n".join(lines) + "\n"


def format_bipartite(b: BipartiteGraph) -> str:
    lines = ["# trees"]
    lines += [f"T{i} {state_key(t)}" for i, t in enumerate(b.trees)]
    lines.append("# sequences")
    lines += [f"P{i} {state_key(s)}" for i, s in enumerate(b.sequences)]
    lines.append("# relation")
    lines += [f"T{t} P{s}" for t, s in b.edges]
    return "\n".join(lines) + "\n"
