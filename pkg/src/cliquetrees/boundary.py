"""Boundary (simply separated) and strongly simplicial maximal cliques.

A maximal clique C is a boundary clique when some other maximal clique C'
meets it in exactly its non-simplicial part: ``Sep(C) == C & C'``.  C' is then
a dominant clique for C.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import Enum

from .chordal import (
    clique_frozensets,
    clique_index,
    is_chordal,
    maximal_cliques,
    minimal_separators,
    require_connected_chordal,
    simp_sep_partition,
)
from .errors import InvalidArgumentError
from .graph import Graph, VertexSet, components_after_removal, induced_subgraph
from .reports import CheckReport


class CliqueClass(str, Enum):
    NOT_SIMPLICIAL = "not-simplicial"
    SIMPLICIAL_NOT_BOUNDARY = "simplicial-not-boundary"
    BOUNDARY = "boundary-not-strongly-simplicial"
    STRONGLY_SIMPLICIAL = "strongly-simplicial"


@dataclass(frozen=True)
class CliqueClassification:
    clique: int
    kind: CliqueClass
    dominant: int | None = None
    boundary_separator: VertexSet | None = None

    @property
    def is_boundary(self) -> bool:
        return self.kind in (CliqueClass.BOUNDARY, CliqueClass.STRONGLY_SIMPLICIAL)


def is_boundary_clique(g: Graph, c: int | Iterable[int]) -> tuple[bool, int | None]:
    """Whether ``c`` is a boundary clique, with the first dominant clique found.

    Returns ``(False, None)`` for the single clique of a complete graph, which
    has no other clique to be dominated by.
    """
    require_connected_chordal(g)
    idx = clique_index(g, c)
    sets = clique_frozensets(g)
    _, sep = simp_sep_partition(g, idx)
    sep_set = frozenset(sep)
    for j, other in enumerate(sets):
        if j != idx and sets[idx] & other == sep_set:
            return True, j
    return False, None


def _require_not_complete(g: Graph) -> None:
    if g.is_complete():
        raise InvalidArgumentError("graph is complete; the characterization needs a non-complete graph")


def boundary_via_separator(g: Graph, c: int | Iterable[int]) -> bool:
    """Boundary test: the non-simplicial part is itself a minimal separator."""
    require_connected_chordal(g)
    _require_not_complete(g)
    _, sep = simp_sep_partition(g, clique_index(g, c))
    return sep in minimal_separators(g)


def boundary_via_removal(g: Graph, c: int | Iterable[int]) -> bool:
    """Boundary test: dropping ``c`` leaves a chordal graph whose maximal
    cliques are exactly the remaining ones."""
    require_connected_chordal(g)
    _require_not_complete(g)
    idx = clique_index(g, c)
    cliques = maximal_cliques(g)
    rest = [cl for j, cl in enumerate(cliques) if j != idx]
    h = induced_subgraph(g, {v for cl in rest for v in cl})
    return is_chordal(h) and list(maximal_cliques(h)) == rest


def boundary_cliques(g: Graph) -> list[int]:
    return [i for i in range(len(maximal_cliques(g))) if is_boundary_clique(g, i)[0]]


def _closed(g: Graph, v: int) -> frozenset[int]:
    return g.adj(v) | {v}


def _is_strongly_simplicial(g: Graph, idx: int) -> bool:
    simp, _ = simp_sep_partition(g, idx)
    if not simp:
        return False
    reach: set[int] = set()
    for v in simp:
        reach |= _closed(g, v)
    chain = sorted({_closed(g, v) for v in reach}, key=len)
    return all(a <= b for a, b in zip(chain, chain[1:]))


def strongly_simplicial_cliques(g: Graph) -> list[int]:
    """Simplicial cliques whose closed neighborhoods over N[Simp(C)] form a chain."""
    require_connected_chordal(g)
    return [i for i in range(len(maximal_cliques(g))) if _is_strongly_simplicial(g, i)]


def classify_cliques(g: Graph) -> list[CliqueClassification]:
    """Place every maximal clique in exactly one of the four classes.

    The sole clique of a complete graph is reported strongly simplicial
    without a dominant clique.
    """
    require_connected_chordal(g)
    out = []
    for i in range(len(maximal_cliques(g))):
        simp, sep = simp_sep_partition(g, i)
        boundary, dominant = is_boundary_clique(g, i)
        if _is_strongly_simplicial(g, i):
            kind = CliqueClass.STRONGLY_SIMPLICIAL
        elif boundary:
            kind = CliqueClass.BOUNDARY
        elif simp:
            kind = CliqueClass.SIMPLICIAL_NOT_BOUNDARY
        else:
            kind = CliqueClass.NOT_SIMPLICIAL
        out.append(CliqueClassification(i, kind, dominant, sep if boundary else None))
    return out


def inclusion_minimal_separators(catalog: Mapping[VertexSet, int] | Iterable[VertexSet]) -> list[VertexSet]:
    """Separators with no other separator strictly inside them."""
    keys = [frozenset(s) for s in catalog]
    return sorted(tuple(sorted(s)) for s in keys if not any(o < s for o in keys))


def clique_blocks(g: Graph, sep: Iterable[int]) -> list[tuple[VertexSet, list[int]]]:
    """Components of G minus ``sep``, each with the maximal cliques inside it plus ``sep``."""
    sep_set = frozenset(sep)
    sets = clique_frozensets(g)
    blocks = []
    for comp in components_after_removal(g, sep_set):
        region = sep_set | set(comp)
        blocks.append((comp, [i for i, c in enumerate(sets) if c <= region]))
    return blocks


def boundary_components_check(g: Graph) -> CheckReport:
    """Every component left by an inclusion-minimal separator holds the
    simplicial part of some boundary clique."""
    report = CheckReport("boundary-components")
    require_connected_chordal(g)
    if g.is_complete():
        return CheckReport.not_applicable(report.name, "complete graph")
    witnesses = {}
    for i in boundary_cliques(g):
        simp, _ = simp_sep_partition(g, i)
        witnesses[i] = frozenset(simp)
    found = {}
    for sep in inclusion_minimal_separators(minimal_separators(g)):
        for comp, _ in clique_blocks(g, sep):
            hits = [i for i, simp in witnesses.items() if simp <= set(comp)]
            if hits:
                found[(sep, comp)] = hits[0]
            else:
                report.fail(f"no boundary clique inside component {list(comp)} of separator {list(sep)}")
    report.details["witnesses"] = {f"{list(s)}|{list(c)}": w for (s, c), w in found.items()}
    return report


def boundary_pair_check(g: Graph) -> CheckReport:
    """A non-complete chordal graph has two boundary cliques with
    non-adjacent simplicial parts."""
    report = CheckReport("boundary-pair")
    require_connected_chordal(g)
    if g.is_complete():
        return CheckReport.not_applicable(report.name, "complete graph")
    simps = [frozenset(simp_sep_partition(g, i)[0]) for i in boundary_cliques(g)]
    for a in range(len(simps)):
        for b in range(a + 1, len(simps)):
            if not any(g.adj(u) & simps[b] for u in simps[a]):
                return report
    report.fail("fewer than two boundary cliques with non-adjacent simplicial parts")
    return report


__all__ = [
    "CliqueClass",
    "CliqueClassification",
    "boundary_cliques",
    "boundary_components_check",
    "boundary_pair_check",
    "boundary_via_removal",
    "boundary_via_separator",
    "classify_cliques",
    "clique_blocks",
    "inclusion_minimal_separators",
    "is_boundary_clique",
    "strongly_simplicial_cliques",
]
