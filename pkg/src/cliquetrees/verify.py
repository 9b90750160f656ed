"""Corpus-wide verification of the structural theorems.

Each check takes a ``GraphFacts`` bundle (one connected chordal graph plus
lazily computed enumerations) and returns True, False, or None when the graph
is outside the check's hypotheses or enumeration guards.
"""

from __future__ import annotations

import time
from collections import Counter
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from . import boundary as bd
from . import chordal as ch
from . import clique_tree as ct
from . import relation as rel
from .errors import ResourceLimitError
from .graph import Graph, induced_subgraph, is_clique
from .io import format_edge_list

SEQUENCE_MAX_K = 8
SMALL_K = 5
ARBITRARY_MAX_K = 6
BIPARTITE_MAX_PAIRS = 50_000


class GraphFacts:
    """Per-graph cache of the expensive enumerations shared between checks."""

    def __init__(self, g: Graph):
        self.g = g
        self.cliques = ch.maximal_cliques(g)
        self.K = len(self.cliques)
        self.complete = g.is_complete()

    @cached_property
    def catalog(self) -> dict:
        return ch.minimal_separators(self.g)

    @cached_property
    def trees(self) -> list[ct.CliqueTree] | None:
        try:
            return ct.enumerate_clique_trees(self.g)
        except ResourceLimitError:
            return None

    @cached_property
    def sequences(self) -> list[ch.PerfectSequence] | None:
        if self.K > SEQUENCE_MAX_K:
            return None
        return ch.all_perfect_sequences(self.g, max_K=SEQUENCE_MAX_K)

    @cached_property
    def bipartite(self) -> rel.BipartiteGraph | None:
        if self.trees is None or self.sequences is None:
            return None
        if len(self.trees) * len(self.sequences) > BIPARTITE_MAX_PAIRS:
            return None
        edges = [
            (ti, si)
            for ti, t in enumerate(self.trees)
            for si, s in enumerate(self.sequences)
            if rel.in_relation(t, s)
        ]
        return rel.BipartiteGraph(self.trees, self.sequences, edges)


Check = Callable[[GraphFacts], "bool | None"]


def simplicial_equivalence(f: GraphFacts) -> bool:
    seps = set().union(*map(set, f.catalog)) if f.catalog else set()
    simp = set(ch.simplicial_vertices(f.g))
    for v in f.g.vertices:
        one_clique = sum(v in c for c in f.cliques) == 1
        if len({v in simp, one_clique, v not in seps}) != 1:
            return False
    return True


def nu_invariance(f: GraphFacts) -> bool | None:
    if sum(f.catalog.values()) != max(f.K - 1, 0):
        return False
    if f.sequences is None:
        return None
    expected = Counter(f.catalog)
    return all(Counter(s.separators) == expected for s in f.sequences)


def dirac_simplicial(f: GraphFacts) -> bool | None:
    if f.complete:
        return None
    simp = ch.simplicial_vertices(f.g)
    return any(not f.g.has_edge(u, v) for u, v in combinations(simp, 2))


def separators_are_cliques(f: GraphFacts) -> bool:
    return all(is_clique(f.g, s) for s in f.catalog)


def distinct_separator_upsets(f: GraphFacts) -> bool:
    ups = [tuple(ct.cliques_containing(f.g, s)) for s in f.catalog]
    return len(set(ups)) == len(ups)


def component_lemma(f: GraphFacts) -> bool | None:
    """Blocks of an inclusion-minimal separator partition the cliques, and each
    block is the clique set of its induced subgraph."""
    if f.complete:
        return None
    for sep in bd.inclusion_minimal_separators(f.catalog):
        seen: list[int] = []
        for comp, members in bd.clique_blocks(f.g, sep):
            h = induced_subgraph(f.g, set(comp) | set(sep))
            if list(ch.maximal_cliques(h)) != [f.cliques[i] for i in members]:
                return False
            seen += members
        if sorted(seen) != list(range(f.K)):
            return False
    return True


def every_clique_starts_a_sequence(f: GraphFacts) -> bool | None:
    if f.sequences is None:
        return None
    return {s.order[0] for s in f.sequences} == set(range(f.K))


def boundary_equivalence(f: GraphFacts) -> bool | None:
    if f.complete:
        return None
    for i in range(f.K):
        a = bd.is_boundary_clique(f.g, i)[0]
        if a != bd.boundary_via_separator(f.g, i) or a != bd.boundary_via_removal(f.g, i):
            return False
        if a and not ch.simp_sep_partition(f.g, i)[0]:
            return False
    return True


def strongly_implies_boundary(f: GraphFacts) -> bool | None:
    if f.complete:
        return None
    return set(bd.strongly_simplicial_cliques(f.g)) <= set(bd.boundary_cliques(f.g))


def boundary_components(f: GraphFacts) -> bool | None:
    r = bd.boundary_components_check(f.g)
    return r.passed if r.applicable else None


def boundary_pair(f: GraphFacts) -> bool | None:
    r = bd.boundary_pair_check(f.g)
    return r.passed if r.applicable else None


def enumerated_trees_valid(f: GraphFacts) -> bool | None:
    if f.trees is None:
        return None
    return all(ct.is_clique_tree(f.g, t) for t in f.trees) and len(set(f.trees)) == len(f.trees)


def count_matches_enumeration(f: GraphFacts) -> bool | None:
    if f.trees is None:
        return None
    return ct.count_clique_trees(f.g) == len(f.trees)


def constructions_valid(f: GraphFacts) -> bool:
    """Trees built from sequences are clique trees; sequences built from trees
    are perfect.  Every sequence is expanded only while K is small."""
    canon = ct.canonical_clique_tree(f.g)
    if not ct.is_clique_tree(f.g, canon):
        return False
    for root in range(f.K):
        pi = ct.sequence_from_tree(canon, root)
        if not ch.is_perfect_sequence(f.g, pi):
            return False
        if not ct.is_clique_tree(f.g, ct.tree_from_sequence(pi)):
            return False
    if f.K > ARBITRARY_MAX_K:
        return True
    for pi in f.sequences or ():
        if not all(ct.is_clique_tree(f.g, t) for t in ct.all_trees_from_sequence(pi)):
            return False
    return True


def edge_labels(f: GraphFacts) -> bool | None:
    if f.trees is None:
        return None
    expected = Counter(f.catalog)
    return all(Counter(t.labels) == expected for t in f.trees)


def prefix_subtree(f: GraphFacts) -> bool | None:
    if f.K > SMALL_K or f.trees is None or f.sequences is None:
        return None
    connected = set()
    for t in f.trees:
        nbrs = t.neighbors()
        for r in range(1, f.K + 1):
            for sub in combinations(range(f.K), r):
                if ct.connected_within(nbrs, sub):
                    connected.add(frozenset(sub))
    prefixes = {frozenset(s.order[:k]) for s in f.sequences for k in range(1, f.K + 1)}
    return connected == prefixes


def arbitrariness(f: GraphFacts) -> bool | None:
    if f.K < 2 or f.K > ARBITRARY_MAX_K:
        return None
    all_valid = all(
        ct.is_clique_tree(f.g, ct.CliqueTree(f.cliques, edges)) for edges in ct.labeled_trees(f.K)
    )
    formula = ct.count_clique_trees(f.g) == f.K ** (f.K - 2)
    # all labeled trees valid and the count reaching K**(K-2) must coincide
    return formula == all_valid and ct.is_arbitrary_tree(f.g) == all_valid


def uniqueness(f: GraphFacts) -> bool:
    conds = ct.uniqueness_conditions(f.g)
    unique = ct.count_clique_trees(f.g) == 1
    return all(c == unique for c in conds)


def endpoint_boundary(f: GraphFacts) -> bool | None:
    if f.trees is None:
        return None
    r = ct.endpoint_boundary_check(f.g, f.trees)
    return r.passed if r.applicable else None


def final_clique(f: GraphFacts) -> bool | None:
    if f.sequences is None:
        return None
    r = ct.final_clique_check(f.g, f.sequences)
    return r.passed if r.applicable else None


def endpoint_components(f: GraphFacts) -> bool | None:
    if f.trees is None:
        return None
    r = ct.endpoint_component_check(f.g, f.trees)
    return r.passed if r.applicable else None


def relation_symmetry(f: GraphFacts) -> bool | None:
    """Prefix test agrees with both generating algorithms on every pair."""
    if f.K > SMALL_K or f.bipartite is None:
        return None
    b = f.bipartite
    related = set(b.edges)
    by_seq = [set(ct.all_trees_from_sequence(s)) for s in b.sequences]
    by_tree = [set(ct.all_sequences_from_tree(t)) for t in b.trees]
    for ti, t in enumerate(b.trees):
        for si, s in enumerate(b.sequences):
            r = (ti, si) in related
            if r != (t in by_seq[si]) or r != (s in by_tree[ti]):
                return False
    return True


def bipartite_connected(f: GraphFacts) -> bool | None:
    b = f.bipartite
    if b is None:
        return None
    if min(b.tree_degrees(), default=1) < 1 or min(b.sequence_degrees(), default=1) < 1:
        return False
    return rel.is_connected(b)


def induced_subtrees(f: GraphFacts) -> bool | None:
    if f.K > SMALL_K - 1 or f.trees is None:
        return None
    for r in range(1, f.K + 1):
        for sub in combinations(range(f.K), r):
            if rel.induced_subtree_check(f.g, sub) is False:
                return False
    return True


CHECKS: dict[str, Check] = {
    "simplicial-equivalence": simplicial_equivalence,
    "nu-invariance": nu_invariance,
    "dirac-simplicial": dirac_simplicial,
    "separators-are-cliques": separators_are_cliques,
    "distinct-separator-upsets": distinct_separator_upsets,
    "component-lemma": component_lemma,
    "every-clique-starts-a-sequence": every_clique_starts_a_sequence,
    "boundary-equivalence": boundary_equivalence,
    "strongly-implies-boundary": strongly_implies_boundary,
    "boundary-components": boundary_components,
    "boundary-pair": boundary_pair,
    "enumerated-trees-valid": enumerated_trees_valid,
    "count-enumeration": count_matches_enumeration,
    "constructions-valid": constructions_valid,
    "edge-labels": edge_labels,
    "prefix-subtree": prefix_subtree,
    "arbitrariness": arbitrariness,
    "uniqueness": uniqueness,
    "endpoint-boundary": endpoint_boundary,
    "final-clique": final_clique,
    "endpoint-components": endpoint_components,
    "relation-symmetry": relation_symmetry,
    "bipartite-connected": bipartite_connected,
    "induced-subtrees": induced_subtrees,
}


@dataclass
class Tally:
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    examples: list[str] = field(default_factory=list)


@dataclass
class SuiteReport:
    graphs: int = 0
    seconds: float = 0.0
    tallies: dict[str, Tally] = field(default_factory=lambda: {name: Tally() for name in CHECKS})

    @property
    def ok(self) -> bool:
        return all(t.failed == 0 for t in self.tallies.values())

    def to_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "seconds": round(self.seconds, 3),
            "ok": self.ok,
            "checks": {
                name: {"passed": t.passed, "failed": t.failed, "skipped": t.skipped, "examples": t.examples}
                for name, t in sorted(self.tallies.items())
            },
        }


def run_checks(graphs: Iterable[Graph], checks: dict[str, Check] | None = None) -> SuiteReport:
    checks = CHECKS if checks is None else checks
    report = SuiteReport(tallies={name: Tally() for name in checks})
    start = time.perf_counter()
    for g in graphs:
        report.graphs += 1
        facts = GraphFacts(g)
        for name, check in checks.items():
            outcome = check(facts)
            tally = report.tallies[name]
            if outcome is None:
                tally.skipped += 1
            elif outcome:
                tally.passed += 1
            else:
                tally.failed += 1
                if len(tally.examples) < 3:
                    tally.examples.append(format_edge_list(g).replace("\n", ";"))
    report.seconds = time.perf_counter() - start
    return report
