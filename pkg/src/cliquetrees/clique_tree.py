"""Clique trees: construction, verification, counting and enumeration.

A clique tree is a spanning tree on the maximal cliques in which, for any two
cliques, their intersection is contained in every clique on the path between
them (the junction property).
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import prod

from .boundary import boundary_cliques, clique_blocks, inclusion_minimal_separators
from .chordal import (
    DEFAULT_MAX_K,
    CliqueSet,
    PerfectSequence,
    all_perfect_sequences,
    clique_frozensets,
    maximal_cliques,
    minimal_separators,
    require_connected_chordal,
)
from .errors import InvalidArgumentError, ResourceLimitError, TheoremViolation
from .graph import Graph, VertexSet, set_neighborhood
from .reports import CheckReport

Edge = tuple[int, int]

MAX_ENUMERATION_COUNT = 10**6
MAX_ENUMERATION_K = 12


@dataclass(frozen=True)
class CliqueTree:
    """Candidate tree over clique indices ``0..K-1``.

    Edges are stored as sorted ``(i, j)`` pairs with ``i < j``.  Whether the
    edges actually form a clique tree is checked by ``is_clique_tree``; this
    type only guarantees the indices are in range.
    """

    cliques: CliqueSet = field(repr=False)
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        k = len(self.cliques)
        norm = set()
        for i, j in self.edges:
            if i == j or not (0 <= i < k and 0 <= j < k):
                raise InvalidArgumentError(f"bad tree edge ({i}, {j}) for {k} cliques")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def size(self) -> int:
        return len(self.cliques)

    def separator(self, i: int, j: int) -> VertexSet:
        b = set(self.cliques[j])
        return tuple(v for v in self.cliques[i] if v in b)

    @property
    def labels(self) -> tuple[VertexSet, ...]:
        """Separator label of each edge, aligned with ``edges``."""
        return tuple(self.separator(i, j) for i, j in self.edges)

    def neighbors(self) -> list[list[int]]:
        nbrs: list[list[int]] = [[] for _ in range(self.size)]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return nbrs

    def degree(self, i: int) -> int:
        return sum(i in e for e in self.edges)


def connected_within(nbrs: Sequence[Sequence[int]], nodes: Iterable[int]) -> bool:
    members = set(nodes)
    if len(members) <= 1:
        return True
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in nbrs[u]:
            if w in members and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(members)


def is_tree(t: CliqueTree) -> bool:
    return len(t.edges) == t.size - 1 and connected_within(t.neighbors(), range(t.size))


def cliques_containing(g: Graph, d: Iterable[int]) -> list[int]:
    """Indices of the maximal cliques that contain every vertex of ``d``."""
    dset = frozenset(d)
    return [i for i, c in enumerate(clique_frozensets(g)) if dset <= c]


def _check_nodes(g: Graph, t: CliqueTree) -> None:
    if t.cliques != maximal_cliques(g):
        raise InvalidArgumentError("tree nodes are not the graph's maximal cliques")


def junction_violation(g: Graph, t: CliqueTree) -> VertexSet | None:
    """First separator whose containing cliques are disconnected in ``t``.

    Checking the separators alone suffices: the sets of cliques containing a
    separator and the sets containing an arbitrary clique induce the same
    connected subtrees.
    """
    _check_nodes(g, t)
    nbrs = t.neighbors()
    for sep in sorted(minimal_separators(g)):
        if not connected_within(nbrs, cliques_containing(g, sep)):
            return sep
    return None


def is_clique_tree(g: Graph, t: CliqueTree) -> bool:
    _check_nodes(g, t)
    return is_tree(t) and junction_violation(g, t) is None


def endpoints(t: CliqueTree) -> list[int]:
    """Leaves of the tree; the single node when there is only one clique."""
    if t.size == 1:
        return [0]
    deg = [0] * t.size
    for i, j in t.edges:
        deg[i] += 1
        deg[j] += 1
    return [i for i, d in enumerate(deg) if d == 1]


# -- canonical constructions ------------------------------------------------


@lru_cache(maxsize=16384)
def canonical_clique_tree(g: Graph) -> CliqueTree:
    """Maximum-weight spanning tree of the clique intersection graph.

    Prim's algorithm from clique 0 with weights ``|C_i & C_j|``; ties go to the
    smallest new clique index, attached to the earliest tree clique reaching
    the best weight.  Maximum-weight spanning trees of this graph are exactly
    the clique trees of a connected chordal graph.
    """
    require_connected_chordal(g)
    cliques = maximal_cliques(g)
    sets = clique_frozensets(g)
    k = len(cliques)
    if k == 0:
        return CliqueTree(cliques, ())
    in_tree = [False] * k
    in_tree[0] = True
    best = [(-1, -1)] * k  # (weight, parent)
    for j in range(1, k):
        best[j] = (len(sets[0] & sets[j]), 0)
    edges = []
    for _ in range(k - 1):
        nxt = max(
            (j for j in range(k) if not in_tree[j]),
            key=lambda j: (best[j][0], -j),
        )
        in_tree[nxt] = True
        edges.append((best[nxt][1], nxt))
        for j in range(k):
            if not in_tree[j]:
                w = len(sets[nxt] & sets[j])
                if w > best[j][0]:
                    best[j] = (w, nxt)
    return CliqueTree(cliques, tuple(edges))


def canonical_perfect_sequence(g: Graph) -> PerfectSequence:
    """Canonical clique tree, rooted at clique 0, in smallest-index-first order."""
    return sequence_from_tree(canonical_clique_tree(g), 0)


# -- sequence -> tree -------------------------------------------------------


def valid_parents(pi: PerfectSequence, k: int) -> list[int]:
    """Positions ``k' < k`` whose clique meets position ``k`` exactly in its separator."""
    if k < 1:
        return []
    sep = frozenset(pi.separators[k - 1])
    target = frozenset(pi.cliques[pi.order[k]])
    return [p for p in range(k) if frozenset(pi.cliques[pi.order[p]]) & target == sep]


def tree_from_sequence(pi: PerfectSequence, choice: Callable[[int], int] | None = None) -> CliqueTree:
    """Attach each clique to an earlier one meeting it in its separator.

    ``choice(k)`` names the position ``k'`` to attach position ``k`` to; by
    default the smallest valid position is used.
    """
    edges = []
    for k in range(1, len(pi)):
        options = valid_parents(pi, k)
        parent = options[0] if choice is None else choice(k)
        if parent not in options:
            raise InvalidArgumentError(f"position {parent} is not a valid attachment for position {k}")
        edges.append((pi.order[parent], pi.order[k]))
    return CliqueTree(pi.cliques, tuple(edges))


def all_trees_from_sequence(pi: PerfectSequence) -> list[CliqueTree]:
    """Every tree obtainable from ``pi`` over all attachment choices."""
    options = [valid_parents(pi, k) for k in range(1, len(pi))]
    trees = set()
    for picks in product(*options):
        edges = tuple((pi.order[p], pi.order[k]) for k, p in enumerate(picks, start=1))
        trees.add(CliqueTree(pi.cliques, edges))
    return sorted(trees, key=lambda t: t.edges)


# -- tree -> sequence -------------------------------------------------------


def sequence_from_tree(
    t: CliqueTree, root: int = 0, tiebreak: int | random.Random | None = None
) -> PerfectSequence:
    """Topological order of ``t`` directed away from ``root``.

    With ``tiebreak=None`` the smallest available clique is taken at each
    step; an int seed or a ``random.Random`` picks uniformly instead.
    """
    if not 0 <= root < t.size:
        raise InvalidArgumentError(f"root {root} is not a node of the tree")
    rng = random.Random(tiebreak) if isinstance(tiebreak, int) else tiebreak
    nbrs = t.neighbors()
    placed = {root}
    order = [root]
    available = set(nbrs[root])
    while available:
        pool = sorted(available)
        nxt = pool[0] if rng is None else rng.choice(pool)
        available.remove(nxt)
        placed.add(nxt)
        order.append(nxt)
        available.update(w for w in nbrs[nxt] if w not in placed)
    if len(order) != t.size:
        raise InvalidArgumentError("tree is not connected")
    return PerfectSequence(t.cliques, tuple(order))


def all_sequences_from_tree(t: CliqueTree, max_K: int = DEFAULT_MAX_K) -> list[PerfectSequence]:
    """Every linear extension of ``t`` over every root.

    Equivalently, the orderings whose every prefix induces a connected subtree.
    """
    if t.size > max_K:
        raise ResourceLimitError(f"K={t.size} exceeds the enumeration guard max_K={max_K}")
    nbrs = t.neighbors()
    out: list[PerfectSequence] = []
    order: list[int] = []

    def extend(placed: set[int]) -> None:
        if len(order) == t.size:
            out.append(PerfectSequence(t.cliques, tuple(order)))
            return
        frontier = sorted({w for u in order for w in nbrs[u]} - placed) if order else range(t.size)
        for nxt in frontier:
            order.append(nxt)
            placed.add(nxt)
            extend(placed)
            placed.remove(nxt)
            order.pop()

    if t.size:
        extend(set())
    out.sort(key=lambda s: s.order)
    return out


# -- counting ---------------------------------------------------------------


def separator_block_sizes(g: Graph) -> dict[VertexSet, list[int]]:
    return {sep: list(sizes) for sep, sizes in _block_sizes(g)}


@lru_cache(maxsize=16384)
def _block_sizes(g: Graph) -> tuple[tuple[VertexSet, tuple[int, ...]], ...]:
    """For each separator, the clique counts of its full components.

    A component of G minus S is full when its neighborhood is all of S.  For
    each full component the number of maximal cliques containing S and lying
    inside the component plus S is recorded.
    """
    require_connected_chordal(g)
    sets = clique_frozensets(g)
    out = []
    for sep in sorted(minimal_separators(g)):
        sep_set = frozenset(sep)
        sizes = []
        for comp, _ in clique_blocks(g, sep):
            if set_neighborhood(g, comp) != sep:
                continue
            region = sep_set | set(comp)
            sizes.append(sum(1 for c in sets if sep_set <= c <= region))
        out.append((sep, tuple(sizes)))
    return tuple(out)


def count_clique_trees(g: Graph) -> int:
    """Exact number of clique trees as a product of per-separator factors."""
    total = 1
    for sep, sizes in _block_sizes(g):
        if len(sizes) < 2:
            raise TheoremViolation(f"separator {list(sep)} has fewer than two full components")
        total *= sum(sizes) ** (len(sizes) - 2) * prod(sizes)
    return total


# -- enumeration ------------------------------------------------------------


def labeled_trees(k: int) -> Iterator[tuple[Edge, ...]]:
    """All ``k**(k-2)`` labeled trees on ``0..k-1``, decoded from Prüfer sequences."""
    if k <= 1:
        yield ()
        return
    if k == 2:
        yield ((0, 1),)
        return
    for seq in product(range(k), repeat=k - 2):
        degree = [1] * k
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = degree.index(1)
            edges.append((min(leaf, x), max(leaf, x)))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = (i for i, d in enumerate(degree) if d == 1)
        edges.append((u, v))
        yield tuple(sorted(edges))


def _junction_spanning_trees(k: int, candidates: list[Edge], up_masks: list[int]) -> Iterator[tuple[Edge, ...]]:
    """Spanning trees over ``candidates`` keeping every ``up_masks`` set connected.

    Include/exclude backtracking on the edge list.  A merge of two forest
    components is refused when some mask meets both sides but does not
    contain both endpoints of the joining edge; since each mask stays
    connected within every component, that is the only way to break it.
    """
    comp = list(range(k))
    masks = [1 << i for i in range(k)]
    chosen: list[Edge] = []

    def merge_ok(i: int, j: int) -> bool:
        a, b = masks[comp[i]], masks[comp[j]]
        bits = (1 << i) | (1 << j)
        return all(not (m & a and m & b) or m & bits == bits for m in up_masks)

    def walk(pos: int) -> Iterator[tuple[Edge, ...]]:
        if len(chosen) == k - 1:
            yield tuple(chosen)
            return
        if len(candidates) - pos < k - 1 - len(chosen):
            return
        i, j = candidates[pos]
        ci, cj = comp[i], comp[j]
        if ci != cj and merge_ok(i, j):
            old = comp[:]
            merged = masks[ci] | masks[cj]
            for x in range(k):
                if comp[x] == cj:
                    comp[x] = ci
            masks[ci] = merged
            chosen.append((i, j))
            yield from walk(pos + 1)
            chosen.pop()
            comp[:] = old
            masks[ci] &= ~masks[cj]
        yield from walk(pos + 1)

    yield from walk(0)


def enumerate_clique_trees(
    g: Graph, max_count: int = MAX_ENUMERATION_COUNT, max_K: int = MAX_ENUMERATION_K
) -> list[CliqueTree]:
    """All clique trees, sorted by edge list.

    Spanning trees of the clique intersection graph (cliques joined when they
    share a vertex) are enumerated with the junction property enforced for
    every separator.  Raises ``ResourceLimitError`` carrying the exact count
    when the guards would be exceeded.
    """
    return list(_enumerate(g, max_count, max_K))


@lru_cache(maxsize=4096)
def _enumerate(g: Graph, max_count: int, max_K: int) -> tuple[CliqueTree, ...]:
    require_connected_chordal(g)
    cliques = maximal_cliques(g)
    sets = clique_frozensets(g)
    k = len(cliques)
    count = count_clique_trees(g)
    if k > max_K or count > max_count:
        raise ResourceLimitError(
            f"enumeration skipped: K={k}, {count} clique trees (guards K<={max_K}, count<={max_count})",
            count=count,
        )
    if k <= 1:
        return (CliqueTree(cliques, ()),)
    candidates = [(i, j) for i in range(k) for j in range(i + 1, k) if sets[i] & sets[j]]
    up_masks = [
        sum(1 << i for i in cliques_containing(g, sep)) for sep in sorted(minimal_separators(g))
    ]
    trees = [CliqueTree(cliques, edges) for edges in _junction_spanning_trees(k, candidates, up_masks)]
    trees.sort(key=lambda t: t.edges)
    return tuple(trees)


# -- classification ---------------------------------------------------------


@dataclass(frozen=True)
class TreeClassification:
    count: int
    unique: bool
    arbitrary: bool


def is_arbitrary_tree(g: Graph) -> bool:
    """Every labeled tree on the cliques is a clique tree iff there is one separator."""
    require_connected_chordal(g)
    if len(maximal_cliques(g)) < 2:
        raise InvalidArgumentError("needs at least two maximal cliques")
    return len(minimal_separators(g)) == 1


def uniqueness_conditions(g: Graph) -> tuple[bool, bool, bool]:
    """Three equivalent criteria for the clique tree to be unique.

    1. every separator has multiplicity one and no two separators are nested;
    2. every separator lies in exactly two maximal cliques;
    3. every separator has exactly two full components, each contributing a
       single clique that contains it.
    """
    catalog = minimal_separators(g)
    keys = [frozenset(s) for s in catalog]
    simple = all(nu == 1 for nu in catalog.values()) and not any(a < b for a in keys for b in keys)
    two_cliques = all(len(cliques_containing(g, s)) == 2 for s in catalog)
    two_blocks = all(sizes == [1, 1] for sizes in separator_block_sizes(g).values())
    return simple, two_cliques, two_blocks


def is_unique_tree(g: Graph) -> bool:
    conditions = uniqueness_conditions(g)
    if len(set(conditions)) != 1:
        raise TheoremViolation(f"uniqueness criteria disagree: {conditions}")
    return conditions[0]


def classify_trees(g: Graph) -> TreeClassification:
    k = len(maximal_cliques(g))
    return TreeClassification(
        count=count_clique_trees(g),
        unique=is_unique_tree(g),
        arbitrary=k >= 2 and is_arbitrary_tree(g),
    )


# -- endpoint theorems ------------------------------------------------------


def _block_of(g: Graph, sep: VertexSet) -> dict[int, int]:
    """Map each clique not equal to ``sep`` to the component index it falls in."""
    out = {}
    for m, (_, members) in enumerate(clique_blocks(g, sep)):
        for i in members:
            out[i] = m
    return out


def endpoint_boundary_check(g: Graph, trees: list[CliqueTree] | None = None) -> CheckReport:
    """Endpoints versus boundary cliques, over all clique trees.

    (a) the cliques that are an endpoint of some clique tree are exactly the
    boundary cliques; (b) two boundary cliques on different sides of an
    inclusion-minimal separator are both endpoints of one clique tree; (c) if
    the clique tree is unique, every boundary clique is one of its endpoints.
    """
    report = CheckReport("endpoint-boundary")
    require_connected_chordal(g)
    if g.is_complete():
        return CheckReport.not_applicable(report.name, "complete graph")
    trees = enumerate_clique_trees(g) if trees is None else trees
    leaf_sets = [frozenset(endpoints(t)) for t in trees]
    boundary = set(boundary_cliques(g))
    ends = set().union(*leaf_sets)
    if ends != boundary:
        report.fail(f"(a) endpoints {sorted(ends)} != boundary cliques {sorted(boundary)}")
    for sep in inclusion_minimal_separators(minimal_separators(g)):
        block = _block_of(g, sep)
        for a in sorted(boundary):
            for b in sorted(boundary):
                if a < b and block[a] != block[b] and not any({a, b} <= ls for ls in leaf_sets):
                    report.fail(f"(b) no tree has both {a} and {b} as endpoints (separator {list(sep)})")
    if len(trees) == 1 and not boundary <= leaf_sets[0]:
        report.fail(f"(c) boundary cliques {sorted(boundary - leaf_sets[0])} are not endpoints of the unique tree")
    report.details.update(trees=len(trees), boundary=sorted(boundary))
    return report


def final_clique_check(g: Graph, sequences: list[PerfectSequence] | None = None) -> CheckReport:
    """The cliques that can end a perfect sequence are exactly the boundary cliques."""
    report = CheckReport("final-clique")
    require_connected_chordal(g)
    if g.is_complete():
        return CheckReport.not_applicable(report.name, "complete graph")
    if sequences is None:
        sequences = all_perfect_sequences(g)
    lasts = {s.last for s in sequences}
    boundary = set(boundary_cliques(g))
    if lasts != boundary:
        report.fail(f"final cliques {sorted(lasts)} != boundary cliques {sorted(boundary)}")
    return report


def endpoint_component_check(g: Graph, trees: list[CliqueTree] | None = None) -> CheckReport:
    """Every clique tree has endpoints in at least two components of each
    inclusion-minimal separator."""
    report = CheckReport("endpoint-components")
    require_connected_chordal(g)
    if g.is_complete():
        return CheckReport.not_applicable(report.name, "complete graph")
    trees = enumerate_clique_trees(g) if trees is None else trees
    for sep in inclusion_minimal_separators(minimal_separators(g)):
        block = _block_of(g, sep)
        for t in trees:
            hit = {block[i] for i in endpoints(t)}
            if len(hit) < 2:
                report.fail(f"tree {list(t.edges)} has endpoints in only {len(hit)} component(s) of {list(sep)}")
    return report
