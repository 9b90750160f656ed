"""Chordality recognition, maximal cliques, separators and perfect sequences.

Maximal cliques are indexed ``0..K-1`` in canonical (lexicographic) order of
their sorted vertex tuples; every other module refers to cliques by these
indices.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from typing import TypeAlias

from .errors import DisconnectedGraphError, InvalidArgumentError, NotChordalError, ResourceLimitError
from .graph import Graph, VertexSet, is_connected, vertex_set

EliminationOrder: TypeAlias = tuple[int, ...]
CliqueSet: TypeAlias = tuple[VertexSet, ...]
SeparatorCatalog: TypeAlias = dict[VertexSet, int]

DEFAULT_MAX_K = 9


@dataclass(frozen=True)
class PerfectSequence:
    """An ordering of all maximal cliques with the running intersection property.

    ``order[k]`` is the index of the k-th clique.  ``separators[k-1]`` is the
    intersection of the k-th clique with the union of its predecessors, for
    ``k >= 1``; it has ``K - 1`` entries.
    """

    cliques: CliqueSet = field(repr=False)
    order: tuple[int, ...]
    separators: tuple[VertexSet, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", tuple(self.order))
        object.__setattr__(self, "separators", tuple(_sequence_separators(self.cliques, self.order)))

    def __len__(self) -> int:
        return len(self.order)

    @property
    def last(self) -> int:
        return self.order[-1]


def _sequence_separators(cliques: CliqueSet, order: Sequence[int]) -> list[VertexSet]:
    seps = []
    history: set[int] = set()
    for k, idx in enumerate(order):
        c = cliques[idx]
        if k:
            seps.append(tuple(v for v in c if v in history))
        history.update(c)
    return seps


# -- recognition ------------------------------------------------------------


def maximum_cardinality_search(g: Graph) -> EliminationOrder:
    """Elimination order from maximum cardinality search.

    Vertices are visited by largest count of already-visited neighbors, ties
    going to the smallest id; the returned order is the visit order reversed.
    For a chordal graph this is a perfect elimination scheme.  Several
    components are handled one after another since a fresh component is
    entered only when every remaining weight is zero.
    """
    weight = {v: 0 for v in g.vertices}
    visited: list[int] = []
    unvisited = set(g.vertices)
    while unvisited:
        v = min(unvisited, key=lambda u: (-weight[u], u))
        unvisited.remove(v)
        visited.append(v)
        for w in g.adj(v):
            if w in unvisited:
                weight[w] += 1
    return tuple(reversed(visited))


def is_perfect_elimination(g: Graph, order: Sequence[int]) -> bool:
    """True iff each vertex's neighbors later in ``order`` form a clique."""
    order = tuple(order)
    if sorted(order) != list(g.vertices):
        raise InvalidArgumentError("order is not a permutation of the graph's vertices")
    position = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        later = [w for w in g.adj(v) if position[w] > i]
        if not _pairwise_adjacent(g, later):
            return False
    return True


def _pairwise_adjacent(g: Graph, vs: Sequence[int]) -> bool:
    for a in range(len(vs)):
        nbrs = g.adj(vs[a])
        for b in range(a + 1, len(vs)):
            if vs[b] not in nbrs:
                return False
    return True


@lru_cache(maxsize=16384)
def is_chordal(g: Graph) -> bool:
    return is_perfect_elimination(g, maximum_cardinality_search(g))


def require_chordal(g: Graph) -> None:
    if not is_chordal(g):
        raise NotChordalError("graph is not chordal")


@lru_cache(maxsize=16384)
def _connected(g: Graph) -> bool:
    return is_connected(g)


def require_connected_chordal(g: Graph) -> None:
    require_chordal(g)
    if not _connected(g):
        raise DisconnectedGraphError("graph is not connected; analyse each component separately")


# -- cliques ----------------------------------------------------------------


@lru_cache(maxsize=16384)
def maximal_cliques(g: Graph) -> CliqueSet:
    """Maximal cliques of a chordal graph in canonical order.

    Each vertex together with its later neighbors in a perfect elimination
    scheme is a clique; the maximal ones among these are all maximal cliques.
    """
    require_chordal(g)
    order = maximum_cardinality_search(g)
    position = {v: i for i, v in enumerate(order)}
    candidates = {
        frozenset([v, *(w for w in g.adj(v) if position[w] > position[v])]) for v in order
    }
    maximal = [c for c in candidates if not any(c < other for other in candidates)]
    return tuple(sorted(tuple(sorted(c)) for c in maximal))


@lru_cache(maxsize=16384)
def clique_frozensets(g: Graph) -> tuple[frozenset[int], ...]:
    return tuple(frozenset(c) for c in maximal_cliques(g))


def clique_index(g: Graph, c: int | Iterable[int]) -> int:
    """Resolve a clique given by index or by vertex set to its index."""
    cliques = maximal_cliques(g)
    if isinstance(c, int):
        if not 0 <= c < len(cliques):
            raise InvalidArgumentError(f"clique index {c} out of range 0..{len(cliques) - 1}")
        return c
    key = vertex_set(c)
    try:
        return cliques.index(key)
    except ValueError:
        raise InvalidArgumentError(f"{list(key)} is not a maximal clique") from None


# -- separators -------------------------------------------------------------


@lru_cache(maxsize=16384)
def _catalog(g: Graph) -> tuple[tuple[VertexSet, int], ...]:
    require_connected_chordal(g)
    from .clique_tree import canonical_perfect_sequence

    if len(g) == 0:
        return ()
    counts = Counter(canonical_perfect_sequence(g).separators)
    return tuple(sorted(counts.items()))


def minimal_separators(g: Graph) -> SeparatorCatalog:
    """Minimal vertex separators mapped to their multiplicities.

    Read off the separator list of one perfect sequence; the multiset does
    not depend on which sequence is used.
    """
    return dict(_catalog(g))


def separator_multiset(pi: PerfectSequence) -> Counter[VertexSet]:
    return Counter(pi.separators)


# -- simplicial structure ---------------------------------------------------


@lru_cache(maxsize=16384)
def _simplicial(g: Graph) -> frozenset[int]:
    require_chordal(g)
    return frozenset(v for v in g.vertices if _pairwise_adjacent(g, sorted(g.adj(v))))


def simplicial_vertices(g: Graph) -> VertexSet:
    return tuple(sorted(_simplicial(g)))


def simp_sep_partition(g: Graph, c: int | Iterable[int]) -> tuple[VertexSet, VertexSet]:
    """Split a maximal clique into its simplicial and non-simplicial members."""
    clique = maximal_cliques(g)[clique_index(g, c)]
    simp = _simplicial(g)
    return (
        tuple(v for v in clique if v in simp),
        tuple(v for v in clique if v not in simp),
    )


# -- perfect sequences ------------------------------------------------------


def _as_order(pi: PerfectSequence | Sequence[int], k: int) -> tuple[int, ...]:
    order = tuple(pi.order) if isinstance(pi, PerfectSequence) else tuple(pi)
    if sorted(order) != list(range(k)):
        raise InvalidArgumentError(f"{list(order)} is not a permutation of clique indices 0..{k - 1}")
    return order


def _extends(sets: Sequence[frozenset[int]], prefix: Sequence[int], history: frozenset[int], nxt: int) -> bool:
    sep = sets[nxt] & history
    return any(sep <= sets[j] for j in prefix)


def is_perfect_sequence(g: Graph, pi: PerfectSequence | Sequence[int]) -> bool:
    """Running intersection check for a clique ordering.

    Every intersection with the union of predecessors is automatically a
    clique (it lies inside a maximal clique), so only containment in a single
    predecessor needs testing.
    """
    sets = clique_frozensets(g)
    order = _as_order(pi, len(sets))
    history: frozenset[int] = frozenset()
    for k, idx in enumerate(order):
        if k and not _extends(sets, order[:k], history, idx):
            return False
        history = history | sets[idx]
    return True


def make_sequence(g: Graph, order: Sequence[int]) -> PerfectSequence:
    """Wrap a clique ordering, validating the running intersection property."""
    if not is_perfect_sequence(g, order):
        raise InvalidArgumentError(f"{list(order)} is not a perfect sequence")
    return PerfectSequence(maximal_cliques(g), tuple(order))


def all_perfect_sequences(g: Graph, max_K: int = DEFAULT_MAX_K) -> list[PerfectSequence]:
    """Every perfect sequence, in lexicographic order of the index tuples.

    The running intersection property is prefix-closed, so a depth-first
    search that only extends valid prefixes visits exactly the permutations
    that pass ``is_perfect_sequence``.
    """
    require_connected_chordal(g)
    cliques = maximal_cliques(g)
    sets = clique_frozensets(g)
    k = len(cliques)
    if k > max_K:
        raise ResourceLimitError(f"K={k} exceeds the enumeration guard max_K={max_K}")
    out: list[PerfectSequence] = []
    prefix: list[int] = []
    used = [False] * k

    def extend(history: frozenset[int]) -> None:
        if len(prefix) == k:
            out.append(PerfectSequence(cliques, tuple(prefix)))
            return
        for nxt in range(k):
            if used[nxt] or (prefix and not _extends(sets, prefix, history, nxt)):
                continue
            used[nxt] = True
            prefix.append(nxt)
            extend(history | sets[nxt])
            prefix.pop()
            used[nxt] = False

    if k:
        extend(frozenset())
    return out
