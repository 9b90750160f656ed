"""The tree/sequence relation, its bipartite graph, and a random walk on it.

A clique tree T and a perfect sequence pi are related when T can be built from
pi by attaching each clique to an earlier one meeting it in its separator; by
symmetry this holds exactly when pi is a rooted topological order of T.  The
production test used here is the equivalent prefix condition: every prefix of
pi induces a connected subtree of T.
"""

from __future__ import annotations

import random
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Literal, NamedTuple

from .chordal import (
    PerfectSequence,
    all_perfect_sequences,
    is_perfect_sequence,
    maximal_cliques,
    require_connected_chordal,
)
from .clique_tree import (
    CliqueTree,
    canonical_clique_tree,
    canonical_perfect_sequence,
    enumerate_clique_trees,
    is_clique_tree,
    is_tree,
    sequence_from_tree,
    valid_parents,
)
from .errors import InvalidArgumentError, ResourceLimitError
from .graph import Graph, induced_subgraph

MAX_PAIRS = 10**7

Side = Literal["tree", "sequence"]


def in_relation(t: CliqueTree, pi: PerfectSequence) -> bool:
    if t.cliques != pi.cliques:
        raise InvalidArgumentError("tree and sequence are over different clique sets")
    if not is_tree(t):
        return False
    nbrs = t.neighbors()
    placed = {pi.order[0]} if len(pi) else set()
    for idx in pi.order[1:]:
        if not any(w in placed for w in nbrs[idx]):
            return False
        placed.add(idx)
    return True


@dataclass
class BipartiteGraph:
    trees: list[CliqueTree]
    sequences: list[PerfectSequence]
    edges: list[tuple[int, int]] = field(default_factory=list)

    def tree_degrees(self) -> list[int]:
        deg = [0] * len(self.trees)
        for t, _ in self.edges:
            deg[t] += 1
        return deg

    def sequence_degrees(self) -> list[int]:
        deg = [0] * len(self.sequences)
        for _, s in self.edges:
            deg[s] += 1
        return deg

    def is_complete(self) -> bool:
        return len(self.edges) == len(self.trees) * len(self.sequences)


def build_bipartite(g: Graph, max_pairs: int = MAX_PAIRS) -> BipartiteGraph:
    """Materialize every tree, every sequence and every related pair."""
    require_connected_chordal(g)
    trees = enumerate_clique_trees(g)
    sequences = all_perfect_sequences(g)
    if len(trees) * len(sequences) > max_pairs:
        raise ResourceLimitError(
            f"{len(trees)} trees x {len(sequences)} sequences exceeds {max_pairs} pairs"
        )
    edges = [
        (ti, si)
        for ti, t in enumerate(trees)
        for si, s in enumerate(sequences)
        if in_relation(t, s)
    ]
    return BipartiteGraph(trees, sequences, edges)


def is_connected(b: BipartiteGraph) -> bool:
    """Breadth-first search over trees and sequences along relation edges."""
    n_trees = len(b.trees)
    total = n_trees + len(b.sequences)
    if total == 0:
        return True
    adj: list[list[int]] = [[] for _ in range(total)]
    for t, s in b.edges:
        adj[t].append(n_trees + s)
        adj[n_trees + s].append(t)
    seen = [False] * total
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return all(seen)


# -- random walk ------------------------------------------------------------


def state_key(state: CliqueTree | PerfectSequence) -> str:
    """Compact canonical identifier: ``0-1,1-2`` for trees, ``2,0,1`` for sequences."""
    if isinstance(state, CliqueTree):
        return ",".join(f"{i}-{j}" for i, j in state.edges) or "-"
    return ",".join(str(i) for i in state.order)


@dataclass(frozen=True)
class WalkState:
    side: Side
    state: CliqueTree | PerfectSequence
    step: int = 0

    @property
    def key(self) -> str:
        return state_key(self.state)


def initial_state(g: Graph, side: Side = "tree") -> WalkState:
    if side == "tree":
        return WalkState("tree", canonical_clique_tree(g))
    if side == "sequence":
        return WalkState("sequence", canonical_perfect_sequence(g))
    raise InvalidArgumentError(f"unknown side {side!r}")


def sample_sequence(t: CliqueTree, rng: random.Random) -> PerfectSequence:
    """Uniform root, then uniform choice among the cliques adjacent to those placed."""
    return sequence_from_tree(t, rng.randrange(t.size), rng)


def sample_tree(pi: PerfectSequence, rng: random.Random) -> CliqueTree:
    """Attach each clique to a uniformly chosen valid predecessor."""
    edges = []
    for k in range(1, len(pi)):
        parent = rng.choice(valid_parents(pi, k))
        edges.append((pi.order[parent], pi.order[k]))
    return CliqueTree(pi.cliques, tuple(edges))


def random_walk(
    g: Graph,
    start: WalkState | None = None,
    steps: int = 1000,
    seed: int | None = 0,
    validate: bool = False,
) -> list[WalkState]:
    """Alternating walk tree -> sequence -> tree over the relation.

    The log holds the state reached after each of the ``steps`` moves, so
    ``steps=0`` gives an empty log.  With ``validate`` every visited state is
    re-checked to be a clique tree or perfect sequence of ``g``.
    """
    require_connected_chordal(g)
    if steps < 0:
        raise InvalidArgumentError("steps must be non-negative")
    rng = random.Random(seed)
    current = start or initial_state(g)
    if current.state.cliques != maximal_cliques(g):
        raise InvalidArgumentError("start state does not belong to this graph")
    log = []
    for step in range(1, steps + 1):
        if current.side == "tree":
            current = WalkState("sequence", sample_sequence(current.state, rng), step)
        else:
            current = WalkState("tree", sample_tree(current.state, rng), step)
        if validate:
            _validate(g, current)
        log.append(current)
    return log


def _validate(g: Graph, ws: WalkState) -> None:
    ok = is_clique_tree(g, ws.state) if ws.side == "tree" else is_perfect_sequence(g, ws.state)
    if not ok:
        raise AssertionError(f"walk reached an invalid {ws.side} at step {ws.step}: {ws.key}")


# -- induced subtrees -------------------------------------------------------


class Restriction(NamedTuple):
    trees: list[CliqueTree]
    restrictable: bool


def induced_subtree_restriction(g: Graph, clique_subset: Iterable[int]) -> Restriction:
    """Restrictions to ``clique_subset`` of the clique trees where it is connected.

    Restricted trees are relabelled to the subset's positions in sorted order,
    which is the canonical clique order of the induced graph on their union.
    """
    subset = sorted(set(clique_subset))
    cliques = maximal_cliques(g)
    if not subset or any(not 0 <= i < len(cliques) for i in subset):
        raise InvalidArgumentError(f"bad clique subset {subset}")
    pos = {c: p for p, c in enumerate(subset)}
    sub_cliques = tuple(cliques[i] for i in subset)
    out = set()
    for t in enumerate_clique_trees(g):
        edges = [(pos[i], pos[j]) for i, j in t.edges if i in pos and j in pos]
        if len(edges) == len(subset) - 1:
            out.add(CliqueTree(sub_cliques, tuple(edges)))
    return Restriction(sorted(out, key=lambda t: t.edges), bool(out))


def induced_subtree_check(g: Graph, clique_subset: Iterable[int]) -> bool | None:
    """Restricted trees equal the clique trees of the induced graph.

    Returns None when no clique tree keeps the subset connected.
    """
    trees, ok = induced_subtree_restriction(g, clique_subset)
    if not ok:
        return None
    cliques = maximal_cliques(g)
    h = induced_subgraph(g, {v for i in set(clique_subset) for v in cliques[i]})
    return enumerate_clique_trees(h) == trees
