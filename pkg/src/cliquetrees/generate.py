"""Chordal graph corpora: exhaustive small graphs and seeded random samples."""

from __future__ import annotations

import random
from collections.abc import Iterator
from itertools import combinations

from .chordal import is_chordal, maximal_cliques
from .errors import InvalidArgumentError
from .graph import Graph

METHODS = ("tree-of-cliques", "fill-in")


def _connected_mask(n: int, nbr_masks: list[int]) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for v in range(n):
            if frontier >> v & 1:
                reach |= nbr_masks[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def connected_chordal_graphs(n: int) -> Iterator[Graph]:
    """Every connected chordal graph on vertices ``0..n-1`` (labeled, no
    isomorphism reduction)."""
    if n < 1:
        return
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        nbr = [0] * n
        edges = []
        for bit, (u, v) in enumerate(pairs):
            if mask >> bit & 1:
                nbr[u] |= 1 << v
                nbr[v] |= 1 << u
                edges.append((u, v))
        if len(edges) < n - 1 or not _connected_mask(n, nbr):
            continue
        g = Graph(range(n), edges)
        if is_chordal(g):
            yield g


def exhaustive_corpus(max_n: int) -> Iterator[Graph]:
    for n in range(1, max_n + 1):
        yield from connected_chordal_graphs(n)


def tree_of_cliques(n: int, rng: random.Random) -> Graph:
    """Grow cliques one at a time, each sharing a non-empty subset of an earlier
    clique; the growth order is a perfect sequence, so the result is chordal.

    Earlier shared subsets are reused now and then so that separators repeat
    and nest.
    """
    if n < 1:
        raise InvalidArgumentError("n must be at least 1")
    first = rng.randint(1, min(n, 3))
    cliques = [list(range(first))]
    shared: list[list[int]] = []
    nxt = first
    while nxt < n:
        if shared and rng.random() < 0.3:
            sep = rng.choice(shared)
        else:
            parent = rng.choice(cliques)
            sep = sorted(rng.sample(parent, rng.randint(1, max(1, len(parent) - 1))))
            shared.append(sep)
        grow = rng.randint(1, min(2, n - nxt))
        cliques.append(sep + list(range(nxt, nxt + grow)))
        nxt += grow
    edges = {pair for c in cliques for pair in combinations(sorted(c), 2)}
    return Graph(range(n), sorted(edges))


def fill_in(n: int, rng: random.Random) -> Graph:
    """Random connected graph made chordal by the elimination game on a random order."""
    if n < 1:
        raise InvalidArgumentError("n must be at least 1")
    p = rng.uniform(0.0, 0.3)
    adj = [set() for _ in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    for i in range(1, n):
        u, v = perm[i], perm[rng.randrange(i)]
        adj[u].add(v)
        adj[v].add(u)
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            adj[u].add(v)
            adj[v].add(u)
    order = list(range(n))
    rng.shuffle(order)
    eliminated = set()
    for v in order:
        later = [w for w in adj[v] if w not in eliminated]
        for a, b in combinations(later, 2):
            adj[a].add(b)
            adj[b].add(a)
        eliminated.add(v)
    return Graph(range(n), [(u, v) for u in range(n) for v in adj[u] if u < v])


def random_chordal_graph(n: int, seed: int | random.Random | None = None, method: str = "tree-of-cliques") -> Graph:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if method == "tree-of-cliques":
        return tree_of_cliques(n, rng)
    if method == "fill-in":
        return fill_in(n, rng)
    raise InvalidArgumentError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


def random_corpus(
    count: int,
    seed: int,
    max_n: int = 10,
    max_K: int | None = None,
    min_n: int = 1,
) -> list[Graph]:
    """``count`` seeded random connected chordal graphs, alternating methods.

    Graphs with more than ``max_K`` maximal cliques are redrawn.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        method = METHODS[len(out) % 2]
        g = random_chordal_graph(rng.randint(min_n, max_n), rng, method)
        if max_K is None or len(maximal_cliques(g)) <= max_K:
            out.append(g)
    return out
