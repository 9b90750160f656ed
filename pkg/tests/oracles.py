"""Brute-force reference implementations used to cross-check the library.

Everything here works straight from definitions, on small inputs only, and
deliberately shares no code with the package beyond the ``Graph`` container.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from cliquetrees.graph import Graph


def _reachable(g: Graph, start: int, blocked: set[int]) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
    return seen


def separates(g: Graph, s: set[int], a: int, b: int) -> bool:
    return b not in _reachable(g, a, s)


def minimal_separators(g: Graph) -> set[frozenset[int]]:
    """Every set that is an inclusion-minimal a-b separator for some pair a, b."""
    out = set()
    vs = g.vertices
    for a, b in combinations(vs, 2):
        if g.has_edge(a, b):
            continue
        rest = [v for v in vs if v not in (a, b)]
        for r in range(len(rest) + 1):
            for s in combinations(rest, r):
                s = set(s)
                if separates(g, s, a, b) and not any(separates(g, s - {v}, a, b) for v in s):
                    out.add(frozenset(s))
    return out


def full_components(g: Graph, s: frozenset[int]) -> list[set[int]]:
    remaining = set(g.vertices) - s
    comps = []
    while remaining:
        comp = _reachable(g, min(remaining), set(s))
        remaining -= comp
        comps.append(comp)
    return [c for c in comps if {w for v in c for w in g.adjacency[v]} - c == s]


def multiplicity(g: Graph, s: frozenset[int]) -> int:
    """Number of full components of G - S, minus one."""
    return len(full_components(g, s)) - 1


def is_clique(g: Graph, vs) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    cliques = [set(c) for r in range(1, len(g) + 1) for c in combinations(g.vertices, r) if is_clique(g, c)]
    return sorted(tuple(sorted(c)) for c in cliques if not any(c < d for d in cliques))


def perfect_sequences(cliques: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """All orderings with the running intersection property, by checking every permutation."""
    out = []
    for order in permutations(range(len(cliques))):
        history: set[int] = set()
        ok = True
        for k, idx in enumerate(order):
            c = set(cliques[idx])
            if k and not any(c & history <= set(cliques[j]) for j in order[:k]):
                ok = False
                break
            history |= c
        if ok:
            out.append(order)
    return out


def tree_path(edges, i: int, j: int) -> list[int]:
    nbrs: dict[int, list[int]] = {}
    for a, b in edges:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    parent = {i: None}
    stack = [i]
    while stack:
        u = stack.pop()
        for w in nbrs.get(u, []):
            if w not in parent:
                parent[w] = u
                stack.append(w)
    path = [j]
    while path[-1] != i:
        path.append(parent[path[-1]])
    return path


def is_junction_tree(cliques, edges) -> bool:
    """Pairwise form of the junction property: C_i & C_j lies in every clique on the path."""
    k = len(cliques)
    if len(edges) != k - 1:
        return False
    if k > 1 and len({v for e in edges for v in e}) != k:
        return False
    for i, j in combinations(range(k), 2):
        try:
            path = tree_path(edges, i, j)
        except KeyError:
            return False
        common = set(cliques[i]) & set(cliques[j])
        if not all(common <= set(cliques[m]) for m in path):
            return False
    return True


def labeled_trees(k: int):
    """All labeled trees on ``0..k-1`` from Prufer sequences."""
    if k == 1:
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
            leaf = min(v for v in range(k) if degree[v] == 1)
            edges.append(tuple(sorted((leaf, x))))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = [v for v in range(k) if degree[v] == 1]
        edges.append((u, v))
        yield tuple(sorted(edges))


def clique_trees(g: Graph) -> set[tuple[tuple[int, int], ...]]:
    cliques = maximal_cliques(g)
    return {t for t in labeled_trees(len(cliques)) if is_junction_tree(cliques, t)}


def prefix_connected(edges, order) -> bool:
    adj = {frozenset(e) for e in edges}
    placed = [order[0]]
    for idx in order[1:]:
        if not any(frozenset((idx, p)) in adj for p in placed):
            return False
        placed.append(idx)
    return True
