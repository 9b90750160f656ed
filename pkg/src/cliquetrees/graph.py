"""Immutable undirected simple graphs and elementary set operations.

Vertex sets are represented canonically as sorted, duplicate-free tuples of
non-negative integers (``VertexSet``).  Tuple comparison then gives the
lexicographic total order used for deterministic iteration everywhere in the
package.
"""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations
from types import MappingProxyType
from typing import Mapping, TypeAlias

from .errors import InvalidArgumentError

VertexSet: TypeAlias = tuple[int, ...]


def vertex_set(vs: Iterable[int]) -> VertexSet:
    """Canonical form of a collection of vertex ids."""
    return tuple(sorted(set(vs)))


class Graph:
    """Undirected simple graph over non-negative integer vertex ids.

    Instances are immutable and hashable; equal graphs compare equal no matter
    how they were built.

    >>> g = Graph.from_edges([(1, 2), (2, 3)])
    >>> g.vertices
    (1, 2, 3)
    >>> g.neighbors(2)
    (1, 3)
    """

    __slots__ = ("_vertices", "_adj", "_edges", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            _check_vertex_id(v)
            adj.setdefault(v, set())
        for u, v in edges:
            _check_vertex_id(u)
            _check_vertex_id(v)
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._vertices: VertexSet = tuple(sorted(adj))
        self._adj: Mapping[int, frozenset[int]] = MappingProxyType(
            {v: frozenset(adj[v]) for v in self._vertices}
        )
        self._edges: tuple[tuple[int, int], ...] = tuple(
            (u, v) for u in self._vertices for v in sorted(adj[u]) if u < v
        )
        self._hash = hash((self._vertices, self._edges))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> Graph:
        return cls(vertices, edges)

    @classmethod
    def complete(cls, vertices: Iterable[int]) -> Graph:
        vs = vertex_set(vertices)
        return cls(vs, combinations(vs, 2))

    @property
    def vertices(self) -> VertexSet:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` pairs with ``u < v``, lexicographically sorted."""
        return self._edges

    @property
    def adjacency(self) -> Mapping[int, frozenset[int]]:
        return self._adj

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(vertices={list(self._vertices)}, edges={list(self._edges)})"

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def adj(self, v: int) -> frozenset[int]:
        """Neighbor set of ``v`` without validation or sorting (hot path)."""
        return self._adj[v]

    def neighbors(self, v: int) -> VertexSet:
        return open_neighborhood(self, v)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def is_complete(self) -> bool:
        n = len(self._vertices)
        return len(self._edges) == n * (n - 1) // 2


def _check_vertex_id(v: object) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise InvalidArgumentError(f"vertex ids must be non-negative integers, got {v!r}")


def _require_subset(g: Graph, vs: Iterable[int]) -> VertexSet:
    canon = vertex_set(vs)
    missing = [v for v in canon if v not in g]
    if missing:
        raise InvalidArgumentError(f"unknown vertices {missing}")
    return canon


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Subgraph on ``vs`` keeping every edge of ``g`` with both ends in ``vs``."""
    keep = frozenset(_require_subset(g, vs))
    return Graph(keep, ((u, v) for u, v in g.edges if u in keep and v in keep))


def connected_components(g: Graph) -> list[VertexSet]:
    """Vertex sets of the connected components, in canonical order."""
    return components_after_removal(g, ())


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def open_neighborhood(g: Graph, v: int) -> VertexSet:
    if v not in g:
        raise InvalidArgumentError(f"unknown vertex {v}")
    return tuple(sorted(g.adj(v)))


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    if v not in g:
        raise InvalidArgumentError(f"unknown vertex {v}")
    return tuple(sorted(g.adj(v) | {v}))


def set_neighborhood(g: Graph, vs: Iterable[int]) -> VertexSet:
    """Union of the open neighborhoods of ``vs``, minus ``vs`` itself."""
    members = frozenset(_require_subset(g, vs))
    out: set[int] = set()
    for v in members:
        out |= g.adj(v)
    return tuple(sorted(out - members))


def is_clique(g: Graph, vs: Iterable[int]) -> bool:
    members = _require_subset(g, vs)
    return all(b in g.adj(a) for a, b in combinations(members, 2))


def components_after_removal(g: Graph, removed: Iterable[int]) -> list[VertexSet]:
    """Connected components of the graph with ``removed`` deleted."""
    seen = set(_require_subset(g, removed))
    comps: list[VertexSet] = []
    for start in g.vertices:
        if start in seen:
            continue
        seen.add(start)
        stack = [start]
        comp = [start]
        while stack:
            for w in g.adj(stack.pop()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
                    comp.append(w)
        comps.append(tuple(sorted(comp)))
    comps.sort()
    return comps
