"""Undirected simple graphs: chordality, complements, splits, covers.

Vertex ids are opaque strings; the vertex input order is kept and used
for every tie-break, so all witnesses are deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class ChordalityWitness:
    chordal: bool
    elimination_order: tuple[str, ...] | None
    induced_cycle: tuple[str, ...] | None


class SimpleGraph:
    """An undirected graph without loops or multi-edges."""

    __slots__ = ("_vertices", "_index", "_edges", "_adj")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise ValueError("duplicate vertices")
        index = {v: i for i, v in enumerate(vertices)}
        adj: dict[str, set[str]] = {v: set() for v in vertices}
        normalized = set()
        for u, v in edges:
            if u not in index or v not in index:
                raise ValueError(f"edge ({u!r}, {v!r}) has an unknown endpoint")
            if u == v:
                raise ValueError(f"loop at vertex {u!r}")
            if index[u] > index[v]:
                u, v = v, u
            normalized.add((u, v))
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_vertices", vertices)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_edges", frozenset(normalized))
        object.__setattr__(self, "_adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("SimpleGraph is immutable")

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> frozenset[tuple[str, str]]:
        return self._edges

    def edge_list(self) -> list[tuple[str, str]]:
        return sorted(self._edges, key=lambda e: (self._index[e[0]], self._index[e[1]]))

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(sorted(self._adj[v], key=self._index.__getitem__))

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self._vertices == other._vertices
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(vertices={self._vertices!r}, edges={self.edge_list()!r})"

    def complement(self) -> "SimpleGraph":
        edges = [
            (u, v)
            for u, v in itertools.combinations(self._vertices, 2)
            if v not in self._adj[u]
        ]
        return SimpleGraph(self._vertices, edges)

    def induced_subgraph(self, subset: Iterable[str]) -> "SimpleGraph":
        keep = set(subset)
        unknown = keep - set(self._vertices)
        if unknown:
            raise ValueError(f"unknown vertices {sorted(unknown)}")
        verts = tuple(v for v in self._vertices if v in keep)
        edges = [(u, v) for u, v in self._edges if u in keep and v in keep]
        return SimpleGraph(verts, edges)

    def _mcs_elimination_order(self) -> list[str]:
        # maximum cardinality search; reversed visit order is a perfect
        # elimination order exactly when the graph is chordal
        weight = {v: 0 for v in self._vertices}
        unnumbered = set(self._vertices)
        visit: list[str] = []
        for _ in range(len(self._vertices)):
            z = max(unnumbered, key=lambda v: (weight[v], -self._index[v]))
            visit.append(z)
            unnumbered.remove(z)
            for y in self._adj[z]:
                if y in unnumbered:
                    weight[y] += 1
        visit.reverse()
        return visit

    def _is_perfect_elimination_order(self, order: list[str]) -> bool:
        pos = {v: i for i, v in enumerate(order)}
        for v in order:
            later = [u for u in self._adj[v] if pos[u] > pos[v]]
            for a, b in itertools.combinations(later, 2):
                if b not in self._adj[a]:
                    return False
        return True

    def find_induced_long_cycle(self) -> tuple[str, ...] | None:
        """First induced cycle of length >= 4 in subset order, or None.

        Exponential subset scan; intended for witness extraction at desk
        scale, not as the chordality decision procedure.
        """
        n = len(self._vertices)
        for k in range(4, n + 1):
            for subset in itertools.combinations(self._vertices, k):
                keep = set(subset)
                degs = {v: sum(1 for u in self._adj[v] if u in keep) for v in subset}
                if any(d != 2 for d in degs.values()):
                    continue
                cycle = self._trace_cycle(subset, keep)
                if cycle is not None:
                    return cycle
        return None

    def _trace_cycle(self, subset, keep) -> tuple[str, ...] | None:
        # all induced degrees are 2; a single k-cycle visits every vertex,
        # while a disjoint union of shorter cycles revisits its start early
        start = subset[0]
        prev = None
        cur = start
        path = []
        for _ in range(len(subset)):
            path.append(cur)
            nxt = [u for u in self.neighbors(cur) if u in keep and u != prev]
            prev, cur = cur, nxt[0]
        if cur == start and len(set(path)) == len(subset):
            return tuple(path)
        return None

    def chordality(self) -> ChordalityWitness:
        """Decide chordality with a usable witness either way."""
        order = self._mcs_elimination_order()
        if self._is_perfect_elimination_order(order):
            return ChordalityWitness(True, tuple(order), None)
        cycle = self.find_induced_long_cycle()
        if cycle is None:
            raise AssertionError("MCS refuted chordality but no induced long cycle found")
        return ChordalityWitness(False, None, cycle)

    def is_chordal(self) -> bool:
        order = self._mcs_elimination_order()
        return self._is_perfect_elimination_order(order)

    def is_co_chordal(self) -> bool:
        return self.complement().is_chordal()

    def is_bipartite(self) -> bool:
        color: dict[str, int] = {}
        for root in self._vertices:
            if root in color:
                continue
            color[root] = 0
            queue = [root]
            while queue:
                v = queue.pop()
                for u in self._adj[v]:
                    if u not in color:
                        color[u] = 1 - color[v]
                        queue.append(u)
                    elif color[u] == color[v]:
                        return False
        return True

    def _is_clique(self, vs: Iterable[str]) -> bool:
        return all(b in self._adj[a] for a, b in itertools.combinations(tuple(vs), 2))

    def _is_independent(self, vs: Iterable[str]) -> bool:
        return all(b not in self._adj[a] for a, b in itertools.combinations(tuple(vs), 2))

    def split_partition(self) -> tuple[tuple[str, ...], tuple[str, ...]] | None:
        """A (clique, independent set) partition if the graph is split.

        Split is decided as chordal(G) and chordal(Gc); the partition is
        read off the degree sequence (Hammer-Simeone), with an exhaustive
        fallback in case of ties the degree argument cannot break.
        """
        if not (self.is_chordal() and self.complement().is_chordal()):
            return None
        by_degree = sorted(
            self._vertices, key=lambda v: (-len(self._adj[v]), self._index[v])
        )
        m = 0
        for i, v in enumerate(by_degree, start=1):
            if len(self._adj[v]) >= i - 1:
                m = i
        clique, indep = by_degree[:m], by_degree[m:]
        if self._is_clique(clique) and self._is_independent(indep):
            return self._sorted(clique), self._sorted(indep)
        for size in range(len(self._vertices), -1, -1):
            for combo in itertools.combinations(self._vertices, size):
                rest = [v for v in self._vertices if v not in combo]
                if self._is_clique(combo) and self._is_independent(rest):
                    return self._sorted(combo), self._sorted(rest)
        return None

    def _sorted(self, vs: Iterable[str]) -> tuple[str, ...]:
        return tuple(sorted(vs, key=self._index.__getitem__))

    def is_split(self) -> bool:
        return self.split_partition() is not None

    def simplicial_vertices(self) -> tuple[str, ...]:
        """Vertices whose closed neighborhood induces a complete graph."""
        return tuple(v for v in self._vertices if self._is_clique(self._adj[v]))

    def is_minimal_vertex_cover(self, cover: Iterable[str]) -> bool:
        cover = set(cover)
        unknown = cover - set(self._vertices)
        if unknown:
            raise ValueError(f"unknown vertices {sorted(unknown)}")
        if not all(u in cover or v in cover for u, v in self._edges):
            return False
        for c in cover:
            # c is necessary iff some edge is covered only by c
            if not any(
                (u == c and v not in cover) or (v == c and u not in cover)
                for u, v in self._edges
            ):
                return False
        return True

    def has_induced_4cycle(self) -> tuple[str, str, str, str] | None:
        """A witness induced 4-cycle in quadruple scan order, or None."""
        for quad in itertools.combinations(self._vertices, 4):
            keep = set(quad)
            degs = [sum(1 for u in self._adj[v] if u in keep) for v in quad]
            if degs != [2, 2, 2, 2]:
                continue
            cycle = self._trace_cycle(quad, keep)
            if cycle is not None:
                return cycle  # type: ignore[return-value]
        return None


def cycle_graph(vertices: Iterable[str]) -> SimpleGraph:
    """The cycle through the given vertices in order."""
    vertices = tuple(vertices)
    if len(vertices) < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    edges = [(vertices[i], vertices[(i + 1) % len(vertices)]) for i in range(len(vertices))]
    return SimpleGraph(vertices, edges)


def complete_graph(vertices: Iterable[str]) -> SimpleGraph:
    vertices = tuple(vertices)
    return SimpleGraph(vertices, itertools.combinations(vertices, 2))


def path_graph(vertices: Iterable[str]) -> SimpleGraph:
    vertices = tuple(vertices)
    return SimpleGraph(vertices, zip(vertices, vertices[1:]))
