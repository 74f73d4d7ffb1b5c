"""Weighted oriented graphs, their edge ideals, and forbidden triples.

A weighted oriented graph carries at most one arc per vertex pair
(anti-parallel pairs are rejected) and a positive integer weight on each
vertex.  Source vertices are normalized to weight 1 at construction
time, since a source weight never appears in the edge ideal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .graphs import SimpleGraph
from .monomials import Monomial, MonomialIdeal

CONFIG_TAGS = ("D1", "D2", "D3", "D4")


@dataclass(frozen=True)
class ForbiddenConfig:
    """An induced triple matching one of the four obstruction shapes.

    `vertices` is ordered by pattern role: D1 is a path a->b->c, D2 an
    out-star b->a, b->c, D3 a directed triangle a->b->c->a, D4 a triangle
    with arcs a->b, c->b, a->c (a source, b sink).
    """

    vertices: tuple[str, str, str]
    tag: str


class WeightedOrientedGraph:
    """A directed simple graph with positive integer vertex weights."""

    __slots__ = ("_vertices", "_index", "_arcs", "_weights", "_out", "_in")

    def __init__(
        self,
        vertices: Iterable[str],
        arcs: Iterable[tuple[str, str]] = (),
        weights: Mapping[str, int] | None = None,
    ):
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise ValueError("duplicate vertices")
        index = {v: i for i, v in enumerate(vertices)}
        out: dict[str, set[str]] = {v: set() for v in vertices}
        inn: dict[str, set[str]] = {v: set() for v in vertices}
        arc_set = set()
        for s, t in arcs:
            if s not in index or t not in index:
                raise ValueError(f"arc ({s!r}, {t!r}) has an unknown endpoint")
            if s == t:
                raise ValueError(f"loop at vertex {s!r}")
            if (t, s) in arc_set:
                raise ValueError(f"anti-parallel arcs between {s!r} and {t!r}")
            arc_set.add((s, t))
            out[s].add(t)
            inn[t].add(s)
        w = {v: 1 for v in vertices}
        if weights is not None:
            for v, wt in weights.items():
                if v not in index:
                    raise ValueError(f"weight given for unknown vertex {v!r}")
                if not isinstance(wt, int) or wt < 1:
                    raise ValueError(f"weight of {v!r} must be a positive integer, got {wt!r}")
                w[v] = wt
        # a source weight cannot affect the edge ideal
        for v in vertices:
            if not inn[v]:
                w[v] = 1
        object.__setattr__(self, "_vertices", vertices)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_arcs", frozenset(arc_set))
        object.__setattr__(self, "_weights", w)
        object.__setattr__(self, "_out", out)
        object.__setattr__(self, "_in", inn)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedOrientedGraph is immutable")

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def arcs(self) -> frozenset[tuple[str, str]]:
        return self._arcs

    def arc_list(self) -> list[tuple[str, str]]:
        return sorted(self._arcs, key=lambda a: (self._index[a[0]], self._index[a[1]]))

    def weight(self, v: str) -> int:
        return self._weights[v]

    def weights(self) -> dict[str, int]:
        return dict(self._weights)

    def out_neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(sorted(self._out[v], key=self._index.__getitem__))

    def in_neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(sorted(self._in[v], key=self._index.__getitem__))

    def neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(
            sorted(self._out[v] | self._in[v], key=self._index.__getitem__)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeightedOrientedGraph)
            and self._vertices == other._vertices
            and self._arcs == other._arcs
            and self._weights == other._weights
        )

    def __hash__(self) -> int:
        return hash((self._vertices, self._arcs, tuple(sorted(self._weights.items()))))

    def __repr__(self) -> str:
        return (
            f"WeightedOrientedGraph(vertices={self._vertices!r}, "
            f"arcs={self.arc_list()!r}, weights={self._weights!r})"
        )

    def underlying(self) -> SimpleGraph:
        """Forget orientation and weights."""
        return SimpleGraph(self._vertices, self._arcs)

    def v_plus(self) -> tuple[str, ...]:
        return tuple(v for v in self._vertices if self._weights[v] > 1)

    def sinks(self) -> tuple[str, ...]:
        return tuple(v for v in self._vertices if not self._out[v])

    def sources(self) -> tuple[str, ...]:
        return tuple(v for v in self._vertices if not self._in[v])

    def induced(self, subset: Iterable[str]) -> "WeightedOrientedGraph":
        """Induced subgraph; weights restrict, new sources renormalize."""
        keep = set(subset)
        unknown = keep - set(self._vertices)
        if unknown:
            raise ValueError(f"unknown vertices {sorted(unknown)}")
        verts = tuple(v for v in self._vertices if v in keep)
        arcs = [(s, t) for s, t in self._arcs if s in keep and t in keep]
        weights = {v: self._weights[v] for v in verts}
        return WeightedOrientedGraph(verts, arcs, weights)

    def edge_ideal(self) -> MonomialIdeal:
        """One generator x_s * x_t^w(t) per arc (s, t)."""
        gens = [Monomial({s: 1, t: self._weights[t]}) for s, t in self.arc_list()]
        return MonomialIdeal(self._vertices, gens)

    def quadratic_part_graph(self) -> SimpleGraph:
        """The graph H with I(H) equal to the degree-2 component of I(D)."""
        edges = [(s, t) for s, t in self._arcs if self._weights[t] == 1]
        return SimpleGraph(self._vertices, edges)

    def _arcs_among(self, triple: tuple[str, str, str]) -> set[tuple[str, str]]:
        keep = set(triple)
        return {(s, t) for s, t in self._arcs if s in keep and t in keep}

    def forbidden_configurations(self) -> tuple[ForbiddenConfig, ...]:
        """Every induced triple matching one of the shapes D1-D4.

        Weights are taken from the induced subgraph, so a vertex that is
        a source within the triple counts as weight 1 there.
        """
        found = []
        for triple in itertools.combinations(self._vertices, 3):
            arcs = self._arcs_among(triple)
            if len(arcs) < 2:
                continue
            sub = self.induced(triple)
            w = sub.weights()
            seen_tags = set()
            for a, b, c in itertools.permutations(triple):
                if "D1" not in seen_tags and arcs == {(a, b), (b, c)} and w[b] > 1 and w[c] > 1:
                    found.append(ForbiddenConfig((a, b, c), "D1"))
                    seen_tags.add("D1")
                if "D2" not in seen_tags and arcs == {(b, a), (b, c)} and w[a] > 1 and w[c] > 1:
                    found.append(ForbiddenConfig((a, b, c), "D2"))
                    seen_tags.add("D2")
                if "D3" not in seen_tags and arcs == {(a, b), (b, c), (c, a)} and min(w.values()) > 1:
                    found.append(ForbiddenConfig((a, b, c), "D3"))
                    seen_tags.add("D3")
                if "D4" not in seen_tags and arcs == {(a, b), (c, b), (a, c)} and w[b] > 1 and w[c] > 1:
                    found.append(ForbiddenConfig((a, b, c), "D4"))
                    seen_tags.add("D4")
        return tuple(found)

    def is_star_all_to_root(self) -> tuple[bool, str | None]:
        """True iff every arc points at one common root vertex."""
        if not self._arcs:
            root = self._vertices[0] if self._vertices else None
            return (root is not None), root
        targets = {t for _, t in self._arcs}
        if len(targets) != 1:
            return False, None
        return True, next(iter(targets))


def graph_edge_ideal(graph: SimpleGraph) -> MonomialIdeal:
    """The squarefree edge ideal of an undirected graph."""
    gens = [Monomial({u: 1, v: 1}) for u, v in graph.edge_list()]
    return MonomialIdeal(graph.vertices, gens)
