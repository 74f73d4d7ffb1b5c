"""Fast combinatorial classification of edge ideals, with cited certificates.

The pipeline only ever decides through proven combinatorial statements:
cheap necessary conditions first, then the two full characterizations
(all heavy-weight vertices sinks; at most one heavy vertex).  On the
bipartite and chordal classes it returns an undecided certificate whose
tag records that a quotient-order search is a complete proxy there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .monomials import Monomial
from .oriented import WeightedOrientedGraph

THEOREM_TAGS = (
    "cochordal-necessary",
    "forbidden-config",
    "sink-characterization",
    "vplus1-characterization",
    "bipartite-equiv",
    "chordal-equiv",
    "star-all-weights",
    "power-obstruction",
    "unknown",
)


@dataclass(frozen=True)
class Certificate:
    decided: bool
    value: bool | None
    reason: str
    theorem_tag: str

    def __post_init__(self):
        if self.theorem_tag not in THEOREM_TAGS:
            raise ValueError(f"unknown theorem tag {self.theorem_tag!r}")
        if self.decided and self.theorem_tag == "unknown":
            raise ValueError("a decided certificate needs a specific theorem tag")


@dataclass(frozen=True)
class PowerObstruction:
    """A coprime generator pair with no third generator in their support union.

    Witnesses that no power of the edge ideal is componentwise linear;
    found through an induced 4-cycle in the complement of the underlying
    graph.
    """

    complement_cycle: tuple[str, str, str, str]
    pair: tuple[Monomial, Monomial]


def classify(graph: WeightedOrientedGraph) -> Certificate:
    """First-hit classification of componentwise linearity of the edge ideal."""
    underlying = graph.underlying()
    complement = underlying.complement()
    witness = complement.chordality()
    if not witness.chordal:
        cycle = ",".join(witness.induced_cycle)
        return Certificate(
            True,
            False,
            f"complement of the underlying graph has induced cycle ({cycle}); "
            "componentwise linear edge ideals force a chordal complement",
            "cochordal-necessary",
        )
    configs = graph.forbidden_configurations()
    if configs:
        shown = "; ".join(f"{c.tag} on ({','.join(c.vertices)})" for c in configs[:3])
        return Certificate(
            True,
            False,
            f"induced obstruction triple(s): {shown}",
            "forbidden-config",
        )
    non_sources = [v for v in graph.vertices if graph.in_neighbors(v)]
    if non_sources and all(graph.weight(v) > 1 for v in non_sources):
        star, root = graph.is_star_all_to_root()
        if star:
            return Certificate(
                True,
                True,
                f"all arcs point at root {root}, so the edge ideal is a "
                "monomial times a variable-generated ideal",
                "star-all-weights",
            )
        return Certificate(
            True,
            False,
            "every non-source weight exceeds 1 but the graph is not a "
            "star oriented into its root",
            "star-all-weights",
        )
    v_plus = set(graph.v_plus())
    if v_plus <= set(graph.sinks()):
        crowded = [
            v
            for v in graph.vertices
            if sum(1 for u in graph.neighbors(v) if u in v_plus) > 1
        ]
        if crowded:
            return Certificate(
                True,
                False,
                f"vertex {crowded[0]} has more than one heavy sink neighbor",
                "sink-characterization",
            )
        return Certificate(
            True,
            True,
            "all heavy vertices are sinks, the complement is chordal, and "
            "no vertex has two heavy neighbors",
            "sink-characterization",
        )
    if len(v_plus) <= 1:
        quad = graph.quadratic_part_graph()
        if quad.is_co_chordal():
            return Certificate(
                True,
                True,
                "single heavy vertex; the underlying graph and the "
                "quadratic-part graph are both co-chordal",
                "vplus1-characterization",
            )
        return Certificate(
            True,
            False,
            "single heavy vertex but the quadratic-part graph is not co-chordal",
            "vplus1-characterization",
        )
    if underlying.is_bipartite():
        return Certificate(
            False,
            None,
            "bipartite underlying graph: no closed-form test, but a "
            "quotient-order search decides componentwise linearity exactly",
            "bipartite-equiv",
        )
    if underlying.is_chordal():
        return Certificate(
            False,
            None,
            "chordal underlying graph: no closed-form test, but a "
            "quotient-order search decides componentwise linearity exactly",
            "chordal-equiv",
        )
    return Certificate(False, None, "no applicable combinatorial criterion", "unknown")


def power_obstruction(graph: WeightedOrientedGraph) -> PowerObstruction | None:
    """Witness that no power of the edge ideal is componentwise linear.

    An induced 4-cycle (p,q,r,s) in the complement makes {p,r} and {q,s}
    the only underlying edges among the four vertices, so their two
    generators are coprime with no third generator supported inside the
    union.
    """
    complement = graph.underlying().complement()
    cycle = complement.has_induced_4cycle()
    if cycle is None:
        return None
    p, q, r, s = cycle
    u = _arc_generator(graph, p, r)
    v = _arc_generator(graph, q, s)
    support = set(u.support()) | set(v.support())
    others = [
        g
        for g in graph.edge_ideal().generators
        if g != u and g != v and set(g.support()) <= support
    ]
    if others:
        raise AssertionError(f"third generator {others[0]} defeats the witness pair")
    return PowerObstruction(cycle, (u, v))


def _arc_generator(graph: WeightedOrientedGraph, a: str, b: str) -> Monomial:
    if (a, b) in graph.arcs:
        return Monomial({a: 1, b: graph.weight(b)})
    if (b, a) in graph.arcs:
        return Monomial({b: 1, a: graph.weight(a)})
    raise AssertionError(f"no arc between {a!r} and {b!r}")
