"""Deterministic instance generation: splitmix64 fuzzing and exhaustive enumeration.

The pseudo-random update rule is fixed bit-exactly so identical seeds
reproduce identical instance streams on every platform.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .oriented import WeightedOrientedGraph

_MASK = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator with the standard constants."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """A value in [0, bound); bound must be positive."""
        if bound < 1:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound


def vertex_names(count: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(count))


def random_graph(rng: SplitMix64, max_vertices: int, max_weight: int) -> WeightedOrientedGraph:
    """One random instance; draw order is fixed by contract.

    Draws: vertex count uniform in [1, max_vertices]; one of three states
    (absent, forward, backward) per vertex pair in lexicographic index
    order; a weight uniform in [1, max_weight] per vertex in order.
    Source weights normalize to 1 at construction.
    """
    count = 1 + rng.below(max_vertices)
    names = vertex_names(count)
    arcs = []
    for i, j in itertools.combinations(range(count), 2):
        state = rng.below(3)
        if state == 1:
            arcs.append((names[i], names[j]))
        elif state == 2:
            arcs.append((names[j], names[i]))
    weights = {v: 1 + rng.below(max_weight) for v in names}
    return WeightedOrientedGraph(names, arcs, weights)


def enumerate_orientations(count: int) -> Iterator[tuple[tuple[str, str], ...]]:
    """All arc sets on `count` vertices: three states per unordered pair."""
    names = vertex_names(count)
    pairs = list(itertools.combinations(range(count), 2))
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (i, j), state in zip(pairs, states):
            if state == 1:
                arcs.append((names[i], names[j]))
            elif state == 2:
                arcs.append((names[j], names[i]))
        yield tuple(arcs)


def enumerate_graphs(count: int, max_weight: int) -> Iterator[WeightedOrientedGraph]:
    """All instances on exactly `count` vertices with weights up to max_weight.

    Weights are only enumerated on arc targets: a source weight
    normalizes to 1, so assignments differing on sources would collapse
    to duplicates anyway.  Consumers still deduplicate by canonical edge
    ideal (distinct orientations can share one ideal).
    """
    names = vertex_names(count)
    for arcs in enumerate_orientations(count):
        targets = {t for _, t in arcs}
        heavy_slots = [v for v in names if v in targets]
        for combo in itertools.product(range(1, max_weight + 1), repeat=len(heavy_slots)):
            weights = dict(zip(heavy_slots, combo))
            yield WeightedOrientedGraph(names, arcs, weights)
