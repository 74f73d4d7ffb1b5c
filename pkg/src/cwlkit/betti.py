"""Multigraded Betti numbers via homology of divisor complexes.

For each lcm-lattice point a of a monomial ideal I, the complex
K(a) = { S subset of supp(a) : x^a / prod(S) in I } is built and its
reduced homology ranks over the chosen field give the multigraded Betti
numbers of I.  Ranks are computed by exact fraction-free integer
elimination (rationals) or modular elimination (prime fields), never by
floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .monomials import Monomial, MonomialIdeal, monomial_from_vector


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: characteristic 0 means the rationals."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"field characteristic must be 0 or prime, got {self.characteristic}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = text.strip().lower()
        if text == "q":
            return cls(0)
        if text.startswith("fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ValueError(f"bad field spec {text!r}; expected q or fp:<prime>") from None
            return cls(p)
        raise ValueError(f"bad field spec {text!r}; expected q or fp:<prime>")

    def __str__(self) -> str:
        return "q" if self.characteristic == 0 else f"fp:{self.characteristic}"


def _rank_int(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    if not rows or not rows[0]:
        return 0
    m = [row[:] for row in rows]
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        pivot = m[r][c]
        for i in range(r + 1, n_rows):
            mic = m[i][c]
            if mic:
                row_i, row_r = m[i], m[r]
                for j in range(c + 1, n_cols):
                    row_i[j] = (row_i[j] * pivot - mic * row_r[j]) // prev
                row_i[c] = 0
            elif prev != 1:
                row_i = m[i]
                for j in range(c + 1, n_cols):
                    row_i[j] = (row_i[j] * pivot) // prev
        prev = pivot
        rank += 1
        r += 1
        if r == n_rows:
            break
    return rank


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    m = [[x % p for x in row] for row in rows]
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        row_r = m[r]
        for i in range(r + 1, n_rows):
            fac = (m[i][c] * inv) % p
            if fac:
                row_i = m[i]
                for j in range(c, n_cols):
                    row_i[j] = (row_i[j] - fac * row_r[j]) % p
        rank += 1
        r += 1
        if r == n_rows:
            break
    return rank


def _matrix_rank(rows: list[list[int]], field: FieldSpec) -> int:
    if field.characteristic == 0:
        return _rank_int(rows)
    return _rank_mod_p(rows, field.characteristic)


def lcm_lattice_points(ideal: MonomialIdeal) -> set[Monomial]:
    """All lcms of nonempty generator subsets, by iterative closure."""
    vecs = ideal.exponent_vectors()
    points = _lattice_vectors(vecs)
    return {monomial_from_vector(v, ideal.ambient) for v in points}


def _lattice_vectors(vecs: Iterable[tuple[int, ...]]) -> set[tuple[int, ...]]:
    gens = list(vecs)
    points = set(gens)
    frontier = set(gens)
    while frontier:
        fresh = set()
        for p in frontier:
            for g in gens:
                q = tuple(map(max, p, g))
                if q not in points:
                    points.add(q)
                    fresh.add(q)
        frontier = fresh
    return points


def _divisor_complex(alpha: tuple[int, ...], gens: list[tuple[int, ...]]) -> tuple[list[int], set[int], int]:
    """Faces of K(alpha) as bitmasks over supp(alpha).

    Returns (support positions, face mask set, support size).  The empty
    face is always present since alpha itself lies in the ideal.
    """
    supp = [i for i, e in enumerate(alpha) if e]
    s = len(supp)
    faces = set()
    for mask in range(1 << s):
        reduced = list(alpha)
        for b in range(s):
            if mask >> b & 1:
                reduced[supp[b]] -= 1
        if any(all(ge <= re for ge, re in zip(g, reduced)) for g in gens):
            faces.add(mask)
    return supp, faces, s


def _is_cone(faces: set[int], s: int) -> bool:
    # a cone is contractible, so its reduced homology vanishes entirely
    for b in range(s):
        bit = 1 << b
        if all((mask | bit) in faces for mask in faces):
            return True
    return False


def _reduced_homology_ranks(faces: set[int], s: int, field: FieldSpec) -> dict[int, int]:
    """Reduced homology ranks by dimension of a complex given as masks.

    Convention: the complex {empty face} has rank 1 in dimension -1.
    """
    by_dim: dict[int, list[int]] = {}
    for mask in faces:
        by_dim.setdefault(bin(mask).count("1") - 1, []).append(mask)
    for masks in by_dim.values():
        masks.sort()
    max_dim = max(by_dim)
    ranks: dict[int, int] = {}
    # boundary rank of d: C_d -> C_{d-1}; d = 0 is the augmentation to C_{-1}
    boundary_rank: dict[int, int] = {}
    for d in range(0, max_dim + 1):
        upper = by_dim.get(d, [])
        lower = by_dim.get(d - 1, [])
        if not upper or not lower:
            boundary_rank[d] = 0
            continue
        lower_index = {mask: i for i, mask in enumerate(lower)}
        rows = [[0] * len(upper) for _ in lower]
        for j, mask in enumerate(upper):
            bits = [b for b in range(s) if mask >> b & 1]
            for t, b in enumerate(bits):
                sub = mask & ~(1 << b)
                rows[lower_index[sub]][j] = -1 if t % 2 else 1
        boundary_rank[d] = _matrix_rank(rows, field)
    for d in range(-1, max_dim + 1):
        f = len(by_dim.get(d, []))
        h = f - boundary_rank.get(d, 0) - boundary_rank.get(d + 1, 0)
        if h:
            ranks[d] = h
    return ranks


class BettiTable:
    """Nonzero multigraded Betti numbers of a monomial ideal."""

    __slots__ = ("_entries", "_ideal", "_field")

    def __init__(self, entries: dict[tuple[int, Monomial], int], ideal: MonomialIdeal, field: FieldSpec):
        object.__setattr__(self, "_entries", dict(entries))
        object.__setattr__(self, "_ideal", ideal)
        object.__setattr__(self, "_field", field)

    def __setattr__(self, name, value):
        raise AttributeError("BettiTable is immutable")

    @property
    def entries(self) -> dict[tuple[int, Monomial], int]:
        return dict(self._entries)

    @property
    def ideal(self) -> MonomialIdeal:
        return self._ideal

    @property
    def field(self) -> FieldSpec:
        return self._field

    def rows(self) -> list[tuple[int, Monomial, int]]:
        index = {v: i for i, v in enumerate(self._ideal.ambient)}
        n = len(self._ideal.ambient)

        def key(item):
            (i, alpha), _ = item
            vec = [0] * n
            for v, e in alpha.items():
                vec[index[v]] = e
            return (i, alpha.degree, tuple(vec))

        return [(i, alpha, rank) for (i, alpha), rank in sorted(self._entries.items(), key=key)]

    def graded(self) -> dict[tuple[int, int], int]:
        """Total Betti numbers beta_{i,j} summed over multidegrees."""
        out: dict[tuple[int, int], int] = {}
        for (i, alpha), rank in self._entries.items():
            key = (i, alpha.degree)
            out[key] = out.get(key, 0) + rank
        return out

    def regularity(self) -> int:
        return max(alpha.degree - i for (i, alpha) in self._entries)

    def max_index(self) -> int:
        return max(i for (i, _) in self._entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BettiTable)
            and self._entries == other._entries
            and self._ideal == other._ideal
            and self._field == other._field
        )

    def __repr__(self) -> str:
        rows = ", ".join(f"b[{i},{alpha}]={r}" for i, alpha, r in self.rows())
        return f"BettiTable({rows}; field={self._field})"


def betti_table(ideal: MonomialIdeal, field: FieldSpec = FieldSpec(0)) -> BettiTable:
    """Compute all nonzero multigraded Betti numbers of a nonzero ideal."""
    if ideal.is_zero:
        raise ValueError("Betti table of the zero ideal is undefined")
    gens = list(ideal.exponent_vectors())
    entries: dict[tuple[int, Monomial], int] = {}
    for alpha in sorted(_lattice_vectors(gens)):
        supp, faces, s = _divisor_complex(alpha, gens)
        if len(faces) == 1 << s and s > 0:
            continue  # full simplex, contractible
        if s > 0 and _is_cone(faces, s):
            continue
        hom = _reduced_homology_ranks(faces, s, field)
        if hom:
            mono = monomial_from_vector(alpha, ideal.ambient)
            for d, rank in hom.items():
                entries[(d + 1, mono)] = rank
    return BettiTable(entries, ideal, field)


def regularity(ideal: MonomialIdeal, field: FieldSpec = FieldSpec(0)) -> int:
    """Castelnuovo-Mumford regularity, from the Betti table."""
    if ideal.is_zero:
        raise ValueError("regularity of the zero ideal is undefined")
    return betti_table(ideal, field).regularity()


def has_linear_resolution(ideal: MonomialIdeal, field: FieldSpec = FieldSpec(0)) -> bool:
    """For an equigenerated ideal: regularity equals the generator degree."""
    if ideal.is_zero:
        raise ValueError("linear-resolution test needs a nonzero ideal")
    degrees = {g.degree for g in ideal.generators}
    if len(degrees) != 1:
        raise ValueError("linear-resolution test needs an equigenerated ideal")
    return regularity(ideal, field) == degrees.pop()
