"""Exact monomial and monomial-ideal algebra over named variables.

All values are immutable; operations return new objects.  An ideal is
always stored with a divisibility-minimal generating set in a fixed
canonical order (total degree, then lexicographic on exponent vectors
over the ambient variable list), so ideal equality is representation
equality.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping


class Monomial:
    """A monomial as a map from variable id to positive exponent.

    Zero exponents are never stored; the unit monomial has an empty map.
    Hashable and totally ordered by (degree, sorted exponent items).
    """

    __slots__ = ("_items", "_map", "_degree", "_hash")

    def __init__(self, exponents: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        if isinstance(exponents, Mapping):
            pairs = exponents.items()
        else:
            pairs = exponents
        merged: dict[str, int] = {}
        for var, exp in pairs:
            if not isinstance(var, str):
                raise ValueError(f"variable id must be a string, got {var!r}")
            if not isinstance(exp, int) or exp < 0:
                raise ValueError(f"exponent of {var} must be a non-negative integer, got {exp!r}")
            if exp:
                merged[var] = merged.get(var, 0) + exp
        items = tuple(sorted(merged.items()))
        object.__setattr__(self, "_items", items)
        object.__setattr__(self, "_map", merged)
        object.__setattr__(self, "_degree", sum(merged.values()))
        object.__setattr__(self, "_hash", hash(items))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def one(cls) -> "Monomial":
        return _ONE

    @classmethod
    def variable(cls, var: str) -> "Monomial":
        return cls(((var, 1),))

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def is_unit(self) -> bool:
        return not self._items

    @property
    def is_variable(self) -> bool:
        return self._degree == 1

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self._items)

    def items(self) -> tuple[tuple[str, int], ...]:
        return self._items

    def exponent(self, var: str) -> int:
        return self._map.get(var, 0)

    def support(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self._items)

    def divides(self, other: "Monomial") -> bool:
        om = other._map
        return all(e <= om.get(v, 0) for v, e in self._items)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        out = dict(self._map)
        for v, e in other._items:
            out[v] = out.get(v, 0) + e
        return Monomial(out)

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise ValueError("negative power of a monomial")
        return Monomial({v: e * k for v, e in self._items})

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact division; raises if `other` does not divide `self`."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        out = dict(self._map)
        for v, e in other._items:
            rem = out[v] - e
            if rem:
                out[v] = rem
            else:
                del out[v]
        return Monomial(out)

    def gcd(self, other: "Monomial") -> "Monomial":
        om = other._map
        return Monomial({v: min(e, om[v]) for v, e in self._items if v in om})

    def lcm(self, other: "Monomial") -> "Monomial":
        out = dict(self._map)
        for v, e in other._items:
            if out.get(v, 0) < e:
                out[v] = e
        return Monomial(out)

    def radical(self) -> "Monomial":
        return Monomial({v: 1 for v, _ in self._items})

    def is_coprime(self, other: "Monomial") -> bool:
        om = other._map
        return all(v not in om for v, _ in self._items)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Monomial") -> bool:
        return (self._degree, self._items) < (other._degree, other._items)

    def __str__(self) -> str:
        if not self._items:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self._items)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


_ONE = Monomial()


def _vector_of(m: Monomial, index: Mapping[str, int], n: int) -> tuple[int, ...]:
    vec = [0] * n
    for v, e in m.items():
        vec[index[v]] = e
    return tuple(vec)


def monomial_from_vector(vec: Iterable[int], ambient: tuple[str, ...]) -> Monomial:
    return Monomial({ambient[i]: e for i, e in enumerate(vec) if e})


def monomials_of_degree(ambient: tuple[str, ...], d: int) -> Iterator[Monomial]:
    """All monomials of total degree d in the given variables."""
    for combo in itertools.combinations_with_replacement(ambient, d):
        counts: dict[str, int] = {}
        for v in combo:
            counts[v] = counts.get(v, 0) + 1
        yield Monomial(counts)


class MonomialIdeal:
    """A monomial ideal with a canonical minimal generating set.

    The zero ideal has an empty generator list; the unit ideal is
    generated by the unit monomial alone.
    """

    __slots__ = ("_ambient", "_index", "_gens", "_vectors")

    def __init__(self, ambient: Iterable[str], generators: Iterable[Monomial] = ()):
        ambient = tuple(ambient)
        if len(set(ambient)) != len(ambient):
            raise ValueError("duplicate variables in ambient list")
        index = {v: i for i, v in enumerate(ambient)}
        gens = []
        seen = set()
        for g in generators:
            for v, _ in g.items():
                if v not in index:
                    raise ValueError(f"generator {g} uses variable {v!r} not in ambient")
            if g not in seen:
                seen.add(g)
                gens.append(g)
        n = len(ambient)
        # canonical order: degree, then descending lex on exponent vectors,
        # so x1-heavy generators come first within a degree
        keyed = sorted(
            (g.degree, tuple(-e for e in vec), vec, g)
            for g in gens
            for vec in (_vector_of(g, index, n),)
        )
        # divisibility scan: a proper divisor has strictly smaller degree,
        # so each candidate only needs checking against already-kept gens
        kept: list[Monomial] = []
        kept_vecs: list[tuple[int, ...]] = []
        for deg, _, vec, g in keyed:
            redundant = False
            for hv, h in zip(kept_vecs, kept):
                if h.degree == deg:
                    break
                if all(a <= b for a, b in zip(hv, vec)):
                    redundant = True
                    break
            if not redundant:
                kept.append(g)
                kept_vecs.append(vec)
        object.__setattr__(self, "_ambient", ambient)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_gens", tuple(kept))
        object.__setattr__(self, "_vectors", tuple(kept_vecs))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def zero(cls, ambient: Iterable[str]) -> "MonomialIdeal":
        return cls(ambient, ())

    @classmethod
    def unit(cls, ambient: Iterable[str]) -> "MonomialIdeal":
        return cls(ambient, (Monomial.one(),))

    @classmethod
    def from_vectors(cls, vectors: Iterable[Iterable[int]], ambient: Iterable[str]) -> "MonomialIdeal":
        ambient = tuple(ambient)
        return cls(ambient, (monomial_from_vector(v, ambient) for v in vectors))

    @property
    def ambient(self) -> tuple[str, ...]:
        return self._ambient

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return self._gens

    def exponent_vectors(self) -> tuple[tuple[int, ...], ...]:
        return self._vectors

    @property
    def is_zero(self) -> bool:
        return not self._gens

    @property
    def is_unit(self) -> bool:
        return len(self._gens) == 1 and self._gens[0].is_unit

    @property
    def min_degree(self) -> int:
        if self.is_zero:
            raise ValueError("zero ideal has no generator degrees")
        return self._gens[0].degree

    @property
    def max_degree(self) -> int:
        if self.is_zero:
            raise ValueError("zero ideal has no generator degrees")
        return self._gens[-1].degree

    def used_variables(self) -> tuple[str, ...]:
        used = set()
        for g in self._gens:
            used.update(g.support())
        return tuple(v for v in self._ambient if v in used)

    def contains_monomial(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self._gens)

    def __contains__(self, m: Monomial) -> bool:
        return self.contains_monomial(m)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains_monomial(g) for g in other._gens)

    def _require_same_ambient(self, other: "MonomialIdeal"):
        if self._ambient != other._ambient:
            raise ValueError("ambient variable lists differ")

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._require_same_ambient(other)
        return MonomialIdeal(self._ambient, self._gens + other._gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._require_same_ambient(other)
        return MonomialIdeal(
            self._ambient, (g * h for g in self._gens for h in other._gens)
        )

    def __pow__(self, k: int) -> "MonomialIdeal":
        if k < 1:
            raise ValueError("power exponent must be >= 1")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def colon(self, u: Monomial) -> "MonomialIdeal":
        """The colon ideal (I : u), minimalized."""
        for v, _ in u.items():
            if v not in self._index:
                raise ValueError(f"colon monomial uses variable {v!r} not in ambient")
        return MonomialIdeal(self._ambient, (g / g.gcd(u) for g in self._gens))

    def component_ideal(self, d: int) -> "MonomialIdeal":
        """The ideal generated by all degree-d monomials of I.

        Expands each generator of degree <= d by all complementary
        monomials; complexity C(n+d-1, d) per generator, fine at desk
        scale.  Zero ideal if no generator has degree <= d.
        """
        if d < 0:
            raise ValueError("component degree must be >= 0")
        n = len(self._ambient)
        out: set[tuple[int, ...]] = set()
        for vec, g in zip(self._vectors, self._gens):
            gap = d - g.degree
            if gap < 0:
                continue
            for combo in itertools.combinations_with_replacement(range(n), gap):
                w = list(vec)
                for i in combo:
                    w[i] += 1
                out.add(tuple(w))
        return MonomialIdeal.from_vectors(out, self._ambient)

    def polarize(self) -> tuple["MonomialIdeal", dict[str, tuple[str, int]]]:
        """Squarefree lift into slot variables named `var.slot`, slot >= 1.

        Returns the polarized ideal and the map from each new variable to
        its (original variable, slot) pair.
        """
        max_exp = {v: 0 for v in self._ambient}
        for g in self._gens:
            for v, e in g.items():
                if e > max_exp[v]:
                    max_exp[v] = e
        new_ambient = []
        var_map: dict[str, tuple[str, int]] = {}
        slot_names: dict[tuple[str, int], str] = {}
        for v in self._ambient:
            for s in range(1, max_exp[v] + 1):
                name = f"{v}.{s}"
                new_ambient.append(name)
                var_map[name] = (v, s)
                slot_names[(v, s)] = name
        gens = []
        for g in self._gens:
            pairs = []
            for v, e in g.items():
                pairs.extend((slot_names[(v, s)], 1) for s in range(1, e + 1))
            gens.append(Monomial(pairs))
        return MonomialIdeal(new_ambient, gens), var_map

    def semi_gcd_condition(self) -> tuple[bool, tuple[Monomial, Monomial] | None]:
        """Check the semi-gcd condition; on failure return the violating pair.

        Requires that no generator is a single variable.
        """
        for g in self._gens:
            if g.is_variable:
                raise ValueError(f"semi-gcd precondition violated: generator {g} is a variable")
        gens = self._gens
        supports = [set(g.support()) for g in gens]
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                if supports[i] & supports[j]:
                    continue
                union = supports[i] | supports[j]
                if not any(
                    k != i and k != j and supports[k] <= union
                    for k in range(len(gens))
                ):
                    return False, (gens[i], gens[j])
        return True, None

    def drop_generators_divisible_by(self, var: str) -> "MonomialIdeal":
        """Remove every generator divisible by `var` (result stays minimal)."""
        if var not in self._index:
            raise ValueError(f"variable {var!r} not in ambient")
        return MonomialIdeal(
            self._ambient, (g for g in self._gens if g.exponent(var) == 0)
        )

    def squarefree_radical(self) -> "MonomialIdeal":
        """The radical: generated by the support products of the generators."""
        return MonomialIdeal(self._ambient, (g.radical() for g in self._gens))

    def restrict_ambient(self) -> "MonomialIdeal":
        """Same generators over the ambient restricted to used variables."""
        return MonomialIdeal(self.used_variables(), self._gens)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self._ambient == other._ambient
            and self._gens == other._gens
        )

    def __hash__(self) -> int:
        return hash((self._ambient, self._gens))

    def __len__(self) -> int:
        return len(self._gens)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self._gens) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal(ambient={self._ambient!r}, gens={str(self)})"


def minimalize(gens: Iterable[Monomial], ambient: Iterable[str]) -> MonomialIdeal:
    """Canonicalize a generating set: divisibility-minimal, sorted."""
    return MonomialIdeal(ambient, gens)
