"""Text and JSON formats for ideals and weighted oriented graphs.

Ideal text format, one generator per line:

    # comment
    vars: x1 x2 x3      (optional first line pinning the ambient order)
    x1^2*x3
    x2*x5^4
    1                   (the unit monomial)

Ideal JSON: either a list of {variable: exponent} maps, or an object
{"ambient": [...], "generators": [{...}, ...]}.

Graph JSON: {"vertices": ["x1", ...], "edges": [["x1", "x2"], ...]}.

Weighted oriented graph JSON:
{"vertices": [{"id": "x1", "weight": 1}, ...], "arcs": [["x1", "x2"], ...]}
with arcs as (source, target) pairs.  Compact text form:

    x1 -> x2
    weight x2 = 4
"""

from __future__ import annotations

import json
import re

from .graphs import SimpleGraph
from .monomials import Monomial, MonomialIdeal
from .oriented import WeightedOrientedGraph


class ParseError(ValueError):
    """An input error with a 1-based line and column position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_VAR_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.]*")
_INT_RE = re.compile(r"[0-9]+")


def _parse_term(text: str, lineno: int, offset: int) -> tuple[str, int]:
    m = _VAR_RE.match(text)
    if m is None:
        raise ParseError(f"expected a variable, got {text[:10]!r}", lineno, offset + 1)
    var = m.group(0)
    rest = text[m.end():]
    if rest.startswith("^"):
        em = _INT_RE.match(rest[1:])
        if em is None:
            raise ParseError("expected an integer exponent after '^'", lineno, offset + m.end() + 2)
        exp = int(em.group(0))
        if exp < 1:
            raise ParseError("exponents must be >= 1", lineno, offset + m.end() + 2)
        consumed = m.end() + 1 + em.end()
    else:
        exp = 1
        consumed = m.end()
    if text[consumed:]:
        raise ParseError(f"unexpected trailing text {text[consumed:]!r}", lineno, offset + consumed + 1)
    return var, exp


def parse_generator(line: str, lineno: int = 1) -> Monomial:
    """Parse one generator in `x1^2*x3` syntax; `1` is the unit monomial."""
    stripped = line.strip()
    if stripped == "1":
        return Monomial.one()
    pairs = []
    offset = len(line) - len(line.lstrip())
    for piece in stripped.split("*"):
        piece = piece.strip()
        if not piece:
            raise ParseError("empty factor between '*' separators", lineno, offset + 1)
        pairs.append(_parse_term(piece, lineno, offset))
        offset += len(piece) + 1
    return Monomial(pairs)


def parse_ideal_text(text: str) -> MonomialIdeal:
    gens = []
    ambient: list[str] | None = None
    seen: dict[str, None] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vars:"):
            if ambient is not None or gens:
                raise ParseError("vars: header must be the first content line", lineno, 1)
            ambient = line[len("vars:"):].split()
            if len(set(ambient)) != len(ambient):
                raise ParseError("duplicate variable in vars: header", lineno, 1)
            continue
        g = parse_generator(raw, lineno)
        for v, _ in g.items():
            seen.setdefault(v, None)
        gens.append(g)
    if ambient is None:
        ambient = list(seen)
    else:
        missing = [v for v in seen if v not in ambient]
        if missing:
            raise ParseError(f"variables {missing} not declared in vars: header", 1, 1)
    try:
        return MonomialIdeal(ambient, gens)
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None


def parse_ideal_json(text: str) -> MonomialIdeal:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if isinstance(data, dict):
        ambient = data.get("ambient")
        raw_gens = data.get("generators")
        if not isinstance(ambient, list) or not isinstance(raw_gens, list):
            raise ParseError("ideal object needs 'ambient' and 'generators' lists", 1, 1)
    elif isinstance(data, list):
        raw_gens = data
        ambient = None
    else:
        raise ParseError("ideal JSON must be a list or an object", 1, 1)
    gens = []
    seen: dict[str, None] = {}
    for entry in raw_gens:
        if not isinstance(entry, dict):
            raise ParseError("each generator must be a {variable: exponent} map", 1, 1)
        for v in entry:
            seen.setdefault(v, None)
        try:
            gens.append(Monomial(entry))
        except ValueError as exc:
            raise ParseError(str(exc), 1, 1) from None
    if ambient is None:
        ambient = list(seen)
    try:
        return MonomialIdeal(ambient, gens)
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None


def load_ideal(text: str) -> MonomialIdeal:
    """Auto-detect: JSON when it starts with '[' or '{', text otherwise."""
    head = text.lstrip()[:1]
    if head in ("[", "{"):
        return parse_ideal_json(text)
    return parse_ideal_text(text)


def ideal_to_text(ideal: MonomialIdeal) -> str:
    lines = ["vars: " + " ".join(ideal.ambient)]
    lines.extend(str(g) for g in ideal.generators)
    return "\n".join(lines) + "\n"


def ideal_to_json_obj(ideal: MonomialIdeal) -> dict:
    return {
        "ambient": list(ideal.ambient),
        "generators": [dict(g.items()) for g in ideal.generators],
    }


def graph_to_json_obj(graph: SimpleGraph) -> dict:
    return {
        "vertices": list(graph.vertices),
        "edges": [list(e) for e in graph.edge_list()],
    }


def parse_graph_json(text: str) -> SimpleGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "vertices" not in data:
        raise ParseError("graph JSON needs a 'vertices' list", 1, 1)
    try:
        return SimpleGraph(data["vertices"], [tuple(e) for e in data.get("edges", [])])
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc), 1, 1) from None


_ARC_RE = re.compile(r"^\s*(\S+)\s*->\s*(\S+)\s*$")
_WEIGHT_RE = re.compile(r"^\s*weight\s+(\S+)\s*=\s*([0-9]+)\s*$")
_VERTEX_RE = re.compile(r"^\s*vertex\s+(\S+)\s*$")


def parse_oriented_text(text: str) -> WeightedOrientedGraph:
    vertices: dict[str, None] = {}
    arcs = []
    weights: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _ARC_RE.match(line)
        if m:
            s, t = m.group(1), m.group(2)
            vertices.setdefault(s, None)
            vertices.setdefault(t, None)
            arcs.append((s, t))
            continue
        m = _WEIGHT_RE.match(line)
        if m:
            vertices.setdefault(m.group(1), None)
            weights[m.group(1)] = int(m.group(2))
            continue
        m = _VERTEX_RE.match(line)
        if m:
            vertices.setdefault(m.group(1), None)
            continue
        raise ParseError(f"unrecognized line {line!r}", lineno, 1)
    try:
        return WeightedOrientedGraph(tuple(vertices), arcs, weights)
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None


def parse_oriented_json(text: str) -> WeightedOrientedGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "vertices" not in data:
        raise ParseError("oriented-graph JSON needs a 'vertices' list", 1, 1)
    names = []
    weights = {}
    for entry in data["vertices"]:
        if isinstance(entry, str):
            names.append(entry)
        elif isinstance(entry, dict) and "id" in entry:
            names.append(entry["id"])
            if "weight" in entry:
                weights[entry["id"]] = entry["weight"]
        else:
            raise ParseError(f"bad vertex entry {entry!r}", 1, 1)
    try:
        return WeightedOrientedGraph(
            names, [tuple(a) for a in data.get("arcs", [])], weights
        )
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc), 1, 1) from None


def load_oriented(text: str) -> WeightedOrientedGraph:
    """Auto-detect: JSON when it starts with '{', compact text otherwise."""
    if text.lstrip()[:1] == "{":
        return parse_oriented_json(text)
    return parse_oriented_text(text)


def oriented_to_json_obj(graph: WeightedOrientedGraph) -> dict:
    return {
        "vertices": [{"id": v, "weight": graph.weight(v)} for v in graph.vertices],
        "arcs": [list(a) for a in graph.arc_list()],
    }
