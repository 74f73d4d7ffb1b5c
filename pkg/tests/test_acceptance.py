"""Acceptance suite: one test per criterion, each printing a PASS line.

Run `pytest tests/test_acceptance.py -v` (add -s for the PASS lines).
Stated runtime bounds are asserted with a wall clock.
"""

import itertools
import json
import time

import pytest

from cwlkit.betti import FieldSpec, has_linear_resolution, regularity
from cwlkit.classifier import classify
from cwlkit.deciders import check_all, is_componentwise_linear
from cwlkit.graphs import SimpleGraph, cycle_graph
from cwlkit.harness import FuzzConfig, run_fuzz
from cwlkit.monomials import Monomial, minimalize
from cwlkit.oriented import WeightedOrientedGraph, graph_edge_ideal
from cwlkit.randgen import SplitMix64, enumerate_orientations, vertex_names


def report(number: int, text: str):
    print(f"ACCEPTANCE {number}: PASS - {text}")


def figure2():
    return WeightedOrientedGraph(
        [f"x{i}" for i in range(1, 7)],
        [("x1", "x2"), ("x2", "x6"), ("x2", "x3"), ("x2", "x5"), ("x1", "x4"), ("x3", "x4")],
        {"x4": 2, "x5": 4},
    )


def figure3():
    return WeightedOrientedGraph(
        [f"x{i}" for i in range(1, 6)],
        [
            ("x4", "x1"), ("x2", "x1"), ("x1", "x3"), ("x4", "x3"),
            ("x2", "x3"), ("x3", "x5"), ("x2", "x5"), ("x4", "x2"),
        ],
        {"x1": 4},
    )


def random_ideal(rng, variables, max_gens=4, max_exp=3):
    gens = []
    for _ in range(1 + rng.below(max_gens)):
        g = {}
        for v in variables:
            if rng.below(2):
                g[v] = 1 + rng.below(max_exp)
        if g:
            gens.append(Monomial(g))
    return minimalize(gens, variables)


def test_criterion_01_cycle_square_regularity():
    start = time.monotonic()
    I = graph_edge_ideal(cycle_graph([f"x{i}" for i in range(1, 6)]))
    J = I ** 2
    assert regularity(J) == 4
    assert has_linear_resolution(J)
    assert regularity(I) == 3
    assert not has_linear_resolution(I)
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    report(1, f"reg(I(C5)^2)=4 linear, reg(I(C5))=3 not linear ({elapsed:.1f}s)")


def test_criterion_02_sink_characterization_instance():
    start = time.monotonic()
    D = figure2()
    cert = classify(D)
    assert cert.decided and cert.value is True
    assert cert.theorem_tag == "sink-characterization"
    result = check_all(D.edge_ideal())
    assert result.componentwise_linear and result.linear_quotients and result.vertex_splittable
    assert result.regularity == 5
    assert result.max_generator_degree == 5
    assert result.implication_violation is None
    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    report(2, f"sink characterization decides, engine agrees, reg=5 ({elapsed:.1f}s)")


def test_criterion_03_single_heavy_vertex_instance():
    start = time.monotonic()
    D = figure3()
    cert = classify(D)
    assert cert.decided and cert.value is True
    assert cert.theorem_tag == "vplus1-characterization"
    assert D.underlying().is_co_chordal()
    assert D.quadratic_part_graph().is_co_chordal()
    result = check_all(D.edge_ideal())
    assert result.componentwise_linear and result.linear_quotients and result.vertex_splittable
    assert result.implication_violation is None
    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    report(3, f"single-heavy-vertex characterization decides, engine agrees ({elapsed:.1f}s)")


def test_criterion_04_obstruction_regularity_formulas():
    shapes = {
        "D1": ([("a", "b"), ("b", "c")], ("b", "c")),
        "D2": ([("b", "a"), ("b", "c")], ("a", "c")),
        "D3": ([("a", "b"), ("b", "c"), ("c", "a")], ("a", "b", "c")),
        "D4": ([("a", "b"), ("c", "b"), ("a", "c")], ("b", "c")),
    }
    formulas = {
        "D1": lambda w: w["a"] + w["b"] + w["c"] - 1,
        "D2": lambda w: w["a"] + w["c"],
        "D3": lambda w: w["a"] + w["b"] + w["c"] - 2,
        "D4": lambda w: w["b"] + w["c"],
    }
    checked = 0
    for tag, (arcs, heavy) in shapes.items():
        for combo in itertools.product((2, 3), repeat=len(heavy)):
            D = WeightedOrientedGraph(["a", "b", "c"], arcs, dict(zip(heavy, combo)))
            w = D.weights()
            assert tag in {c.tag for c in D.forbidden_configurations()}, (tag, w)
            reg = regularity(D.edge_ideal())
            assert reg == formulas[tag](w), (tag, w, reg)
            assert reg > max(w.values()) + 1, (tag, w, reg)
            checked += 1
    report(4, f"all {checked} admissible obstruction instances match the case formulas exactly")


def _connected(names, edges):
    if not names:
        return True
    adj = {v: set() for v in names}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {names[0]}
    stack = [names[0]]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(names)


def test_criterion_05_froberg_consistency():
    start = time.monotonic()
    mismatches = 0
    checked = 0
    for n in range(2, 7):
        names = tuple(f"x{i}" for i in range(n))
        pairs = list(itertools.combinations(names, 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            if not edges or not _connected(names, edges):
                continue
            G = SimpleGraph(names, edges)
            I = graph_edge_ideal(G)
            if has_linear_resolution(I) != G.complement().is_chordal():
                mismatches += 1
            checked += 1
    elapsed = time.monotonic() - start
    assert mismatches == 0
    assert elapsed < 600.0
    report(5, f"Froberg agreement on {checked} connected graphs up to 6 vertices ({elapsed:.0f}s)")


def _dedup_by_ideal(instances):
    seen = set()
    out = []
    for D in instances:
        I = D.edge_ideal()
        if I not in seen:
            seen.add(I)
            out.append((D, I))
    return out


def test_criterion_06_sink_class_equivalence():
    start = time.monotonic()
    instances = []
    for n in range(1, 5):
        names = vertex_names(n)
        for arcs in enumerate_orientations(n):
            base = WeightedOrientedGraph(names, arcs)
            slots = [v for v in base.sinks() if base.in_neighbors(v)]
            for combo in itertools.product((1, 2, 3), repeat=len(slots)):
                D = WeightedOrientedGraph(names, arcs, dict(zip(slots, combo)))
                assert set(D.v_plus()) <= set(D.sinks())
                instances.append(D)
    mismatches = 0
    for D, I in _dedup_by_ideal(instances):
        v_plus = set(D.v_plus())
        condition = D.underlying().complement().is_chordal() and all(
            sum(1 for u in D.neighbors(x) if u in v_plus) <= 1 for x in D.vertices
        )
        result = check_all(I)
        assert result.implication_violation is None, D
        values = {
            condition,
            result.componentwise_linear,
            result.linear_quotients,
            result.vertex_splittable,
        }
        if len(values) != 1:
            mismatches += 1
    elapsed = time.monotonic() - start
    assert mismatches == 0
    report(6, f"sink-class condition matches CL=LQ=VS on every instance ({elapsed:.0f}s)")


def test_criterion_07_single_heavy_class_equivalence():
    start = time.monotonic()
    instances = []
    for n in range(1, 5):
        names = vertex_names(n)
        for arcs in enumerate_orientations(n):
            targets = sorted({t for _, t in arcs})
            for v in targets:
                for w in (2, 3, 4):
                    D = WeightedOrientedGraph(names, arcs, {v: w})
                    assert len(D.v_plus()) == 1
                    instances.append(D)
    mismatches = 0
    for D, I in _dedup_by_ideal(instances):
        condition = (
            D.underlying().is_co_chordal()
            and D.quadratic_part_graph().is_co_chordal()
        )
        result = check_all(I)
        assert result.implication_violation is None, D
        values = {
            condition,
            result.componentwise_linear,
            result.linear_quotients,
            result.vertex_splittable,
        }
        if len(values) != 1:
            mismatches += 1
    elapsed = time.monotonic() - start
    assert mismatches == 0
    report(7, f"single-heavy-vertex condition matches CL=LQ=VS on every instance ({elapsed:.0f}s)")


def test_criterion_08_long_complement_cycle_regularity():
    # underlying graph = complement of C6, heavy sink of weight 2
    cycle = cycle_graph([f"x{i}" for i in range(1, 7)])
    G = cycle.complement()
    heavy = "x1"
    arcs = []
    for u, v in G.edge_list():
        if v == heavy:
            arcs.append((u, v))
        elif u == heavy:
            arcs.append((v, u))
        else:
            arcs.append((u, v))
    D = WeightedOrientedGraph(G.vertices, arcs, {heavy: 2})
    assert D.underlying().complement() == cycle.complement().complement()
    assert set(D.v_plus()) <= set(D.sinks())
    d = max(D.weights().values())
    assert d == 2
    reg = regularity(D.edge_ideal())
    assert reg > d + 1
    report(8, f"complement-6-cycle instance has reg {reg} > {d + 1}")


def test_criterion_09_property_suites():
    start = time.monotonic()
    # disjoint sum and product regularity
    rng = SplitMix64(1001)
    checked = 0
    while checked < 200:
        A = random_ideal(rng, ("a", "b"), max_gens=3)
        B = random_ideal(rng, ("c", "d"), max_gens=3)
        if A.is_zero or B.is_zero or A.is_unit or B.is_unit:
            continue
        ambient = ("a", "b", "c", "d")
        A4 = minimalize(A.generators, ambient)
        B4 = minimalize(B.generators, ambient)
        ra, rb = regularity(A4), regularity(B4)
        assert regularity(A4 + B4) == ra + rb - 1
        assert regularity(A4 * B4) == ra + rb
        checked += 1

    # colon monotonicity
    rng = SplitMix64(1002)
    checked = 0
    while checked < 200:
        I = random_ideal(rng, ("a", "b", "c"))
        if I.is_zero or I.is_unit:
            continue
        u = Monomial({v: rng.below(3) for v in ("a", "b", "c")})
        Q = I.colon(u)
        if Q.is_zero:
            continue
        assert regularity(Q) <= regularity(I)
        checked += 1

    # componentwise linearity is a polarization invariant
    rng = SplitMix64(1003)
    checked = 0
    while checked < 200:
        I = random_ideal(rng, ("a", "b"), max_gens=3, max_exp=3)
        if I.is_zero or I.is_unit:
            continue
        P, _ = I.polarize()
        if len(P.ambient) > 8:
            continue
        assert (
            is_componentwise_linear(I).componentwise_linear
            == is_componentwise_linear(P).componentwise_linear
        )
        checked += 1

    # CL forces regularity = max generator degree; CL survives generator
    # dropping; the implication chain holds on every instance
    rng = SplitMix64(1004)
    checked = 0
    while checked < 200:
        I = random_ideal(rng, ("a", "b", "c"))
        if I.is_zero:
            continue
        result = check_all(I)
        assert result.implication_violation is None, I
        if result.vertex_splittable:
            assert result.linear_quotients
        if result.linear_quotients:
            assert result.componentwise_linear
        if result.componentwise_linear:
            assert result.regularity == result.max_generator_degree
            for x in I.used_variables():
                dropped = I.drop_generators_divisible_by(x)
                if not dropped.is_zero:
                    assert is_componentwise_linear(dropped).componentwise_linear
        checked += 1
    elapsed = time.monotonic() - start
    report(9, f"four 200-instance property suites green ({elapsed:.0f}s)")


@pytest.fixture(scope="module")
def conjecture_fuzz_run():
    config = FuzzConfig(n=5, max_weight=3, count=1000, seed=42, verify_all=True)
    with open("/dev/null", "w") as log:
        rows, summary = run_fuzz(config, log=log)
    return config, rows, summary


def test_criterion_10_conjecture_fuzz(conjecture_fuzz_run):
    start = time.monotonic()
    config, rows, summary = conjecture_fuzz_run
    s = summary["summary"]
    assert s["instances"] == 1000
    assert s["engine_verified"] == 1000
    assert s["conjecture_counterexamples"] == []
    assert s["implication_violations"] == []
    assert s["skipped"] == []
    for row in rows:
        assert row["conjecture_consistent"] is True
    elapsed = time.monotonic() - start
    assert elapsed < 1800.0
    report(10, "1000 seeded instances engine-verified, conjecture consistent on all")


def test_criterion_11_determinism(conjecture_fuzz_run):
    config, rows, summary = conjecture_fuzz_run
    with open("/dev/null", "w") as log:
        rows2, summary2 = run_fuzz(config, log=log)
    first = json.dumps([rows, summary], sort_keys=True)
    second = json.dumps([rows2, summary2], sort_keys=True)
    assert first == second
    report(11, "two consecutive fuzz runs produced byte-identical reports")
