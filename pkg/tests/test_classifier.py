import itertools

import pytest

from cwlkit.classifier import Certificate, classify, power_obstruction
from cwlkit.deciders import check_all, is_componentwise_linear
from cwlkit.oriented import WeightedOrientedGraph
from cwlkit.randgen import enumerate_orientations, vertex_names


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


class TestCertificate:
    def test_decided_requires_specific_tag(self):
        with pytest.raises(ValueError):
            Certificate(True, True, "reason", "unknown")
        with pytest.raises(ValueError):
            Certificate(False, None, "reason", "not-a-tag")


class TestClassifyPipeline:
    def test_figure2_decided_by_sink_characterization(self):
        cert = classify(figure2())
        assert cert.decided and cert.value is True
        assert cert.theorem_tag == "sink-characterization"

    def test_figure3_decided_by_single_heavy_vertex(self):
        cert = classify(figure3())
        assert cert.decided and cert.value is True
        assert cert.theorem_tag == "vplus1-characterization"

    def test_d2_triple_decided_false(self):
        D = WeightedOrientedGraph(
            ["x", "y", "z"], [("x", "y"), ("x", "z")], {"y": 2, "z": 2}
        )
        cert = classify(D)
        assert cert.decided and cert.value is False
        assert cert.theorem_tag == "forbidden-config"

    def test_non_cochordal_decided_false(self):
        # C5 with unit weights: the complement is again a 5-cycle
        verts = [f"x{i}" for i in range(1, 6)]
        arcs = [(verts[i], verts[(i + 1) % 5]) for i in range(5)]
        cert = classify(WeightedOrientedGraph(verts, arcs))
        assert cert.decided and cert.value is False
        assert cert.theorem_tag == "cochordal-necessary"
        assert "induced cycle" in cert.reason

    def test_star_all_heavy_decided_true(self):
        D = WeightedOrientedGraph(
            ["a", "b", "c", "r"], [("a", "r"), ("b", "r"), ("c", "r")], {"r": 5}
        )
        cert = classify(D)
        assert cert.decided and cert.value is True
        assert cert.theorem_tag == "star-all-weights"

    def test_heavy_non_star_decided_false(self):
        # directed path with every non-source weight above 1 is no star;
        # decided false before the sink/V+ stages can apply
        D = WeightedOrientedGraph(
            ["a", "b", "c"], [("a", "b"), ("b", "c")], {"b": 2, "c": 3}
        )
        cert = classify(D)
        assert cert.decided and cert.value is False
        assert cert.theorem_tag in ("forbidden-config", "star-all-weights")

    def test_vplus1_false_when_quadratic_graph_bad(self):
        # directed path x1->x4->x2->x3 with heavy x2: dropping the heavy
        # target's edge from the quadratic part leaves a non-co-chordal H
        D = WeightedOrientedGraph(
            ["x1", "x2", "x3", "x4"],
            [("x1", "x4"), ("x2", "x3"), ("x4", "x2")],
            {"x2": 2},
        )
        cert = classify(D)
        assert cert.decided and cert.value is False
        assert cert.theorem_tag == "vplus1-characterization"
        assert not is_componentwise_linear(D.edge_ideal()).componentwise_linear

    def test_bipartite_hint(self):
        # P4 with two heavy vertices, one of them not a sink
        D = WeightedOrientedGraph(
            ["x1", "x2", "x3", "x4"],
            [("x1", "x2"), ("x2", "x3"), ("x3", "x4")],
            {"x2": 2, "x4": 2},
        )
        cert = classify(D)
        assert not cert.decided
        assert cert.theorem_tag == "bipartite-equiv"
        # the hint is honest: a quotient order exists iff componentwise linear
        result = check_all(D.edge_ideal())
        assert result.linear_quotients == result.componentwise_linear

    def test_chordal_hint(self):
        # triangle with a pendant: chordal, not bipartite, two heavy vertices
        D = WeightedOrientedGraph(
            ["x1", "x2", "x3", "x4"],
            [("x1", "x2"), ("x2", "x3"), ("x3", "x1"), ("x1", "x4")],
            {"x3": 2, "x4": 2},
        )
        cert = classify(D)
        assert not cert.decided
        assert cert.theorem_tag == "chordal-equiv"
        result = check_all(D.edge_ideal())
        assert result.linear_quotients == result.componentwise_linear

    def test_unknown_tag_instance(self):
        D = WeightedOrientedGraph(
            ["x1", "x2", "x3", "x4", "x5"],
            [("x1", "x4"), ("x1", "x5"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x5", "x2")],
            {"x3": 2, "x5": 2},
        )
        cert = classify(D)
        assert not cert.decided
        assert cert.theorem_tag == "unknown"

    def test_empty_and_arcless_graphs_decided_true(self):
        cert = classify(WeightedOrientedGraph(["a", "b", "c"], []))
        assert cert.decided and cert.value is True


class TestSoundness:
    def test_exhaustive_small_scale(self):
        # wherever the classifier decides, the engine agrees (n <= 3, all
        # weights <= 3); larger scales run in the acceptance suite
        for n in range(1, 4):
            names = vertex_names(n)
            for arcs in enumerate_orientations(n):
                targets = sorted({t for _, t in arcs})
                for combo in itertools.product((1, 2, 3), repeat=len(targets)):
                    D = WeightedOrientedGraph(names, arcs, dict(zip(targets, combo)))
                    cert = classify(D)
                    if not cert.decided:
                        continue
                    engine = check_all(D.edge_ideal())
                    assert cert.value == engine.componentwise_linear, D
                    assert engine.implication_violation is None, D

    def test_never_true_with_forbidden_config(self):
        for n in (3, 4):
            names = vertex_names(n)
            for arcs in itertools.islice(enumerate_orientations(n), 0, None, 7):
                targets = sorted({t for _, t in arcs})
                combo = tuple(2 for _ in targets)
                D = WeightedOrientedGraph(names, arcs, dict(zip(targets, combo)))
                cert = classify(D)
                if D.forbidden_configurations():
                    assert not (cert.decided and cert.value is True)


class TestPowerObstruction:
    def test_two_disjoint_edges(self):
        D = WeightedOrientedGraph(
            ["a", "b", "c", "d"], [("a", "b"), ("c", "d")], {"b": 2, "d": 3}
        )
        witness = power_obstruction(D)
        assert witness is not None
        u, v = witness.pair
        assert u.gcd(v).is_unit
        ok, bad_pair = D.edge_ideal().semi_gcd_condition()
        assert not ok
        assert set(bad_pair) == {u, v}

    def test_co_chordal_gives_none(self):
        assert power_obstruction(figure2()) is None

    def test_c4_underlying_with_unit_weights_has_no_obstruction(self):
        # the complement of C4 is 2K2 (chordal), so there is no witness and
        # the classifier decides true, consistent with a chordal complement
        verts = ["a", "b", "c", "d"]
        arcs = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]
        D = WeightedOrientedGraph(verts, arcs)
        assert power_obstruction(D) is None
        cert = classify(D)
        assert cert.decided and cert.value is True
        assert check_all(D.edge_ideal()).componentwise_linear

    def test_witness_exists_iff_semi_gcd_fails(self):
        # the 4-cycle route of the proof is exhaustive for edge ideals:
        # a coprime pair without a third generator is exactly an induced
        # 2K2 in the underlying graph
        for arcs in itertools.islice(enumerate_orientations(4), 0, None, 3):
            targets = sorted({t for _, t in arcs})
            D = WeightedOrientedGraph(
                vertex_names(4), arcs, {t: 2 for t in targets}
            )
            I = D.edge_ideal()
            if I.is_zero:
                continue
            witness = power_obstruction(D)
            ok, _ = I.semi_gcd_condition()
            assert (witness is not None) == (not ok), D
