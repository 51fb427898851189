"""Weighted baseline, consistency reporting, and the removal probe."""

import json
import pathlib

import numpy as np
import pytest

from qualrank.diagnostics import (
    WeightVector,
    agreement_metrics,
    consistency_report,
    rank_reversal_probe,
    weighted_sum_rank,
)
from qualrank.dominance import dominance_graph, dominates, layered_ranking
from qualrank.errors import ScalarizationError, WeightsError
from qualrank.generate import random_problem
from qualrank.model import (
    Direction,
    Interval,
    Numeric,
    Ordinal,
    Problem,
    build_problem,
)
from qualrank.serialize import parse_problem

DATA = pathlib.Path(__file__).parent / "data"


class TestWeightVector:
    def test_negative_rejected(self):
        with pytest.raises(WeightsError):
            WeightVector((-0.1, 1.1))

    def test_unnormalized_rejected(self):
        with pytest.raises(WeightsError):
            WeightVector((0.5, 0.6))

    def test_tolerance_is_tight(self):
        WeightVector((0.5, 0.5 + 5e-10))
        with pytest.raises(WeightsError):
            WeightVector((0.5, 0.5 + 5e-9))

    def test_mapping_must_cover_attributes(self):
        p = build_problem([("X", Numeric()), ("Y", Numeric())], [("A", [1, 2])])
        with pytest.raises(WeightsError):
            WeightVector.from_mapping(p, {"X": 1.0})
        with pytest.raises(WeightsError):
            WeightVector.from_mapping(p, {"X": 0.5, "Y": 0.25, "Z": 0.25})
        wv = WeightVector.from_mapping(p, {"Y": 0.75, "X": 0.25})
        assert wv.weights == (0.25, 0.75)


class TestWeightedSumRank:
    def test_single_attribute_endpoints(self):
        p = build_problem(
            [("Cost", Numeric(Direction.MINIMIZE))],
            [("A", [10]), ("B", [20])],
        )
        ranking = weighted_sum_rank(p, WeightVector((1.0,)))
        assert ranking.order == ("A", "B")
        assert ranking.scores == {"A": 1.0, "B": 0.0}

    def test_constant_attribute_ties_break_by_id(self):
        p = build_problem(
            [("X", Numeric())],
            [("b", [3]), ("a", [3]), ("c", [3])],
        )
        ranking = weighted_sum_rank(p, WeightVector((1.0,)))
        assert ranking.order == ("a", "b", "c")
        assert set(ranking.scores.values()) == {0.5}

    def test_symmetric_split_ties_by_id(self):
        p = build_problem(
            [("X", Numeric()), ("Y", Numeric())],
            [("A", [1, 0]), ("B", [0, 1])],
        )
        ranking = weighted_sum_rank(p, WeightVector((0.5, 0.5)))
        assert ranking.order == ("A", "B")
        assert ranking.scores["A"] == ranking.scores["B"] == 0.5

    def test_ordinal_levels_equally_spaced(self):
        p = build_problem(
            [("Q", Ordinal(["low", "med", "high"]))],
            [("A", ["low"]), ("B", ["med"]), ("C", ["high"])],
        )
        ranking = weighted_sum_rank(p, WeightVector((1.0,)))
        assert ranking.order == ("C", "B", "A")
        assert ranking.scores["B"] == pytest.approx(0.5)

    def test_interval_attribute_rejected(self):
        p = build_problem(
            [("M", Interval())],
            [("A", [[1, 2]]), ("B", [[3, 4]])],
        )
        with pytest.raises(ScalarizationError):
            weighted_sum_rank(p, WeightVector((1.0,)))

    def test_affine_invariance_of_numeric_attributes(self):
        rng = np.random.default_rng(12)
        for _ in range(30):
            p = random_problem(rng, 6, 3, importance="empty", kinds=("numeric",))
            w = WeightVector((0.2, 0.5, 0.3))
            base = weighted_sum_rank(p, w)
            # positive affine transform of one attribute's raw values
            scale, shift = 3.5, -7.0
            attr = p.attributes[1]
            new_alts = []
            for alt in p.alternatives:
                vals = list(alt.values)
                from qualrank.model import Number

                vals[1] = Number(vals[1].value * scale + shift)
                new_alts.append(type(alt)(alt.id, vals))
            q = Problem(p.attributes, new_alts, p.importance_edges)
            assert weighted_sum_rank(q, w).order == base.order


class TestConsistencyReport:
    def test_layered_flattening_has_zero_violations(self):
        rng = np.random.default_rng(9)
        for _ in range(30):
            p = random_problem(rng, 7, 4, importance="interval")
            g = dominance_graph(p)
            if not g.classification.ok:
                continue
            flat = layered_ranking(g).flatten()
            report = consistency_report(flat, g)
            assert report.violated_pairs == ()
            assert report.agreement_ratio == 1.0

    def test_reversed_chain_fully_inconsistent(self):
        p = build_problem(
            [("X", Numeric())],
            [("A", [3]), ("B", [2]), ("C", [1])],
        )
        g = dominance_graph(p)
        report = consistency_report(["C", "B", "A"], g)
        assert report.total_reference_pairs == 3
        assert len(report.violated_pairs) == 3
        assert report.agreement_ratio == 0.0

    def test_empty_graph_agrees_vacuously(self):
        p = build_problem(
            [("X", Numeric()), ("Y", Numeric())],
            [("A", [0, 1]), ("B", [1, 0])],
        )
        g = dominance_graph(p)
        report = consistency_report(["B", "A"], g)
        assert report.total_reference_pairs == 0
        assert report.agreement_ratio == 1.0

    def test_non_permutation_rejected(self):
        g = dominance_graph(
            build_problem([("X", Numeric())], [("A", [1]), ("B", [2])])
        )
        with pytest.raises(ValueError):
            consistency_report(["A", "A"], g)


class TestAgreementMetrics:
    def test_full_chain(self):
        p = build_problem(
            [("X", Numeric())],
            [("A", [3]), ("B", [2]), ("C", [1])],
        )
        g = dominance_graph(p)
        metrics = agreement_metrics(["A", "B", "C"], g)
        assert metrics.comparable_pair_agreement == 1.0
        assert metrics.decided_ratio == 1.0

    def test_empty_graph(self):
        p = build_problem(
            [("X", Numeric()), ("Y", Numeric())],
            [("A", [0, 1]), ("B", [1, 0])],
        )
        metrics = agreement_metrics(["A", "B"], dominance_graph(p))
        assert metrics.comparable_pair_agreement == 1.0
        assert metrics.decided_ratio == 0.0

    def test_diamond_decided_ratio(self):
        # counted by hand: 5 comparable pairs out of C(4,2) = 6
        p = build_problem(
            [("X", Numeric()), ("Y", Numeric())],
            [("A", [3, 3]), ("B", [2, 1]), ("C", [1, 2]), ("D", [0, 0])],
        )
        g = dominance_graph(p)
        metrics = agreement_metrics(layered_ranking(g).flatten(), g)
        assert metrics.decided_ratio == pytest.approx(5 / 6)


class TestRankReversalProbe:
    def test_two_alternatives_cannot_revert(self):
        p = build_problem(
            [("X", Numeric()), ("Y", Numeric())],
            [("A", [1, 0]), ("B", [0, 1])],
        )
        reports = rank_reversal_probe(p, WeightVector((0.5, 0.5)))
        assert all(r.reversed_pairs == () for r in reports)

    def test_stable_when_extremes_are_duplicated(self):
        # removing any single alternative keeps every min and max in place
        p = build_problem(
            [("X", Numeric()), ("Y", Numeric())],
            [
                ("A", [0, 0]),
                ("B", [0, 0]),
                ("C", [1, 1]),
                ("D", [1, 1]),
                ("E", [0.25, 0.75]),
            ],
        )
        reports = rank_reversal_probe(p, WeightVector((0.5, 0.5)))
        assert all(r.reversed_pairs == () for r in reports)

    def test_frozen_fixture_exhibits_reversal(self):
        p = parse_problem((DATA / "reversal.json").read_text())
        weights = WeightVector.from_mapping(
            p, json.loads((DATA / "weights_reversal.json").read_text())
        )
        reports = rank_reversal_probe(p, weights)
        by_removed = {r.removed: r for r in reports}
        assert by_removed["A"].reversed_pairs == (("C", "B"),)
        assert by_removed["B"].reversed_pairs == ()
        assert by_removed["C"].reversed_pairs == ()

    def test_dominance_is_pairwise_stable_on_fixture(self):
        p = parse_problem((DATA / "reversal.json").read_text())
        full = {
            (a, b): dominates(a, b, p) is not None
            for a in p.alternative_ids
            for b in p.alternative_ids
            if a != b
        }
        for removed in p.alternative_ids:
            survivors = tuple(alt for alt in p.alternatives if alt.id != removed)
            reduced = Problem(p.attributes, survivors, p.importance_edges)
            for a in reduced.alternative_ids:
                for b in reduced.alternative_ids:
                    if a != b:
                        assert (dominates(a, b, reduced) is not None) == full[(a, b)]

    def test_pairwise_stability_random(self):
        rng = np.random.default_rng(77)
        for _ in range(20):
            p = random_problem(rng, 5, 3, importance="dag")
            full = {
                (a, b): dominates(a, b, p) is not None
                for a in p.alternative_ids
                for b in p.alternative_ids
                if a != b
            }
            removed = p.alternative_ids[int(rng.integers(len(p.alternatives)))]
            survivors = tuple(alt for alt in p.alternatives if alt.id != removed)
            reduced = Problem(p.attributes, survivors, p.importance_edges)
            for a in reduced.alternative_ids:
                for b in reduced.alternative_ids:
                    if a != b:
                        assert (dominates(a, b, reduced) is not None) == full[(a, b)]
