"""Quantitative baselines and consistency analysis.

A min-max weighted-sum ranking is the textbook scoring baseline; comparing
it against the dominance graph measures how far numeric compensation strays
from the stated qualitative preferences, and the removal probe demonstrates
its rank-reversal instability (dominance itself is pairwise, so surviving
pairs never change).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .dominance import DominanceGraph
from .errors import ProblemValidationError, ScalarizationError, WeightsError
from .model import Interval, Level, Number, Ordinal, Problem, validate_problem
from .model import Direction
from .orders import is_linear_extension

__all__ = [
    "WeightVector",
    "WeightedRanking",
    "ConsistencyReport",
    "ReversalReport",
    "AgreementMetrics",
    "weighted_sum_rank",
    "consistency_report",
    "rank_reversal_probe",
    "agreement_metrics",
]

_SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative weights by attribute id, summing to 1 within 1e-9."""

    weights: tuple[float, ...]

    def __init__(self, weights: Sequence[float]):
        ws = tuple(float(w) for w in weights)
        if any(w < 0 for w in ws):
            raise WeightsError("weights must be nonnegative")
        if abs(sum(ws) - 1.0) > _SUM_TOLERANCE:
            raise WeightsError(f"weights must sum to 1 (got {sum(ws)!r})")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def from_mapping(cls, problem: Problem, mapping: Mapping[str, float]) -> "WeightVector":
        names = set(problem.attribute_names)
        given = set(mapping)
        if given != names:
            missing = sorted(names - given)
            extra = sorted(given - names)
            parts = []
            if missing:
                parts.append(f"missing weights for {missing}")
            if extra:
                parts.append(f"unknown attributes {extra}")
            raise WeightsError("; ".join(parts))
        return cls(tuple(mapping[a.name] for a in problem.attributes))


@dataclass(frozen=True)
class WeightedRanking:
    order: tuple[str, ...]
    scores: dict

    def position(self, alt_id: str) -> int:
        return self.order.index(alt_id)


@dataclass(frozen=True)
class ConsistencyReport:
    """How a total ranking stacks up against the dominance reference."""

    total_reference_pairs: int
    violated_pairs: tuple[tuple[str, str], ...]
    agreement_ratio: float


@dataclass(frozen=True)
class ReversalReport:
    removed: str
    reversed_pairs: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class AgreementMetrics:
    comparable_pair_agreement: float
    decided_ratio: float


def _raw_key(attr_domain, value) -> float:
    if isinstance(value, Level):
        idx = attr_domain.levels.index(value.level)
        span = len(attr_domain.levels) - 1
        return idx / span if span else 0.0
    assert isinstance(value, Number)
    return value.value


def weighted_sum_rank(p: Problem, w: WeightVector) -> WeightedRanking:
    """Score alternatives by weighted sums of min-max normalized values.

    Each attribute is normalized to [0,1] over the alternative set with 1
    best (minimize flips, ordinal levels map to equally spaced points);
    attributes constant across the set contribute 0.5. Ties break by
    alternative id, ascending.

    Interval-valued attributes are rejected: a range has no canonical
    scalarization.
    """
    report = validate_problem(p)
    if not report.ok:
        raise ProblemValidationError(report.errors)
    for attr in p.attributes:
        if isinstance(attr.domain, Interval):
            raise ScalarizationError(
                f"attribute '{attr.name}' is interval-valued; weighted scoring is undefined"
            )
    if len(w.weights) != len(p.attributes):
        raise WeightsError(
            f"expected {len(p.attributes)} weights, got {len(w.weights)}"
        )
    n = len(p.alternatives)
    scores = {alt.id: 0.0 for alt in p.alternatives}
    for attr in p.attributes:
        raw = [_raw_key(attr.domain, alt.values[attr.id]) for alt in p.alternatives]
        if not raw:
            continue
        lo, hi = min(raw), max(raw)
        if hi == lo:
            normalized = [0.5] * n
        elif isinstance(attr.domain, Ordinal) or attr.domain.direction is Direction.MAXIMIZE:
            normalized = [(v - lo) / (hi - lo) for v in raw]
        else:
            normalized = [(hi - v) / (hi - lo) for v in raw]
        weight = w.weights[attr.id]
        for alt, nv in zip(p.alternatives, normalized):
            scores[alt.id] += weight * nv
    order = tuple(sorted(scores, key=lambda aid: (-scores[aid], aid)))
    return WeightedRanking(order, scores)


def consistency_report(ranking: Sequence[str], g: DominanceGraph) -> ConsistencyReport:
    """Count and list dominance edges inverted by a total ranking."""
    if sorted(ranking) != sorted(g.ids):
        raise ValueError("ranking must be a permutation of the graph's alternatives")
    index = {aid: g.index_of(aid) for aid in ranking}
    perm = [index[aid] for aid in ranking]
    result = is_linear_extension(perm, g.as_relation())
    violated = tuple((g.ids[i], g.ids[j]) for i, j in result.violations)
    total = g.edge_count()
    ratio = 1.0 if total == 0 else (total - len(violated)) / total
    return ConsistencyReport(total, violated, ratio)


def rank_reversal_probe(p: Problem, w: WeightVector) -> list[ReversalReport]:
    """Remove each alternative in turn, re-rank the survivors, and report
    every surviving pair whose relative order flipped.

    Min-max renormalization over the reduced set is the reversal mechanism;
    the reported pairs are oriented as they stood in the full ranking.
    """
    full = weighted_sum_rank(p, w)
    full_pos = {aid: i for i, aid in enumerate(full.order)}
    reports = []
    for removed in p.alternative_ids:
        survivors = tuple(alt for alt in p.alternatives if alt.id != removed)
        reduced_problem = Problem(p.attributes, survivors, p.importance_edges)
        reduced = weighted_sum_rank(reduced_problem, w)
        red_pos = {aid: i for i, aid in enumerate(reduced.order)}
        flipped = []
        ids = [alt.id for alt in survivors]
        for xi in range(len(ids)):
            for yi in range(xi + 1, len(ids)):
                x, y = ids[xi], ids[yi]
                if full_pos[x] > full_pos[y]:
                    x, y = y, x  # orient by full ranking: x preceded y
                if red_pos[x] > red_pos[y]:
                    flipped.append((x, y))
        flipped.sort(key=lambda pair: (full_pos[pair[0]], full_pos[pair[1]]))
        reports.append(ReversalReport(removed, tuple(flipped)))
    return reports


def agreement_metrics(ranking: Sequence[str], g: DominanceGraph) -> AgreementMetrics:
    """Agreement over dominance edges plus the fraction of pairs dominance
    decides at all (1.0 and 0.0 respectively on an empty graph)."""
    report = consistency_report(ranking, g)
    n = g.n
    unordered = n * (n - 1) // 2
    if unordered == 0:
        decided = 0.0
    else:
        either = g.matrix | g.matrix.T
        decided = float(either.sum() / 2) / unordered
    return AgreementMetrics(report.agreement_ratio, decided)
