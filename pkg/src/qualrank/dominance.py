"""Witness-based dominance over alternatives.

An alternative A dominates B when some witness attribute strictly prefers A
and A is better-or-equal to B on every attribute that is not less important
than the witness (under the transitively closed importance relation).
Incomparable attribute outcomes fail that weak test.

The full graph is computed by evaluating every ordered pair of distinct
alternatives. The optimized path precomputes per-attribute outcome matrices
and per-witness checked-set bitmasks once per problem, reducing each pair to
mask-and-compare over fixed-width words (see :mod:`qualrank.kernels`);
``naive_dominates`` is the literal, unoptimized transcription of the
quantifier structure kept as a differential-testing oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from . import kernels
from .errors import NotPartialOrderError, ProblemValidationError, UnknownAlternativeError
from .model import (
    Alternative,
    OrderingOutcome,
    Problem,
    _interval_key,
    validate_problem,
    value_compare,
)
from .orders import (
    Classification,
    Relation,
    SpoResult,
    check_spo_matrix,
    classify,
    transitive_closure,
)

__all__ = [
    "Witness",
    "DominanceEdge",
    "DominanceGraph",
    "RankLayers",
    "PreparedProblem",
    "prepare",
    "dominates",
    "naive_dominates",
    "dominance_graph",
    "maximal_set",
    "layered_ranking",
    "explain",
    "Explanation",
    "WitnessAccount",
    "FailedWitness",
]

# Bitmask kernels pack one attribute per bit of a 64-bit word; wider problems
# fall back to the per-pair set path below.
_MAX_PACKED = 64


@dataclass(frozen=True)
class Witness:
    """Evidence for one dominance edge: the certifying attribute, the strict
    outcome on it, and the set of attributes that passed the weak test."""

    attribute: int
    strict_on: OrderingOutcome
    checked_set: frozenset[int]


@dataclass(frozen=True)
class DominanceEdge:
    winner: str
    loser: str
    witnesses: tuple[Witness, ...]


class PreparedProblem:
    """A validated problem with closed importance and comparison keys.

    Preparing once amortizes validation, closure, classification and the
    per-attribute key extraction across many dominance queries. Immutable
    after construction.
    """

    def __init__(self, problem: Problem):
        report = validate_problem(problem)
        if not report.ok:
            raise ProblemValidationError(report.errors)
        self.problem = problem
        self.validation = report
        m = len(problem.attributes)
        n = len(problem.alternatives)
        self.m = m
        self.n = n
        self.ids = problem.alternative_ids
        self._index = problem.alternative_index()

        self.stated = Relation(m, problem.importance_edges)
        self.closed = transitive_closure(self.stated)
        self.importance_class: Classification = classify(self.closed)

        closed_pairs = self.closed.pairs
        self.checked_sets = tuple(
            frozenset(k for k in range(m) if (w, k) not in closed_pairs)
            for w in range(m)
        )
        self.checked_bits: Optional[tuple[int, ...]] = None
        if m <= _MAX_PACKED:
            self.checked_bits = tuple(
                sum(1 << k for k in self.checked_sets[w]) for w in range(m)
            )

        key_lo = np.empty((m, n), dtype=np.float64)
        key_hi = np.empty((m, n), dtype=np.float64)
        for attr in problem.attributes:
            for i, alt in enumerate(problem.alternatives):
                lo, hi = _interval_key(attr.domain, alt.values[attr.id])
                key_lo[attr.id, i] = lo
                key_hi[attr.id, i] = hi
        self.key_lo = key_lo
        self.key_hi = key_hi

    def index_of(self, alt: Union[str, Alternative]) -> int:
        key = alt.id if isinstance(alt, Alternative) else alt
        try:
            return self._index[key]
        except KeyError:
            raise UnknownAlternativeError(f"unknown alternative '{key}'") from None

    def checked_mask_array(self) -> np.ndarray:
        assert self.checked_bits is not None
        return np.asarray(self.checked_bits, dtype=np.uint64)


def prepare(p: Union[Problem, PreparedProblem]) -> PreparedProblem:
    return p if isinstance(p, PreparedProblem) else PreparedProblem(p)


def _outcome_codes(prep: PreparedProblem) -> np.ndarray:
    """Outcome codes for every attribute and ordered pair, shape (m, n, n)."""
    lo_a = prep.key_lo[:, :, None]
    hi_a = prep.key_hi[:, :, None]
    lo_b = prep.key_lo[:, None, :]
    hi_b = prep.key_hi[:, None, :]
    codes = np.full((prep.m, prep.n, prep.n), kernels.CODE_INCOMPARABLE, dtype=np.uint8)
    codes[lo_b > hi_a] = kernels.CODE_WORSE
    codes[lo_a > hi_b] = kernels.CODE_BETTER
    codes[(lo_a == lo_b) & (hi_a == hi_b)] = kernels.CODE_EQUAL
    return codes


def _pair_strict_weak(prep: PreparedProblem, ia: int, ib: int):
    lo_a = prep.key_lo[:, ia]
    hi_a = prep.key_hi[:, ia]
    lo_b = prep.key_lo[:, ib]
    hi_b = prep.key_hi[:, ib]
    better = lo_a > hi_b
    weak = better | ((lo_a == lo_b) & (hi_a == hi_b))
    return better, weak


def _pair_witness_ids(prep: PreparedProblem, ia: int, ib: int, first_only: bool = False):
    """Witness attribute ids for the ordered pair, ascending."""
    better, weak = _pair_strict_weak(prep, ia, ib)
    found: list[int] = []
    if prep.checked_bits is not None:
        weak_bits = 0
        for k in np.nonzero(weak)[0]:
            weak_bits |= 1 << int(k)
        for w in np.nonzero(better)[0]:
            if prep.checked_bits[w] & ~weak_bits == 0:
                found.append(int(w))
                if first_only:
                    break
    else:
        for w in np.nonzero(better)[0]:
            if all(weak[k] for k in prep.checked_sets[int(w)]):
                found.append(int(w))
                if first_only:
                    break
    return found


def dominates(
    a: Union[str, Alternative],
    b: Union[str, Alternative],
    p: Union[Problem, PreparedProblem],
) -> Optional[Witness]:
    """Return the canonical witness (smallest attribute id) certifying that
    ``a`` dominates ``b``, or None when it does not."""
    prep = prepare(p)
    ia, ib = prep.index_of(a), prep.index_of(b)
    hits = _pair_witness_ids(prep, ia, ib, first_only=True)
    if not hits:
        return None
    w = hits[0]
    return Witness(w, OrderingOutcome.BETTER, prep.checked_sets[w])


def naive_dominates(
    a: Union[str, Alternative],
    b: Union[str, Alternative],
    p: Union[Problem, PreparedProblem],
) -> Optional[Witness]:
    """Reference oracle: literal loop-over-witness, loop-over-attribute
    evaluation of the dominance condition via :func:`value_compare`."""
    if isinstance(p, PreparedProblem):
        problem = p.problem
        closed = p.closed.pairs
    else:
        problem = p
        report = validate_problem(problem)
        if not report.ok:
            raise ProblemValidationError(report.errors)
        m = len(problem.attributes)
        closed = transitive_closure(Relation(m, problem.importance_edges)).pairs
    index = problem.alternative_index()
    key_a = a.id if isinstance(a, Alternative) else a
    key_b = b.id if isinstance(b, Alternative) else b
    for key in (key_a, key_b):
        if key not in index:
            raise UnknownAlternativeError(f"unknown alternative '{key}'")
    alt_a = problem.alternatives[index[key_a]]
    alt_b = problem.alternatives[index[key_b]]
    m = len(problem.attributes)
    for w, attr_w in enumerate(problem.attributes):
        if value_compare(attr_w.domain, alt_a.values[w], alt_b.values[w]) is not OrderingOutcome.BETTER:
            continue
        ok = True
        for k, attr_k in enumerate(problem.attributes):
            if (w, k) in closed:
                continue
            outcome = value_compare(attr_k.domain, alt_a.values[k], alt_b.values[k])
            if outcome not in (OrderingOutcome.BETTER, OrderingOutcome.EQUAL):
                ok = False
                break
        if ok:
            checked = frozenset(k for k in range(m) if (w, k) not in closed)
            return Witness(w, OrderingOutcome.BETTER, checked)
    return None


class DominanceGraph:
    """The computed dominance relation over all alternatives.

    Edges are held as a boolean matrix plus per-pair witness bitmasks; the
    object-level edge list with full witness annotations is materialized
    lazily so desk-scale problems stay ergonomic and large ones stay cheap.
    """

    def __init__(
        self,
        ids: tuple[str, ...],
        matrix: np.ndarray,
        witness_bits: Optional[np.ndarray],
        witness_map: Optional[dict],
        checked_sets: tuple[frozenset[int], ...],
        classification: SpoResult,
        importance_class: Classification,
        attribute_names: tuple[str, ...] = (),
    ):
        self.ids = ids
        self.matrix = matrix
        self.attribute_names = attribute_names
        self._witness_bits = witness_bits
        self._witness_map = witness_map
        self._checked_sets = checked_sets
        self.classification = classification
        self.importance_class = importance_class
        self._edges: Optional[tuple[DominanceEdge, ...]] = None
        self._index = {aid: i for i, aid in enumerate(ids)}

    @property
    def n(self) -> int:
        return len(self.ids)

    def index_of(self, alt: Union[str, Alternative]) -> int:
        key = alt.id if isinstance(alt, Alternative) else alt
        try:
            return self._index[key]
        except KeyError:
            raise UnknownAlternativeError(f"unknown alternative '{key}'") from None

    def edge_count(self) -> int:
        return int(self.matrix.sum())

    def edge_index_pairs(self) -> list[tuple[int, int]]:
        idx = np.nonzero(self.matrix)
        return list(zip(idx[0].tolist(), idx[1].tolist()))

    def witness_ids(self, i: int, j: int) -> tuple[int, ...]:
        if self._witness_map is not None:
            return self._witness_map.get((i, j), ())
        bits = int(self._witness_bits[i, j])
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    def witnesses(self, a: Union[str, Alternative], b: Union[str, Alternative]) -> tuple[Witness, ...]:
        i, j = self.index_of(a), self.index_of(b)
        return tuple(
            Witness(w, OrderingOutcome.BETTER, self._checked_sets[w])
            for w in self.witness_ids(i, j)
        )

    def edges(self) -> tuple[DominanceEdge, ...]:
        if self._edges is None:
            out = []
            for i, j in self.edge_index_pairs():
                ws = tuple(
                    Witness(w, OrderingOutcome.BETTER, self._checked_sets[w])
                    for w in self.witness_ids(i, j)
                )
                out.append(DominanceEdge(self.ids[i], self.ids[j], ws))
            self._edges = tuple(out)
        return self._edges

    def as_relation(self) -> Relation:
        return Relation(self.n, self.edge_index_pairs())


def dominance_graph(p: Union[Problem, PreparedProblem]) -> DominanceGraph:
    """Evaluate dominance for every ordered pair of distinct alternatives.

    Deterministic: the edge set and witness annotations do not depend on
    evaluation order.
    """
    prep = prepare(p)
    n = prep.n
    if prep.checked_bits is not None:
        codes = _outcome_codes(prep)
        wit = kernels.witness_masks(codes, prep.checked_mask_array())
        matrix = wit != 0
        witness_map = None
    else:
        matrix = np.zeros((n, n), dtype=bool)
        witness_map = {}
        wit = None
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                ws = _pair_witness_ids(prep, i, j)
                if ws:
                    matrix[i, j] = True
                    witness_map[(i, j)] = tuple(ws)
    classification = check_spo_matrix(matrix)
    return DominanceGraph(
        prep.ids,
        matrix,
        wit,
        witness_map,
        prep.checked_sets,
        classification,
        prep.importance_class,
        prep.problem.attribute_names,
    )


def maximal_set(g: DominanceGraph) -> frozenset[str]:
    """Undominated alternatives: in-degree zero in the dominance graph."""
    indeg = g.matrix.sum(axis=0)
    return frozenset(g.ids[i] for i in np.nonzero(indeg == 0)[0])


@dataclass(frozen=True)
class RankLayers:
    """Iterated maximal sets; layer i is maximal after removing layers < i."""

    layers: tuple[tuple[str, ...], ...]

    def flatten(self) -> tuple[str, ...]:
        return tuple(aid for layer in self.layers for aid in layer)


def layered_ranking(g: DominanceGraph) -> RankLayers:
    """Peel maximal sets; refuses graphs that are not strict partial orders
    (layers of a cyclic or intransitive relation would misrepresent it)."""
    if not g.classification.ok:
        raise NotPartialOrderError(g.classification, what="dominance graph")
    n = g.n
    counts = g.matrix.astype(np.int64)
    indeg = counts.sum(axis=0)
    alive = np.ones(n, dtype=bool)
    layers = []
    while alive.any():
        mask = alive & (indeg == 0)
        members = np.nonzero(mask)[0]
        if not members.size:  # unreachable for a strict partial order
            raise AssertionError("no maximal element while peeling layers")
        layers.append(tuple(sorted(g.ids[i] for i in members)))
        indeg = indeg - counts[mask].sum(axis=0)
        alive &= ~mask
    return RankLayers(tuple(layers))


@dataclass(frozen=True)
class WitnessAccount:
    attribute: str
    checked: tuple[str, ...]
    excluded: tuple[str, ...]


@dataclass(frozen=True)
class FailedWitness:
    attribute: str
    blocking: str
    blocking_outcome: OrderingOutcome


@dataclass(frozen=True)
class Explanation:
    """Per-attribute outcomes plus the fate of every witness candidate."""

    a: str
    b: str
    outcomes: dict
    dominant: bool
    witnesses: tuple[WitnessAccount, ...]
    failed: tuple[FailedWitness, ...]


def explain(
    a: Union[str, Alternative],
    b: Union[str, Alternative],
    p: Union[Problem, PreparedProblem],
) -> Explanation:
    """Explain the comparison of ``a`` against ``b`` attribute by attribute:
    each strictly-better attribute either succeeds as a witness (with its
    excluded, less-important attributes listed) or is blocked by a named
    attribute failing the weak test."""
    prep = prepare(p)
    problem = prep.problem
    ia, ib = prep.index_of(a), prep.index_of(b)
    alt_a = problem.alternatives[ia]
    alt_b = problem.alternatives[ib]
    names = problem.attribute_names
    per_attr = [
        value_compare(attr.domain, alt_a.values[attr.id], alt_b.values[attr.id])
        for attr in problem.attributes
    ]
    outcomes = {names[k]: per_attr[k] for k in range(prep.m)}
    witnesses: list[WitnessAccount] = []
    failed: list[FailedWitness] = []
    for w in range(prep.m):
        if per_attr[w] is not OrderingOutcome.BETTER:
            continue
        blocking = None
        for k in sorted(prep.checked_sets[w]):
            if per_attr[k] not in (OrderingOutcome.BETTER, OrderingOutcome.EQUAL):
                blocking = k
                break
        if blocking is None:
            checked = tuple(names[k] for k in sorted(prep.checked_sets[w]))
            excluded = tuple(
                names[k] for k in range(prep.m) if k not in prep.checked_sets[w]
            )
            witnesses.append(WitnessAccount(names[w], checked, excluded))
        else:
            failed.append(FailedWitness(names[w], names[blocking], per_attr[blocking]))
    return Explanation(
        alt_a.id,
        alt_b.id,
        outcomes,
        bool(witnesses),
        tuple(witnesses),
        tuple(failed),
    )
