"""Finite binary relation machinery: closure, reduction, axiom checks.

Used both for the relative-importance relation over attributes and for the
computed dominance relation over alternatives. Relations over up to 64
elements run on python-int bitmask rows; larger ones switch to packed numpy
rows so axiom checks stay cheap even for dense graphs over thousands of
elements.

All functions are pure and all result types immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import NotPartialOrderError

__all__ = [
    "Relation",
    "SpoResult",
    "IntervalOrderResult",
    "LinearExtensionResult",
    "OrderClass",
    "Classification",
    "transitive_closure",
    "check_spo",
    "check_spo_matrix",
    "is_interval_order",
    "classify",
    "transitive_reduction",
    "transitive_reduction_matrix",
    "is_linear_extension",
]

_SMALL_N = 64


@dataclass(frozen=True)
class Relation:
    """A binary relation over elements 0..n-1 with O(1) membership."""

    n: int
    pairs: frozenset[tuple[int, int]]

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]] = ()):
        ps = frozenset((int(i), int(j)) for i, j in pairs)
        for i, j in ps:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"pair ({i},{j}) out of range for n={n}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "pairs", ps)

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def to_matrix(self) -> np.ndarray:
        mat = np.zeros((self.n, self.n), dtype=bool)
        if self.pairs:
            rows, cols = zip(*self.pairs)
            mat[list(rows), list(cols)] = True
        return mat

    @classmethod
    def from_matrix(cls, mat: np.ndarray) -> "Relation":
        idx = np.nonzero(mat)
        return cls(mat.shape[0], zip(idx[0].tolist(), idx[1].tolist()))


@dataclass(frozen=True)
class SpoResult:
    """Outcome of the strict-partial-order axiom check."""

    ok: bool
    axiom: Optional[str] = None  # "irreflexive" | "transitive" | "asymmetric"
    counterexample: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "strict partial order"
        return f"not a strict partial order: {self.axiom} fails at {self.counterexample}"


@dataclass(frozen=True)
class IntervalOrderResult:
    ok: bool
    violation: Optional[tuple[int, int, int, int]] = None  # a "2+2" pattern
    spo_check: Optional[SpoResult] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class LinearExtensionResult:
    ok: bool
    violations: tuple[tuple[int, int], ...] = ()

    def __bool__(self) -> bool:
        return self.ok


class OrderClass(IntEnum):
    """Order classes by increasing strictness; each implies all below it."""

    NOT_SPO = 0
    STRICT_PARTIAL = 1
    INTERVAL = 2
    WEAK = 3
    TOTAL = 4

    @property
    def label(self) -> str:
        return {
            OrderClass.NOT_SPO: "NotStrictPartialOrder",
            OrderClass.STRICT_PARTIAL: "StrictPartialOrder",
            OrderClass.INTERVAL: "IntervalOrder",
            OrderClass.WEAK: "WeakOrder",
            OrderClass.TOTAL: "TotalOrder",
        }[self]


@dataclass(frozen=True)
class Classification:
    """Strongest order class that holds, plus the evidence that stops it
    from being stronger."""

    kind: OrderClass
    spo_check: SpoResult
    interval_violation: Optional[tuple[int, int, int, int]] = None


def _rows_of(r: Relation) -> list[int]:
    rows = [0] * r.n
    for i, j in r.pairs:
        rows[i] |= 1 << j
    return rows


def _iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def transitive_closure(r: Relation) -> Relation:
    """Smallest transitive superset of ``r``; idempotent and monotone."""
    succ: dict[int, list[int]] = {}
    for i, j in r.pairs:
        succ.setdefault(i, []).append(j)
    closed: set[tuple[int, int]] = set()
    for start in succ:
        seen: set[int] = set()
        stack = list(succ[start])
        while stack:
            cur = stack.pop()
            if cur in seen:
                continue
            seen.add(cur)
            stack.extend(succ.get(cur, ()))
        closed.update((start, t) for t in seen)
    return Relation(r.n, closed)


def _check_spo_small(n: int, pairs: frozenset) -> SpoResult:
    rows = [0] * n
    for i, j in pairs:
        rows[i] |= 1 << j
    for i in range(n):
        if (rows[i] >> i) & 1:
            return SpoResult(False, "irreflexive", (i,))
    full = (1 << n) - 1
    for i in range(n):
        not_row = rows[i] ^ full
        for j in _iter_bits(rows[i]):
            missing = rows[j] & not_row
            if missing:
                k = (missing & -missing).bit_length() - 1
                return SpoResult(False, "transitive", (i, j, k))
    for i, j in sorted(pairs):
        if i < j and (j, i) in pairs:
            return SpoResult(False, "asymmetric", (i, j))
    return SpoResult(True)


def check_spo_matrix(mat: np.ndarray) -> SpoResult:
    """Axiom check on a boolean adjacency matrix (packed-row enumeration)."""
    n = mat.shape[0]
    diag = np.nonzero(np.diagonal(mat))[0]
    if diag.size:
        return SpoResult(False, "irreflexive", (int(diag[0]),))
    packed = np.packbits(mat, axis=1)
    for i in range(n):
        succ = np.nonzero(mat[i])[0]
        if not succ.size:
            continue
        viol = packed[succ] & ~packed[i]
        hit = viol.any(axis=1)
        if hit.any():
            r = int(np.argmax(hit))
            j = int(succ[r])
            bits = np.unpackbits(viol[r])[:n]
            k = int(np.argmax(bits))
            return SpoResult(False, "transitive", (i, j, k))
    sym = np.triu(mat & mat.T, 1)
    ij = np.nonzero(sym)
    if ij[0].size:
        return SpoResult(False, "asymmetric", (int(ij[0][0]), int(ij[1][0])))
    return SpoResult(True)


def check_spo(r: Relation) -> SpoResult:
    """Verify irreflexivity, transitivity and asymmetry by enumeration;
    report the first violated axiom with a concrete counterexample."""
    if r.n <= _SMALL_N:
        return _check_spo_small(r.n, r.pairs)
    return check_spo_matrix(r.to_matrix())


def is_interval_order(r: Relation) -> IntervalOrderResult:
    """Pass iff for every pair of edges (i,j),(k,l) either (i,l) or (k,j) is
    present; on failure return the violating quadruple (a "2+2" pattern).

    Re-checks the partial-order precondition and fails with that evidence
    when it does not hold. Runs in O(|r|^2) with O(1) membership.
    """
    spo = check_spo(r)
    if not spo.ok:
        return IntervalOrderResult(False, None, spo)
    edges = sorted(r.pairs)
    pairs = r.pairs
    for i, j in edges:
        for k, l in edges:
            if (i, l) not in pairs and (k, j) not in pairs:
                return IntervalOrderResult(False, (i, j, k, l), spo)
    return IntervalOrderResult(True, None, spo)


def classify(r: Relation) -> Classification:
    """Strongest order class of ``r``.

    Weak order: strict partial order whose incomparability is transitive.
    Total order: strict partial order with no incomparable pair.
    """
    spo = check_spo(r)
    if not spo.ok:
        return Classification(OrderClass.NOT_SPO, spo)
    n = r.n
    rows = _rows_of(r)
    cols = [0] * n
    for i, j in r.pairs:
        cols[j] |= 1 << i
    full = (1 << n) - 1
    incomp = [full & ~(rows[i] | cols[i] | (1 << i)) for i in range(n)]

    if all(x == 0 for x in incomp):
        return Classification(OrderClass.TOTAL, spo)

    weak = True
    for i in range(n):
        allowed = incomp[i] | (1 << i)
        for j in _iter_bits(incomp[i]):
            if incomp[j] & ~allowed:
                weak = False
                break
        if not weak:
            break
    if weak:
        return Classification(OrderClass.WEAK, spo)

    interval = is_interval_order(r)
    if interval.ok:
        return Classification(OrderClass.INTERVAL, spo)
    return Classification(OrderClass.STRICT_PARTIAL, spo, interval.violation)


def transitive_reduction_matrix(mat: np.ndarray) -> np.ndarray:
    """Reduction of a transitive boolean matrix: drop edges with a witness
    path of length two."""
    n = mat.shape[0]
    packed = np.packbits(mat, axis=1)
    out = mat.copy()
    for i in range(n):
        succ = np.nonzero(mat[i])[0]
        if not succ.size:
            continue
        two_step = np.bitwise_or.reduce(packed[succ], axis=0)
        reach2 = np.unpackbits(two_step)[:n].astype(bool)
        out[i] &= ~reach2
    return out


def transitive_reduction(r: Relation) -> Relation:
    """Unique minimal relation with the same transitive closure as ``r``.

    Requires ``r`` to be a strict partial order (hence already transitive).
    """
    spo = check_spo(r)
    if not spo.ok:
        raise NotPartialOrderError(spo)
    if r.n > _SMALL_N:
        return Relation.from_matrix(transitive_reduction_matrix(r.to_matrix()))
    rows = _rows_of(r)
    cols = [0] * r.n
    for i, j in r.pairs:
        cols[j] |= 1 << i
    kept = [(i, j) for i, j in r.pairs if not (rows[i] & cols[j])]
    return Relation(r.n, kept)


def is_linear_extension(ranking: Sequence[int], r: Relation) -> LinearExtensionResult:
    """Pass iff every related pair (i,j) has i before j in ``ranking``;
    on failure list every inverted pair."""
    n = r.n
    if sorted(ranking) != list(range(n)):
        raise ValueError(f"ranking must be a permutation of 0..{n - 1}")
    pos = [0] * n
    for idx, elem in enumerate(ranking):
        pos[elem] = idx
    violations = tuple(sorted((i, j) for i, j in r.pairs if pos[j] < pos[i]))
    return LinearExtensionResult(not violations, violations)
