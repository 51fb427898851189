"""Independent brute-force oracles.

These deliberately re-derive results by direct enumeration of the defining
conditions, sharing no code path with the implementations they check.
"""

from __future__ import annotations

from itertools import combinations, product

from qualrank.model import OrderingOutcome, value_compare


def brute_spo(n: int, pairs: set) -> tuple[bool, str | None]:
    """Check the three axioms by triple loops; returns (ok, failed_axiom)."""
    for i in range(n):
        if (i, i) in pairs:
            return False, "irreflexive"
    for i, j, k in product(range(n), repeat=3):
        if (i, j) in pairs and (j, k) in pairs and (i, k) not in pairs:
            return False, "transitive"
    for i, j in product(range(n), repeat=2):
        if (i, j) in pairs and (j, i) in pairs:
            return False, "asymmetric"
    return True, None


def brute_interval_order(n: int, pairs: set) -> bool:
    """Quadruple enumeration of the no-2+2 condition over an SPO."""
    ok, _ = brute_spo(n, pairs)
    if not ok:
        return False
    for (i, j), (k, l) in product(pairs, repeat=2):
        if (i, l) not in pairs and (k, j) not in pairs:
            return False
    return True


def brute_closure(n: int, pairs: set) -> set:
    closed = set(pairs)
    changed = True
    while changed:
        changed = False
        for (i, j), (k, l) in product(list(closed), repeat=2):
            if j == k and (i, l) not in closed:
                closed.add((i, l))
                changed = True
    return closed


def pareto_dominates(problem, a_idx: int, b_idx: int) -> bool:
    """Weakly better everywhere, strictly better somewhere, by direct
    per-attribute comparison."""
    alt_a = problem.alternatives[a_idx]
    alt_b = problem.alternatives[b_idx]
    strict = False
    for attr in problem.attributes:
        outcome = value_compare(attr.domain, alt_a.values[attr.id], alt_b.values[attr.id])
        if outcome is OrderingOutcome.BETTER:
            strict = True
        elif outcome is not OrderingOutcome.EQUAL:
            return False
    return strict


def all_spos(n: int):
    """Yield every strict partial order over n labeled elements as a pair
    set, by filtering all irreflexive relations for transitivity (which,
    with irreflexivity, implies asymmetry)."""
    slots = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in range(1 << len(slots)):
        rows = [0] * n
        pairs = set()
        b = bits
        for idx, (i, j) in enumerate(slots):
            if (b >> idx) & 1:
                pairs.add((i, j))
                rows[i] |= 1 << j
        transitive = True
        for i, j in pairs:
            if rows[j] & ~rows[i]:
                transitive = False
                break
        if transitive:
            yield pairs


def enumerate_relations(n: int):
    """All binary relations over n elements, self-loops included."""
    slots = [(i, j) for i in range(n) for j in range(n)]
    for bits in range(1 << len(slots)):
        yield {slots[idx] for idx in range(len(slots)) if (bits >> idx) & 1}


def count_unordered_decided(pairs: set, n: int) -> int:
    return sum(
        1
        for i, j in combinations(range(n), 2)
        if (i, j) in pairs or (j, i) in pairs
    )
