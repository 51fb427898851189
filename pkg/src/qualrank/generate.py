"""Random problem generators for tests, benchmarks and demos.

Values are drawn from small integer grids so that exact equalities occur and
the weak test gets exercised through both its branches; interval endpoints
come from the same grids.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .model import Direction, Interval, Numeric, Ordinal, Problem, build_problem

__all__ = [
    "interval_order_edges",
    "random_dag_closed",
    "random_domains",
    "random_problem",
]

_LEVEL_POOL = ("awful", "poor", "fair", "good", "great")


def interval_order_edges(rng: np.random.Generator, m: int) -> frozenset[tuple[int, int]]:
    """Importance edges that are an interval order by construction: each
    attribute gets a random real interval, and i outranks j exactly when
    i's interval lies strictly above j's. The result is already closed."""
    lo = rng.uniform(0.0, 1.0, size=m)
    hi = lo + rng.uniform(0.0, 1.0, size=m)
    edges = {
        (i, j)
        for i in range(m)
        for j in range(m)
        if i != j and lo[i] > hi[j]
    }
    return frozenset(edges)


def random_dag_closed(
    rng: np.random.Generator, m: int, density: float = 0.3
) -> frozenset[tuple[int, int]]:
    """Transitively closed random DAG edges over m attributes; includes
    non-interval partial orders (2+2 patterns) at moderate densities."""
    order = rng.permutation(m)
    edges = set()
    for a in range(m):
        for b in range(a + 1, m):
            if rng.random() < density:
                edges.add((int(order[a]), int(order[b])))
    # close: successors along the random topological order
    changed = True
    while changed:
        changed = False
        for i, j in list(edges):
            for k, l in list(edges):
                if j == k and (i, l) not in edges:
                    edges.add((i, l))
                    changed = True
    return frozenset(edges)


def random_domains(rng: np.random.Generator, m: int, kinds: Sequence[str]):
    domains = []
    for _ in range(m):
        kind = kinds[int(rng.integers(len(kinds)))]
        if kind == "ordinal":
            count = int(rng.integers(2, len(_LEVEL_POOL) + 1))
            domains.append(Ordinal(_LEVEL_POOL[:count]))
        elif kind == "numeric":
            direction = Direction.MINIMIZE if rng.random() < 0.5 else Direction.MAXIMIZE
            domains.append(Numeric(direction))
        else:
            direction = Direction.MINIMIZE if rng.random() < 0.5 else Direction.MAXIMIZE
            domains.append(Interval(direction))
    return domains


def _random_value(rng: np.random.Generator, domain, grid: int):
    if isinstance(domain, Ordinal):
        return domain.levels[int(rng.integers(len(domain.levels)))]
    if isinstance(domain, Numeric):
        return float(rng.integers(0, grid + 1))
    lo = float(rng.integers(0, grid + 1))
    hi = lo + float(rng.integers(0, max(2, grid // 2)))
    return [lo, hi]


def random_problem(
    rng: np.random.Generator,
    n: int,
    m: int,
    importance: str | Iterable[tuple[int, int]] = "interval",
    kinds: Sequence[str] = ("numeric", "ordinal", "interval"),
    grid: int = 4,
) -> Problem:
    """A random problem with ``n`` alternatives and ``m`` attributes.

    ``importance`` is "interval" (interval order by construction), "dag"
    (arbitrary closed acyclic), "empty", or an explicit edge iterable.
    """
    domains = random_domains(rng, m, kinds)
    attributes = [(f"x{k}", domains[k]) for k in range(m)]
    alternatives = [
        (f"a{i}", [_random_value(rng, domains[k], grid) for k in range(m)])
        for i in range(n)
    ]
    problem = build_problem(attributes, alternatives)
    if importance == "interval":
        edges = interval_order_edges(rng, m)
    elif importance == "dag":
        edges = random_dag_closed(rng, m)
    elif importance == "empty":
        edges = frozenset()
    else:
        edges = frozenset((int(i), int(j)) for i, j in importance)
    return Problem(problem.attributes, problem.alternatives, edges)
