"""Decision problem model: attributes, value domains, alternatives, importance.

A problem bundles m attributes (each with a value domain that induces a strict
preference over its values), n alternatives (one value per attribute), and a
relative-importance edge set over attributes, stated Hasse-style and closed
later by the dominance engine.

Value-domain semantics:

* ``Ordinal`` levels are declared worst first; a higher level index is better.
* ``Numeric`` uses the natural order on finite reals, flipped for minimize.
* ``Interval`` values compare under strong interval semantics: one range is
  better only when every point of it beats every point of the other; identical
  endpoints are equal; overlapping ranges are incomparable.

All types are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence, Union

from .errors import DomainMismatchError

__all__ = [
    "Direction",
    "Ordinal",
    "Numeric",
    "Interval",
    "ValueDomain",
    "Level",
    "Number",
    "Range",
    "Value",
    "Attribute",
    "Alternative",
    "Problem",
    "OrderingOutcome",
    "Finding",
    "ValidationReport",
    "as_value",
    "build_problem",
    "validate_problem",
    "value_compare",
]


class Direction(str, Enum):
    MAXIMIZE = "maximize"
    MINIMIZE = "minimize"


@dataclass(frozen=True)
class Ordinal:
    """Totally ordered qualitative scale; ``levels`` listed worst first."""

    levels: tuple[str, ...]

    def __init__(self, levels: Iterable[str]):
        object.__setattr__(self, "levels", tuple(levels))


@dataclass(frozen=True)
class Numeric:
    direction: Direction = Direction.MAXIMIZE


@dataclass(frozen=True)
class Interval:
    """Range-valued domain; induces an interval order on values."""

    direction: Direction = Direction.MAXIMIZE


ValueDomain = Union[Ordinal, Numeric, Interval]


@dataclass(frozen=True)
class Level:
    level: str


@dataclass(frozen=True)
class Number:
    value: float

    def __init__(self, value: float):
        object.__setattr__(self, "value", float(value))


@dataclass(frozen=True)
class Range:
    lo: float
    hi: float

    def __init__(self, lo: float, hi: float):
        object.__setattr__(self, "lo", float(lo))
        object.__setattr__(self, "hi", float(hi))


Value = Union[Level, Number, Range]


@dataclass(frozen=True)
class Attribute:
    """One evaluation dimension; ids are dense 0..m-1 in declaration order."""

    id: int
    name: str
    domain: ValueDomain


@dataclass(frozen=True)
class Alternative:
    """A candidate; ``values[k]`` is its value on the attribute with id k."""

    id: str
    values: tuple[Value, ...]

    def __init__(self, id: str, values: Iterable[Value]):
        object.__setattr__(self, "id", id)
        object.__setattr__(self, "values", tuple(values))


@dataclass(frozen=True)
class Problem:
    """A full decision problem. Construction never validates; see
    :func:`validate_problem`, which reports a cyclic importance input
    instead of silently repairing it."""

    attributes: tuple[Attribute, ...]
    alternatives: tuple[Alternative, ...]
    importance_edges: frozenset[tuple[int, int]]

    def __init__(self, attributes, alternatives, importance_edges=()):
        object.__setattr__(self, "attributes", tuple(attributes))
        object.__setattr__(self, "alternatives", tuple(alternatives))
        object.__setattr__(self, "importance_edges", frozenset(importance_edges))

    @property
    def attribute_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.attributes)

    @property
    def alternative_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.alternatives)

    def attribute_index(self) -> dict[str, int]:
        return {a.name: a.id for a in self.attributes}

    def alternative_index(self) -> dict[str, int]:
        return {a.id: i for i, a in enumerate(self.alternatives)}


class OrderingOutcome(Enum):
    """Four-valued result of comparing two values of one attribute."""

    BETTER = "better"
    WORSE = "worse"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Finding:
    severity: str  # "error" | "warning"
    code: str
    message: str
    path: str = ""

    def as_dict(self) -> dict:
        return {
            "severity": self.severity,
            "code": self.code,
            "message": self.message,
            "path": self.path,
        }


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...]

    @property
    def errors(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == "error")

    @property
    def warnings(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == "warning")

    @property
    def ok(self) -> bool:
        return not self.errors

    def __bool__(self) -> bool:
        return self.ok


def as_value(domain: ValueDomain, raw) -> Value:
    """Coerce a plain python value (str, number, or [lo, hi]) for ``domain``."""
    if isinstance(raw, (Level, Number, Range)):
        return raw
    if isinstance(domain, Ordinal):
        if not isinstance(raw, str):
            raise DomainMismatchError(f"ordinal value must be a level name, got {raw!r}")
        return Level(raw)
    if isinstance(domain, Numeric):
        if isinstance(raw, bool) or not isinstance(raw, (int, float)):
            raise DomainMismatchError(f"numeric value must be a number, got {raw!r}")
        return Number(raw)
    if isinstance(domain, Interval):
        if (
            not isinstance(raw, (list, tuple))
            or len(raw) != 2
            or any(isinstance(x, bool) or not isinstance(x, (int, float)) for x in raw)
        ):
            raise DomainMismatchError(f"interval value must be [lo, hi], got {raw!r}")
        return Range(raw[0], raw[1])
    raise DomainMismatchError(f"unknown domain {domain!r}")


def build_problem(
    attributes: Sequence[tuple[str, ValueDomain]],
    alternatives: Sequence[tuple[str, Sequence]],
    importance: Sequence[tuple[str, str]] = (),
) -> Problem:
    """Convenience constructor from names and raw values.

    ``attributes`` is [(name, domain)], ``alternatives`` is [(id, values
    in attribute order)], ``importance`` is [(more_name, less_name)].
    """
    attrs = tuple(
        Attribute(i, name, domain) for i, (name, domain) in enumerate(attributes)
    )
    alts = tuple(
        Alternative(aid, tuple(as_value(attrs[k].domain, raw) for k, raw in enumerate(vals)))
        for aid, vals in alternatives
    )
    index = {a.name: a.id for a in attrs}
    edges = frozenset((index[m], index[l]) for m, l in importance)
    return Problem(attrs, alts, edges)


def _value_matches(domain: ValueDomain, value: Value) -> bool:
    if isinstance(domain, Ordinal):
        return isinstance(value, Level)
    if isinstance(domain, Numeric):
        return isinstance(value, Number)
    return isinstance(value, Range)


def _find_cycle(m: int, edges: Iterable[tuple[int, int]]) -> list[int] | None:
    """Return one directed cycle as a node sequence, or None. Ignores self-loops."""
    succ: dict[int, list[int]] = {}
    for i, j in sorted(edges):
        if i != j:
            succ.setdefault(i, []).append(j)
    color = [0] * m  # 0 unvisited, 1 on stack, 2 done
    parent: dict[int, int] = {}
    for start in range(m):
        if color[start] != 0:
            continue
        stack = [(start, iter(succ.get(start, ())))]
        color[start] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == 0:
                    color[nxt] = 1
                    parent[nxt] = node
                    stack.append((nxt, iter(succ.get(nxt, ()))))
                    advanced = True
                    break
                if color[nxt] == 1:
                    cycle = [nxt]
                    cur = node
                    while cur != nxt:
                        cycle.append(cur)
                        cur = parent[cur]
                    cycle.append(nxt)
                    cycle.reverse()
                    return cycle  # nxt ... nxt
            if not advanced:
                color[node] = 2
                stack.pop()
    return None


def validate_problem(p: Problem) -> ValidationReport:
    """Check structural invariants; findings are data, never exceptions.

    Errors: duplicate or empty names/ids, non-contiguous attribute ids,
    value/domain mismatch, undeclared ordinal level, inverted ranges,
    non-finite numbers, wrong value counts, importance self-loops, cycles or
    out-of-range endpoints. Warnings: attributes in no importance edge,
    interval attributes whose values all degenerate to points.
    """
    out: list[Finding] = []
    err = lambda code, msg, path="": out.append(Finding("error", code, msg, path))
    warn = lambda code, msg, path="": out.append(Finding("warning", code, msg, path))

    m = len(p.attributes)
    seen_names: set[str] = set()
    for pos, attr in enumerate(p.attributes):
        path = f"attributes[{pos}]"
        if attr.id != pos:
            err("attribute-id", f"attribute '{attr.name}' has id {attr.id}, expected {pos}", path)
        if not attr.name:
            err("empty-name", "attribute name is empty", path)
        elif attr.name in seen_names:
            err("duplicate-name", f"duplicate attribute name '{attr.name}'", path)
        seen_names.add(attr.name)
        if isinstance(attr.domain, Ordinal):
            levels = attr.domain.levels
            if not levels:
                err("empty-levels", f"attribute '{attr.name}' declares no levels", path)
            if len(set(levels)) != len(levels):
                err("duplicate-level", f"attribute '{attr.name}' has duplicate levels", path)

    seen_ids: set[str] = set()
    for pos, alt in enumerate(p.alternatives):
        path = f"alternatives[{pos}]"
        if not alt.id:
            err("empty-id", "alternative id is empty", path)
        elif alt.id in seen_ids:
            err("duplicate-id", f"duplicate alternative id '{alt.id}'", path)
        seen_ids.add(alt.id)
        if len(alt.values) != m:
            err(
                "value-count",
                f"alternative '{alt.id}' assigns {len(alt.values)} values, expected {m}",
                path,
            )
            continue
        for attr in p.attributes:
            v = alt.values[attr.id]
            vpath = f"{path}.values.{attr.name}"
            if not _value_matches(attr.domain, v):
                err(
                    "value-kind",
                    f"alternative '{alt.id}' value for '{attr.name}' does not match its domain",
                    vpath,
                )
                continue
            if isinstance(v, Level) and v.level not in attr.domain.levels:
                err(
                    "unknown-level",
                    f"alternative '{alt.id}' uses undeclared level '{v.level}' for '{attr.name}'",
                    vpath,
                )
            elif isinstance(v, Number) and not math.isfinite(v.value):
                err("non-finite", f"alternative '{alt.id}' has non-finite '{attr.name}'", vpath)
            elif isinstance(v, Range):
                if not (math.isfinite(v.lo) and math.isfinite(v.hi)):
                    err("non-finite", f"alternative '{alt.id}' has non-finite '{attr.name}'", vpath)
                elif v.lo > v.hi:
                    err(
                        "range-inverted",
                        f"alternative '{alt.id}' range for '{attr.name}' has lo > hi",
                        vpath,
                    )

    def name_of(k: int) -> str:
        return p.attributes[k].name if 0 <= k < m else str(k)

    clean_edges = []
    for i, j in sorted(p.importance_edges):
        if not (0 <= i < m and 0 <= j < m):
            err("edge-range", f"importance edge ({i},{j}) references unknown attribute id")
            continue
        if i == j:
            err("self-loop", f"self-loop on {name_of(i)}")
            continue
        clean_edges.append((i, j))
    cycle = _find_cycle(m, clean_edges)
    if cycle is not None:
        err("cycle", "importance cycle " + "→".join(name_of(k) for k in cycle))

    mentioned = {k for e in clean_edges for k in e}
    for attr in p.attributes:
        if attr.id not in mentioned:
            warn(
                "unreferenced-attribute",
                f"attribute '{attr.name}' appears in no importance edge",
            )
        if isinstance(attr.domain, Interval) and p.alternatives:
            vals = [
                alt.values[attr.id]
                for alt in p.alternatives
                if attr.id < len(alt.values) and isinstance(alt.values[attr.id], Range)
            ]
            if vals and all(v.lo == v.hi for v in vals):
                warn(
                    "degenerate-intervals",
                    f"all values of interval attribute '{attr.name}' are single points",
                )

    return ValidationReport(tuple(out))


def _interval_key(domain: ValueDomain, v: Value) -> tuple[float, float]:
    """Map a value to a direction-adjusted (lo, hi) pair; greater-beyond wins.

    Every domain reduces to interval comparison: points have lo == hi, and
    minimize flips sign so the preferred direction is always upward.
    """
    if isinstance(domain, Ordinal):
        if not isinstance(v, Level):
            raise DomainMismatchError(f"expected ordinal level, got {v!r}")
        try:
            idx = float(domain.levels.index(v.level))
        except ValueError:
            raise DomainMismatchError(
                f"level '{v.level}' is not one of {list(domain.levels)}"
            ) from None
        return idx, idx
    if isinstance(domain, Numeric):
        if not isinstance(v, Number):
            raise DomainMismatchError(f"expected a number, got {v!r}")
        x = v.value if domain.direction is Direction.MAXIMIZE else -v.value
        return x, x
    if isinstance(domain, Interval):
        if not isinstance(v, Range):
            raise DomainMismatchError(f"expected a range, got {v!r}")
        if domain.direction is Direction.MAXIMIZE:
            return v.lo, v.hi
        return -v.hi, -v.lo
    raise DomainMismatchError(f"unknown domain {domain!r}")


def value_compare(domain: ValueDomain, v1: Value, v2: Value) -> OrderingOutcome:
    """Compare two values of one attribute under its domain semantics.

    Better and Worse mirror each other under argument swap; Equal requires
    syntactic identity of values (exact numbers, identical endpoints).
    """
    lo1, hi1 = _interval_key(domain, v1)
    lo2, hi2 = _interval_key(domain, v2)
    if lo1 == lo2 and hi1 == hi2:
        return OrderingOutcome.EQUAL
    if lo1 > hi2:
        return OrderingOutcome.BETTER
    if lo2 > hi1:
        return OrderingOutcome.WORSE
    return OrderingOutcome.INCOMPARABLE
