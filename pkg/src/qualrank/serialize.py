"""Problem file format (strict JSON), weights files, and DOT export.

The schema rejects unknown keys everywhere: silent typos in preference files
corrupt decisions. Parse findings carry document paths; syntax errors carry
line and column.
"""

from __future__ import annotations

import json
from typing import Sequence, Union

from .dominance import DominanceGraph
from .errors import NotPartialOrderError, ParseError
from .model import (
    Alternative,
    Attribute,
    Direction,
    Finding,
    Interval,
    Level,
    Number,
    Numeric,
    Ordinal,
    Problem,
    Range,
    validate_problem,
)
from .orders import Relation, check_spo, transitive_reduction_matrix

__all__ = [
    "parse_problem",
    "parse_problem_dict",
    "problem_to_dict",
    "serialize_problem",
    "parse_weights",
    "export_dot",
]

_TOP_KEYS = {"attributes", "alternatives", "importance"}
_KIND_KEYS = {
    "numeric": {"name", "kind", "direction"},
    "interval": {"name", "kind", "direction"},
    "ordinal": {"name", "kind", "levels"},
}


def _is_num(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _parse_attribute(entry, pos: int, findings: list[Finding]):
    path = f"attributes[{pos}]"
    if not isinstance(entry, dict):
        findings.append(Finding("error", "schema", "attribute must be an object", path))
        return None
    kind = entry.get("kind")
    if kind not in _KIND_KEYS:
        findings.append(
            Finding("error", "schema", f"kind must be one of {sorted(_KIND_KEYS)}", f"{path}.kind")
        )
        return None
    allowed = _KIND_KEYS[kind]
    unknown = set(entry) - allowed
    if unknown:
        findings.append(
            Finding(
                "error",
                "unknown-key",
                f"unknown keys {sorted(unknown)} for {kind} attribute",
                path,
            )
        )
        return None
    name = entry.get("name")
    if not isinstance(name, str) or not name:
        findings.append(Finding("error", "schema", "name must be a nonempty string", f"{path}.name"))
        return None
    if kind == "ordinal":
        levels = entry.get("levels")
        if (
            not isinstance(levels, list)
            or not levels
            or any(not isinstance(l, str) for l in levels)
        ):
            findings.append(
                Finding("error", "schema", "levels must be a nonempty list of strings", f"{path}.levels")
            )
            return None
        return name, Ordinal(levels)
    direction = entry.get("direction")
    if direction not in ("maximize", "minimize"):
        findings.append(
            Finding(
                "error",
                "schema",
                "direction must be 'maximize' or 'minimize'",
                f"{path}.direction",
            )
        )
        return None
    domain = Numeric(Direction(direction)) if kind == "numeric" else Interval(Direction(direction))
    return name, domain


def _parse_value(domain, raw, path: str, findings: list[Finding]):
    if isinstance(domain, Ordinal):
        if not isinstance(raw, str):
            findings.append(Finding("error", "schema", "ordinal value must be a string level", path))
            return None
        return Level(raw)
    if isinstance(domain, Numeric):
        if not _is_num(raw):
            findings.append(Finding("error", "schema", "numeric value must be a number", path))
            return None
        return Number(raw)
    if not (isinstance(raw, list) and len(raw) == 2 and all(_is_num(x) for x in raw)):
        findings.append(Finding("error", "schema", "interval value must be [lo, hi]", path))
        return None
    return Range(raw[0], raw[1])


def parse_problem_dict(doc, *, validate: bool = True) -> Problem:
    """Build a Problem from a decoded document; raise ParseError with
    path-located findings on any schema violation (and, when ``validate``,
    on validation errors too)."""
    findings: list[Finding] = []
    if not isinstance(doc, dict):
        raise ParseError([Finding("error", "schema", "document must be a JSON object")])
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        findings.append(Finding("error", "unknown-key", f"unknown top-level keys {sorted(unknown)}"))

    attrs: list[Attribute] = []
    by_name: dict[str, Attribute] = {}
    raw_attrs = doc.get("attributes", [])
    if not isinstance(raw_attrs, list):
        findings.append(Finding("error", "schema", "attributes must be a list", "attributes"))
        raw_attrs = []
    for pos, entry in enumerate(raw_attrs):
        parsed = _parse_attribute(entry, pos, findings)
        if parsed is None:
            continue
        name, domain = parsed
        if name in by_name:
            findings.append(
                Finding("error", "duplicate-name", f"duplicate attribute name '{name}'", f"attributes[{pos}]")
            )
            continue
        attr = Attribute(len(attrs), name, domain)
        attrs.append(attr)
        by_name[name] = attr

    alts: list[Alternative] = []
    raw_alts = doc.get("alternatives", [])
    if not isinstance(raw_alts, list):
        findings.append(Finding("error", "schema", "alternatives must be a list", "alternatives"))
        raw_alts = []
    for pos, entry in enumerate(raw_alts):
        path = f"alternatives[{pos}]"
        if not isinstance(entry, dict):
            findings.append(Finding("error", "schema", "alternative must be an object", path))
            continue
        unknown = set(entry) - {"id", "values"}
        if unknown:
            findings.append(Finding("error", "unknown-key", f"unknown keys {sorted(unknown)}", path))
            continue
        aid = entry.get("id")
        if not isinstance(aid, str) or not aid:
            findings.append(Finding("error", "schema", "id must be a nonempty string", f"{path}.id"))
            continue
        values = entry.get("values")
        if not isinstance(values, dict):
            findings.append(Finding("error", "schema", "values must be an object", f"{path}.values"))
            continue
        unknown_names = set(values) - set(by_name)
        missing_names = set(by_name) - set(values)
        if unknown_names:
            findings.append(
                Finding(
                    "error",
                    "unknown-attribute",
                    f"values name undeclared attributes {sorted(unknown_names)}",
                    f"{path}.values",
                )
            )
        if missing_names:
            findings.append(
                Finding(
                    "error",
                    "missing-value",
                    f"missing values for attributes {sorted(missing_names)}",
                    f"{path}.values",
                )
            )
        if unknown_names or missing_names:
            continue
        parsed_values = []
        bad = False
        for attr in attrs:
            v = _parse_value(attr.domain, values[attr.name], f"{path}.values.{attr.name}", findings)
            if v is None:
                bad = True
                break
            parsed_values.append(v)
        if not bad:
            alts.append(Alternative(aid, parsed_values))

    edges: set[tuple[int, int]] = set()
    raw_edges = doc.get("importance", [])
    if not isinstance(raw_edges, list):
        findings.append(Finding("error", "schema", "importance must be a list", "importance"))
        raw_edges = []
    for pos, entry in enumerate(raw_edges):
        path = f"importance[{pos}]"
        if not (
            isinstance(entry, list)
            and len(entry) == 2
            and all(isinstance(x, str) for x in entry)
        ):
            findings.append(
                Finding("error", "schema", "importance edge must be [more, less] names", path)
            )
            continue
        more, less = entry
        bad = False
        for name in (more, less):
            if name not in by_name:
                findings.append(
                    Finding("error", "unknown-attribute", f"edge names undeclared attribute '{name}'", path)
                )
                bad = True
        if not bad:
            edges.add((by_name[more].id, by_name[less].id))

    if findings:
        raise ParseError(findings)
    problem = Problem(attrs, alts, edges)
    if validate:
        report = validate_problem(problem)
        if not report.ok:
            raise ParseError(report.errors)
    return problem


def parse_problem(text: str, *, validate: bool = True) -> Problem:
    """Parse a problem document from JSON text."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            [Finding("error", "syntax", f"invalid JSON: {exc.msg}", f"line {exc.lineno}, column {exc.colno}")]
        ) from None
    return parse_problem_dict(doc, validate=validate)


def problem_to_dict(p: Problem) -> dict:
    attrs = []
    for attr in p.attributes:
        if isinstance(attr.domain, Ordinal):
            attrs.append({"name": attr.name, "kind": "ordinal", "levels": list(attr.domain.levels)})
        elif isinstance(attr.domain, Numeric):
            attrs.append({"name": attr.name, "kind": "numeric", "direction": attr.domain.direction.value})
        else:
            attrs.append({"name": attr.name, "kind": "interval", "direction": attr.domain.direction.value})
    alts = []
    for alt in p.alternatives:
        values = {}
        for attr in p.attributes:
            if attr.id >= len(alt.values):
                continue
            v = alt.values[attr.id]
            if isinstance(v, Level):
                values[attr.name] = v.level
            elif isinstance(v, Number):
                values[attr.name] = v.value
            else:
                values[attr.name] = [v.lo, v.hi]
        alts.append({"id": alt.id, "values": values})
    names = p.attribute_names
    importance = sorted([names[i], names[j]] for i, j in p.importance_edges)
    return {"attributes": attrs, "alternatives": alts, "importance": importance}


def serialize_problem(p: Problem) -> str:
    return json.dumps(problem_to_dict(p), indent=2) + "\n"


def parse_weights(text: str, p: Problem) -> dict:
    """Decode a weights file: an object mapping every attribute name to a
    number. Returns the name->weight mapping; WeightVector does the numeric
    validation."""
    from .errors import WeightsError

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WeightsError(f"invalid JSON in weights file: {exc.msg}") from None
    if not isinstance(doc, dict) or any(not _is_num(v) for v in doc.values()):
        raise WeightsError("weights file must map attribute names to numbers")
    return doc


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(
    obj: Union[DominanceGraph, Relation],
    mode: str = "hasse",
    labels: Sequence[str] | None = None,
    include_witnesses: bool = True,
) -> str:
    """Render a dominance graph or relation as DOT text.

    ``full`` emits every edge; ``hasse`` emits the transitive reduction and
    requires a strict partial order. Node and edge ordering is lexicographic,
    so output is deterministic. Dominance edges carry their witness
    attribute names as labels when ``include_witnesses``.
    """
    if mode not in ("full", "hasse"):
        raise ValueError(f"mode must be 'full' or 'hasse', got {mode!r}")
    if isinstance(obj, DominanceGraph):
        names = list(obj.ids)
        matrix = obj.matrix
        if mode == "hasse":
            if not obj.classification.ok:
                raise NotPartialOrderError(obj.classification, what="dominance graph")
            matrix = transitive_reduction_matrix(matrix)
        edge_labels = {}
        if include_witnesses:
            attr_names = obj.attribute_names
            for i, j in zip(*[idx.tolist() for idx in matrix.nonzero()]):
                ws = obj.witness_ids(i, j)
                edge_labels[(i, j)] = ",".join(
                    attr_names[w] if w < len(attr_names) else str(w) for w in ws
                )
        graph_name = "dominance"
    else:
        names = list(labels) if labels is not None else [str(i) for i in range(obj.n)]
        if len(names) != obj.n:
            raise ValueError("labels must cover every element")
        if mode == "hasse":
            spo = check_spo(obj)
            if not spo.ok:
                raise NotPartialOrderError(spo)
            matrix = transitive_reduction_matrix(obj.to_matrix())
        else:
            matrix = obj.to_matrix()
        edge_labels = {}
        graph_name = "relation"

    lines = [f"digraph {graph_name} {{"]
    for name in sorted(names):
        lines.append(f"  {_dot_quote(name)};")
    edges = []
    for i, j in zip(*[idx.tolist() for idx in matrix.nonzero()]):
        label = edge_labels.get((i, j), "")
        edges.append((names[i], names[j], label))
    for src, dst, label in sorted(edges):
        suffix = f" [label={_dot_quote(label)}]" if label else ""
        lines.append(f"  {_dot_quote(src)} -> {_dot_quote(dst)}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
