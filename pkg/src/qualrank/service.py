"""HTTP service exposing the engine for interactive what-if exploration.

One problem per process (a single decision session). Mutations are
serialized under a lock and swap an immutable snapshot, so any number of
concurrent readers see either the old or the new state, never a partial
one; what-if requests compute on a snapshot and never touch the mutation
path. Every response carries the revision counter, which increases by
exactly one per accepted mutation.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from fastapi import Body, FastAPI, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict

from .dominance import dominance_graph, explain, layered_ranking, maximal_set
from .errors import ParseError, UnknownAlternativeError
from .model import Finding, Problem, ValidationReport, validate_problem
from .orders import transitive_reduction_matrix
from .serialize import parse_problem_dict, problem_to_dict

__all__ = ["create_app", "Session"]


@dataclass(frozen=True)
class _State:
    problem: Problem
    revision: int
    validation: ValidationReport


class Session:
    """Holds the current problem behind an atomic snapshot swap."""

    def __init__(self, problem: Problem):
        report = validate_problem(problem)
        if not report.ok:
            raise ParseError(report.errors)
        self._lock = threading.Lock()
        self._state = _State(problem, 0, report)

    @property
    def lock(self) -> threading.Lock:
        return self._lock

    def snapshot(self) -> _State:
        return self._state

    def replace(self, problem: Problem, report: ValidationReport) -> _State:
        # caller must hold the lock
        new = _State(problem, self._state.revision + 1, report)
        self._state = new
        return new


def _findings_payload(findings) -> list[dict]:
    return [f.as_dict() for f in findings]


def _error(status: int, findings, revision: int) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"findings": _findings_payload(findings), "revision": revision},
    )


def _classification_payload(state: _State) -> dict:
    from .dominance import prepare

    prep = prepare(state.problem)
    cls = prep.importance_class
    names = state.problem.attribute_names
    counterexample = None
    if cls.interval_violation is not None:
        counterexample = [names[k] for k in cls.interval_violation]
    return {
        "revision": state.revision,
        "classification": cls.kind.label,
        "counterexample": counterexample,
        "stated": sorted([names[i], names[j]] for i, j in prep.stated.pairs),
        "closed": sorted([names[i], names[j]] for i, j in prep.closed.pairs),
    }


def _dominance_payload(problem: Problem, revision: int, mode: str):
    g = dominance_graph(problem)
    if mode == "hasse":
        if not g.classification.ok:
            return None, _error(
                409,
                [
                    Finding(
                        "error",
                        "not-partial-order",
                        g.classification.describe(),
                    )
                ],
                revision,
            )
        shown = transitive_reduction_matrix(g.matrix)
    else:
        shown = g.matrix
    attr_names = g.attribute_names
    edges = []
    for i, j in zip(*[idx.tolist() for idx in shown.nonzero()]):
        edges.append(
            {
                "winner": g.ids[i],
                "loser": g.ids[j],
                "witnesses": [attr_names[w] for w in g.witness_ids(i, j)],
            }
        )
    edges.sort(key=lambda e: (e["winner"], e["loser"]))
    check = {
        "ok": g.classification.ok,
        "axiom": g.classification.axiom,
        "counterexample": list(g.classification.counterexample or ()) or None,
    }
    layers = None
    if g.classification.ok:
        layers = [list(layer) for layer in layered_ranking(g).layers]
    payload = {
        "revision": revision,
        "mode": mode,
        "alternatives": list(g.ids),
        "edges": edges,
        "edge_check": check,
        "maximal": sorted(maximal_set(g)),
        "layers": layers,
        "importance_classification": g.importance_class.kind.label,
    }
    return payload, None


class EdgeBody(BaseModel):
    model_config = ConfigDict(extra="forbid")
    more: str
    less: str


class WhatIfBody(BaseModel):
    model_config = ConfigDict(extra="forbid")
    add: list[EdgeBody] = []
    remove: list[EdgeBody] = []


def create_app(problem: Problem, ui_dir: str | None = None) -> FastAPI:
    session = Session(problem)
    app = FastAPI(title="qualrank", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def _resolve_edge(state: _State, edge: EdgeBody):
        index = state.problem.attribute_index()
        missing = [n for n in (edge.more, edge.less) if n not in index]
        if missing:
            findings = [
                Finding("error", "unknown-attribute", f"unknown attribute '{n}'")
                for n in missing
            ]
            return None, _error(422, findings, state.revision)
        return (index[edge.more], index[edge.less]), None

    @app.get("/api/problem")
    def get_problem():
        state = session.snapshot()
        return {
            "revision": state.revision,
            "problem": problem_to_dict(state.problem),
            "validation": _findings_payload(state.validation.findings),
        }

    @app.put("/api/problem")
    def put_problem(doc: dict = Body(...)):
        with session.lock:
            state = session.snapshot()
            try:
                new_problem = parse_problem_dict(doc, validate=True)
            except ParseError as exc:
                return _error(422, exc.findings, state.revision)
            report = validate_problem(new_problem)
            new = session.replace(new_problem, report)
        return {
            "revision": new.revision,
            "warnings": _findings_payload(report.warnings),
        }

    @app.post("/api/importance/edges")
    def add_edge(edge: EdgeBody):
        with session.lock:
            state = session.snapshot()
            resolved, err = _resolve_edge(state, edge)
            if err is not None:
                return err
            pair = resolved
            p = state.problem
            if pair in p.importance_edges:
                return _error(
                    409,
                    [Finding("error", "edge-exists", f"edge {edge.more}▷{edge.less} already stated")],
                    state.revision,
                )
            candidate = Problem(p.attributes, p.alternatives, p.importance_edges | {pair})
            report = validate_problem(candidate)
            if not report.ok:
                return _error(409, report.errors, state.revision)
            new = session.replace(candidate, report)
            payload = _classification_payload(new)
        return payload

    @app.delete("/api/importance/edges")
    def remove_edge(edge: EdgeBody):
        with session.lock:
            state = session.snapshot()
            resolved, err = _resolve_edge(state, edge)
            if err is not None:
                return err
            pair = resolved
            p = state.problem
            if pair not in p.importance_edges:
                return _error(
                    404,
                    [Finding("error", "edge-missing", f"edge {edge.more}▷{edge.less} is not stated")],
                    state.revision,
                )
            candidate = Problem(p.attributes, p.alternatives, p.importance_edges - {pair})
            report = validate_problem(candidate)
            new = session.replace(candidate, report)
            payload = _classification_payload(new)
        return payload

    @app.get("/api/classification")
    def get_classification():
        return _classification_payload(session.snapshot())

    @app.get("/api/dominance")
    def get_dominance(mode: str = Query("full", pattern="^(full|hasse)$")):
        state = session.snapshot()
        payload, err = _dominance_payload(state.problem, state.revision, mode)
        return err if err is not None else payload

    @app.post("/api/whatif")
    def whatif(body: WhatIfBody, mode: str = Query("full", pattern="^(full|hasse)$")):
        state = session.snapshot()
        p = state.problem
        edges = set(p.importance_edges)
        for edge in body.remove:
            resolved, err = _resolve_edge(state, edge)
            if err is not None:
                return err
            if resolved not in edges:
                return _error(
                    404,
                    [Finding("error", "edge-missing", f"edge {edge.more}▷{edge.less} is not stated")],
                    state.revision,
                )
            edges.discard(resolved)
        for edge in body.add:
            resolved, err = _resolve_edge(state, edge)
            if err is not None:
                return err
            edges.add(resolved)
        candidate = Problem(p.attributes, p.alternatives, edges)
        report = validate_problem(candidate)
        if not report.ok:
            return _error(409, report.errors, state.revision)
        payload, err = _dominance_payload(candidate, state.revision, mode)
        if err is not None:
            return err
        payload["staged"] = {
            "add": sorted([e.more, e.less] for e in body.add),
            "remove": sorted([e.more, e.less] for e in body.remove),
        }
        return payload

    @app.get("/api/explain")
    def get_explain(a: str = Query(...), b: str = Query(...)):
        state = session.snapshot()
        try:
            ex = explain(a, b, state.problem)
        except UnknownAlternativeError as exc:
            return _error(404, [Finding("error", "unknown-alternative", str(exc))], state.revision)
        return {
            "revision": state.revision,
            "a": ex.a,
            "b": ex.b,
            "dominant": ex.dominant,
            "outcomes": {name: outcome.value for name, outcome in ex.outcomes.items()},
            "witnesses": [
                {
                    "attribute": acct.attribute,
                    "checked": list(acct.checked),
                    "excluded": list(acct.excluded),
                }
                for acct in ex.witnesses
            ],
            "failed": [
                {
                    "attribute": fw.attribute,
                    "blocking": fw.blocking,
                    "blocking_outcome": fw.blocking_outcome.value,
                }
                for fw in ex.failed
            ],
        }

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
