"""Command-line interface.

Exit codes: 0 success (and "dominates"), 1 dominance holds not / operation
refused on a non-partial-order graph, 2 usage or unreadable file, 3
validation failure (problem document or weights), 4 unknown alternative id.
"""

from __future__ import annotations

import sys

import click

from .diagnostics import (
    WeightVector,
    agreement_metrics,
    consistency_report,
    rank_reversal_probe,
    weighted_sum_rank,
)
from .dominance import (
    dominance_graph,
    dominates,
    explain as explain_pair,
    layered_ranking,
    maximal_set,
)
from .errors import (
    NotPartialOrderError,
    ParseError,
    ScalarizationError,
    UnknownAlternativeError,
    WeightsError,
)
from .model import validate_problem
from .orders import OrderClass
from .serialize import export_dot, parse_problem, parse_weights

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_UNKNOWN_ID = 4


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        _fail(EXIT_USAGE, f"cannot read {path}: {exc.strerror or exc}")


def _print_findings(findings):
    for f in findings:
        where = f" at {f.path}" if f.path else ""
        click.echo(f"{f.severity}{where}: {f.message} [{f.code}]")


def _load_problem(path: str):
    try:
        return parse_problem(_read(path))
    except ParseError as exc:
        _print_findings(exc.findings)
        sys.exit(EXIT_INVALID)


def _load_weights(path: str, problem) -> WeightVector:
    try:
        mapping = parse_weights(_read(path), problem)
        return WeightVector.from_mapping(problem, mapping)
    except WeightsError as exc:
        _fail(EXIT_INVALID, str(exc))


@click.group()
@click.version_option(package_name="qualrank")
def main():
    """Order alternatives under qualitative, partially ordered preferences."""


@main.command()
@click.argument("file", type=click.Path())
def validate(file):
    """Validate a problem file; exit 0 iff it has no errors."""
    try:
        problem = parse_problem(_read(file), validate=False)
    except ParseError as exc:
        _print_findings(exc.findings)
        click.echo(f"invalid: {len(exc.findings)} parse error(s)")
        sys.exit(EXIT_INVALID)
    report = validate_problem(problem)
    _print_findings(report.findings)
    if report.ok:
        click.echo(f"ok ({len(report.warnings)} warning(s))")
        sys.exit(EXIT_OK)
    click.echo(f"invalid: {len(report.errors)} error(s)")
    sys.exit(EXIT_INVALID)


def _transitivity_note(g) -> str:
    if g.importance_class.kind >= OrderClass.INTERVAL:
        return "dominance: strict partial order guaranteed (importance is interval-ordered)"
    return f"importance is not interval-ordered; dominance check: {g.classification.describe()}"


@main.command()
@click.argument("file", type=click.Path())
@click.option("--layers", is_flag=True, help="print the full layered ranking")
def rank(file, layers):
    """Print the maximal (undominated) set, or the layered ranking."""
    problem = _load_problem(file)
    g = dominance_graph(problem)
    click.echo(f"importance classification: {g.importance_class.kind.label}")
    click.echo(_transitivity_note(g))
    best = sorted(maximal_set(g))
    click.echo("maximal: " + (", ".join(best) if best else "(none)"))
    if layers:
        try:
            ranking = layered_ranking(g)
        except NotPartialOrderError as exc:
            _fail(EXIT_NEGATIVE, f"cannot layer: {exc}")
        for depth, layer in enumerate(ranking.layers):
            click.echo(f"layer {depth}: " + ", ".join(layer))


@main.command(name="dominates")
@click.argument("file", type=click.Path())
@click.argument("id_a")
@click.argument("id_b")
def dominates_cmd(file, id_a, id_b):
    """Exit 0 and name the witness if ID_A dominates ID_B; else exit 1."""
    problem = _load_problem(file)
    try:
        witness = dominates(id_a, id_b, problem)
    except UnknownAlternativeError as exc:
        _fail(EXIT_UNKNOWN_ID, str(exc))
    if witness is None:
        click.echo(f"{id_a} does not dominate {id_b}")
        sys.exit(EXIT_NEGATIVE)
    name = problem.attributes[witness.attribute].name
    click.echo(f"{id_a} dominates {id_b} (witness: {name})")
    sys.exit(EXIT_OK)


@main.command()
@click.argument("file", type=click.Path())
@click.argument("id_a")
@click.argument("id_b")
def explain(file, id_a, id_b):
    """Attribute-by-attribute account of one pairwise comparison."""
    problem = _load_problem(file)
    try:
        ex = explain_pair(id_a, id_b, problem)
    except UnknownAlternativeError as exc:
        _fail(EXIT_UNKNOWN_ID, str(exc))
    notes: dict[str, str] = {}
    for acct in ex.witnesses:
        notes[acct.attribute] = "witness"
        for excluded in acct.excluded:
            notes.setdefault(excluded, f"excluded: less important than {acct.attribute}")
    for fw in ex.failed:
        notes.setdefault(
            fw.attribute,
            f"fails as witness: {fw.blocking} is {fw.blocking_outcome.value}",
        )
    width = max(len(n) for n in ex.outcomes) if ex.outcomes else 0
    click.echo(f"{ex.a} vs {ex.b}")
    for name, outcome in ex.outcomes.items():
        note = notes.get(name, "")
        line = f"  {name:<{width}}  {outcome.value:<12}"
        click.echo(line + (f"  {note}" if note else ""))
    if ex.dominant:
        click.echo(f"{ex.a} dominates {ex.b} (witness: {ex.witnesses[0].attribute})")
    else:
        click.echo(f"{ex.a} does not dominate {ex.b}")


@main.command()
@click.argument("file", type=click.Path())
@click.option("--out", required=True, type=click.Path(), help="output .dot path")
@click.option("--full", is_flag=True, help="emit all edges instead of the Hasse reduction")
def hasse(file, out, full):
    """Export the dominance graph as DOT (Hasse reduction by default)."""
    problem = _load_problem(file)
    g = dominance_graph(problem)
    try:
        text = export_dot(g, mode="full" if full else "hasse")
    except NotPartialOrderError as exc:
        _fail(EXIT_NEGATIVE, str(exc))
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        _fail(EXIT_USAGE, f"cannot write {out}: {exc.strerror or exc}")
    click.echo(f"wrote {out}")


@main.command()
@click.argument("file", type=click.Path())
@click.option("--weights", "weights_path", required=True, type=click.Path())
def compare(file, weights_path):
    """Weighted-sum ranking plus its consistency against dominance."""
    problem = _load_problem(file)
    weights = _load_weights(weights_path, problem)
    try:
        ranking = weighted_sum_rank(problem, weights)
    except ScalarizationError as exc:
        _fail(EXIT_INVALID, str(exc))
    g = dominance_graph(problem)
    report = consistency_report(ranking.order, g)
    metrics = agreement_metrics(ranking.order, g)
    click.echo("weighted ranking:")
    for pos, aid in enumerate(ranking.order, 1):
        click.echo(f"  {pos}. {aid}  score={ranking.scores[aid]:.4f}")
    click.echo(
        f"reference pairs: {report.total_reference_pairs}, "
        f"violated: {len(report.violated_pairs)}, "
        f"agreement: {report.agreement_ratio:.3f}"
    )
    for winner, loser in report.violated_pairs:
        click.echo(f"  inverted: {winner} ≻ {loser}")
    click.echo(
        f"decided pairs: {metrics.decided_ratio:.3f} of all unordered pairs"
    )


@main.command()
@click.argument("file", type=click.Path())
@click.option("--weights", "weights_path", required=True, type=click.Path())
def probe(file, weights_path):
    """Remove each alternative and report weighted-rank reversals."""
    problem = _load_problem(file)
    weights = _load_weights(weights_path, problem)
    try:
        reports = rank_reversal_probe(problem, weights)
    except ScalarizationError as exc:
        _fail(EXIT_INVALID, str(exc))
    any_reversal = False
    for rep in reports:
        if rep.reversed_pairs:
            any_reversal = True
            pairs = ", ".join(f"{x}↔{y}" for x, y in rep.reversed_pairs)
            click.echo(f"removing {rep.removed}: reversed {pairs}")
        else:
            click.echo(f"removing {rep.removed}: no reversals")
    click.echo("reversals found" if any_reversal else "ranking stable under removals")


@main.command()
@click.argument("file", type=click.Path())
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--ui-dir", default=None, type=click.Path(), help="serve a built UI from this directory")
def serve(file, port, host, ui_dir):
    """Start the HTTP service for interactive exploration."""
    import uvicorn

    from .service import create_app

    problem = _load_problem(file)
    app = create_app(problem, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
