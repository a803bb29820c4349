"""Command-line interface.

Batch counterpart of the HTTP service: validates catalog directories,
searches and ranks frameworks, prints detail pages, exports backups, and
emits radar comparison files. Invalid flag values exit 2; domain failures
(unknown ids, validation violations) exit 1.
"""

from __future__ import annotations

import json
from pathlib import Path

import click

from .catalog import Catalog, export_backup, load_catalog, scan_catalog_dir
from .errors import (
    InvalidFilterError,
    InvalidQueryError,
    NotFoundError,
    OutOfRangeError,
    UnknownVocabularyError,
)
from .query import apply_filters, query_from_params
from .query import search as run_search
from .ranker import default_weights, rank, weights_from_ui_scale
from .records import ResultSource, record_to_document
from .report import AXIS_LABELS, radar_rows, render_radar_figure, write_radar_csv
from .scoring import factor_vector

WEIGHT_ORDER_HELP = (
    "Six integers 0..10, comma separated, in factor order: "
    "threat,privacy,published,verifiable,open-source,training."
)


@click.group()
@click.option(
    "--catalog",
    "catalog_dir",
    envvar="PPMLRANK_CATALOG",
    default="data/catalog",
    show_default=True,
    metavar="DIR",
    help="Catalog directory of framework record documents.",
)
@click.pass_context
def main(ctx: click.Context, catalog_dir: str) -> None:
    """Search, rank, and maintain a catalog of PPML frameworks."""
    ctx.obj = catalog_dir


def _load(catalog_dir: str) -> Catalog:
    try:
        return load_catalog(catalog_dir)
    except Exception as exc:
        raise click.ClickException(f"cannot load catalog from {catalog_dir}: {exc}")


_SEARCH_OPTIONS = [
    click.option("--technique", metavar="NAME", help="FL, DP, TEE, MPC, HE, or Hybrid."),
    click.option("--ml-model", "ml_models", multiple=True, metavar="NAME"),
    click.option("--threat-model", "threat_models", multiple=True, metavar="NAME",
                 help="malicious, semi-honest, or semi-honest-ttp."),
    click.option("--dataset", "datasets", multiple=True, metavar="NAME"),
    click.option("--training-status", metavar="NAME",
                 help="inference-only, training-only, or both."),
    click.option("--open-source/--closed-source", "open_source", default=None),
    click.option("--acceleration", "accelerations", multiple=True, metavar="NAME",
                 help="GPU, FPGA, or ASIC."),
    click.option("--scheme", "schemes", multiple=True, metavar="NAME"),
    click.option("--library", "libraries", multiple=True, metavar="NAME"),
    click.option("--tech", "tech_filters", multiple=True, metavar="KEY=VALUE",
                 help="Technique-specific filter, e.g. bootstrapping=true."),
]


def _with_search_options(command):
    for option in reversed(_SEARCH_OPTIONS):
        command = option(command)
    return command


def _selection_params(
    technique, ml_models, threat_models, datasets, training_status,
    open_source, accelerations, schemes, libraries, tech_filters,
) -> list[tuple[str, str]]:
    pairs: list[tuple[str, str]] = []
    if technique:
        pairs.append(("technique", technique))
    pairs.extend(("ml_model", v) for v in ml_models)
    pairs.extend(("threat_model", v) for v in threat_models)
    pairs.extend(("dataset", v) for v in datasets)
    if training_status:
        pairs.append(("training_status", training_status))
    if open_source is not None:
        pairs.append(("open_source", "true" if open_source else "false"))
    pairs.extend(("acceleration", v) for v in accelerations)
    pairs.extend(("scheme", v) for v in schemes)
    pairs.extend(("library", v) for v in libraries)
    for item in tech_filters:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise click.UsageError(f"--tech expects KEY=VALUE, got {item!r}")
        pairs.append((f"tech.{key}", value))
    return pairs


def _select(catalog: Catalog, pairs):
    try:
        query, filters = query_from_params(pairs)
        return apply_filters(run_search(catalog, query), filters)
    except (InvalidQueryError, InvalidFilterError) as exc:
        raise click.UsageError(str(exc))
    except UnknownVocabularyError as exc:
        raise click.ClickException(str(exc))


@main.command()
@click.argument("path", required=False)
@click.pass_obj
def ingest(catalog_dir: str, path: str | None) -> None:
    """Validate a catalog directory, reporting every per-file violation."""
    location = path or catalog_dir
    if not Path(location).is_dir():
        raise click.ClickException(f"not a directory: {location}")
    records, issues = scan_catalog_dir(location)
    for issue in issues:
        for message in issue.messages:
            click.echo(f"{issue.filename}: {message}", err=True)
    if issues:
        bad = len(issues)
        raise click.ClickException(f"{len(records)} records OK, {bad} rejected")
    click.echo(f"{len(records)} records OK")


@main.command()
@_with_search_options
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
@click.pass_obj
def search(catalog_dir: str, fmt: str, **selection) -> None:
    """List the frameworks matching the given attributes and filters."""
    catalog = _load(catalog_dir)
    records = _select(catalog, _selection_params(**selection))
    if fmt == "json":
        click.echo(json.dumps(
            {
                "catalog_version": catalog.version,
                "frameworks": [
                    {"id": r.id, "name": r.name, "technique": r.technique.value}
                    for r in records
                ],
            },
            indent=2,
        ))
        return
    for record in records:
        click.echo(f"{record.id:<14} {record.technique.value:<7} {record.name}")
    click.echo(f"({len(records)} of {len(catalog)} frameworks)")


def _parse_weights(text: str | None):
    if text is None:
        return default_weights()
    parts = text.split(",")
    try:
        values = [int(p.strip()) for p in parts]
    except ValueError:
        raise click.UsageError(f"--weights must be six integers, got {text!r}")
    try:
        return weights_from_ui_scale(values)
    except OutOfRangeError as exc:
        raise click.UsageError(f"--weights: {exc}")


@main.command(name="rank")
@_with_search_options
@click.option("--weights", "weights_text", metavar="T,P,A,V,O,S", help=WEIGHT_ORDER_HELP)
@click.option("--top", type=int, default=None, help="Print only the first N rows.")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
@click.pass_obj
def rank_cmd(catalog_dir: str, weights_text, top, fmt: str, **selection) -> None:
    """Rank matching frameworks by their weighted factor score."""
    catalog = _load(catalog_dir)
    weights = _parse_weights(weights_text)
    records = _select(catalog, _selection_params(**selection))
    ranking = rank(records, weights, catalog)
    entries = list(ranking)[:top] if top is not None else list(ranking)
    if fmt == "json":
        click.echo(json.dumps(
            {
                "catalog_version": ranking.catalog_version,
                "weights_used": list(ranking.weights_used.as_tuple()),
                "ranking": [
                    {
                        "id": e.framework_id,
                        "score": e.score,
                        "factor_vector": {
                            label: value
                            for label, value in zip(AXIS_LABELS, e.factor_vector.as_tuple())
                        },
                    }
                    for e in entries
                ],
            },
            indent=2,
        ))
        return
    for position, entry in enumerate(entries, start=1):
        name = catalog.get(entry.framework_id).name
        click.echo(f"{position:>2}. {entry.framework_id:<14} {entry.score:7.4f}  {name}")


@main.command()
@click.argument("framework_id", metavar="ID")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
@click.pass_obj
def show(catalog_dir: str, framework_id: str, fmt: str) -> None:
    """Print the detail view of one framework."""
    catalog = _load(catalog_dir)
    try:
        record = catalog.get(framework_id)
    except NotFoundError:
        raise click.ClickException(f"no framework with id {framework_id!r}")
    points = factor_vector(record, catalog)
    if fmt == "json":
        click.echo(json.dumps(
            {
                "catalog_version": catalog.version,
                "framework": record_to_document(record),
                "factor_vector": {
                    label: value
                    for label, value in zip(AXIS_LABELS, points.as_tuple())
                },
            },
            indent=2,
        ))
        return

    click.echo(f"{record.name} ({record.id}) [{record.technique.value}]")
    if record.authors:
        click.echo(f"authors: {', '.join(record.authors)}")
    click.echo(record.abstract)
    click.echo(f"threat models: {', '.join(sorted(m.value for m in record.threat_models))}")
    click.echo(
        f"data privacy: {record.data_privacy}  model privacy: {record.model_privacy}  "
        f"training: {record.training_support.value}  open source: {record.open_source}"
    )
    click.echo("points: " + "  ".join(
        f"{label}={value:.3f}" for label, value in zip(AXIS_LABELS, points.as_tuple())
    ))
    for source, title in ((ResultSource.PUBLISHED, "published results"),
                          (ResultSource.VERIFIED, "verified results")):
        entries = record.results_by_source(source)
        if not entries:
            continue
        click.echo(f"{title}:")
        for e in entries:
            extras = []
            if e.inference_time is not None:
                extras.append(f"{e.inference_time}s")
            if e.memory is not None:
                extras.append(f"{e.memory} B mem")
            if e.communication is not None:
                extras.append(f"{e.communication} B comm")
            suffix = f"  ({', '.join(extras)})" if extras else ""
            click.echo(f"  {e.dataset:<10} {e.model:<12} {e.accuracy:.4f}{suffix}")
    if record.verification_notes:
        click.echo(f"verification: {record.verification_notes}")
    if record.links:
        click.echo("links: " + " ".join(record.links))


@main.command()
@click.argument("framework_id", metavar="[ID]", required=False)
@click.option("--all", "export_all", is_flag=True, help="Export every framework.")
@click.option("--out", "out_dir", required=True, metavar="DIR",
              help="Directory to write <id>.json documents into.")
@click.pass_obj
def backup(catalog_dir: str, framework_id: str | None, export_all: bool, out_dir: str) -> None:
    """Write backup documents for one framework or the whole catalog."""
    if export_all == (framework_id is not None):
        raise click.UsageError("give exactly one of ID or --all")
    catalog = _load(catalog_dir)
    ids = [r.id for r in catalog.records] if export_all else [framework_id]
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for fid in ids:
        try:
            document = export_backup(catalog, fid)
        except NotFoundError:
            raise click.ClickException(f"no framework with id {fid!r}")
        (out / f"{fid}.json").write_text(document, encoding="utf-8")
    click.echo(f"wrote {len(ids)} document(s) to {out}")


@main.command()
@click.argument("framework_ids", metavar="ID...", nargs=-1, required=True)
@click.option("--out", "out_file", required=True, metavar="FILE",
              help="Radar report file (CSV columns in factor order).")
@click.option("--figure", "figure_file", metavar="FILE", default=None,
              help="Also render the rows as a polar chart image.")
@click.pass_obj
def radar(catalog_dir: str, framework_ids, out_file: str, figure_file: str | None) -> None:
    """Emit a radar comparison report for the given frameworks."""
    catalog = _load(catalog_dir)
    try:
        rows = radar_rows(catalog, framework_ids)
    except NotFoundError as exc:
        raise click.ClickException(f"no framework with id {exc}")
    with open(out_file, "w", encoding="utf-8", newline="") as handle:
        write_radar_csv(rows, handle)
    if figure_file is not None:
        render_radar_figure(rows, figure_file)
        click.echo(f"wrote {out_file} and {figure_file}")
    else:
        click.echo(f"wrote {out_file}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--submissions", "submissions_dir", metavar="DIR", default=None,
              envvar="PPMLRANK_SUBMISSIONS",
              help="Submission store (default: sibling of the catalog directory).")
@click.option("--reviewer-token", envvar="PPMLRANK_REVIEWER_TOKEN", default=None,
              help="Shared secret required by the review endpoint.")
@click.option("--static", "static_dir", metavar="DIR", default=None,
              help="Serve a built web client from this directory.")
@click.pass_obj
def serve(catalog_dir, host, port, submissions_dir, reviewer_token, static_dir) -> None:
    """Run the HTTP API over the catalog directory."""
    import uvicorn

    from .service import create_app

    app = create_app(
        catalog_dir,
        submissions_dir=submissions_dir,
        reviewer_token=reviewer_token,
        static_dir=static_dir,
    )
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
