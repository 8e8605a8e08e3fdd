"""Batch command line: ingestion, exports, trace replay, vote stats, serve.

Exit codes: 0 success, 1 validation or user error, 2 internal error.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .engine import Engine, EngineConfig
from .errors import CorpusError, InvalidTransitionError, UnknownItemError
from .gateway import CommandMap, replay_trace_file
from .stats import NOTES, evalstats as compute_evalstats
from .weighting import rank_videos_for_concept


def _engine_options(command):
    options = [
        click.option("--cache", "cache_path", type=click.Path(), default=None,
                     help="Load a prebuilt cache instead of raw inputs."),
        click.option("--index", "index_path", type=click.Path(), default=None,
                     help="Corpus index JSONL file."),
        click.option("--ontology", "ontology_path", type=click.Path(), default=None,
                     help="Ontology edge-list JSONL file."),
        click.option("--contexts", "contexts_path", type=click.Path(), default=None,
                     help="Contexts XML file."),
        click.option("--sim-threshold", type=float, default=0.1, show_default=True),
        click.option("--scope", type=click.Choice(["within_video", "global"]),
                     default="within_video", show_default=True),
        click.option("--iterations", type=int, default=300, show_default=True),
        click.option("--tolerance", type=float, default=1e-9, show_default=True),
        click.option("--seed", type=int, default=42, show_default=True),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _load_engine(cache_path, index_path, ontology_path, contexts_path,
                 sim_threshold, scope, iterations, tolerance, seed) -> Engine:
    if cache_path:
        return Engine.from_cache(cache_path)
    if not (index_path and ontology_path and contexts_path):
        raise click.UsageError("provide --cache or all of --index/--ontology/--contexts")
    for path in (index_path, ontology_path, contexts_path):
        if not Path(path).is_file():
            raise CorpusError(f"input file not found: {path}")
    config = EngineConfig(
        sim_threshold=sim_threshold,
        similar_scope=scope,
        layout_iterations=iterations,
        layout_tolerance=tolerance,
        seed=seed,
    )
    return Engine.from_paths(index_path, ontology_path, contexts_path, config)


@click.group()
def cli():
    """Concept-indexed video retrieval engine."""


@cli.command()
@_engine_options
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="Where to write the cache artifact.")
def ingest(out_path, **engine_kwargs):
    """Parse, validate and precompute all tables; optionally write a cache."""
    engine = _load_engine(**engine_kwargs)
    if out_path:
        engine.write_cache(out_path)
    corpus = engine.corpus
    click.echo(
        f"{len(corpus.concepts)} concepts, {len(corpus.videos)} videos, "
        f"{corpus.shot_count} shots, {len(corpus.contexts)} contexts"
    )
    if out_path:
        click.echo(f"cache written to {out_path}")


@cli.command()
@_engine_options
@click.option("--out", "out_path", type=click.Path(), default=None)
def simmatrix(out_path, **engine_kwargs):
    """Export the concept similarity matrix as CSV."""
    engine = _load_engine(**engine_kwargs)
    csv_text = engine.matrix.to_csv()
    if out_path:
        Path(out_path).write_text(csv_text, encoding="utf-8")
    else:
        click.echo(csv_text, nl=False)


@cli.command()
@_engine_options
@click.option("--out", "out_path", type=click.Path(), default=None)
def weights(out_path, **engine_kwargs):
    """Export the concept-in-video weight table as CSV."""
    engine = _load_engine(**engine_kwargs)
    csv_text = engine.table.to_csv()
    if out_path:
        Path(out_path).write_text(csv_text, encoding="utf-8")
    else:
        click.echo(csv_text, nl=False)


@cli.command()
@_engine_options
@click.argument("concept_name")
def rank(concept_name, **engine_kwargs):
    """Ranked videos for a concept name, as CSV rank,video_id,weight."""
    engine = _load_engine(**engine_kwargs)
    concept = engine.corpus.concept_by_name(concept_name)
    click.echo("rank,video_id,weight")
    for position, (vid, weight) in enumerate(
        rank_videos_for_concept(engine.table, concept.id), start=1
    ):
        click.echo(f"{position},{vid},{weight:.6f}")


@cli.command()
@_engine_options
@click.option("--trace", "trace_path", type=click.Path(), required=True,
              help="JSONL event trace file.")
@click.option("--command-map", "command_map_path", type=click.Path(), default=None)
def replay(trace_path, command_map_path, **engine_kwargs):
    """Replay a gesture/voice event trace against a fresh session."""
    engine = _load_engine(**engine_kwargs)
    command_map = CommandMap.from_file(command_map_path) if command_map_path else CommandMap()
    navigator = engine.navigator()
    session = navigator.start_session()
    transcript = replay_trace_file(trace_path, command_map, navigator, session)
    for entry in transcript:
        click.echo(entry.as_text())


@cli.command(name="evalstats")
@click.argument("votes", nargs=5, type=int)
def evalstats_command(votes):
    """Percentage distribution of votes over notes 1..5 (half-up rounded)."""
    counts = dict(zip(NOTES, votes))
    percentages = compute_evalstats(counts)
    click.echo("note,percent")
    for note in NOTES:
        click.echo(f"{note},{percentages[note]}")


@cli.command()
@_engine_options
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--command-map", "command_map_path", type=click.Path(), default=None)
@click.option("--session-ttl", type=float, default=1800.0, show_default=True,
              help="Idle session expiry in seconds.")
def serve(host, port, command_map_path, session_ttl, **engine_kwargs):
    """Start the HTTP/JSON session service."""
    import uvicorn

    from .service import create_app

    engine = _load_engine(**engine_kwargs)
    command_map = CommandMap.from_file(command_map_path) if command_map_path else CommandMap()
    app = create_app(engine, command_map=command_map, session_ttl=session_ttl)
    uvicorn.run(app, host=host, port=port)


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    except (CorpusError, UnknownItemError, InvalidTransitionError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except Exception as exc:  # internal failure
        click.echo(f"internal error: {exc}", err=True)
        return 2


if __name__ == "__main__":
    sys.exit(main())
