"""Command-line entry points for every pipeline.

All commands exit 0 on success and nonzero on any error; ``suite``
additionally exits nonzero when a verification fails, unless
``--allow-failures`` is given.  With a fixed ``--seed``, every output other
than the timing columns of reports is byte-reproducible.
"""

from __future__ import annotations

import json
import sys

import click

from . import maps as maps_mod
from . import report as report_mod
from . import verifier as verifier_mod
from .errors import RubikMapError
from .maps import MapM
from .presentation import export_script_text, rubik_generators
from .puzzle import PuzzleState, format_word, new_state

_map_option = click.option("--map", "map_path", type=click.Path(), default=None,
                           help="Path to a map file.")
_catalog_option = click.option("--catalog", "catalog_name", default=None,
                               help="Name of a stock map (e.g. cube, prism5).")
_seed_option = click.option("--seed", type=int, default=0, show_default=True,
                            help="Seed for randomized internals and scrambles.")


def _resolve_map(map_path: str | None, catalog_name: str | None) -> MapM:
    if (map_path is None) == (catalog_name is None):
        raise click.UsageError("give exactly one of --map or --catalog")
    if map_path is not None:
        return maps_mod.load(map_path)
    return maps_mod.catalog_map(catalog_name)


def _fail(exc: RubikMapError) -> "click.ClickException":
    err = click.ClickException(f"{type(exc).__name__}: {exc}")
    err.exit_code = 1
    return err


@click.group()
def main() -> None:
    """Generalized Rubik puzzles on 3-valent maps."""


@main.command()
@_map_option
@_catalog_option
@click.option("--out", type=click.Path(), default=None, help="Write the map file here.")
def build(map_path, catalog_name, out):
    """Construct and validate a map; write or print its file form."""
    try:
        m = _resolve_map(map_path, catalog_name)
        if out:
            maps_mod.save(m, out)
            click.echo(f"wrote {out}")
        else:
            click.echo(json.dumps(maps_mod.to_document(m), indent=2))
    except RubikMapError as exc:
        raise _fail(exc)


@main.command()
@_map_option
@_catalog_option
def info(map_path, catalog_name):
    """Print counts, face sizes and genus of a map."""
    try:
        m = _resolve_map(map_path, catalog_name)
    except RubikMapError as exc:
        raise _fail(exc)
    click.echo(f"name:        {m.name}")
    click.echo(f"vertices:    {m.n_vertices}")
    click.echo(f"edges:       {m.n_edges}")
    click.echo(f"faces:       {m.n_faces}")
    click.echo(f"face sizes:  {list(m.face_sizes())}")
    click.echo(f"genus:       {m.genus()}")
    click.echo(f"corners:     {3 * m.n_vertices}")
    click.echo(f"side edges:  {3 * m.n_vertices}")


@main.command()
@_map_option
@_catalog_option
@_seed_option
def order(map_path, catalog_name, seed):
    """Print the exact order of the puzzle group."""
    try:
        m = _resolve_map(map_path, catalog_name)
        click.echo(str(rubik_generators(m, seed=seed).group.order()))
    except RubikMapError as exc:
        raise _fail(exc)


@main.command()
@_map_option
@_catalog_option
@_seed_option
@click.option("--budget-seconds", type=float, default=None,
              help="Abort with BudgetExceeded past this wall time.")
@click.option("--format", "fmt", type=click.Choice(["table", "csv", "doc"]),
              default="table", show_default=True)
@click.option("--out", type=click.Path(), default=None,
              help="Also write csv/json/figures into this directory.")
def verify(map_path, catalog_name, seed, budget_seconds, fmt, out):
    """Verify the structure conjecture for one map."""
    try:
        m = _resolve_map(map_path, catalog_name)
        rep = verifier_mod.verify(m, seed=seed, budget_seconds=budget_seconds)
    except RubikMapError as exc:
        raise _fail(exc)
    _emit_reports([rep], fmt, out)
    if not rep.passed:
        sys.exit(2)


@main.command()
@click.option("--maps", "map_list", default=None,
              help="Comma-separated catalog names (default: the standard suite).")
@_seed_option
@click.option("--budget-seconds", type=float, default=None,
              help="Per-map wall-time budget.")
@click.option("--format", "fmt", type=click.Choice(["table", "csv", "doc"]),
              default="table", show_default=True)
@click.option("--out", type=click.Path(), default=None,
              help="Directory for suite.csv, suite.json and figures.")
@click.option("--allow-failures", is_flag=True, default=False,
              help="Exit 0 even when some map fails verification.")
def suite(map_list, seed, budget_seconds, fmt, out, allow_failures):
    """Verify the structure conjecture across a catalog of maps."""
    try:
        names = ([n.strip() for n in map_list.split(",") if n.strip()]
                 if map_list else maps_mod.suite_names())
        catalog = [maps_mod.catalog_map(n) for n in names]
    except RubikMapError as exc:
        raise _fail(exc)
    reports = verifier_mod.run_suite(catalog, seed=seed, budget_seconds=budget_seconds)
    _emit_reports(reports, fmt, out)
    failed = [r.name for r in reports if not r.passed]
    if failed:
        click.echo(f"failed: {', '.join(failed)}", err=True)
        if not allow_failures:
            sys.exit(2)


def _emit_reports(reports, fmt, out):
    if fmt == "table":
        click.echo(report_mod.to_table(reports), nl=False)
    elif fmt == "csv":
        click.echo(report_mod.to_csv(reports), nl=False)
    else:
        click.echo(report_mod.to_json(reports), nl=False)
    if out:
        for path in report_mod.write_outputs(reports, out):
            click.echo(f"wrote {path}", err=True)


@main.command("export-script")
@_map_option
@_catalog_option
@click.option("--out", type=click.Path(), default=None,
              help="Write the script here instead of stdout.")
def export_script(map_path, catalog_name, out):
    """Emit a computer-algebra script declaring the puzzle group."""
    try:
        m = _resolve_map(map_path, catalog_name)
        text = export_script_text(rubik_generators(m))
        if out:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
            click.echo(f"wrote {out}")
        else:
            click.echo(text, nl=False)
    except RubikMapError as exc:
        raise _fail(exc)
    except OSError as exc:
        raise click.ClickException(f"IoError: {exc}")


@main.command()
@_map_option
@_catalog_option
@_seed_option
@click.option("--moves", type=int, default=30, show_default=True)
@click.option("--out", type=click.Path(), default=None,
              help="Write the scrambled state file here.")
def scramble(map_path, catalog_name, seed, moves, out):
    """Scramble a fresh puzzle; print the move word."""
    try:
        m = _resolve_map(map_path, catalog_name)
        state = new_state(m, seed=seed)
        word = state.scramble(seed=seed, moves=moves)
    except RubikMapError as exc:
        raise _fail(exc)
    click.echo(format_word(state.presentation, word))
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            json.dump(state.to_doc(), fh, indent=2)
            fh.write("\n")
        click.echo(f"wrote {out}", err=True)


@main.command()
@click.option("--state", "state_path", type=click.Path(), required=True,
              help="A state file written by scramble --out.")
@_seed_option
def solve(state_path, seed):
    """Print a move word returning the given state to solved."""
    try:
        with open(state_path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        state = PuzzleState.from_doc(doc)
        solution = state.solve()
        state.apply_word(solution)
        if not state.is_solved():
            raise RubikMapError("solution word failed to solve; engine bug")
    except OSError as exc:
        raise click.ClickException(f"IoError: {exc}")
    except json.JSONDecodeError as exc:
        raise click.ClickException(f"MalformedInput: {exc}")
    except RubikMapError as exc:
        raise _fail(exc)
    click.echo(format_word(state.presentation, solution))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the play service (the browser client's backend)."""
    import uvicorn

    uvicorn.run("rubikmap.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
