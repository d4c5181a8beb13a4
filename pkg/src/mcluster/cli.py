"""Command-line front door: mutate, enumerate, polygon reports, serve."""

from __future__ import annotations

import sys

import click

from . import exports
from .mutclass import dynkin_plain_quiver, enumerate_class, save_class
from .polygon import Polygon, PolygonError
from .quiver import (
    ColouredQuiver,
    PlainQuiver,
    QuiverError,
    UnknownVertexError,
    mutate_procedural,
    seed_from_acyclic,
    validate,
)

EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_UNKNOWN_VERTEX = 3


@click.group()
def main():
    """Coloured quiver mutation and the polygon model, from the shell."""


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _write_out(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command()
@click.argument("input_file", type=click.Path())
@click.option("--vertex", required=True, help="Vertex to mutate at.")
@click.option("--count", default=1, show_default=True, help="Number of mutations.")
@click.option("--format", "fmt", type=click.Choice(["json", "dot"]), default="json", show_default=True)
@click.option("--out", type=click.Path(), default=None, help="Output file (stdout otherwise).")
def mutate(input_file, vertex, count, fmt, out):
    """Apply coloured mutation COUNT times at VERTEX."""
    try:
        with open(input_file) as fh:
            text = fh.read()
    except OSError as exc:
        _fail(EXIT_PARSE, f"cannot read {input_file}: {exc}")
    try:
        quiver = ColouredQuiver.from_json(text)
    except QuiverError as exc:
        _fail(EXIT_PARSE, str(exc))
    if not validate(quiver).ok:
        _fail(EXIT_INVALID, "input quiver fails the tilting-quiver checks")
    # vertex labels may be ints in the file
    labels = {str(v): v for v in quiver.vertices}
    if str(vertex) not in labels:
        _fail(EXIT_UNKNOWN_VERTEX, f"unknown vertex {vertex!r}")
    v = labels[str(vertex)]
    try:
        for _ in range(count):
            quiver = mutate_procedural(quiver, v)
    except UnknownVertexError as exc:
        _fail(EXIT_UNKNOWN_VERTEX, str(exc))
    except QuiverError as exc:
        _fail(EXIT_INVALID, str(exc))
    if fmt == "dot":
        _write_out(exports.quiver_to_dot(quiver), out)
    else:
        _write_out(quiver.to_json() + "\n", out)


def _load_seed(spec: str, m: int) -> ColouredQuiver:
    if spec and spec[0] in "ADEade" and spec[1:].isdigit():
        return seed_from_acyclic(dynkin_plain_quiver(spec), m)
    try:
        with open(spec) as fh:
            plain = PlainQuiver.from_json(fh.read())
    except OSError as exc:
        raise QuiverError(f"unknown seed spec {spec!r}: {exc}") from exc
    return seed_from_acyclic(plain, m)


@main.command()
@click.argument("seed")
@click.option("--m", "m", default=1, show_default=True, help="Colour parameter.")
@click.option("--limit", default=100000, show_default=True, help="Mutation budget.")
@click.option("--out", type=click.Path(), default=None, help="Class file destination.")
def enumerate(seed, m, limit, out):
    """Enumerate the mutation class of SEED (a Dynkin name or a quiver file)."""
    try:
        start = _load_seed(seed, m)
        cls = enumerate_class(start, limit)
    except QuiverError as exc:
        _fail(EXIT_PARSE, str(exc))
    if out:
        save_class(cls, out)
    click.echo(f"size={cls.size} complete={'true' if cls.complete else 'false'}")


@main.command()
@click.argument("subcommand", type=click.Choice(["diagonals", "count", "facets", "svg"]))
@click.option("--m", "m", required=True, type=int)
@click.option("--n", "n", required=True, type=int)
@click.option("--out", type=click.Path(), default=None)
def polygon(subcommand, m, n, out):
    """Reports on the (m*n+2)-gon: diagonals, count, facets or an svg."""
    try:
        poly = Polygon(m, n)
        if subcommand == "diagonals":
            lines = "\n".join(f"{i} {j}" for i, j in poly.all_m_diagonals())
            _write_out(lines + "\n", out)
        elif subcommand == "count":
            _write_out(f"{poly.count_angulations()}\n", out)
        elif subcommand == "facets":
            _write_out(poly.facet_checks().summary() + "\n", out)
        else:
            svg = exports.angulation_to_svg(poly.fan_angulation())
            target = out or f"polygon-{m}-{n}.svg"
            with open(target, "w") as fh:
                fh.write(svg)
            click.echo(f"wrote {target}")
    except PolygonError as exc:
        _fail(EXIT_PARSE, str(exc))


@main.command()
@click.option("--port", default=8157, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--ui-dir", type=click.Path(), default=None,
              help="Static UI directory to mount at / (frontend/dist by default when present).")
def serve(port, host, ui_dir):
    """Run the local session service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(ui_dir=ui_dir), host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
