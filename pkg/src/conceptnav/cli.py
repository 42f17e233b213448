"""Command-line front end: convert, inspect, query, draw, serve."""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .diagram import emit_dot, emit_json
from .errors import ConceptNavError
from .formats import (
    clif_to_fcif,
    context_from_fcif,
    fcif_from_context,
    fcif_to_clif,
    parse_clif,
    parse_fcif,
    parse_soif,
    parse_urc,
    parse_urc_sgml,
    serialize_clif,
    serialize_context_table,
    serialize_fcif,
    serialize_soif,
    serialize_urc,
    serialize_urc_sgml,
)
from .session import (
    FORMATS,
    Session,
    load_ordered_context,
    resolve_attribute,
    resolve_scale_set,
    sniff_format,
)
from .terms import parse_cli_term

_format_option = click.option(
    "--from", "-f", "from_format", type=click.Choice(FORMATS), default=None,
    help="Input format (inferred from the file extension when omitted).")
_scales_option = click.option(
    "--scales", "-s", "scales_spec", default=None,
    help="Scale set: a bundled name (urc-demo), a file path, or the "
         "CONCEPTNAV_SCALES default.")


@click.group()
@click.version_option(package_name="conceptnav")
def main() -> None:
    """Concept-lattice toolkit for resource meta-information."""


def _fail(exc: Exception) -> None:
    raise click.ClickException(str(exc))


def _load_session(input_path: str, from_format: str | None,
                  scales_spec: str | None) -> Session:
    try:
        fmt = from_format or sniff_format(input_path)
        scales = resolve_scale_set(scales_spec)
        return Session.load(input_path, fmt, scales)
    except (ConceptNavError, OSError) as exc:
        _fail(exc)


def _write(data: str | bytes, output: str | None) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if output in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(output).write_bytes(data)


@main.command()
@_format_option
@click.option("--to", "-t", "to_format", type=click.Choice(FORMATS),
              required=True, help="Output format.")
@_scales_option
@click.option("--output", "-o", default=None,
              help="Output file (stdout when omitted).")
@click.argument("input_path", metavar="INPUT")
def convert(from_format, to_format, scales_spec, output, input_path) -> None:
    """Convert between meta-information formats.

    Raw record formats (soif, urc, urc-sgml) convert forward into fcif,
    clif, or table via conceptual scaling; fcif/clif/table interconvert
    freely; raw-to-raw conversion is supported within the same record
    family (urc and urc-sgml share one, soif its own).
    """
    try:
        fmt = from_format or sniff_format(input_path)
        data = Path(input_path).read_bytes()
        _write(_convert(data, fmt, to_format, scales_spec), output)
    except (ConceptNavError, OSError) as exc:
        _fail(exc)


def _convert(data: bytes, fmt: str, to_format: str,
             scales_spec: str | None) -> str | bytes:
    if to_format == "soif":
        if fmt != "soif":
            raise click.ClickException(
                "only soif inputs can be written as soif")
        return serialize_soif(parse_soif(data))
    if to_format in ("urc", "urc-sgml"):
        if fmt == "urc":
            record = parse_urc(data)
        elif fmt == "urc-sgml":
            record = parse_urc_sgml(data)
        else:
            raise click.ClickException(
                f"only urc/urc-sgml inputs can be written as {to_format}")
        return (serialize_urc(record) if to_format == "urc"
                else serialize_urc_sgml(record))

    # structured targets: go through a context document
    if fmt == "fcif":
        doc = parse_fcif(data)
    elif fmt == "clif":
        doc = parse_clif(data)
        if to_format == "clif":
            return serialize_clif(doc)
        doc = clif_to_fcif(doc)
    else:
        scales = resolve_scale_set(scales_spec)
        octx, type_name = load_ordered_context(data, fmt, scales)
        doc = fcif_from_context(octx, type_name)
    if to_format == "fcif":
        return serialize_fcif(doc)
    if to_format == "clif":
        return serialize_clif(fcif_to_clif(doc))
    return serialize_context_table(context_from_fcif(doc).base)


@main.command()
@_format_option
@_scales_option
@click.argument("input_path", metavar="INPUT")
def lattice(from_format, scales_spec, input_path) -> None:
    """Print size statistics of the input's concept lattice."""
    session = _load_session(input_path, from_format, scales_spec)
    ctx = session.context
    edge_count = sum(len(lows) for lows in session.lattice.lower_covers)
    click.echo(f"objects: {len(ctx.objects)}")
    click.echo(f"attributes: {len(ctx.attributes)}")
    click.echo(f"incidence: {len(ctx.incidence)}")
    click.echo(f"concepts: {len(session.lattice)}")
    click.echo(f"cover edges: {edge_count}")
    click.echo(f"height: {max(session.layout.layers)}")


@main.command()
@_format_option
@_scales_option
@click.argument("input_path", metavar="INPUT")
@click.argument("terms", nargs=-1)
def query(from_format, scales_spec, input_path, terms) -> None:
    """Report the concept the given attribute terms generate.

    Terms use the interchange surface syntax (tag=value, tag<=value); a
    bare tag matches the unique declared term with that tag.  With no
    terms the report shows the top concept.
    """
    session = _load_session(input_path, from_format, scales_spec)
    lattice_ = session.lattice
    ctx = session.context
    try:
        indices = []
        for text in terms:
            tag, op, value = parse_cli_term(text)
            indices.append(resolve_attribute(ctx, tag, op, value))
    except (ConceptNavError, KeyError) as exc:
        _fail(exc.args[0] if exc.args else exc)
    concept_index = lattice_.meet({lattice_.mu[m] for m in indices})
    concept = lattice_.concepts[concept_index]
    extent = [ctx.objects[g] for g in sorted(concept.extent)]
    intent = [ctx.attributes[m].render() for m in sorted(concept.intent)]
    click.echo(f"concept #{concept_index}")
    click.echo(f"extent ({len(extent)}): {', '.join(extent)}")
    click.echo(f"intent ({len(intent)}): {', '.join(intent)}")
    uppers = " ".join(f"#{c}" for c in lattice_.upper_covers[concept_index])
    lowers = " ".join(f"#{c}" for c in lattice_.lower_covers[concept_index])
    click.echo(f"upper covers: {uppers}")
    click.echo(f"lower covers: {lowers}")


@main.command()
@_format_option
@_scales_option
@click.option("--out", "out_format", type=click.Choice(["dot", "json"]),
              default="dot", show_default=True, help="Diagram format.")
@click.option("--output", "-o", default=None,
              help="Output file (stdout when omitted).")
@click.argument("input_path", metavar="INPUT")
def diagram(from_format, scales_spec, out_format, output, input_path) -> None:
    """Emit the line diagram of the input's concept lattice."""
    session = _load_session(input_path, from_format, scales_spec)
    if out_format == "dot":
        text = emit_dot(session.lattice, session.layout)
    else:
        text = emit_json(session.lattice, session.layout, session.type_name)
    _write(text, output)


@main.command()
@_format_option
@_scales_option
@click.argument("input_path", metavar="INPUT")
def validate(from_format, scales_spec, input_path) -> None:
    """Parse and validate an input; exit nonzero on any defect."""
    session = _load_session(input_path, from_format, scales_spec)
    ctx = session.octx.base
    click.echo(f"{input_path}: OK ({len(ctx.objects)} objects, "
               f"{len(ctx.attributes)} attributes, "
               f"{len(ctx.incidence)} incidences)")


@main.command()
@_format_option
@_scales_option
@click.option("--port", "-p", default=8000, show_default=True, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--ui", "ui_dir", default=None,
              help="Directory of built explorer assets to serve at /.")
@click.argument("input_path", metavar="INPUT")
def serve(from_format, scales_spec, port, host, ui_dir, input_path) -> None:
    """Serve the lattice navigation API (and optionally the explorer UI)."""
    from .service import serve as run_service

    session = _load_session(input_path, from_format, scales_spec)
    if ui_dir is not None and not Path(ui_dir).is_dir():
        _fail(ValueError(f"--ui {ui_dir!r} is not a directory"))
    try:
        run_service(session, host=host, port=port, ui_dir=ui_dir)
    except OSError as exc:
        _fail(exc)


if __name__ == "__main__":
    main()
