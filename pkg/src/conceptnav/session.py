"""Loading inputs of any supported format into a ready-to-query session."""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .core import (
    AttributeTerm,
    ConceptLattice,
    FormalContext,
    Op,
    OrderedContext,
    enumerate_concepts,
    order_close_incidence,
)
from .diagram import Layout, layout_coordinates
from .errors import ValidationError
from .formats import (
    clif_to_fcif,
    context_from_fcif,
    parse_clif,
    parse_context_table,
    parse_fcif,
    parse_soif,
    parse_urc,
    parse_urc_sgml,
    soif_to_records,
    urc_to_records,
)
from .scaling import EMPTY_SCALES, ScaleSet, apply_scales, parse_scale_set

FORMATS = ("soif", "urc", "urc-sgml", "fcif", "clif", "table")
SCALES_ENV_VAR = "CONCEPTNAV_SCALES"

_EXTENSIONS = {
    ".soif": "soif",
    ".urc": "urc",
    ".sgml": "urc-sgml",
    ".fcif": "fcif",
    ".clif": "clif",
    ".cxt": "table",
    ".csv": "table",
    ".tsv": "table",
    ".table": "table",
}


def sniff_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    try:
        return _EXTENSIONS[suffix]
    except KeyError:
        raise ValidationError(
            f"cannot infer format from {Path(path).name!r}; "
            f"pass one of {', '.join(FORMATS)}") from None


def resolve_scale_set(spec: str | None) -> ScaleSet:
    """A bundled set name, a file path, or the environment default."""
    if spec is None:
        spec = os.environ.get(SCALES_ENV_VAR)
        if not spec:
            return EMPTY_SCALES
    bundled = resources.files("conceptnav") / "data" / f"{spec}.scales"
    if bundled.is_file():
        return parse_scale_set(bundled.read_text())
    path = Path(spec)
    if path.is_file():
        return parse_scale_set(path.read_text())
    raise ValidationError(f"no scale set named {spec!r} (not bundled, "
                          "and no such file)")


def load_ordered_context(data: bytes, fmt: str,
                         scales: ScaleSet = EMPTY_SCALES,
                         ) -> tuple[OrderedContext, str | None]:
    """Parse and interpret input bytes; returns the context and type name."""
    if fmt == "fcif":
        doc = parse_fcif(data)
        return context_from_fcif(doc), doc.type_name
    if fmt == "clif":
        doc = clif_to_fcif(parse_clif(data))
        return context_from_fcif(doc), doc.type_name
    if fmt == "table":
        return OrderedContext(parse_context_table(data), {}, {}), None
    if fmt == "soif":
        records = soif_to_records(parse_soif(data))
    elif fmt == "urc":
        records = urc_to_records(parse_urc(data))
    elif fmt == "urc-sgml":
        records = urc_to_records(parse_urc_sgml(data))
    else:
        raise ValidationError(
            f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    return apply_scales(records, scales), None


@dataclass(frozen=True)
class Session:
    """An immutable loaded input: context, lattice, and layout together."""

    source: str
    octx: OrderedContext
    context: FormalContext
    lattice: ConceptLattice
    layout: Layout
    type_name: str | None = None

    @classmethod
    def load(cls, path: str | Path, fmt: str | None = None,
             scales: ScaleSet = EMPTY_SCALES) -> "Session":
        path = Path(path)
        fmt = fmt or sniff_format(path)
        octx, type_name = load_ordered_context(path.read_bytes(), fmt, scales)
        return cls.from_context(octx, source=str(path), type_name=type_name)

    @classmethod
    def from_context(cls, octx: OrderedContext, *, source: str = "<memory>",
                     type_name: str | None = None) -> "Session":
        closed = order_close_incidence(octx)
        lattice = enumerate_concepts(closed)
        layout = layout_coordinates(lattice)
        return cls(source, octx, closed, lattice, layout, type_name)


def resolve_attribute(ctx: FormalContext, tag: str, op: Op | None = None,
                      value: str | None = None) -> int:
    """Find the declared attribute a surface term names.

    An exact (tag, op, value) match wins; an empty or omitted value falls
    back to the unique declared term with that tag, and errors when the
    tag is unknown or ambiguous.
    """
    if op is not None and value is not None:
        exact = AttributeTerm(tag, op, value)
        for i, term in enumerate(ctx.attributes):
            if term == exact:
                return i
    if value in (None, ""):
        candidates = [i for i, term in enumerate(ctx.attributes)
                      if term.tag == tag]
        if len(candidates) == 1:
            return candidates[0]
        if len(candidates) > 1:
            options = ", ".join(ctx.attributes[i].render() for i in candidates)
            raise KeyError(
                f"attribute tag {tag!r} is ambiguous; candidates: {options}")
    known = ", ".join(term.render() for term in ctx.attributes)
    shown = tag if value in (None, "") else \
        AttributeTerm(tag, op or Op.EQUALS, value).render()
    raise KeyError(
        f"unknown attribute term {shown!r}; known terms: {known}")
