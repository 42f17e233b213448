"""Cross-table reader/writer for formal contexts.

First row holds attribute names, first column object names; X, x or 1
marks incidence.  The delimiter is sniffed from the header line (tab,
semicolon, then comma).
"""

from __future__ import annotations

from ..core import AttributeTerm, FormalContext, Op
from ..errors import ParseError, ValidationError
from ..terms import parse_term, render_term

_PRESENT = {"X", "x", "1"}
_ABSENT = {"", "0", "."}


def _sniff_delimiter(header: str) -> str:
    for candidate in ("\t", ";", ","):
        if candidate in header:
            return candidate
    raise ParseError("cannot determine table delimiter", line=1)


def _attribute_of(cell: str, lineno: int) -> AttributeTerm:
    cell = cell.strip()
    if "=" in cell:
        return parse_term(cell, line=lineno)
    if not cell:
        raise ParseError("empty attribute name", line=lineno)
    return AttributeTerm(cell)


def parse_context_table(text: str | bytes) -> FormalContext:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [line for line in text.splitlines()]
    rows = [(n, line) for n, line in enumerate(lines, start=1)
            if line.strip()]
    if not rows:
        raise ParseError("empty table", line=1)
    header_line = rows[0][1]
    delimiter = _sniff_delimiter(header_line)
    header = header_line.split(delimiter)
    attributes = [_attribute_of(cell, rows[0][0]) for cell in header[1:]]
    if len(set(attributes)) != len(attributes):
        raise ParseError("duplicate attribute name", line=rows[0][0])

    objects: list[str] = []
    incidence: set[tuple[int, int]] = set()
    for lineno, line in rows[1:]:
        fields = line.split(delimiter)
        if len(fields) != len(header):
            raise ParseError(
                f"ragged row: {len(fields)} fields, header has {len(header)}",
                line=lineno)
        name = fields[0].strip()
        if not name:
            raise ParseError("empty object name", line=lineno)
        if name in objects:
            raise ParseError(f"duplicate object name {name!r}", line=lineno)
        gi = len(objects)
        objects.append(name)
        for a, mark in enumerate(fields[1:]):
            mark = mark.strip()
            if mark in _PRESENT:
                incidence.add((gi, a))
            elif mark not in _ABSENT:
                raise ParseError(f"unrecognized incidence mark {mark!r}",
                                 line=lineno)
    return FormalContext(tuple(objects), tuple(attributes),
                         frozenset(incidence))


def serialize_context_table(ctx: FormalContext) -> str:
    """Emit a cross table; bare-tag attributes stay bare in the header."""
    headers = []
    for term in ctx.attributes:
        if term.value == "" and term.op is Op.EQUALS:
            headers.append(term.tag)
        else:
            headers.append(render_term(term))
    cells = [""] + headers + list(ctx.objects)
    delimiter = "," if not any("," in c for c in cells) else "\t"
    if any(delimiter in c or "\n" in c for c in cells):
        raise ValidationError(
            "table cells may not contain the delimiter or newlines")
    lines = [delimiter.join([""] + headers)]
    marks = {pair: "X" for pair in ctx.incidence}
    for gi, name in enumerate(ctx.objects):
        row = [name] + [marks.get((gi, a), "")
                        for a in range(len(ctx.attributes))]
        lines.append(delimiter.join(row))
    return "\n".join(lines) + "\n"
