"""Summary-object templates: byte-counted attribute/value pairs per URL.

A template is ``@TYPE { URL`` followed by ``Name {count}:`` lines, each
carrying exactly ``count`` bytes of value after a single tab (newlines
inside the value included), and ends with ``}`` on its own line.  An
``@ UPDATE {`` header with nothing after the brace wraps a stream of
member templates.  Everything is raw bytes; no character decoding is
applied.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError, ValidationError
from ..scaling import RawRecord

_HEADER_RE = re.compile(rb"@[ \t]*([^\s{]+)[ \t]*\{[ \t]*([^\n]*)")
_PAIR_RE = re.compile(rb"[ \t]*([^{\n]*?)[ \t]*\{(\d+)\}:")


@dataclass(frozen=True)
class SoifTemplate:
    template_type: str
    url: str
    pairs: tuple[tuple[str, bytes], ...]


class _Cursor:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def at_end(self) -> bool:
        return self.pos >= len(self.data)

    def skip_blank(self) -> None:
        while self.pos < len(self.data) and \
                self.data[self.pos:self.pos + 1].isspace():
            self.pos += 1

    def take_line(self) -> bytes:
        end = self.data.find(b"\n", self.pos)
        if end < 0:
            line = self.data[self.pos:]
            self.pos = len(self.data)
        else:
            line = self.data[self.pos:end]
            self.pos = end + 1
        return line


def parse_soif(data: bytes) -> list[SoifTemplate]:
    """Parse a template stream (plain or update-wrapped)."""
    if isinstance(data, str):
        raise TypeError("soif input must be bytes")
    cursor = _Cursor(data)
    templates: list[SoifTemplate] = []
    cursor.skip_blank()
    while not cursor.at_end():
        header_pos = cursor.pos
        template_type, rest = _parse_header(cursor, header_pos)
        if template_type == "UPDATE" and not rest.strip():
            while True:
                cursor.skip_blank()
                if cursor.at_end():
                    raise ParseError("unterminated update stream",
                                     offset=header_pos)
                if cursor.data[cursor.pos:cursor.pos + 1] == b"}":
                    line = cursor.take_line()
                    if line.strip() != b"}":
                        raise ParseError("malformed update terminator",
                                         offset=cursor.pos)
                    break
                member_pos = cursor.pos
                member_type, member_rest = _parse_header(cursor, member_pos)
                if member_type == "UPDATE" and not member_rest.strip():
                    raise ParseError("nested update stream",
                                     offset=member_pos)
                templates.append(
                    _parse_body(cursor, member_type, member_rest, member_pos))
        else:
            templates.append(
                _parse_body(cursor, template_type, rest, header_pos))
        cursor.skip_blank()
    return templates


def _parse_header(cursor: _Cursor, start: int) -> tuple[str, bytes]:
    match = _HEADER_RE.match(cursor.data, cursor.pos)
    if not match:
        raise ParseError("expected template header '@ TYPE { URL'",
                         offset=start)
    cursor.pos = match.end()
    if cursor.data[cursor.pos:cursor.pos + 1] == b"\n":
        cursor.pos += 1
    return match.group(1).decode("latin-1"), match.group(2)


def _parse_body(cursor: _Cursor, template_type: str, rest: bytes,
                start: int) -> SoifTemplate:
    rest = rest.strip()
    inline_end = rest.endswith(b"}")
    if inline_end:
        url = rest[:-1].strip()
    else:
        url = rest
    if not url:
        raise ParseError("template header is missing its URL", offset=start)
    pairs: list[tuple[str, bytes]] = []
    if not inline_end:
        while True:
            if cursor.at_end():
                raise ParseError("unterminated template (missing '}')",
                                 offset=start)
            line_pos = cursor.pos
            peek = cursor.data[cursor.pos:cursor.pos + 64].lstrip(b" \t")
            if peek.startswith(b"}"):
                line = cursor.take_line()
                if line.strip() != b"}":
                    raise ParseError("text after template terminator",
                                     offset=line_pos)
                break
            if peek.startswith(b"\n") or not peek:
                cursor.take_line()
                continue
            pairs.append(_parse_pair(cursor, line_pos))
    return SoifTemplate(template_type, url.decode("latin-1"), tuple(pairs))


def _parse_pair(cursor: _Cursor, start: int) -> tuple[str, bytes]:
    match = _PAIR_RE.match(cursor.data, cursor.pos)
    if not match or not match.group(1):
        raise ParseError("expected attribute line 'Name {count}:'",
                         offset=start)
    cursor.pos = match.end()
    if cursor.data[cursor.pos:cursor.pos + 1] != b"\t":
        raise ParseError("missing tab between count and value",
                         offset=cursor.pos)
    cursor.pos += 1
    count = int(match.group(2))
    value = cursor.data[cursor.pos:cursor.pos + count]
    if len(value) < count:
        raise ParseError(
            f"truncated stream: value needs {count} bytes, "
            f"{len(value)} left", offset=cursor.pos)
    cursor.pos += count
    terminator = cursor.data[cursor.pos:cursor.pos + 1]
    if terminator not in (b"\n", b""):
        raise ParseError(
            "declared count does not end at a line boundary",
            offset=cursor.pos)
    cursor.pos += len(terminator)
    return match.group(1).decode("latin-1"), value


def serialize_soif(templates: list[SoifTemplate], *, update: bool = False) -> bytes:
    """Canonical byte form; counts are recomputed from the values."""
    chunks: list[bytes] = []
    if update:
        chunks.append(b"@ UPDATE {\n")
    for template in templates:
        for token, what in ((template.template_type, "template type"),
                            (template.url, "url")):
            if not token or re.search(r"[\s{}]", token):
                raise ValidationError(
                    f"{what} {token!r} cannot be serialized")
        chunks.append(b"@" + template.template_type.encode("latin-1")
                      + b" { " + template.url.encode("latin-1") + b"\n")
        for name, value in template.pairs:
            if not name or name != name.strip() or \
                    any(ch in name for ch in "{}\n\t"):
                raise ValidationError(
                    f"attribute name {name!r} cannot be serialized")
            chunks.append(f"{name} {{{len(value)}}}:\t".encode("latin-1"))
            chunks.append(value)
            chunks.append(b"\n")
        chunks.append(b"}\n")
    if update:
        chunks.append(b"}\n")
    return b"".join(chunks)


def soif_to_records(templates: list[SoifTemplate]) -> list[RawRecord]:
    """One raw record per template: name = URL, pairs copied in order.

    Templates cannot express order information, so children lists come
    out empty; a caller may still add a directory/file parent row by
    hand.  Values are decoded byte-transparently (latin-1).
    """
    seen: set[str] = set()
    records: list[RawRecord] = []
    for template in templates:
        if template.url in seen:
            raise ValidationError(f"duplicate template URL {template.url!r}")
        seen.add(template.url)
        records.append(RawRecord(
            template.url,
            tuple((name, value.decode("latin-1"))
                  for name, value in template.pairs)))
    return records
