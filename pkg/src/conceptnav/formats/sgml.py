"""TEI-flavored markup for resource-characteristic records.

A purpose-built recognizer for one fragment shape, not a general SGML
engine: ``urc`` wraps leaf elements (urn, title, author, date, or any
unknown tag, each holding text) and an optional ``locationGroup`` whose
``list`` holds ``item`` elements; each item carries a ``url`` plus leaf
pairs for that location.  The abbreviated closing tag ``</>`` closes the
innermost open element.
"""

from __future__ import annotations

import re

from ..errors import ParseError, ValidationError
from .urc import UrcLocation, UrcRecord

_CONTAINERS = ("urc", "locationGroup", "list", "item")
_TAG_RE = re.compile(r"<(/?)([^<>\s/]*)\s*(/?)>")
_NAME_RE = re.compile(r"[A-Za-z][-A-Za-z0-9._:]*$")


def parse_urc_sgml(text: str | bytes) -> UrcRecord:
    if isinstance(text, bytes):
        text = text.decode("latin-1")
    parser = _Recognizer(text)
    parser.run()
    return parser.result()


class _Recognizer:
    def __init__(self, text: str):
        self.text = text
        self.stack: list[str] = []
        self.leaf_text: str | None = None
        self.urn: str | None = None
        self.global_pairs: list[tuple[str, str]] = []
        self.items: list[dict] = []
        self.in_group = False
        self.saw_urc = False

    def _line(self, pos: int) -> int:
        return self.text.count("\n", 0, pos) + 1

    def run(self) -> None:
        pos = 0
        for match in _TAG_RE.finditer(self.text):
            self._text_between(self.text[pos:match.start()], pos)
            closing, name, _ = match.groups()
            if closing:
                self._close(name, match.start())
            else:
                self._open(name, match.start())
            pos = match.end()
        self._text_between(self.text[pos:], pos)
        if self.stack:
            raise ParseError(
                f"unclosed element <{self.stack[-1]}>",
                line=self._line(len(self.text)))
        if not self.saw_urc:
            raise ParseError("no <urc> element found", line=1)

    def _text_between(self, chunk: str, pos: int) -> None:
        if self.leaf_text is not None:
            self.leaf_text += chunk
            return
        if chunk.strip():
            raise ParseError(
                f"text outside any element: {chunk.strip()!r}",
                line=self._line(pos))

    def _open(self, name: str, pos: int) -> None:
        if not name:
            raise ParseError("empty element name", line=self._line(pos))
        if self.leaf_text is not None:
            raise ParseError(
                f"element <{self.stack[-1]}> cannot contain elements",
                line=self._line(pos))
        top = self.stack[-1] if self.stack else None
        if name == "urc":
            if top is not None or self.saw_urc:
                raise ParseError("misplaced <urc>", line=self._line(pos))
            self.saw_urc = True
        elif top is None:
            raise ParseError(
                f"element <{name}> outside <urc>", line=self._line(pos))
        elif name == "locationGroup":
            if top != "urc" or self.in_group:
                raise ParseError("misplaced <locationGroup>",
                                 line=self._line(pos))
            self.in_group = True
        elif name == "list":
            if top != "locationGroup":
                raise ParseError("misplaced <list>", line=self._line(pos))
        elif name == "item":
            if top != "list":
                raise ParseError("misplaced <item>", line=self._line(pos))
            self.items.append({"url": None, "pairs": []})
        else:
            if top not in ("urc", "item"):
                raise ParseError(
                    f"element <{name}> not allowed inside <{top}>",
                    line=self._line(pos))
            self.leaf_text = ""
        self.stack.append(name)

    def _close(self, name: str, pos: int) -> None:
        if not self.stack:
            raise ParseError("closing tag with nothing open",
                             line=self._line(pos))
        current = self.stack[-1]
        if name and name != current:
            raise ParseError(
                f"mismatched closing tag </{name}> for <{current}>",
                line=self._line(pos))
        self.stack.pop()
        if current in _CONTAINERS:
            if current == "item" and self.items[-1]["url"] is None:
                raise ParseError("item has no <url>", line=self._line(pos))
            return
        content = self.leaf_text if self.leaf_text is not None else ""
        self.leaf_text = None
        inside_item = bool(self.stack) and self.stack[-1] == "item"
        if current == "urn" and not inside_item:
            if self.urn is not None:
                raise ParseError("duplicate <urn>", line=self._line(pos))
            self.urn = content.strip()
        elif current == "url" and inside_item:
            if self.items[-1]["url"] is not None:
                raise ParseError("item has two <url> elements",
                                 line=self._line(pos))
            self.items[-1]["url"] = "url:" + content.strip()
        elif inside_item:
            self.items[-1]["pairs"].append((current, content))
        else:
            self.global_pairs.append((current, content))

    def result(self) -> UrcRecord:
        return UrcRecord(
            self.urn,
            tuple(self.global_pairs),
            tuple(UrcLocation(item["url"], tuple(item["pairs"]))
                  for item in self.items))


def serialize_urc_sgml(record: UrcRecord) -> str:
    """Canonical fragment form; ``parse_urc_sgml`` inverts it exactly.

    Record-level pairs use explicit closing tags; location pairs use the
    abbreviated ``</>``, mirroring the usual hand-written shape.
    """
    lines = ["<urc>"]
    if record.urn is not None:
        lines.append(f"<urn>{_content(record.urn)}</urn>")
    for key, value in record.global_pairs:
        lines.append(f"<{_name(key)}>{_content(value)}</{key}>")
    if record.locations:
        lines.append("<locationGroup>")
        lines.append("<list>")
        for location in record.locations:
            url = location.url
            if url.lower().startswith("url:"):
                url = url[4:]
            lines.append(f"<item><url>{_content(url)}</url>")
            for key, value in location.pairs:
                lines.append(f"<{_name(key)}>{_content(value)}</>")
            lines.append("</item>")
        lines.append("</list>")
        lines.append("</locationGroup>")
    lines.append("</urc>")
    return "\n".join(lines) + "\n"


def _name(key: str) -> str:
    if key in _CONTAINERS or key in ("urn", "url") or not _NAME_RE.match(key):
        raise ValidationError(f"pair key {key!r} cannot be an element name")
    return key


def _content(value: str) -> str:
    if "<" in value or ">" in value or "\n" in value:
        raise ValidationError(
            f"value {value!r} cannot be serialized in markup")
    return value
