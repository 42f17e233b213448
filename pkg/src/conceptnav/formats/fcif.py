"""Formal-context interchange documents: parse, serialize, validate.

The document has four fixed-order sections.  TYPE holds an optional
type name (a run of question marks reads as "unknown").  OBJECT rows
list, per object, the more specialized objects filed under it.
ATTRIBUTE rows do the same for attribute terms (the listed terms are
implied by the row's term).  INCIDENCE rows assert which declared terms
each object carries.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import AttributeTerm
from ..errors import ParseError, ValidationError
from ..terms import parse_term, render_term
from ._lex import parse_name_rows, parse_term_rows, split_sections

SECTIONS = ("TYPE", "OBJECT", "ATTRIBUTE", "INCIDENCE")


@dataclass(frozen=True)
class FcifDocument:
    type_name: str | None
    object_rows: tuple[tuple[str, tuple[str, ...]], ...]
    attribute_rows: tuple[tuple[AttributeTerm, tuple[AttributeTerm, ...]], ...]
    incidence_rows: tuple[tuple[str, tuple[AttributeTerm, ...]], ...]

    def __post_init__(self) -> None:
        objects = [name for name, _ in self.object_rows]
        if len(set(objects)) != len(objects):
            raise ValidationError("duplicate object row")
        terms = [term for term, _ in self.attribute_rows]
        if len(set(terms)) != len(terms):
            raise ValidationError("duplicate attribute row")
        declared_objects = set(objects)
        declared_terms = set(terms)
        row_names = [name for name, _ in self.incidence_rows]
        if len(set(row_names)) != len(row_names):
            raise ValidationError("duplicate incidence row")
        for name, row_terms in self.incidence_rows:
            if name not in declared_objects:
                raise ValidationError(
                    f"incidence row references undeclared object {name!r}")
            for term in row_terms:
                if term not in declared_terms:
                    raise ValidationError(
                        f"incidence row {name!r} references undeclared "
                        f"attribute {render_term(term)}")

    @property
    def objects(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.object_rows)

    @property
    def attributes(self) -> tuple[AttributeTerm, ...]:
        return tuple(term for term, _ in self.attribute_rows)


def _decode(text: str | bytes) -> str:
    if isinstance(text, bytes):
        return text.decode("utf-8")
    return text


def _type_name(lines: list[tuple[int, str]]) -> str | None:
    body = [(n, line.strip()) for n, line in lines if line.strip()]
    if not body:
        return None
    if len(body) > 1:
        raise ParseError("TYPE section holds a single name", line=body[1][0])
    name = body[0][1]
    if set(name) == {"?"}:
        return None
    return name


def parse_fcif(text: str | bytes) -> FcifDocument:
    """Parse a formal-context interchange document."""
    sections = split_sections(_decode(text), SECTIONS)
    type_name = _type_name(sections["TYPE"])

    object_rows = tuple(
        (name, members)
        for name, members, _ in parse_name_rows(sections["OBJECT"],
                                                what="object"))
    attribute_rows = tuple(
        (parse_term(head, line=lineno), members)
        for head, members, lineno in parse_term_rows(
            sections["ATTRIBUTE"], parse_member=_term_member,
            head_is_name=False, what="attribute"))
    parsed_incidence = parse_term_rows(
        sections["INCIDENCE"], parse_member=_term_member,
        head_is_name=True, what="incidence")

    declared_objects = {name for name, _ in object_rows}
    declared_terms = {term for term, _ in attribute_rows}
    for head, members, lineno in parsed_incidence:
        if head not in declared_objects:
            raise ParseError(
                f"incidence row references undeclared object {head!r}",
                line=lineno)
        for term in members:
            if term not in declared_terms:
                raise ParseError(
                    f"incidence row {head!r} references undeclared attribute "
                    f"{render_term(term)}", line=lineno)
    try:
        return FcifDocument(
            type_name, object_rows, attribute_rows,
            tuple((head, members) for head, members, _ in parsed_incidence))
    except ValidationError as exc:
        raise ParseError(str(exc)) from None


def _term_member(text: str, lineno: int) -> AttributeTerm:
    return parse_term(text, line=lineno)


def _check_name(name: str, what: str) -> str:
    if not name or any(ch.isspace() for ch in name) or \
            any(ch in '{}"' for ch in name):
        raise ValidationError(
            f"{what} {name!r} cannot be serialized "
            "(must be a non-empty token without braces or quotes)")
    return name


def serialize_fcif(doc: FcifDocument) -> str:
    """Canonical text form; ``parse_fcif`` inverts it exactly."""
    lines = ["TYPE"]
    type_name = doc.type_name if doc.type_name is not None else "????"
    lines.append(f"    {_check_name(type_name, 'type name')}")
    lines.append("OBJECT")
    for name, children in doc.object_rows:
        _check_name(name, "object name")
        for child in children:
            _check_name(child, "object name")
        if children:
            lines.append(f"    {name} {{ {' '.join(children)} }}")
        else:
            lines.append(f"    {name} {{}}")
    lines.append("ATTRIBUTE")
    for term, children in doc.attribute_rows:
        _append_term_row(lines, render_term(term), children)
    lines.append("INCIDENCE")
    for name, terms in doc.incidence_rows:
        _check_name(name, "object name")
        _append_term_row(lines, name, terms)
    return "\n".join(lines) + "\n"


def _append_term_row(lines: list[str], head: str,
                     members: tuple[AttributeTerm, ...]) -> None:
    if not members:
        lines.append(f"    {head} {{}}")
        return
    lines.append(f"    {head} {{")
    for member in members:
        lines.append(f"        {render_term(member)}")
    lines.append("    }")
