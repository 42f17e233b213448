"""Concept-lattice interchange documents.

The storage-optimal dual of the context format: classes are numbered
from 1 in canonical order (1 is the most general), generator sections
record which objects/attribute terms label each class, and SUCCESSOR
rows list each class's immediate subclasses.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import AttributeTerm
from ..errors import ParseError, ValidationError
from ..terms import parse_term, render_term
from ._lex import depth_delta, parse_name_rows, parse_term_rows, split_sections

SECTIONS = ("TYPE", "GENERATOR:OBJECT", "GENERATOR:ATTRIBUTE", "SUCCESSOR")


@dataclass(frozen=True)
class ClifDocument:
    type_name: str | None
    object_generators: tuple[tuple[int, tuple[str, ...]], ...]
    attribute_generators: tuple[tuple[int, tuple[AttributeTerm, ...]], ...]
    successor_rows: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self) -> None:
        count = len(self.successor_rows)
        if count == 0:
            raise ValidationError("a lattice document needs at least one class")
        expected = tuple(range(1, count + 1))
        for section, rows in (("GENERATOR:OBJECT", self.object_generators),
                              ("GENERATOR:ATTRIBUTE", self.attribute_generators),
                              ("SUCCESSOR", self.successor_rows)):
            indices = tuple(index for index, _ in rows)
            if indices != expected:
                raise ValidationError(
                    f"{section} class indices must run 1..{count} "
                    f"contiguously, got {indices}")
        names = [n for _, row in self.object_generators for n in row]
        if len(set(names)) != len(names):
            raise ValidationError("object listed under two classes")
        terms = [t for _, row in self.attribute_generators for t in row]
        if len(set(terms)) != len(terms):
            raise ValidationError("attribute term listed under two classes")
        for index, succs in self.successor_rows:
            for s in succs:
                if not 1 <= s <= count:
                    raise ValidationError(
                        f"successor row {index} references unknown class {s}")
        self._check_successor_graph()

    def _check_successor_graph(self) -> None:
        succs = {index: row for index, row in self.successor_rows}
        WHITE, GRAY, BLACK = 0, 1, 2
        color = dict.fromkeys(succs, WHITE)

        def visit(node: int) -> None:
            color[node] = GRAY
            stack = [(node, iter(succs[node]))]
            while stack:
                current, it = stack[-1]
                advanced = False
                for child in it:
                    if color[child] == GRAY:
                        raise ValidationError("cyclic successor graph")
                    if color[child] == WHITE:
                        color[child] = GRAY
                        stack.append((child, iter(succs[child])))
                        advanced = True
                        break
                if not advanced:
                    stack.pop()
                    color[current] = BLACK

        for node in succs:
            if color[node] == WHITE:
                visit(node)
        listed = {s for _, row in self.successor_rows for s in row}
        maximal = [index for index, _ in self.successor_rows
                   if index not in listed]
        if len(maximal) != 1:
            raise ValidationError(
                "successor graph must have exactly one maximal class, "
                f"found {len(maximal)}")

    @property
    def class_count(self) -> int:
        return len(self.successor_rows)

    def descendants(self, index: int) -> frozenset[int]:
        """Classes reachable downward from ``index`` (excluding itself)."""
        succs = dict(self.successor_rows)
        seen: set[int] = set()
        frontier = list(succs[index])
        while frontier:
            node = frontier.pop()
            if node in seen:
                continue
            seen.add(node)
            frontier.extend(succs[node])
        return frozenset(seen)


def _decode(text: str | bytes) -> str:
    return text.decode("utf-8") if isinstance(text, bytes) else text


def _class_index(token: str, lineno: int) -> int:
    if not token.isdigit() or int(token) < 1:
        raise ParseError(
            f"class index must be a natural number, got {token!r}",
            line=lineno)
    return int(token)


def _drop_layout_section(text: str) -> str:
    """Tolerate (and ignore) a trailing LAYOUT section.

    Some producers append node coordinates; the lattice structure is
    complete without them, so everything from a depth-zero LAYOUT line
    on is discarded.
    """
    depth = 0
    kept: list[str] = []
    for line in text.splitlines():
        if depth == 0 and line.strip() == "LAYOUT":
            break
        kept.append(line)
        depth += depth_delta(line)
    return "\n".join(kept) + "\n"


def parse_clif(text: str | bytes) -> ClifDocument:
    """Parse a concept-lattice interchange document."""
    from .fcif import _type_name  # same TYPE-section convention

    sections = split_sections(_drop_layout_section(_decode(text)), SECTIONS)
    type_name = _type_name(sections["TYPE"])

    object_generators = []
    for head, members, lineno in parse_name_rows(
            sections["GENERATOR:OBJECT"], what="object generator"):
        object_generators.append((_class_index(head, lineno), members))
    attribute_generators = []
    for head, members, lineno in parse_term_rows(
            sections["GENERATOR:ATTRIBUTE"],
            parse_member=lambda t, ln: parse_term(t, line=ln),
            head_is_name=True, what="attribute generator"):
        attribute_generators.append((_class_index(head, lineno), members))
    successor_rows = []
    for head, members, lineno in parse_name_rows(
            sections["SUCCESSOR"], what="successor"):
        successor_rows.append((
            _class_index(head, lineno),
            tuple(_class_index(m, lineno) for m in members)))

    object_generators.sort(key=lambda row: row[0])
    attribute_generators.sort(key=lambda row: row[0])
    successor_rows.sort(key=lambda row: row[0])
    try:
        return ClifDocument(type_name, tuple(object_generators),
                            tuple(attribute_generators), tuple(successor_rows))
    except ValidationError as exc:
        raise ParseError(str(exc)) from None


def serialize_clif(doc: ClifDocument) -> str:
    """Canonical text form; ``parse_clif`` inverts it exactly."""
    from .fcif import _check_name

    lines = ["TYPE"]
    type_name = doc.type_name if doc.type_name is not None else "????"
    lines.append(f"    {_check_name(type_name, 'type name')}")
    lines.append("GENERATOR:OBJECT")
    for index, names in doc.object_generators:
        for name in names:
            _check_name(name, "object name")
        if names:
            lines.append(f"    {index} {{ {' '.join(names)} }}")
        else:
            lines.append(f"    {index} {{}}")
    lines.append("GENERATOR:ATTRIBUTE")
    for index, terms in doc.attribute_generators:
        if terms:
            lines.append(f"    {index} {{")
            for term in terms:
                lines.append(f"        {render_term(term)}")
            lines.append("    }")
        else:
            lines.append(f"    {index} {{}}")
    lines.append("SUCCESSOR")
    for index, succs in doc.successor_rows:
        if succs:
            lines.append(f"    {index} {{ {' '.join(str(s) for s in succs)} }}")
        else:
            lines.append(f"    {index} {{}}")
    return "\n".join(lines) + "\n"
