"""Surface syntax for attribute terms: ``tag = value`` / ``tag <= value``.

This is the lexical convention shared by the context and lattice
interchange formats, scale-set configuration files, and the command
line.  The first unquoted ``=`` (or ``<=``) splits tag from value; values
are double-quoted whenever they contain whitespace or braces, and quotes
are mandatory for such values.  There is no escape mechanism, so values
must not contain double quotes or newlines.
"""

from __future__ import annotations

from .core import AttributeTerm, Op
from .errors import ParseError, ValidationError

_NEEDS_QUOTES = set(" \t{}")


def parse_term(text: str, *, line: int | None = None) -> AttributeTerm:
    """Parse one attribute term from its surface form."""
    in_quotes = False
    split_at = -1
    for i, ch in enumerate(text):
        if ch == '"':
            in_quotes = not in_quotes
        elif ch == "=" and not in_quotes:
            split_at = i
            break
    if split_at < 0:
        raise ParseError(
            f"expected attribute term 'tag = value', got {text.strip()!r}",
            line=line)
    if split_at > 0 and text[split_at - 1] == "<":
        op = Op.AT_MOST
        tag = text[: split_at - 1]
    else:
        op = Op.EQUALS
        tag = text[:split_at]
    tag = tag.strip()
    if not tag:
        raise ParseError("attribute term has an empty tag", line=line)
    rest = text[split_at + 1:].strip()
    if rest.startswith('"'):
        if len(rest) < 2 or not rest.endswith('"'):
            raise ParseError(
                f"unterminated quoted value in {text.strip()!r}", line=line)
        value = rest[1:-1]
        if '"' in value:
            raise ParseError(
                f"stray quote inside quoted value in {text.strip()!r}",
                line=line)
    else:
        value = rest
    try:
        return AttributeTerm(tag, op, value)
    except ValidationError as exc:
        raise ParseError(str(exc), line=line) from None


def render_term(term: AttributeTerm) -> str:
    """Canonical surface form; inverse of :func:`parse_term`."""
    value = term.value
    if '"' in value or "\n" in value:
        raise ValidationError(
            f"attribute value {value!r} cannot be serialized "
            "(quotes and newlines are not representable)")
    if value == "" or _NEEDS_QUOTES.intersection(value):
        value = f'"{value}"'
    return f"{term.tag} {term.op.value} {value}"


def parse_cli_term(text: str) -> tuple[str, Op | None, str | None]:
    """Loose command-line form: bare ``tag`` or full ``tag=value``.

    Returns (tag, op, value); op/value are None for the bare form, which
    matches any declared term with that tag when unique.
    """
    if "=" not in text:
        tag = text.strip()
        if not tag:
            raise ParseError("empty attribute term")
        return tag, None, None
    term = parse_term(text)
    return term.tag, term.op, term.value
