"""Line/brace lexing shared by the context and lattice interchange formats."""

from __future__ import annotations

from ..errors import ParseError


def find_unquoted(text: str, needle: str, start: int = 0) -> int:
    """Index of the first occurrence of ``needle`` outside double quotes."""
    in_quotes = False
    for i in range(start, len(text)):
        ch = text[i]
        if ch == '"':
            in_quotes = not in_quotes
        elif ch == needle and not in_quotes:
            return i
    return -1


def depth_delta(line: str) -> int:
    """Net brace nesting change of a line, ignoring quoted braces."""
    delta = 0
    in_quotes = False
    for ch in line:
        if ch == '"':
            in_quotes = not in_quotes
        elif not in_quotes:
            if ch == "{":
                delta += 1
            elif ch == "}":
                delta -= 1
    return delta


def split_sections(text: str,
                   keywords: tuple[str, ...]) -> dict[str, list[tuple[int, str]]]:
    """Split a document into its fixed-order sections.

    A section starts at a depth-zero line consisting of exactly the next
    expected keyword.  Returns keyword -> list of (line number, line).
    """
    sections: dict[str, list[tuple[int, str]]] = {kw: [] for kw in keywords}
    known = set(keywords)
    expected = 0
    active: str | None = None
    depth = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if depth == 0 and stripped in known:
            if expected < len(keywords) and stripped == keywords[expected]:
                active = stripped
                expected += 1
                continue
            raise ParseError(
                f"section {stripped} out of order (expected "
                f"{keywords[expected] if expected < len(keywords) else 'end of file'})",
                line=lineno)
        if active is None:
            if not stripped:
                continue
            raise ParseError(
                f"expected section keyword {keywords[0]}, got {stripped!r}",
                line=lineno)
        if (depth == 0 and stripped and active != keywords[0]
                and stripped.rstrip("{} \t") == stripped
                and stripped.isupper() and "{" not in stripped):
            # a bare upper-case line where an entry should start is almost
            # certainly a mistyped or misplaced section keyword
            raise ParseError(f"unknown section keyword {stripped!r}",
                             line=lineno)
        sections[active].append((lineno, line))
        depth += depth_delta(line)
    if depth != 0:
        raise ParseError("unbalanced braces at end of input",
                         line=len(text.splitlines()))
    if expected < len(keywords):
        raise ParseError(
            f"missing section {keywords[expected]}",
            line=len(text.splitlines()) or 1)
    return sections


def tokenize_braced(lines: list[tuple[int, str]]) -> list[tuple[str, int]]:
    """Whitespace tokens with braces split off, each tagged with its line."""
    tokens: list[tuple[str, int]] = []
    for lineno, line in lines:
        buf = ""
        for ch in line:
            if ch in "{}":
                if buf:
                    tokens.append((buf, lineno))
                    buf = ""
                tokens.append((ch, lineno))
            elif ch.isspace():
                if buf:
                    tokens.append((buf, lineno))
                    buf = ""
            else:
                buf += ch
        if buf:
            tokens.append((buf, lineno))
    return tokens


def parse_name_rows(lines: list[tuple[int, str]], *,
                    what: str) -> list[tuple[str, tuple[str, ...], int]]:
    """Parse ``name { member member ... }`` rows from a token stream.

    Members are whitespace-delimited names; braces may fall on any line.
    Returns (name, members, line-of-name) triples.
    """
    tokens = tokenize_braced(lines)
    rows: list[tuple[str, tuple[str, ...], int]] = []
    i = 0
    while i < len(tokens):
        name, lineno = tokens[i]
        if name in "{}":
            raise ParseError(f"expected {what} name, got {name!r}", line=lineno)
        i += 1
        if i >= len(tokens) or tokens[i][0] != "{":
            raise ParseError(f"expected '{{' after {what} {name!r}",
                             line=lineno)
        i += 1
        members: list[str] = []
        closed = False
        while i < len(tokens):
            tok, tok_line = tokens[i]
            if tok == "}":
                closed = True
                i += 1
                break
            if tok == "{":
                raise ParseError("unexpected '{' inside member list",
                                 line=tok_line)
            members.append(tok)
            i += 1
        if not closed:
            raise ParseError(f"unbalanced braces in {what} row {name!r}",
                             line=lineno)
        rows.append((name, tuple(members), lineno))
    return rows


def parse_term_rows(lines: list[tuple[int, str]], parse_member, *,
                    head_is_name: bool,
                    what: str) -> list[tuple[object, tuple[object, ...], int]]:
    """Parse rows whose members are newline-delimited attribute terms.

    Row head is either a single name token (``head_is_name``) or itself a
    term.  ``parse_member`` turns (text, line) into a member value.
    Returns (head, members, line) triples with the head left as text.
    """
    rows: list[tuple[object, tuple[object, ...], int]] = []
    i = 0
    while i < len(lines):
        lineno, line = lines[i]
        i += 1
        text = line.strip()
        if not text:
            continue
        brace = find_unquoted(text, "{")
        if brace < 0:
            raise ParseError(f"expected '{{' in {what} row", line=lineno)
        head = text[:brace].strip()
        if not head:
            raise ParseError(f"missing {what} row head", line=lineno)
        if head_is_name and any(ch.isspace() for ch in head):
            raise ParseError(
                f"{what} row head {head!r} must be a single name", line=lineno)
        rest = text[brace + 1:]
        members: list[object] = []
        closer = find_unquoted(rest, "}")
        if closer >= 0:
            if rest[closer + 1:].strip():
                raise ParseError("unexpected text after '}'", line=lineno)
            inner = rest[:closer].strip()
            if inner:
                members.append(parse_member(inner, lineno))
        else:
            if rest.strip():
                members.append(parse_member(rest.strip(), lineno))
            closed = False
            while i < len(lines):
                member_lineno, member_line = lines[i]
                i += 1
                member_text = member_line.strip()
                if member_text == "}":
                    closed = True
                    break
                if not member_text:
                    continue
                if find_unquoted(member_text, "{") >= 0 or \
                        find_unquoted(member_text, "}") >= 0:
                    raise ParseError("unexpected brace in member line",
                                     line=member_lineno)
                members.append(parse_member(member_text, member_lineno))
            if not closed:
                raise ParseError(f"unbalanced braces in {what} row {head!r}",
                                 line=lineno)
        rows.append((head, tuple(members), lineno))
    return rows
