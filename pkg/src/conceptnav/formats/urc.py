"""Plain resource-characteristic records: ``Key: value`` lines.

A leading ``URN:`` line names the resource; keys before the first
``URL:`` line attach to the record itself; each ``URL:`` line opens a
location whose following keys attach to it.  Location order is the
precedence order and is preserved.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParseError, ValidationError
from ..scaling import RawRecord


@dataclass(frozen=True)
class UrcLocation:
    url: str
    pairs: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class UrcRecord:
    urn: str | None
    global_pairs: tuple[tuple[str, str], ...] = ()
    locations: tuple[UrcLocation, ...] = ()


def parse_urc(text: str | bytes) -> UrcRecord:
    if isinstance(text, bytes):
        text = text.decode("latin-1")
    urn: str | None = None
    global_pairs: list[tuple[str, str]] = []
    locations: list[tuple[str, list[tuple[str, str]]]] = []
    first = True
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line:
            continue
        colon = line.find(":")
        if colon < 0:
            raise ParseError(f"expected 'Key: value', got {line!r}",
                             line=lineno)
        key = line[:colon].strip()
        if not key:
            raise ParseError("empty key", line=lineno)
        if key.lower() == "urn" and first:
            urn = line
        elif key.lower() == "url":
            locations.append((line, []))
        else:
            pair = (key, line[colon + 1:].strip())
            if locations:
                locations[-1][1].append(pair)
            else:
                global_pairs.append(pair)
        first = False
    return UrcRecord(urn, tuple(global_pairs),
                     tuple(UrcLocation(url, tuple(pairs))
                           for url, pairs in locations))


def serialize_urc(record: UrcRecord) -> str:
    """Canonical line form; ``parse_urc`` inverts it exactly."""
    lines: list[str] = []
    if record.urn is not None:
        if "\n" in record.urn or not record.urn.lower().startswith("urn:"):
            raise ValidationError(
                f"urn {record.urn!r} cannot be serialized "
                "(must carry its URN: prefix)")
        lines.append(record.urn)
    for key, value in record.global_pairs:
        lines.append(_pair_line(key, value))
    for location in record.locations:
        if "\n" in location.url or ":" not in location.url or \
                not location.url.lower().startswith("url:"):
            raise ValidationError(
                f"location {location.url!r} cannot be serialized "
                "(must carry its URL: prefix)")
        lines.append(location.url)
        for key, value in location.pairs:
            lines.append(_pair_line(key, value))
    return "\n".join(lines) + "\n" if lines else ""


def _pair_line(key: str, value: str) -> str:
    if not key or ":" in key or "\n" in key or key != key.strip() or \
            key.lower() in ("urn", "url"):
        raise ValidationError(f"pair key {key!r} cannot be serialized")
    if "\n" in value or value != value.strip():
        raise ValidationError(
            f"pair value {value!r} cannot be serialized "
            "(values are single trimmed lines)")
    return f"{key}: {value}"


def urc_to_records(record: UrcRecord) -> list[RawRecord]:
    """Explode a record into raw records: the URN plus one per location.

    The URN record lists every location as a child (the instantiation
    relationship).  A record without a URN yields location records only;
    in that case it has no carrier for record-level pairs, so their
    presence is an error.
    """
    records: list[RawRecord] = []
    if record.urn is not None:
        records.append(RawRecord(
            record.urn, record.global_pairs,
            tuple(location.url for location in record.locations)))
    elif record.global_pairs:
        raise ValidationError(
            "record-level pairs need a URN line to attach to")
    for location in record.locations:
        records.append(RawRecord(location.url, location.pairs))
    return records
