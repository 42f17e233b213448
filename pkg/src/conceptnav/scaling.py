"""Conceptual scaling: interpreting raw records as formal contexts.

Raw meta-information records carry multi-valued (tag, value) pairs.  A
scale set decides how each tag is read: nominal scaling keeps the value
as an equality term, ordinal scaling grades a byte magnitude against
named bounds, and mapped scaling pattern-matches values (or record
names) onto fixed terms.  The result is an ordered context: one object
per record, children lists becoming object-order rows, and declared
record-local implications becoming attribute-order rows.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fnmatch import fnmatchcase

from .core import AttributeTerm, FormalContext, Op, OrderedContext
from .errors import MagnitudeError, ParseError, ScalingError, ValidationError
from .terms import parse_term

_MAGNITUDE_RE = re.compile(
    r"\s*(\d+)\s*(K|MB?)?\s*(BYTES?)?\s*$", re.IGNORECASE)
_MULTIPLIERS = {"K": 1_000, "M": 1_000_000, "MB": 1_000_000}


def parse_magnitude(raw: str) -> int:
    """Read a byte magnitude such as ``600K``, ``1MB`` or ``24567 bytes``."""
    match = _MAGNITUDE_RE.fullmatch(raw)
    if not match:
        raise MagnitudeError(f"cannot read {raw!r} as a byte magnitude")
    digits, suffix, _ = match.groups()
    factor = _MULTIPLIERS[suffix.upper()] if suffix else 1
    return int(digits) * factor


@dataclass(frozen=True)
class RawRecord:
    """An uninterpreted record: object identity plus its tag/value pairs.

    ``children`` names records that are instances or parts of this one;
    they must belong to the same batch handed to :func:`apply_scales`.
    """

    name: str
    pairs: tuple[tuple[str, str], ...] = ()
    children: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.name:
            raise ValidationError("record name must be non-empty")


class ScaleKind(enum.Enum):
    NOMINAL = "nominal"
    ORDINAL = "ordinal"
    MAPPED = "mapped"


class ScaleSource(enum.Enum):
    PAIR = "pair"
    NAME = "name"


@dataclass(frozen=True)
class Scale:
    """Interpretation rule for one raw tag.

    ``rename`` overrides the output tag.  ``declare_only`` declares the
    resulting terms in the attribute list without asserting incidence.
    ``parent_term``/``parent_above`` add a fixed term to a record's
    parent when every child carrying this tag exceeds the bound.
    ``source`` selects what a mapped scale matches against: the pair
    value or the record name.
    """

    tag: str
    kind: ScaleKind = ScaleKind.NOMINAL
    rename: str | None = None
    declare_only: bool = False
    thresholds: tuple[tuple[str, int], ...] = ()
    value_map: tuple[tuple[str, AttributeTerm], ...] = ()
    source: ScaleSource = ScaleSource.PAIR
    parent_term: AttributeTerm | None = None
    parent_above: int | None = None

    def __post_init__(self) -> None:
        if self.kind is ScaleKind.ORDINAL:
            bounds = [b for _, b in self.thresholds]
            if not bounds:
                raise ValidationError(
                    f"ordinal scale for {self.tag!r} needs thresholds")
            if any(b2 <= b1 for b1, b2 in zip(bounds, bounds[1:])):
                raise ValidationError(
                    f"ordinal thresholds for {self.tag!r} must strictly increase")
        if self.kind is ScaleKind.MAPPED and not self.value_map:
            raise ValidationError(
                f"mapped scale for {self.tag!r} needs map entries")
        for pattern, _ in self.value_map:
            if not pattern:
                raise ValidationError("mapped scale patterns must be non-empty")
        if (self.parent_term is None) != (self.parent_above is None):
            raise ValidationError(
                "parent-term and its bound must be given together")

    @property
    def out_tag(self) -> str:
        return self.rename if self.rename is not None else self.tag


@dataclass(frozen=True)
class ScaleSet:
    """All scales for a batch; unknown tags default to nominal scaling."""

    scales: tuple[Scale, ...] = ()
    implications: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        tags = [s.tag for s in self.scales]
        if len(set(tags)) != len(tags):
            raise ValidationError("at most one scale per tag")

    def for_tag(self, tag: str) -> Scale | None:
        for scale in self.scales:
            if scale.tag == tag:
                return scale
        return None

    @property
    def name_scales(self) -> tuple[Scale, ...]:
        return tuple(s for s in self.scales
                     if s.kind is ScaleKind.MAPPED
                     and s.source is ScaleSource.NAME)


EMPTY_SCALES = ScaleSet()


def ordinal_terms(scale: Scale, raw: str) -> list[AttributeTerm]:
    """Ordinal grading: one ``tag <= label`` term per bound >= the value."""
    if scale.kind is not ScaleKind.ORDINAL:
        raise ValidationError(f"scale for {scale.tag!r} is not ordinal")
    magnitude = parse_magnitude(raw)
    return [AttributeTerm(scale.out_tag, Op.AT_MOST, label)
            for label, bound in scale.thresholds if bound >= magnitude]


class _ContextBuilder:
    """Accumulates attributes in first-seen order plus per-object rows."""

    def __init__(self) -> None:
        self.attributes: list[AttributeTerm] = []
        self._seen: dict[AttributeTerm, int] = {}
        self.rows: dict[str, list[int]] = {}

    def declare(self, term: AttributeTerm) -> int:
        index = self._seen.get(term)
        if index is None:
            index = len(self.attributes)
            self._seen[term] = index
            self.attributes.append(term)
        return index

    def assert_incidence(self, obj: str, term: AttributeTerm) -> None:
        index = self.declare(term)
        row = self.rows.setdefault(obj, [])
        if index not in row:
            row.append(index)


def apply_scales(records: list[RawRecord],
                 scales: ScaleSet = EMPTY_SCALES) -> OrderedContext:
    """Interpret a batch of records into an ordered formal context.

    Attribute order groups terms by provenance: terms scaled directly
    from pairs come first, then derived terms (name maps and parent
    rules), then declared-but-unasserted terms, each group in first-seen
    order.  Children lists are carried over verbatim as object-order
    rows.
    """
    names = [r.name for r in records]
    if len(set(names)) != len(names):
        dup = next(n for i, n in enumerate(names) if n in names[:i])
        raise ValidationError(f"duplicate record name {dup!r}")
    by_name = {r.name: r for r in records}
    for record in records:
        for child in record.children:
            if child not in by_name:
                raise ValidationError(
                    f"record {record.name!r} lists unknown child {child!r}")

    builder = _ContextBuilder()
    first_term: dict[tuple[str, str], AttributeTerm] = {}
    qualifies: dict[tuple[str, str], bool] = {}

    def note_first(record: RawRecord, tag: str, term: AttributeTerm) -> None:
        first_term.setdefault((record.name, tag), term)

    # pass 1: terms scaled directly from pairs
    for record in records:
        builder.rows.setdefault(record.name, [])
        for tag, raw in record.pairs:
            value = raw.strip()
            scale = scales.for_tag(tag)
            if scale is not None and scale.parent_term is not None:
                try:
                    big = parse_magnitude(value) > scale.parent_above
                except MagnitudeError as exc:
                    raise ScalingError(record.name, tag, value, str(exc)) from None
                key = (record.name, tag)
                qualifies[key] = qualifies.get(key, True) and big
            if scale is None:
                term = AttributeTerm(tag, Op.EQUALS, value)
                builder.assert_incidence(record.name, term)
                note_first(record, tag, term)
                continue
            if scale.declare_only:
                continue
            if scale.kind is ScaleKind.NOMINAL:
                term = AttributeTerm(scale.out_tag, Op.EQUALS, value)
                builder.assert_incidence(record.name, term)
                note_first(record, tag, term)
            elif scale.kind is ScaleKind.ORDINAL:
                try:
                    terms = ordinal_terms(scale, value)
                except MagnitudeError as exc:
                    raise ScalingError(record.name, tag, value, str(exc)) from None
                for term in terms:
                    builder.assert_incidence(record.name, term)
                if terms:
                    note_first(record, tag, terms[0])
            elif scale.kind is ScaleKind.MAPPED and scale.source is ScaleSource.PAIR:
                for pattern, term in scale.value_map:
                    if fnmatchcase(value, pattern):
                        builder.assert_incidence(record.name, term)
                        note_first(record, tag, term)

    # pass 2: derived terms (record-name maps, then parent-size rules)
    for record in records:
        for scale in scales.name_scales:
            for pattern, term in scale.value_map:
                if fnmatchcase(record.name, pattern):
                    builder.assert_incidence(record.name, term)
    for record in records:
        for scale in scales.scales:
            if scale.parent_term is None:
                continue
            carriers = [c for c in record.children
                        if any(tag == scale.tag for tag, _ in by_name[c].pairs)]
            if carriers and all(qualifies[(c, scale.tag)] for c in carriers):
                builder.assert_incidence(record.name, scale.parent_term)

    # pass 3: declared-but-unasserted terms
    for record in records:
        for tag, raw in record.pairs:
            scale = scales.for_tag(tag)
            if scale is not None and scale.declare_only:
                builder.declare(AttributeTerm(scale.out_tag, Op.EQUALS,
                                              raw.strip()))

    incidence = {(names.index(obj), a) for obj, row in builder.rows.items()
                 for a in row}
    base = FormalContext(tuple(names), tuple(builder.attributes),
                         frozenset(incidence))

    object_children = {r.name: tuple(r.children) for r in records if r.children}
    attribute_children: dict[AttributeTerm, tuple[AttributeTerm, ...]] = {}
    for a_tag, b_tag in scales.implications:
        for record in records:
            parent = first_term.get((record.name, a_tag))
            child = first_term.get((record.name, b_tag))
            if parent is None or child is None or parent == child:
                continue
            existing = attribute_children.get(parent, ())
            if child not in existing:
                attribute_children[parent] = existing + (child,)
    return OrderedContext(base, object_children, attribute_children)


def row_order(octx: OrderedContext) -> dict[str, tuple[int, ...]]:
    """Per-object attribute indices in ascending declaration order."""
    rows: dict[str, tuple[int, ...]] = {}
    for gi, name in enumerate(octx.base.objects):
        rows[name] = tuple(sorted(
            a for g, a in octx.base.incidence if g == gi))
    return rows


# -- scale-set configuration files ------------------------------------------

_KINDS = {k.value: k for k in ScaleKind}
_SOURCES = {s.value: s for s in ScaleSource}


def parse_scale_set(text: str) -> ScaleSet:
    """Read a declarative scale-set file.

    One ``scale <tag> { ... }`` stanza per scaled tag with directives
    ``kind``, ``rename``, ``declare-only``, ``source``, ``threshold``,
    ``map``, and ``parent-term ... above ...``; top-level
    ``implies <tag> <tag>`` lines declare record-local implications.
    """
    scales: list[Scale] = []
    implications: list[tuple[str, str]] = []
    current: dict | None = None

    def finish(spec: dict, line: int) -> None:
        try:
            scales.append(Scale(**spec))
        except ValidationError as exc:
            raise ParseError(str(exc), line=line) from None

    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        if current is None:
            if line.startswith("scale "):
                parts = line.split()
                if len(parts) != 3 or parts[2] != "{":
                    raise ParseError(
                        "expected 'scale <tag> {'", line=lineno)
                current = {"tag": parts[1]}
                continue
            if line.startswith("implies "):
                parts = line.split()
                if len(parts) != 3:
                    raise ParseError(
                        "expected 'implies <tag> <tag>'", line=lineno)
                implications.append((parts[1], parts[2]))
                continue
            raise ParseError(f"unexpected directive {line!r}", line=lineno)
        if line == "}":
            finish(current, lineno)
            current = None
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "kind":
            if rest not in _KINDS:
                raise ParseError(f"unknown scale kind {rest!r}", line=lineno)
            current["kind"] = _KINDS[rest]
        elif key == "rename":
            if not rest:
                raise ParseError("rename needs a tag", line=lineno)
            current["rename"] = rest
        elif key == "declare-only":
            current["declare_only"] = True
        elif key == "source":
            if rest not in _SOURCES:
                raise ParseError(f"unknown source {rest!r}", line=lineno)
            current["source"] = _SOURCES[rest]
        elif key == "threshold":
            try:
                bound = parse_magnitude(rest)
            except MagnitudeError as exc:
                raise ParseError(str(exc), line=lineno) from None
            current.setdefault("thresholds", ())
            current["thresholds"] += ((rest, bound),)
        elif key == "map":
            pattern, _, term_text = rest.partition(" ")
            if not pattern or not term_text.strip():
                raise ParseError("expected 'map <pattern> <term>'", line=lineno)
            term = parse_term(term_text, line=lineno)
            current.setdefault("value_map", ())
            current["value_map"] += ((pattern, term),)
        elif key == "parent-term":
            term_text, sep, bound_text = rest.rpartition(" above ")
            if not sep:
                raise ParseError(
                    "expected 'parent-term <term> above <magnitude>'",
                    line=lineno)
            try:
                bound = parse_magnitude(bound_text)
            except MagnitudeError as exc:
                raise ParseError(str(exc), line=lineno) from None
            current["parent_term"] = parse_term(term_text, line=lineno)
            current["parent_above"] = bound
        else:
            raise ParseError(f"unknown scale directive {key!r}", line=lineno)
    if current is not None:
        raise ParseError("unterminated scale stanza (missing '}')",
                         line=len(text.splitlines()))
    return ScaleSet(tuple(scales), tuple(implications))
