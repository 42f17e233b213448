"""Formal contexts, derivation operators, and complete concept lattices.

A formal context is a set of objects, a set of single-valued attribute
terms, and an incidence relation "object has attribute".  Deriving the
common attributes of an object set (and dually the common objects of an
attribute set) yields closed extent/intent pairs; the set of all such
pairs ordered by intent containment forms a complete lattice.

Contexts and lattices are immutable after construction and safe to share
across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import CycleError, ValidationError


class Op(enum.Enum):
    """Relational operator of an attribute term.

    EQUALS carries nominal values (tag = value); AT_MOST carries ordinal
    bounds (tag <= value).
    """

    EQUALS = "="
    AT_MOST = "<="


_TAG_FORBIDDEN = set('{}\n="')


@dataclass(frozen=True)
class AttributeTerm:
    """A single-valued attribute of the form ``tag <op> value``."""

    tag: str
    op: Op = Op.EQUALS
    value: str = ""

    def __post_init__(self) -> None:
        if not self.tag:
            raise ValidationError("attribute tag must be non-empty")
        bad = _TAG_FORBIDDEN.intersection(self.tag)
        if bad:
            raise ValidationError(
                f"attribute tag {self.tag!r} contains reserved character "
                f"{sorted(bad)[0]!r}")

    def render(self) -> str:
        """Human-oriented form: bare tag when the value is empty."""
        if self.value == "":
            return self.tag
        return f"{self.tag}{self.op.value}{self.value}"


def _bit_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class FormalContext:
    """Objects, attribute terms, and their incidence relation.

    ``objects`` and ``attributes`` keep their declared order; that order
    is the canonical identity of the context and is preserved through
    serialization.  ``incidence`` holds (object index, attribute index)
    pairs.
    """

    objects: tuple[str, ...]
    attributes: tuple[AttributeTerm, ...]
    incidence: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if len(set(self.objects)) != len(self.objects):
            raise ValidationError("object names must be pairwise distinct")
        if len(set(self.attributes)) != len(self.attributes):
            raise ValidationError("attribute terms must be pairwise distinct")
        n, m = len(self.objects), len(self.attributes)
        for g, a in self.incidence:
            if not (0 <= g < n and 0 <= a < m):
                raise ValidationError(
                    f"incidence pair ({g}, {a}) out of range for "
                    f"{n} objects x {m} attributes")

    @classmethod
    def build(cls, objects: Iterable[str],
              attributes: Iterable[AttributeTerm],
              incidence: Iterable[tuple[int, int]]) -> "FormalContext":
        return cls(tuple(objects), tuple(attributes), frozenset(incidence))

    # -- index lookups ----------------------------------------------------

    def object_index(self, name: str) -> int:
        try:
            return self._object_pos[name]
        except KeyError:
            raise KeyError(f"unknown object {name!r}") from None

    def attribute_index(self, term: AttributeTerm) -> int:
        try:
            return self._attribute_pos[term]
        except KeyError:
            raise KeyError(f"unknown attribute term {term.render()!r}") from None

    @cached_property
    def _object_pos(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.objects)}

    @cached_property
    def _attribute_pos(self) -> dict[AttributeTerm, int]:
        return {t: i for i, t in enumerate(self.attributes)}

    # -- bitmask views (attribute bits per object row, and transposed) ----

    @cached_property
    def rows(self) -> tuple[int, ...]:
        masks = [0] * len(self.objects)
        for g, a in self.incidence:
            masks[g] |= 1 << a
        return tuple(masks)

    @cached_property
    def cols(self) -> tuple[int, ...]:
        masks = [0] * len(self.attributes)
        for g, a in self.incidence:
            masks[a] |= 1 << g
        return tuple(masks)

    @property
    def all_objects_mask(self) -> int:
        return (1 << len(self.objects)) - 1

    @property
    def all_attributes_mask(self) -> int:
        return (1 << len(self.attributes)) - 1

    def _check_object_indices(self, objs: Iterable[int]) -> int:
        mask = 0
        n = len(self.objects)
        for g in objs:
            if not 0 <= g < n:
                raise IndexError(f"object index {g} out of range (0..{n - 1})")
            mask |= 1 << g
        return mask

    def _check_attribute_indices(self, attrs: Iterable[int]) -> int:
        mask = 0
        m = len(self.attributes)
        for a in attrs:
            if not 0 <= a < m:
                raise IndexError(f"attribute index {a} out of range (0..{m - 1})")
            mask |= 1 << a
        return mask

    def _intent_of_mask(self, extent_mask: int) -> int:
        intent = self.all_attributes_mask
        rows = self.rows
        g = 0
        while extent_mask:
            if extent_mask & 1:
                intent &= rows[g]
            extent_mask >>= 1
            g += 1
        return intent

    def _extent_of_mask(self, intent_mask: int) -> int:
        extent = self.all_objects_mask
        cols = self.cols
        a = 0
        while intent_mask:
            if intent_mask & 1:
                extent &= cols[a]
            intent_mask >>= 1
            a += 1
        return extent

    # -- derivation operators ---------------------------------------------

    def derive_intent(self, objs: Iterable[int]) -> frozenset[int]:
        """Attributes incident to every object in ``objs``.

        The empty object set derives to all attributes.
        """
        mask = self._check_object_indices(objs)
        return frozenset(_bit_indices(self._intent_of_mask(mask)))

    def derive_extent(self, attrs: Iterable[int]) -> frozenset[int]:
        """Objects incident to every attribute in ``attrs`` (dual)."""
        mask = self._check_attribute_indices(attrs)
        return frozenset(_bit_indices(self._extent_of_mask(mask)))

    def concept_of_attributes(self, attrs: Iterable[int]) -> "Concept":
        """Closed extent/intent pair generated by an attribute set."""
        amask = self._check_attribute_indices(attrs)
        emask = self._extent_of_mask(amask)
        return Concept(frozenset(_bit_indices(emask)),
                       frozenset(_bit_indices(self._intent_of_mask(emask))))

    def concept_of_objects(self, objs: Iterable[int]) -> "Concept":
        """Closed extent/intent pair generated by an object set."""
        gmask = self._check_object_indices(objs)
        imask = self._intent_of_mask(gmask)
        return Concept(frozenset(_bit_indices(self._extent_of_mask(imask))),
                       frozenset(_bit_indices(imask)))


@dataclass(frozen=True)
class OrderedContext:
    """A formal context plus declared object order and attribute implications.

    ``object_children`` maps an object name to the more specialized
    objects listed under it (a child inherits every attribute of its
    parent).  ``attribute_children`` maps a term to the terms it implies
    (every object carrying the parent term also carries the child).
    Both mappings hold raw parent -> children pairs; closure to a partial
    order happens in :func:`order_close_incidence`, which also rejects
    cycles.
    """

    base: FormalContext
    object_children: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    attribute_children: Mapping[AttributeTerm, tuple[AttributeTerm, ...]] = \
        field(default_factory=dict)

    def __post_init__(self) -> None:
        known_objects = set(self.base.objects)
        for parent, children in self.object_children.items():
            for name in (parent, *children):
                if name not in known_objects:
                    raise ValidationError(
                        f"object order mentions undeclared object {name!r}")
        known_terms = set(self.base.attributes)
        for parent, children in self.attribute_children.items():
            for term in (parent, *children):
                if term not in known_terms:
                    raise ValidationError(
                        "attribute order mentions undeclared term "
                        f"{term.render()!r}")


@dataclass(frozen=True)
class Concept:
    """A closed extent/intent pair of some formal context."""

    extent: frozenset[int]
    intent: frozenset[int]

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical ordering: extent size descending, then lexicographic."""
        return (-len(self.extent), tuple(sorted(self.extent)))


def _toposort(nodes: Sequence, children: Mapping, what: str) -> list:
    """Parents-before-children order; raises CycleError on a cycle."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {n: WHITE for n in nodes}
    order: list = []

    def visit(node) -> None:
        stack = [(node, iter(children.get(node, ())))]
        color[node] = GRAY
        while stack:
            current, it = stack[-1]
            advanced = False
            for child in it:
                if color[child] == GRAY:
                    raise CycleError(f"cycle in declared {what} order")
                if color[child] == WHITE:
                    color[child] = GRAY
                    stack.append((child, iter(children.get(child, ()))))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                color[current] = BLACK
                order.append(current)

    for n in nodes:
        if color[n] == WHITE:
            visit(n)
    order.reverse()
    return order


def order_close_incidence(octx: OrderedContext) -> FormalContext:
    """Least superset of the incidence honoring the declared orders.

    Two rules, applied to a fixpoint: a child object's row includes every
    attribute of each of its parents, and every object carrying a parent
    term also carries each of that term's children.  Idempotent and
    inflationary; raises :class:`CycleError` if either declared relation
    is cyclic.
    """
    ctx = octx.base
    obj_order = _toposort(ctx.objects, octx.object_children, "object")
    rows = list(ctx.rows)
    pos = ctx._object_pos
    for parent in obj_order:
        children = octx.object_children.get(parent, ())
        pmask = rows[pos[parent]]
        for child in children:
            rows[pos[child]] |= pmask

    # Implication closure: precompute, per term, the mask of all terms it
    # transitively implies (cycle check included).
    term_order = _toposort(ctx.attributes, octx.attribute_children, "attribute")
    apos = ctx._attribute_pos
    implied: dict[int, int] = {apos[t]: 0 for t in ctx.attributes}
    for term in reversed(term_order):
        mask = 0
        for child in octx.attribute_children.get(term, ()):
            ci = apos[child]
            mask |= (1 << ci) | implied[ci]
        implied[apos[term]] = mask

    incidence = set()
    for g, row in enumerate(rows):
        closed = row
        a = 0
        rest = row
        while rest:
            if rest & 1:
                closed |= implied[a]
            rest >>= 1
            a += 1
        for a in _bit_indices(closed):
            incidence.add((g, a))
    return FormalContext(ctx.objects, ctx.attributes, frozenset(incidence))


class ConceptLattice:
    """The complete lattice of concepts of a formal context.

    Concepts are kept in canonical order: extent size descending, ties
    broken by the lexicographic order of sorted extent index tuples.
    This makes serialization and diagram output reproducible.  Index 0 is
    always the top (full extent) and the last index the bottom (full
    intent); both are materialized even when no generator reaches them.
    """

    def __init__(self, context: FormalContext, concepts: Sequence[Concept],
                 lower_covers: Sequence[tuple[int, ...]],
                 gamma: Sequence[int], mu: Sequence[int]):
        self.context = context
        self.concepts = tuple(concepts)
        self.lower_covers = tuple(lower_covers)
        self.gamma = tuple(gamma)
        self.mu = tuple(mu)
        uppers: list[list[int]] = [[] for _ in self.concepts]
        for upper, lows in enumerate(self.lower_covers):
            for low in lows:
                uppers[low].append(upper)
        self.upper_covers = tuple(tuple(sorted(u)) for u in uppers)
        self._extent_pos = {c.extent: i for i, c in enumerate(self.concepts)}
        self._intent_pos = {c.intent: i for i, c in enumerate(self.concepts)}

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self) -> Iterator[Concept]:
        return iter(self.concepts)

    @property
    def top(self) -> int:
        return 0

    @property
    def bottom(self) -> int:
        return len(self.concepts) - 1

    def _check_index(self, c: int) -> None:
        if not 0 <= c < len(self.concepts):
            raise IndexError(
                f"concept index {c} out of range (0..{len(self.concepts) - 1})")

    def leq(self, c1: int, c2: int) -> bool:
        """True iff concept c1 is at most as general as c2.

        Equivalent formulations: intent(c1) contains intent(c2); extent(c1)
        is contained in extent(c2).
        """
        self._check_index(c1)
        self._check_index(c2)
        return self.concepts[c1].extent <= self.concepts[c2].extent

    def join(self, cs: Iterable[int]) -> int:
        """Least upper bound; the empty join is the bottom concept."""
        intent = frozenset(range(len(self.context.attributes)))
        for c in cs:
            self._check_index(c)
            intent &= self.concepts[c].intent
        # An intersection of intents is itself a closed intent.
        return self._intent_pos[intent]

    def meet(self, cs: Iterable[int]) -> int:
        """Greatest lower bound; the empty meet is the top concept."""
        extent = frozenset(range(len(self.context.objects)))
        for c in cs:
            self._check_index(c)
            extent &= self.concepts[c].extent
        return self._extent_pos[extent]

    def concept_of_extent(self, extent: frozenset[int]) -> int | None:
        return self._extent_pos.get(extent)

    def concept_of_intent(self, intent: frozenset[int]) -> int | None:
        return self._intent_pos.get(intent)

    def generator_maps(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(gamma, mu): object -> least concept, attribute -> greatest."""
        return self.gamma, self.mu

    def covering_relation(self) -> tuple[tuple[int, ...], ...]:
        """Immediate proper subconcepts per concept (transitive reduction)."""
        return self.lower_covers


def _closed_intents(ctx: FormalContext) -> list[tuple[int, int]]:
    """All (extent mask, intent mask) pairs, via lectic closure stepping."""
    m = len(ctx.attributes)
    full = ctx.all_attributes_mask

    def close(amask: int) -> tuple[int, int]:
        emask = ctx._extent_of_mask(amask)
        return emask, ctx._intent_of_mask(emask)

    pairs = []
    emask, amask = close(0)
    pairs.append((emask, amask))
    while amask != full:
        nxt = None
        a = amask
        for i in range(m - 1, -1, -1):
            bit = 1 << i
            if a & bit:
                a &= ~bit
            else:
                e2, candidate = close(a | bit)
                if (candidate & ~a) & (bit - 1) == 0:
                    nxt = (e2, candidate)
                    break
        if nxt is None:  # pragma: no cover - full intent reached above
            break
        pairs.append(nxt)
        emask, amask = nxt
    return pairs


def enumerate_concepts(ctx: FormalContext) -> ConceptLattice:
    """Compute the full concept lattice of a context.

    Every closed extent/intent pair appears exactly once; output order,
    cover lists, and generator maps are deterministic.
    """
    pairs = _closed_intents(ctx)
    concepts = [Concept(frozenset(_bit_indices(e)), frozenset(_bit_indices(a)))
                for e, a in pairs]
    concepts.sort(key=Concept.sort_key)

    extent_masks = []
    for c in concepts:
        mask = 0
        for g in c.extent:
            mask |= 1 << g
        extent_masks.append(mask)

    # Lower covers: scan smaller extents in canonical order; a candidate is
    # a cover unless it sits below one already accepted.
    n = len(concepts)
    lower_covers: list[tuple[int, ...]] = []
    for i in range(n):
        ei = extent_masks[i]
        accepted: list[int] = []
        accepted_idx: list[int] = []
        for j in range(i + 1, n):
            ej = extent_masks[j]
            if ej | ei != ei or ej == ei:
                continue
            if any(ej | ek == ek for ek in accepted):
                continue
            accepted.append(ej)
            accepted_idx.append(j)
        lower_covers.append(tuple(accepted_idx))

    extent_pos = {mask: i for i, mask in enumerate(extent_masks)}
    gamma = []
    for g in range(len(ctx.objects)):
        imask = ctx._intent_of_mask(1 << g)
        gamma.append(extent_pos[ctx._extent_of_mask(imask)])
    mu = []
    for a in range(len(ctx.attributes)):
        mu.append(extent_pos[ctx._extent_of_mask(1 << a)])

    return ConceptLattice(ctx, concepts, lower_covers, gamma, mu)
