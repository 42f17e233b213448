"""Conversions between contexts, context documents, and lattice documents.

The two document forms are mathematically equivalent: a context document
closes under its declared orders and enumerates concepts to become a
lattice document, and a lattice document reconstructs incidence through
its generators (an object carries a term exactly when the object's class
sits at or below the term's class).
"""

from __future__ import annotations

from ..core import (
    AttributeTerm,
    FormalContext,
    OrderedContext,
    enumerate_concepts,
    order_close_incidence,
)
from .clif import ClifDocument
from .fcif import FcifDocument


def context_from_fcif(doc: FcifDocument) -> OrderedContext:
    """Interpret a context document as an ordered formal context."""
    objects = doc.objects
    attributes = doc.attributes
    positions = {name: i for i, name in enumerate(objects)}
    term_positions = {term: i for i, term in enumerate(attributes)}
    incidence = set()
    for name, terms in doc.incidence_rows:
        gi = positions[name]
        for term in terms:
            incidence.add((gi, term_positions[term]))
    base = FormalContext(objects, attributes, frozenset(incidence))
    object_children = {name: children
                       for name, children in doc.object_rows if children}
    attribute_children = {term: children
                          for term, children in doc.attribute_rows if children}
    return OrderedContext(base, object_children, attribute_children)


def fcif_from_context(octx: OrderedContext,
                      type_name: str | None = None) -> FcifDocument:
    """Render an ordered context as a context document.

    Incidence-row members appear in ascending attribute-declaration
    order, which keeps serialization canonical.
    """
    ctx = octx.base
    object_rows = tuple(
        (name, tuple(octx.object_children.get(name, ())))
        for name in ctx.objects)
    attribute_rows = tuple(
        (term, tuple(octx.attribute_children.get(term, ())))
        for term in ctx.attributes)
    rows: dict[int, list[int]] = {g: [] for g in range(len(ctx.objects))}
    for g, a in ctx.incidence:
        rows[g].append(a)
    incidence_rows = tuple(
        (name, tuple(ctx.attributes[a] for a in sorted(rows[gi])))
        for gi, name in enumerate(ctx.objects))
    return FcifDocument(type_name, object_rows, attribute_rows, incidence_rows)


def fcif_to_clif(doc: FcifDocument) -> ClifDocument:
    """Order-close, enumerate concepts, and emit the lattice document.

    Class indices follow the canonical concept order (1 = most general);
    SUCCESSOR rows list immediate subconcepts.
    """
    octx = context_from_fcif(doc)
    closed = order_close_incidence(octx)
    lattice = enumerate_concepts(closed)
    object_generators = []
    attribute_generators = []
    successor_rows = []
    for index in range(len(lattice)):
        names = tuple(closed.objects[g]
                      for g in range(len(closed.objects))
                      if lattice.gamma[g] == index)
        terms = tuple(closed.attributes[a]
                      for a in range(len(closed.attributes))
                      if lattice.mu[a] == index)
        object_generators.append((index + 1, names))
        attribute_generators.append((index + 1, terms))
        successor_rows.append(
            (index + 1, tuple(low + 1 for low in lattice.lower_covers[index])))
    return ClifDocument(doc.type_name, tuple(object_generators),
                        tuple(attribute_generators), tuple(successor_rows))


def clif_to_fcif(doc: ClifDocument) -> FcifDocument:
    """Reconstruct the context document a lattice document encodes.

    Order information beyond the lattice itself is not recoverable, so
    OBJECT and ATTRIBUTE rows come out with empty children.
    """
    objects: list[str] = []
    object_class: dict[str, int] = {}
    for index, names in doc.object_generators:
        for name in names:
            objects.append(name)
            object_class[name] = index
    attributes: list[AttributeTerm] = []
    attribute_class: dict[AttributeTerm, int] = {}
    for index, terms in doc.attribute_generators:
        for term in terms:
            attributes.append(term)
            attribute_class[term] = index

    at_or_below: dict[int, frozenset[int]] = {
        index: doc.descendants(index) | {index}
        for index, _ in doc.successor_rows}
    incidence_rows = []
    for name in objects:
        gi_class = object_class[name]
        row = tuple(term for term in attributes
                    if gi_class in at_or_below[attribute_class[term]])
        incidence_rows.append((name, row))
    return FcifDocument(
        doc.type_name,
        tuple((name, ()) for name in objects),
        tuple((term, ()) for term in attributes),
        tuple(incidence_rows))


def context_from_table(ctx: FormalContext) -> OrderedContext:
    """Wrap a plain cross-table context (tables declare no orders)."""
    return OrderedContext(ctx, {}, {})


def lattice_of(octx: OrderedContext):
    """Order-close and enumerate; the standard load pipeline tail."""
    return enumerate_concepts(order_close_incidence(octx))
