"""Line-diagram layout and emission for concept lattices.

Layers follow longest cover-paths from the top; horizontal positions
come from a fixed number of barycenter sweeps over the cover graph, so
output is deterministic rather than crossing-optimal.  Labels are
reduced: an object names only its least concept, an attribute only its
greatest.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import ConceptLattice

_SWEEPS = 4
_X_SPAN = 1000


@dataclass(frozen=True)
class Layout:
    positions: tuple[tuple[int, int], ...]  # concept index -> (x, y)
    layers: tuple[int, ...]  # concept index -> layer, 0 = top


def assign_layers(lattice: ConceptLattice) -> tuple[int, ...]:
    """Longest cover-path length from the top, per concept."""
    layers = [0] * len(lattice)
    # canonical order sorts by decreasing extent, so covers point forward
    for upper, lows in enumerate(lattice.lower_covers):
        for low in lows:
            layers[low] = max(layers[low], layers[upper] + 1)
    return tuple(layers)


def layout_coordinates(lattice: ConceptLattice,
                       layers: tuple[int, ...] | None = None) -> Layout:
    """Deterministic coordinates: y descends with the layer, x by barycenter."""
    if layers is None:
        layers = assign_layers(lattice)
    max_layer = max(layers, default=0)
    by_layer: dict[int, list[int]] = {}
    for concept, layer in enumerate(layers):
        by_layer.setdefault(layer, []).append(concept)
    order = {layer: list(members) for layer, members in by_layer.items()}

    slot = {c: i for members in order.values() for i, c in enumerate(members)}

    def neighbor_mean(concept: int, neighbors: tuple[int, ...]) -> float:
        if not neighbors:
            return float(slot[concept])
        return sum(slot[n] for n in neighbors) / len(neighbors)

    for sweep in range(_SWEEPS):
        downward = sweep % 2 == 0
        layer_ids = sorted(order)
        if not downward:
            layer_ids.reverse()
        for layer in layer_ids:
            members = order[layer]
            keys = {}
            for concept in members:
                neighbors = (lattice.upper_covers[concept] if downward
                             else lattice.lower_covers[concept])
                keys[concept] = neighbor_mean(concept, neighbors)
            members.sort(key=lambda c: (keys[c], slot[c]))
            for i, concept in enumerate(members):
                slot[concept] = i

    positions = [None] * len(lattice)
    for layer, members in order.items():
        width = len(members)
        for i, concept in enumerate(members):
            x = round(_X_SPAN * (2 * i + 1) / (2 * width))
            positions[concept] = (x, max_layer - layer)
    return Layout(tuple(positions), tuple(layers))


def reduced_labels(lattice: ConceptLattice) -> tuple[
        tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """(object labels, attribute labels) per concept, by index."""
    objects: list[list[int]] = [[] for _ in range(len(lattice))]
    attributes: list[list[int]] = [[] for _ in range(len(lattice))]
    for g, concept in enumerate(lattice.gamma):
        objects[concept].append(g)
    for m, concept in enumerate(lattice.mu):
        attributes[concept].append(m)
    return (tuple(tuple(row) for row in objects),
            tuple(tuple(row) for row in attributes))


def emit_dot(lattice: ConceptLattice, layout: Layout | None = None) -> str:
    """Graphviz digraph: one rank per layer, edges upper -> lower cover."""
    if layout is None:
        layout = layout_coordinates(lattice)
    object_labels, attribute_labels = reduced_labels(lattice)
    ctx = lattice.context
    lines = [
        "digraph concept_lattice {",
        "    rankdir=TB",
        "    node [shape=box style=rounded fontname=Helvetica]",
    ]
    by_layer: dict[int, list[int]] = {}
    for concept, layer in enumerate(layout.layers):
        by_layer.setdefault(layer, []).append(concept)
    for layer in sorted(by_layer):
        members = " ".join(f"c{c}" for c in by_layer[layer])
        lines.append(f"    {{ rank=same {members} }}")
    for concept in range(len(lattice)):
        attr_part = " ".join(ctx.attributes[m].render()
                             for m in attribute_labels[concept])
        obj_part = " ".join(ctx.objects[g] for g in object_labels[concept])
        label = "\\n".join(part for part in (attr_part, obj_part) if part)
        label = label.replace('"', '\\"')
        x, y = layout.positions[concept]
        lines.append(f'    c{concept} [label="{label}" pos="{x},{y * 100}!"]')
    for upper, lows in enumerate(lattice.lower_covers):
        for low in lows:
            lines.append(f"    c{upper} -> c{low}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def diagram_dict(lattice: ConceptLattice, layout: Layout | None = None,
                 type_name: str | None = None) -> dict:
    """The stable document the exploration clients consume."""
    if layout is None:
        layout = layout_coordinates(lattice)
    object_labels, attribute_labels = reduced_labels(lattice)
    ctx = lattice.context
    concepts = []
    for index in range(len(lattice)):
        concept = lattice.concepts[index]
        x, y = layout.positions[index]
        concepts.append({
            "id": index,
            "extent": sorted(concept.extent),
            "intent": sorted(concept.intent),
            "objectLabels": list(object_labels[index]),
            "attributeLabels": list(attribute_labels[index]),
            "x": x,
            "y": y,
            "lowerCovers": list(lattice.lower_covers[index]),
            "upperCovers": list(lattice.upper_covers[index]),
        })
    return {
        "type": type_name,
        "objects": list(ctx.objects),
        "attributes": [{"tag": t.tag, "op": t.op.value, "value": t.value}
                       for t in ctx.attributes],
        "concepts": concepts,
        "top": lattice.top,
        "bottom": lattice.bottom,
    }


def emit_json(lattice: ConceptLattice, layout: Layout | None = None,
              type_name: str | None = None) -> str:
    return json.dumps(diagram_dict(lattice, layout, type_name), indent=2) + "\n"
