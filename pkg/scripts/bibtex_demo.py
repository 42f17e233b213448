#!/usr/bin/env python3
"""Walk the bundled bibliography-types context end to end.

Loads the cross table, prints lattice statistics and a few closure
queries, and writes the line diagram as DOT and JSON next to this
script (out/ by default).
"""

from __future__ import annotations

import argparse
from importlib import resources
from pathlib import Path

from conceptnav.core import OrderedContext
from conceptnav.diagram import emit_dot, emit_json
from conceptnav.formats import parse_context_table
from conceptnav.session import Session, resolve_attribute


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="out", type=Path)
    args = parser.parse_args()

    text = (resources.files("conceptnav") / "data" / "bibtex.cxt").read_text()
    ctx = parse_context_table(text)
    session = Session.from_context(OrderedContext(ctx, {}, {}),
                                   source="bibtex.cxt")
    lattice = session.lattice

    print(f"objects: {len(ctx.objects)}  attributes: {len(ctx.attributes)}  "
          f"incidences: {len(ctx.incidence)}")
    print(f"concepts: {len(lattice)}  "
          f"cover edges: {sum(len(c) for c in lattice.lower_covers)}  "
          f"height: {max(session.layout.layers)}")
    print()

    for tags in (["author", "year"], ["journal"], ["school"]):
        indices = [resolve_attribute(session.context, t) for t in tags]
        concept = lattice.concepts[lattice.meet(
            {lattice.mu[m] for m in indices})]
        extent = ", ".join(ctx.objects[g] for g in sorted(concept.extent))
        print(f"types requiring {' + '.join(tags)}: {extent or '(none)'}")

    args.out_dir.mkdir(parents=True, exist_ok=True)
    dot_path = args.out_dir / "bibtex.dot"
    json_path = args.out_dir / "bibtex.json"
    dot_path.write_text(emit_dot(lattice, session.layout))
    json_path.write_text(emit_json(lattice, session.layout))
    print(f"\nwrote {dot_path} and {json_path}")


if __name__ == "__main__":
    main()
