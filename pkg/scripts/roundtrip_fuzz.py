#!/usr/bin/env python3
"""Hammer the codecs with random documents and report failures.

A heavier, tunable version of the acceptance round-trip check: generate
N random documents per format with a given seed and verify that parsing
inverts serialization on each.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import docgen  # noqa: E402
from conceptnav.formats import (  # noqa: E402
    parse_clif,
    parse_context_table,
    parse_fcif,
    parse_soif,
    parse_urc,
    parse_urc_sgml,
    serialize_clif,
    serialize_context_table,
    serialize_fcif,
    serialize_soif,
    serialize_urc,
    serialize_urc_sgml,
)

CASES = {
    "fcif": (docgen.random_fcif, serialize_fcif, parse_fcif),
    "clif": (docgen.random_clif, serialize_clif, parse_clif),
    "soif": (docgen.random_soif_templates, serialize_soif, parse_soif),
    "urc": (docgen.random_urc, serialize_urc, parse_urc),
    "urc-sgml": (docgen.random_urc_sgml, serialize_urc_sgml, parse_urc_sgml),
    "table": (docgen.random_table_context, serialize_context_table,
              parse_context_table),
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-n", "--count", type=int, default=5000)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--formats", nargs="*", default=sorted(CASES),
                        choices=sorted(CASES))
    args = parser.parse_args()

    failures = 0
    for fmt in args.formats:
        generate, serialize, parse = CASES[fmt]
        rng = random.Random(args.seed)
        bad = 0
        for i in range(args.count):
            doc = generate(rng)
            try:
                again = parse(serialize(doc))
            except Exception as exc:  # noqa: BLE001 - report and continue
                print(f"{fmt}[{i}]: raised {exc!r}")
                bad += 1
                continue
            if again != doc:
                print(f"{fmt}[{i}]: document changed through round-trip")
                bad += 1
        failures += bad
        print(f"{fmt}: {args.count - bad}/{args.count} ok")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
