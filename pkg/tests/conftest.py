from __future__ import annotations

import random
from pathlib import Path

import pytest

from conceptnav.core import AttributeTerm, FormalContext, enumerate_concepts

from bibtex_data import ATTRIBUTES, OBJECTS, REQUIRED
from oracle import BruteContext

GOLDEN = Path(__file__).parent / "golden"
FIXTURES = Path(__file__).parent / "fixtures"


def bibtex_context() -> FormalContext:
    terms = [AttributeTerm(tag) for tag in ATTRIBUTES]
    incidence = set()
    for gi, g in enumerate(OBJECTS):
        for tag in REQUIRED[g]:
            incidence.add((gi, ATTRIBUTES.index(tag)))
    return FormalContext(tuple(OBJECTS), tuple(terms), frozenset(incidence))


@pytest.fixture(scope="session")
def bibtex():
    return bibtex_context()


@pytest.fixture(scope="session")
def bibtex_lattice(bibtex):
    return enumerate_concepts(bibtex)


@pytest.fixture(scope="session")
def bibtex_brute():
    return BruteContext({g: set(REQUIRED[g]) for g in OBJECTS},
                        attributes=ATTRIBUTES)


def random_context(rng: random.Random, n_objects: int, n_attributes: int,
                   density: float = 0.4) -> FormalContext:
    objects = tuple(f"g{i}" for i in range(n_objects))
    attributes = tuple(AttributeTerm(f"m{j}") for j in range(n_attributes))
    incidence = frozenset(
        (i, j)
        for i in range(n_objects)
        for j in range(n_attributes)
        if rng.random() < density)
    return FormalContext(objects, attributes, incidence)


def attr_indices(ctx: FormalContext, *tags: str) -> set[int]:
    by_tag = {t.tag: i for i, t in enumerate(ctx.attributes)}
    return {by_tag[t] for t in tags}


def obj_indices(ctx: FormalContext, *names: str) -> set[int]:
    return {ctx.object_index(n) for n in names}
