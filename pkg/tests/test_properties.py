"""Property tests for the derivation operators and lattice laws."""

from __future__ import annotations

from hypothesis import given, settings, strategies as st

from conceptnav.core import (
    AttributeTerm,
    FormalContext,
    OrderedContext,
    enumerate_concepts,
    order_close_incidence,
)

from oracle import subsets


@st.composite
def contexts(draw, max_objects=6, max_attributes=6):
    n = draw(st.integers(0, max_objects))
    m = draw(st.integers(0, max_attributes))
    incidence = draw(st.frozensets(
        st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(m - 1, 0))),
        max_size=n * m))
    if n == 0 or m == 0:
        incidence = frozenset()
    return FormalContext(
        tuple(f"g{i}" for i in range(n)),
        tuple(AttributeTerm(f"m{j}") for j in range(m)),
        incidence)


@st.composite
def ordered_contexts(draw):
    ctx = draw(contexts(max_objects=5, max_attributes=5))
    n, m = len(ctx.objects), len(ctx.attributes)
    # forward-only edges keep the declared relations acyclic
    obj_children = {}
    for i in range(n):
        kids = draw(st.frozensets(st.integers(i + 1, n), max_size=2))
        kids = tuple(ctx.objects[k] for k in sorted(kids) if k < n)
        if kids:
            obj_children[ctx.objects[i]] = kids
    attr_children = {}
    for j in range(m):
        kids = draw(st.frozensets(st.integers(j + 1, m), max_size=2))
        kids = tuple(ctx.attributes[k] for k in sorted(kids) if k < m)
        if kids:
            attr_children[ctx.attributes[j]] = kids
    return OrderedContext(ctx, obj_children, attr_children)


@given(contexts())
@settings(max_examples=60, deadline=None)
def test_galois_extensivity_and_idempotence(ctx):
    for attrs in subsets(range(len(ctx.attributes))):
        a = frozenset(attrs)
        extent = ctx.derive_extent(a)
        assert a <= ctx.derive_intent(extent)
        assert ctx.derive_extent(ctx.derive_intent(extent)) == extent
    for objs in subsets(range(len(ctx.objects))):
        g = frozenset(objs)
        intent = ctx.derive_intent(g)
        assert g <= ctx.derive_extent(intent)
        assert ctx.derive_intent(ctx.derive_extent(intent)) == intent


@given(contexts())
@settings(max_examples=60, deadline=None)
def test_antitone_derivation(ctx):
    attr_sets = [frozenset(s) for s in subsets(range(len(ctx.attributes)))]
    for a1 in attr_sets:
        for a2 in attr_sets:
            if a1 <= a2:
                assert ctx.derive_extent(a1) >= ctx.derive_extent(a2)


@given(contexts(max_objects=5, max_attributes=5))
@settings(max_examples=40, deadline=None)
def test_closures_of_object_subsets_are_exactly_the_concepts(ctx):
    expected = set()
    for objs in subsets(range(len(ctx.objects))):
        intent = ctx.derive_intent(frozenset(objs))
        expected.add((ctx.derive_extent(intent), intent))
    lat = enumerate_concepts(ctx)
    assert {(c.extent, c.intent) for c in lat.concepts} == expected
    assert len(lat.concepts) == len(expected)


@given(contexts(max_objects=5, max_attributes=5))
@settings(max_examples=30, deadline=None)
def test_lattice_laws(ctx):
    lat = enumerate_concepts(ctx)
    ids = range(len(lat))
    for x in ids:
        for y in ids:
            assert lat.join({x, y}) == lat.join({y, x})
            assert lat.meet({x, y}) == lat.meet({y, x})
            assert lat.join({x, lat.meet({x, y})}) == x
            assert lat.meet({x, lat.join({x, y})}) == x
    if len(lat) <= 12:
        for x in ids:
            for y in ids:
                for z in ids:
                    assert lat.join({lat.join({x, y}), z}) == \
                        lat.join({x, lat.join({y, z})})
                    assert lat.meet({lat.meet({x, y}), z}) == \
                        lat.meet({x, lat.meet({y, z})})


@given(contexts(max_objects=5, max_attributes=5))
@settings(max_examples=40, deadline=None)
def test_join_meet_against_order(ctx):
    lat = enumerate_concepts(ctx)
    ids = range(len(lat))
    for x in ids:
        for y in ids:
            j = lat.join({x, y})
            assert lat.leq(x, j) and lat.leq(y, j)
            for u in ids:
                if lat.leq(x, u) and lat.leq(y, u):
                    assert lat.leq(j, u)
            m = lat.meet({x, y})
            assert lat.leq(m, x) and lat.leq(m, y)
            for l in ids:
                if lat.leq(l, x) and lat.leq(l, y):
                    assert lat.leq(l, m)


@given(ordered_contexts())
@settings(max_examples=60, deadline=None)
def test_order_closure_inflationary_idempotent(octx):
    closed = order_close_incidence(octx)
    assert closed.incidence >= octx.base.incidence
    again = order_close_incidence(
        OrderedContext(closed, octx.object_children, octx.attribute_children))
    assert again.incidence == closed.incidence


@given(ordered_contexts())
@settings(max_examples=60, deadline=None)
def test_gamma_mu_reconstruct_closed_incidence(octx):
    closed = order_close_incidence(octx)
    lat = enumerate_concepts(closed)
    for g in range(len(closed.objects)):
        for a in range(len(closed.attributes)):
            assert ((g, a) in closed.incidence) == \
                lat.leq(lat.gamma[g], lat.mu[a])


@given(ordered_contexts())
@settings(max_examples=40, deadline=None)
def test_generator_maps_monotone_after_closure(octx):
    closed = order_close_incidence(octx)
    lat = enumerate_concepts(closed)
    for parent, children in octx.object_children.items():
        p = closed.object_index(parent)
        for child in children:
            c = closed.object_index(child)
            assert lat.leq(lat.gamma[c], lat.gamma[p])
    for parent, children in octx.attribute_children.items():
        p = closed.attribute_index(parent)
        for child in children:
            c = closed.attribute_index(child)
            assert lat.leq(lat.mu[p], lat.mu[c])


@given(contexts())
@settings(max_examples=30, deadline=None)
def test_covers_are_transitive_reduction(ctx):
    lat = enumerate_concepts(ctx)
    n = len(lat)
    strictly_below = [[lat.leq(j, i) and i != j for j in range(n)]
                      for i in range(n)]
    for i in range(n):
        covered = set(lat.lower_covers[i])
        for j in range(n):
            if not strictly_below[i][j]:
                assert j not in covered
                continue
            has_between = any(
                strictly_below[i][k] and strictly_below[k][j]
                for k in range(n))
            assert (j in covered) == (not has_between)


_MAGNITUDES = st.one_of(
    st.integers(0, 5_000_000).map(str),
    st.integers(0, 5_000).map(lambda n: f"{n}K"),
    st.integers(0, 5).map(lambda n: f"{n}MB"),
    st.integers(0, 5_000_000).map(lambda n: f"{n} bytes"),
)


@given(_MAGNITUDES, _MAGNITUDES)
@settings(max_examples=150, deadline=None)
def test_ordinal_grading_is_antitone_in_magnitude(raw1, raw2):
    from conceptnav.scaling import Scale, ScaleKind, ordinal_terms, parse_magnitude

    scale = Scale("size", ScaleKind.ORDINAL,
                  thresholds=(("1K", 1_000), ("500K", 500_000),
                              ("1MB", 1_000_000), ("4MB", 4_000_000)))
    if parse_magnitude(raw1) <= parse_magnitude(raw2):
        assert set(ordinal_terms(scale, raw2)) <= set(ordinal_terms(scale, raw1))


@given(st.text(st.characters(blacklist_characters='{}="\n<',
                             blacklist_categories=("Cs",)),
               min_size=1).filter(lambda s: s.strip()),
       st.text(st.characters(blacklist_characters='"\n',
                             blacklist_categories=("Cs",))))
@settings(max_examples=150, deadline=None)
def test_nominal_scaling_is_deterministic_per_pair(tag, value):
    from conceptnav.scaling import RawRecord, apply_scales

    tag = tag.strip()
    first = apply_scales([RawRecord("a", ((tag, value),))]).base.attributes
    second = apply_scales([RawRecord("b", ((tag, value),))]).base.attributes
    assert first == second
    assert first[0].value == value.strip()


def _brute_order_close(octx):
    """Independent fixpoint: iterate both closure rules until stable."""
    ctx = octx.base
    rows = {g: {a for gg, a in ctx.incidence if gg == g}
            for g in range(len(ctx.objects))}
    obj_pos = {name: i for i, name in enumerate(ctx.objects)}
    attr_pos = {term: i for i, term in enumerate(ctx.attributes)}
    changed = True
    while changed:
        changed = False
        for parent, children in octx.object_children.items():
            for child in children:
                missing = rows[obj_pos[parent]] - rows[obj_pos[child]]
                if missing:
                    rows[obj_pos[child]] |= missing
                    changed = True
        for parent, children in octx.attribute_children.items():
            p = attr_pos[parent]
            implied = {attr_pos[c] for c in children}
            for g, row in rows.items():
                if p in row and not implied <= row:
                    row |= implied
                    changed = True
    return {(g, a) for g, row in rows.items() for a in row}


@given(ordered_contexts())
@settings(max_examples=80, deadline=None)
def test_order_closure_matches_fixpoint_oracle(octx):
    closed = order_close_incidence(octx)
    assert closed.incidence == frozenset(_brute_order_close(octx))
