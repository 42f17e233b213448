"""Cross-table context files."""

from __future__ import annotations

from importlib import resources

import pytest

from conceptnav.core import AttributeTerm, Op
from conceptnav.errors import ParseError
from conceptnav.formats import parse_context_table, serialize_context_table

from conftest import bibtex_context


@pytest.fixture(scope="module")
def bundled():
    text = (resources.files("conceptnav") / "data" / "bibtex.cxt").read_text()
    return parse_context_table(text)


class TestBundledTable:
    def test_counts(self, bundled):
        assert len(bundled.objects) == 13
        assert len(bundled.attributes) == 20
        assert len(bundled.incidence) == 41

    def test_matches_independent_transcription(self, bundled):
        assert bundled == bibtex_context()

    def test_empty_row_object_kept(self, bundled):
        misc = bundled.object_index("misc")
        assert bundled.derive_intent({misc}) == frozenset()


class TestParsing:
    def test_one_by_one(self):
        ctx = parse_context_table(",m\ng,X\n")
        assert ctx.objects == ("g",)
        assert ctx.incidence == frozenset({(0, 0)})

    def test_mark_variants(self):
        ctx = parse_context_table(",a,b,c\ng,x,1,0\n")
        assert ctx.incidence == frozenset({(0, 0), (0, 1)})

    def test_tab_delimiter(self):
        ctx = parse_context_table("\ta b\ng one\tX\n")
        assert ctx.objects == ("g one",)
        assert ctx.attributes == (AttributeTerm("a b"),)

    def test_valued_header_parsed_as_term(self):
        ctx = parse_context_table(",size<=1MB\ng,X\n")
        assert ctx.attributes == (AttributeTerm("size", Op.AT_MOST, "1MB"),)

    def test_ragged_row_rejected(self):
        with pytest.raises(ParseError) as info:
            parse_context_table(",a,b\ng,X\n")
        assert info.value.line == 2

    def test_duplicate_object_rejected(self):
        with pytest.raises(ParseError):
            parse_context_table(",a\ng,X\ng,\n")

    def test_duplicate_attribute_rejected(self):
        with pytest.raises(ParseError):
            parse_context_table(",a,a\ng,X,\n")

    def test_unknown_mark_rejected(self):
        with pytest.raises(ParseError):
            parse_context_table(",a\ng,maybe\n")


class TestRoundTrip:
    def test_bundled_round_trips(self, bundled):
        assert parse_context_table(serialize_context_table(bundled)) == bundled

    def test_bundled_file_is_canonical(self, bundled):
        text = (resources.files("conceptnav") / "data" / "bibtex.cxt").read_text()
        assert serialize_context_table(bundled) == text
