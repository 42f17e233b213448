"""Plain resource-characteristic records."""

from __future__ import annotations

import pytest

from conceptnav.errors import ParseError, ValidationError
from conceptnav.formats import (
    UrcLocation,
    UrcRecord,
    parse_urc,
    serialize_urc,
    urc_to_records,
)

from conftest import FIXTURES, GOLDEN

URN = "URN:IANA:623:oit:cs:ftp-and-telnet"
URL1 = "URL:file://ftp.gatech.edu/pub/docs/ftp.telnet.ps"
URL2 = "URL:http://www.gatech.edu/oit/info/ftp.telnet.html"


@pytest.fixture(scope="module")
def sample_record():
    return parse_urc((FIXTURES / "ftp-telnet.urc").read_text())


class TestParsePaperRecord:
    def test_urn(self, sample_record):
        assert sample_record.urn == URN

    def test_global_pairs(self, sample_record):
        assert sample_record.global_pairs == (
            ("Title", "Intro to FTP and Telnet"),
            ("Author", "Adam Arrowood"))

    def test_locations_in_precedence_order(self, sample_record):
        assert [loc.url for loc in sample_record.locations] == [URL1, URL2]

    def test_second_location_pairs(self, sample_record):
        assert sample_record.locations[1].pairs == (
            ("Content-Type", "text/html"),
            ("Size", "600K"),
            ("Cost", "US$0.25"))

    def test_double_space_value_is_trimmed(self, sample_record):
        assert sample_record.locations[0].pairs[0] == (
            "Content-Type", "text/postscript")


class TestParseShapes:
    def test_anonymous_record(self):
        record = parse_urc("URL:http://x\nTitle: t\n")
        assert record.urn is None
        assert len(record.locations) == 1
        assert record.locations[0].pairs == (("Title", "t"),)

    def test_keys_without_urn_attach_to_globals(self):
        record = parse_urc("Title: t\nURL:http://x\n")
        assert record.global_pairs == (("Title", "t"),)

    def test_urn_line_not_first_is_a_pair(self):
        record = parse_urc("Title: t\nURN: something\n")
        assert record.urn is None
        assert record.global_pairs == (("Title", "t"), ("URN", "something"))

    def test_line_without_colon_rejected(self):
        with pytest.raises(ParseError) as info:
            parse_urc("URL:http://x\nnonsense\n")
        assert info.value.line == 2

    def test_blank_lines_skipped(self):
        record = parse_urc("\nURN:x:y\n\nTitle: t\n")
        assert record.urn == "URN:x:y"


class TestRoundTrip:
    def test_golden_file_is_canonical(self, sample_record):
        assert serialize_urc(sample_record) == (GOLDEN / "urc.urc").read_text()

    def test_parse_serialize_identity(self, sample_record):
        assert parse_urc(serialize_urc(sample_record)) == sample_record

    def test_empty_record(self):
        assert serialize_urc(UrcRecord(None)) == ""
        assert parse_urc("") == UrcRecord(None)

    def test_key_that_looks_like_url_rejected(self):
        record = UrcRecord(None, (), (UrcLocation("URL:x", (("Url", "y"),)),))
        with pytest.raises(ValidationError):
            serialize_urc(record)


class TestRecords:
    def test_sample_record_explodes_to_three(self, sample_record):
        records = urc_to_records(sample_record)
        assert [r.name for r in records] == [URN, URL1, URL2]
        assert records[0].children == (URL1, URL2)
        assert records[0].pairs == sample_record.global_pairs
        assert records[1].children == ()

    def test_anonymous_record_keeps_locations_only(self):
        records = urc_to_records(parse_urc("URL:http://x\nTitle: t\n"))
        assert [r.name for r in records] == ["URL:http://x"]

    def test_globals_without_urn_rejected(self):
        record = UrcRecord(None, (("Title", "t"),), ())
        with pytest.raises(ValidationError):
            urc_to_records(record)
