"""Command-line interface."""

from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from conceptnav.cli import main

from conftest import FIXTURES, GOLDEN

BIBTEX = None  # resolved lazily from package data


@pytest.fixture(scope="module")
def bibtex_path(tmp_path_factory):
    from importlib import resources
    text = (resources.files("conceptnav") / "data" / "bibtex.cxt").read_text()
    path = tmp_path_factory.mktemp("cli") / "bibtex.cxt"
    path.write_text(text)
    return str(path)


@pytest.fixture()
def runner():
    return CliRunner()


class TestConvert:
    def test_table_to_clif(self, runner, bibtex_path):
        result = runner.invoke(main, ["convert", "--from", "table",
                                      "--to", "clif", bibtex_path])
        assert result.exit_code == 0, result.output
        assert result.output == (GOLDEN / "bibtex.clif").read_text()

    def test_urc_to_fcif_matches_golden(self, runner):
        result = runner.invoke(main, [
            "convert", "--from", "urc", "--to", "fcif",
            "--scales", "urc-demo", str(FIXTURES / "ftp-telnet.urc")])
        assert result.exit_code == 0, result.output
        assert result.output == (GOLDEN / "urc.fcif").read_text()

    def test_fcif_identity_pipeline_is_canonical(self, runner, tmp_path):
        source = GOLDEN / "urc.fcif"
        result = runner.invoke(main, ["convert", "--to", "fcif", str(source)])
        assert result.exit_code == 0, result.output
        assert result.output == source.read_text()

    def test_format_sniffing_from_extension(self, runner):
        result = runner.invoke(main, [
            "convert", "--to", "fcif", "--scales", "urc-demo",
            str(FIXTURES / "ftp-telnet.urc")])
        assert result.exit_code == 0, result.output

    def test_output_file(self, runner, bibtex_path, tmp_path):
        out = tmp_path / "out.fcif"
        result = runner.invoke(main, ["convert", "--to", "fcif",
                                      "--output", str(out), bibtex_path])
        assert result.exit_code == 0, result.output
        assert out.read_text() == (GOLDEN / "bibtex.fcif").read_text()

    def test_sgml_to_fcif(self, runner):
        result = runner.invoke(main, ["convert", "--to", "fcif",
                                      str(GOLDEN / "sample.sgml")])
        assert result.exit_code == 0, result.output
        assert "urn:mysite.uri/myauth/11122233 { url:" in result.output

    def test_raw_target_requires_same_family(self, runner, bibtex_path):
        result = runner.invoke(main, ["convert", "--to", "soif", bibtex_path])
        assert result.exit_code != 0

    def test_parse_failure_exits_nonzero(self, runner, tmp_path):
        bad = tmp_path / "bad.fcif"
        bad.write_text("TYPE\nOBJECT\n    g {\n")
        result = runner.invoke(main, ["convert", "--to", "fcif", str(bad)])
        assert result.exit_code != 0
        assert "brace" in result.output or "section" in result.output


class TestLattice:
    def test_bibtex_stats(self, runner, bibtex_path):
        result = runner.invoke(main, ["lattice", bibtex_path])
        assert result.exit_code == 0, result.output
        assert result.output == (
            "objects: 13\nattributes: 20\nincidence: 41\n"
            "concepts: 14\ncover edges: 20\nheight: 6\n")


class TestQuery:
    def test_author_year(self, runner, bibtex_path):
        result = runner.invoke(main, ["query", bibtex_path, "author", "year"])
        assert result.exit_code == 0, result.output
        lines = result.output.splitlines()
        assert lines[1].startswith("extent (8): article, book, inbook")
        assert lines[2] == "intent (3): author, title, year"

    def test_no_terms_gives_top(self, runner, bibtex_path):
        result = runner.invoke(main, ["query", bibtex_path])
        assert result.exit_code == 0, result.output
        assert "extent (13):" in result.output
        assert "intent (0):" in result.output

    def test_journal_publisher_is_bottom(self, runner, bibtex_path):
        result = runner.invoke(main, ["query", bibtex_path,
                                      "journal", "publisher"])
        assert result.exit_code == 0, result.output
        assert "extent (0):" in result.output
        assert "intent (20):" in result.output

    def test_unknown_term_lists_known(self, runner, bibtex_path):
        result = runner.invoke(main, ["query", bibtex_path, "flavor"])
        assert result.exit_code != 0
        assert "known terms" in result.output
        assert "author" in result.output


class TestDiagram:
    def test_json_output(self, runner, bibtex_path):
        result = runner.invoke(main, ["diagram", "--out", "json", bibtex_path])
        assert result.exit_code == 0, result.output
        doc = json.loads(result.output)
        assert len(doc["concepts"]) == 14

    def test_dot_output(self, runner, bibtex_path):
        result = runner.invoke(main, ["diagram", "--out", "dot", bibtex_path])
        assert result.exit_code == 0, result.output
        assert result.output.startswith("digraph concept_lattice {")
        assert result.output.count(" -> ") == 20


class TestValidate:
    def test_ok(self, runner, bibtex_path):
        result = runner.invoke(main, ["validate", bibtex_path])
        assert result.exit_code == 0, result.output
        assert "OK" in result.output

    def test_cycle_rejected(self, runner, tmp_path):
        bad = tmp_path / "cycle.fcif"
        bad.write_text(
            "TYPE\nOBJECT\n    a { b }\n    b { a }\n"
            "ATTRIBUTE\nINCIDENCE\n    a {}\n    b {}\n")
        result = runner.invoke(main, ["validate", str(bad)])
        assert result.exit_code != 0
        assert "cycle" in result.output


class TestScaleEnvDefault:
    def test_env_var_supplies_scales(self, runner, monkeypatch):
        monkeypatch.setenv("CONCEPTNAV_SCALES", "urc-demo")
        result = runner.invoke(main, [
            "convert", "--to", "fcif", str(FIXTURES / "ftp-telnet.urc")])
        assert result.exit_code == 0, result.output
        assert result.output == (GOLDEN / "urc.fcif").read_text()

    def test_unknown_scale_set(self, runner):
        result = runner.invoke(main, [
            "convert", "--to", "fcif", "--scales", "nope",
            str(FIXTURES / "ftp-telnet.urc")])
        assert result.exit_code != 0
        assert "scale set" in result.output


class TestQueryValuedTerms:
    def test_exact_valued_term(self, runner):
        result = runner.invoke(main, [
            "query", "--scales", "urc-demo",
            str(FIXTURES / "ftp-telnet.urc"), "size=large"])
        assert result.exit_code == 0, result.output
        assert "extent (3):" in result.output

    def test_quoted_value_with_spaces(self, runner):
        result = runner.invoke(main, [
            "query", "--scales", "urc-demo",
            str(FIXTURES / "ftp-telnet.urc"),
            'author="Adam Arrowood"'])
        assert result.exit_code == 0, result.output
        assert "extent (3):" in result.output

    def test_bare_tag_ambiguous_when_two_terms_share_it(self, runner):
        result = runner.invoke(main, [
            "query", "--scales", "urc-demo",
            str(FIXTURES / "ftp-telnet.urc"), "content-type"])
        assert result.exit_code != 0
        assert "ambiguous" in result.output


class TestLoadFromLatticeDocument:
    def test_clif_input_rebuilds_the_context(self, runner, bibtex_path,
                                             tmp_path):
        clif_path = tmp_path / "bibtex.clif"
        result = runner.invoke(main, ["convert", "--from", "table",
                                      "--to", "clif", "--output",
                                      str(clif_path), bibtex_path])
        assert result.exit_code == 0, result.output
        stats = runner.invoke(main, ["lattice", str(clif_path)])
        assert stats.exit_code == 0, stats.output
        assert "concepts: 14" in stats.output
        assert "incidence: 41" in stats.output

    def test_query_over_clif_input(self, runner, bibtex_path, tmp_path):
        clif_path = tmp_path / "bibtex.clif"
        runner.invoke(main, ["convert", "--from", "table", "--to", "clif",
                             "--output", str(clif_path), bibtex_path])
        result = runner.invoke(main, ["query", str(clif_path),
                                      "author", "year"])
        assert result.exit_code == 0, result.output
        assert "extent (8):" in result.output


class TestSoifConversion:
    def test_single_line_values_convert(self, runner, tmp_path):
        soif = tmp_path / "one.soif"
        soif.write_bytes(
            b"@FILE { ftp://host/pkg.tar.gz\n"
            b"Title {5}:\thello\n"
            b"Author {2}:\tme\n"
            b"}\n")
        result = runner.invoke(main, ["convert", "--to", "fcif", str(soif)])
        assert result.exit_code == 0, result.output
        assert "ftp://host/pkg.tar.gz" in result.output
        assert "Title = hello" in result.output

    def test_multiline_values_fail_with_clear_error(self, runner):
        result = runner.invoke(main, [
            "convert", "--to", "fcif", str(GOLDEN / "sample.soif")])
        assert result.exit_code != 0
        assert "newlines are not representable" in result.output
