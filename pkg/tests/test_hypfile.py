import pytest
from hypothesis import given, settings, strategies as st

from hyperalg.census import HYPERFIELD, enumerate_structures
from hyperalg.constructions import krasner_k2, product_space, sign_hyperfield
from hyperalg.hypfile import (
    HVSPACE, HYPERFIELD as FIELD_KIND, ParseError, StructureFile, census_file, field_block, group_block,
    parse, render, space_block,
)

K2_TEXT = """\
structure hyperfield K2
  elements 0 1
  zero 0
  one 1
  add 0 0 = { 0 }
  add 0 1 = { 1 }
  add 1 0 = { 1 }
  add 1 1 = { 0 1 }
  mul 0 0 = 0
  mul 0 1 = 0
  mul 1 0 = 0
  mul 1 1 = 1
end
"""


def test_parse_k2_block():
    sf = parse(K2_TEXT)
    assert sf.names == ["K2"]
    b = sf.get("K2")
    assert b.kind == FIELD_KIND and b.zero == 0 and b.one == 1
    k2 = krasner_k2()
    assert b.add.cells == k2.add.cells and b.mul.cells == k2.mul.cells
    assert render(sf) == K2_TEXT


def test_comments_and_blank_lines():
    text = "# header line\n\n" + K2_TEXT.replace("  zero 0\n", "  zero 0   # trailing\n\n")
    sf = parse(text)
    assert sf.header == ["# header line"]
    assert sf.get("K2").zero == 0


def error_of(text):
    with pytest.raises(ParseError) as exc:
        parse(text)
    return exc.value


def test_empty_set_literal():
    e = error_of(K2_TEXT.replace("add 1 1 = { 0 1 }", "add 1 1 = {}"))
    assert "empty set literal" in e.message and e.line == 8


def test_unresolved_field_reference():
    e = error_of(K2_TEXT + "structure hvspace V over F\n  vectors a\n  theta a\nend\n")
    assert "unresolved reference" in e.message and e.line == 14 and e.col == 26


def test_unresolved_element():
    e = error_of(K2_TEXT.replace("add 1 1 = { 0 1 }", "add 1 1 = { 0 2 }"))
    assert "unresolved reference" in e.message and e.line == 8


def test_duplicate_and_missing_cells():
    e = error_of(K2_TEXT.replace("  mul 1 1 = 1\n", "  mul 1 1 = 1\n  mul 1 1 = 0\n"))
    assert "duplicate cell" in e.message and e.line == 13
    e = error_of(K2_TEXT.replace("  add 0 1 = { 1 }\n", ""))
    assert "missing cell: add 0 1" in e.message and e.line == 12


def test_syntax_errors():
    assert "syntax error" in error_of("hello\n").message
    assert "not closed" in error_of(K2_TEXT.replace("end\n", "")).message
    assert "syntax error" in error_of(K2_TEXT.replace("add 0 0 = { 0 }", "add 0 0 { 0 }")).message
    assert "syntax error" in error_of(K2_TEXT.replace("add 0 0 = { 0 }", "add 0 0 = { 0")).message
    assert "unknown structure kind" in error_of("structure ring R\nend\n").message
    assert "duplicate structure name" in error_of(K2_TEXT + K2_TEXT).message
    assert "missing 'one'" in error_of(K2_TEXT.replace("  one 1\n", "")).message


def test_space_block_round_trip(k2sq):
    sf = StructureFile(header=["# demo"], blocks=[field_block("K2", krasner_k2()), space_block("V", "K2", k2sq)])
    text = render(sf)
    again = parse(text)
    assert render(again) == text
    b = again.get("V")
    assert b.kind == HVSPACE and b.vadd.cells == k2sq.vadd.cells and b.action == k2sq.action


def test_group_block_round_trip():
    sf = StructureFile(blocks=[group_block("H", sign_hyperfield().add)])
    text = render(sf)
    assert "structure hypergroup H" in text and "op 1 -1 = { 0 1 -1 }" in text
    assert render(parse(text)) == text


def test_census_manifest_line():
    entries = enumerate_structures(HYPERFIELD, 2)
    text = render(census_file(HYPERFIELD, 2, entries))
    assert text.splitlines()[0] == "# census kind=hyperfield order=2 count=2"


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["K2", "S3"]), st.integers(1, 2))
def test_render_parse_render_fixed_point(name, n):
    F = krasner_k2() if name == "K2" else sign_hyperfield()
    sf = StructureFile(blocks=[field_block(name, F), space_block(f"{name}^{n}", name, product_space(F, n))])
    text = render(sf)
    assert render(parse(text)) == text
