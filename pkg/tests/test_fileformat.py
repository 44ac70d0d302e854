import pytest

from rsgpd import fixtures
from rsgpd.core import ElementMapping, RestrictionSemigroupoid, Semigroupoid
from rsgpd.fileformat import DuplicateComposeKey, ParseError, UnknownElement, build, emit, load, parse

SL2_TEXT = """\
# two-element semilattice
elements: e f
compose: e e -> e
compose: e f -> e
compose: f e -> e
compose: f f -> f
star: e -> e
star: f -> f
"""


def test_parse_sl2():
    R = build(parse(SL2_TEXT))
    assert isinstance(R, RestrictionSemigroupoid)
    want = fixtures.sl2()
    assert R.names == want.names and R.table == want.table and R.star == want.star


def test_unknown_element_line():
    text = "elements: a b\ncompose: a b -> z\n"
    with pytest.raises(UnknownElement) as exc:
        build(parse(text))
    assert exc.value.line == 2


def test_duplicate_compose_key():
    text = "elements: a\ncompose: a a -> a\ncompose: a a -> a\n"
    with pytest.raises(DuplicateComposeKey) as exc:
        parse(text)
    assert exc.value.line == 3


def test_unknown_section():
    with pytest.raises(ParseError) as exc:
        parse("elements: a\nfoo: a\n")
    assert exc.value.line == 2


def test_bad_arrow_and_name():
    with pytest.raises(ParseError):
        parse("elements: a\ncompose: a a a\n")
    with pytest.raises(ParseError):
        parse("elements: a$\n")


def test_star_all_or_none():
    with pytest.raises(ParseError):
        build(parse("elements: a b\nstar: a -> a\n"))


def test_plain_semigroupoid():
    S = build(parse("elements: a b\ncompose: a b -> b\n"))
    assert type(S) is Semigroupoid and S.table == {(0, 1): 1}


def test_round_trip_canonical():
    shuffled = "star: f -> f\nelements: e f\ncompose: f f -> f\ncompose: e e -> e\n" \
               "compose:   f\te -> e\ncompose: e f -> e\nstar: e -> e\n"
    once = emit(build(parse(shuffled)))
    assert once == emit(build(parse(once)))
    assert once == emit(build(parse(SL2_TEXT)))


def test_explicit_E_survives_round_trip():
    R = build(parse(SL2_TEXT + "E: f\n"))
    assert R.distinct_set == {1}
    assert "E: f" in emit(R)


def test_data_files(data_dir):
    for name, make in [("SL2", fixtures.sl2), ("Z2", fixtures.z2), ("DISJ", fixtures.disj),
                       ("NC", fixtures.nc), ("Z2_ADJ", fixtures.z2_adj)]:
        got, want = load(data_dir / f"{name}.sgpd"), make()
        assert got.names == want.names and got.table == want.table


def test_mapping_file(data_dir):
    phi = load(data_dir / "collapse.map")
    assert isinstance(phi, ElementMapping)
    assert phi.as_names() == {"1": "1", "g": "1"}


def test_mapping_unknown_element(tmp_path, data_dir):
    (tmp_path / "Z2.sgpd").write_text((data_dir / "Z2.sgpd").read_text())
    bad = tmp_path / "bad.map"
    bad.write_text("source: Z2.sgpd\ntarget: Z2.sgpd\nmap: 1 -> 1\nmap: h -> 1\n")
    with pytest.raises(UnknownElement):
        load(bad)
