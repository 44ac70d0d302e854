import oracles
import pytest

from rsgpd import fixtures, search
from rsgpd.axioms import (check_associativity, check_bilateral, check_distinct_set, check_left_restriction,
                          check_morphism, check_right_restriction)
from rsgpd.core import ElementMapping, RestrictionSemigroupoid, Semigroupoid, opposite


@pytest.mark.parametrize("make", [fixtures.sl2, fixtures.z2, fixtures.disj, fixtures.z2_adj])
def test_fixtures_pass(make):
    R = make()
    assert check_associativity(R).passed
    assert check_left_restriction(R).passed
    assert check_distinct_set(R, R.distinct_set).passed


def test_bad1_breaks_s1():
    S = fixtures.bad1()
    rep = check_associativity(S)
    x, y = S.ids("xy")
    assert any(v.rule == "s1" and v.witness == (x, y, x) for v in rep.violations)


def test_nc_table_is_not_associative():
    # a,b,c,d with (a,c) (b,c) (b,d) -> d: (b, a, c) meets s3 since (a,c) and (b, d) are composable
    S = fixtures.nc()
    rep = check_associativity(S)
    assert not rep.passed
    assert rep.violations[0].witness == tuple(S.ids("bac"))
    assert oracles.assoc(S.n, S.table) is False


def test_nc_sink_is_associative():
    assert check_associativity(fixtures.nc_sink()).passed


def test_fast_stops_at_first():
    S = fixtures.nc()
    assert len(check_associativity(S, fast=True).violations) == 1
    assert len(check_associativity(S).violations) == 3


def test_associativity_matches_oracle_n2():
    for S in search.all_tables(2):
        assert check_associativity(S).passed == oracles.assoc(2, S.table)


def test_left_restriction_matches_oracle_n2():
    for S in search.all_semigroupoids(2):
        for star in search.star_maps(2):
            R = RestrictionSemigroupoid(S, star)
            assert check_left_restriction(R).passed == oracles.left_restriction(2, S.table, star)


def test_z2_identity_star_fails_lr1(Z2):
    R = Z2.with_star((0, 1))
    rep = check_left_restriction(R)
    assert any(v.rule == "lr1" and v.witness == (1,) for v in rep.violations)


def test_duality_left_right(scan):
    for R in scan.structures:
        assert check_right_restriction(opposite(R)).passed
    for S in search.all_semigroupoids(2):
        for star in search.star_maps(2):
            R = RestrictionSemigroupoid(S, star)
            assert check_left_restriction(R).passed == check_right_restriction(opposite(R)).passed


def test_bilateral(SL2, Z2):
    assert check_bilateral(SL2, SL2.star).passed
    assert check_bilateral(Z2, Z2.star).passed
    rep = check_bilateral(Z2, (0, 1))
    assert "compat+*" in rep.rules()


def test_distinct_set_details(SL2):
    rep = check_distinct_set(SL2, SL2.distinct_set)
    assert rep.details["classes"] == [(0, 1)]
    assert rep.details["meets"][(0, 1)] == 0


def test_distinct_set_failures(Z2, DISJ):
    assert "empty" in check_distinct_set(Z2, set()).rules()
    assert "idempotent" in check_distinct_set(Z2, {1}).rules()
    assert check_distinct_set(DISJ, {0, 1}).details["classes"] == [(0,), (1,)]
    # two idempotents that compose but do not commute
    S = Semigroupoid.from_names(["a", "b"], {(x, y): x for x in "ab" for y in "ab"})
    assert "commute" in check_distinct_set(S, {0, 1}).rules()


def test_morphism_checks(Z2, DISJ):
    collapse = ElementMapping(Z2, Z2, (0, 0))
    assert check_morphism(collapse).passed
    assert "injective" in check_morphism(collapse, injective=True).rules()
    assert "surjective" in check_morphism(collapse, surjective=True).rules()
    into = ElementMapping(DISJ, Z2, (0, 0))
    assert check_morphism(into).passed
    assert "rigid" in check_morphism(into, rigid=True).rules()
    swap = ElementMapping(Z2, Z2, (1, 0))
    assert not check_morphism(swap).passed
