import random

import oracles
import pytest

from rsgpd import axioms, fixtures, search, structure
from rsgpd.core import ElementMapping
from rsgpd.errors import GuardExceeded, PreconditionError
from rsgpd.szendrei import (SzElement, build_sz, category_identities, check_premorphism, check_unitary,
                            eta, evaluate_decomposition, factorize, generator_decomposition, iota,
                            iota_map, premorphism_from_morphism, sz_category_structure, sz_functor,
                            sz_order, verify_naturality)


def test_sz_z2_exact(Z2):
    sz = build_sz(Z2)
    one, g = Z2.ids("1g")
    assert set(sz.elements) == {SzElement({one}, one), SzElement({one, g}, one), SzElement({one, g}, g)}
    assert sorted(sz.names()) == ["{1,g|1}", "{1,g|g}", "{1|1}"]


def test_sz_sizes(SL2, DISJ):
    assert len(build_sz(SL2)) == 2
    assert len(build_sz(DISJ)) == 2
    assert len(build_sz(fixtures.z2_adj())) == 4


def test_carrier_and_product_match_oracle(scan):
    for R in scan.structures:
        sz = build_sz(R)
        carrier = oracles.sz_carrier(R.n, R.table, R.star, R.distinct_set)
        assert {(x.A, x.a) for x in sz.elements} == carrier
        T = sz.structure
        for i, x in enumerate(sz.elements):
            for j, y in enumerate(sz.elements):
                want = oracles.sz_product(R.table, R.star, (x.A, x.a), (y.A, y.a))
                got = T.table.get((i, j))
                if want is None:
                    assert got is None
                else:
                    z = sz.elements[got]
                    assert (z.A, z.a) == want


def test_sz_is_left_restriction(scan):
    for R in scan.structures:
        T = build_sz(R).structure
        assert axioms.check_left_restriction(T).passed
        assert T.distinct_set == frozenset(T.star)


def test_sz_order_examples(Z2):
    one, g = Z2.ids("1g")
    big, small = SzElement({one, g}, one), SzElement({one}, one)
    assert sz_order(Z2, big, small)
    assert not sz_order(Z2, small, big)
    assert not sz_order(Z2, SzElement({one, g}, g), small)


def test_sz_order_is_natural_order(scan):
    for R in scan.structures:
        sz = build_sz(R)
        order = structure.natural_order(sz.structure).leq
        for i, x in enumerate(sz.elements):
            for j, y in enumerate(sz.elements):
                assert sz_order(R, x, y) == ((i, j) in order)


def test_iota_and_decomposition(Z2):
    one, g = Z2.ids("1g")
    assert iota(Z2, g) == SzElement({one, g}, g)
    x = SzElement({one, g}, one)
    seq = generator_decomposition(Z2, x)
    assert seq == (g, one)
    assert evaluate_decomposition(Z2, seq) == x
    assert generator_decomposition(Z2, SzElement({one}, one)) == (one,)


def test_decomposition_round_trip(scan):
    for R in scan.structures:
        for x in build_sz(R).elements:
            assert evaluate_decomposition(R, generator_decomposition(R, x)) == x


def test_premorphism_examples(Z2, SL2):
    assert check_premorphism(ElementMapping.identity(Z2)).passed
    assert check_premorphism(ElementMapping(Z2, Z2, (0, 0))).passed
    assert not check_premorphism(ElementMapping(Z2, Z2, (1, 0))).passed
    # f -> e, e -> e is a morphism of the semilattice; e -> f, f -> e is not even a premorphism
    assert check_premorphism(ElementMapping(SL2, SL2, (0, 0))).passed
    assert not check_premorphism(ElementMapping(SL2, SL2, (1, 0))).passed


def test_morphisms_are_premorphisms(scan):
    for R in scan.structures[::7]:
        for f in search.restriction_morphisms(R, R):
            assert check_premorphism(f).passed


def test_iota_is_premorphism_not_always_morphism(Z2):
    sz = build_sz(Z2)
    iot = iota_map(sz)
    assert check_premorphism(iot).passed
    assert not axioms.check_morphism(iot).passed


def test_factorize_examples(Z2):
    sz = build_sz(Z2)
    bar = factorize(ElementMapping.identity(Z2), sz)
    assert bar.as_names() == {"{1|1}": "1", "{1,g|1}": "1", "{1,g|g}": "g"}
    assert factorize(ElementMapping(Z2, Z2, (0, 0)), sz).map == (0, 0, 0)


@pytest.mark.parametrize("pair", [("z2", "z2"), ("sl2", "z2"), ("disj", "sl2"), ("sl2", "sl2"),
                                  ("disj", "disj"), ("z2", "sl2")])
def test_round_trips(pair):
    S, T = (getattr(fixtures, p)() for p in pair)
    sz = build_sz(S)
    for phi in search.premorphisms(S, T):
        bar = factorize(phi, sz)
        assert premorphism_from_morphism(sz, bar) == phi
    for psi in search.restriction_morphisms(sz.structure, T):
        assert factorize(premorphism_from_morphism(sz, psi), sz) == psi


def test_premorphism_from_morphism_rejects(Z2):
    sz = build_sz(Z2)
    with pytest.raises(PreconditionError):
        premorphism_from_morphism(sz, ElementMapping(sz.structure, Z2, (1, 1, 0)))


def test_units_of_disj(DISJ):
    objs, units = sz_category_structure(DISJ)
    sz = build_sz(DISJ)
    assert len(objs) == 2
    assert {sz.elements[u] for u in units.values()} == {SzElement({0}, 0), SzElement({1}, 1)}


def test_category_identities(DISJ, Z2, SL2):
    assert sorted(category_identities(DISJ).values()) == [0, 1]
    assert list(category_identities(Z2).values()) == [0]
    assert list(category_identities(SL2).values()) == [SL2.id("f")]


def test_unitary(DISJ, Z2):
    assert check_unitary(ElementMapping(DISJ, Z2, (0, 0)))
    Za = fixtures.z2_adj()
    # 1 is not the identity of the adjoined unit z
    assert not check_unitary(ElementMapping(Z2, Za, (Za.id("1"), Za.id("g"))))
    assert check_unitary(ElementMapping(Z2, Za, (Za.id("z"), Za.id("z"))))


def test_unitary_survives_factorization(DISJ):
    for phi in search.premorphisms(DISJ, DISJ):
        assert check_unitary(phi) == check_unitary(factorize(phi))


def test_functor_collapse(Z2):
    F = sz_functor(ElementMapping(Z2, Z2, (0, 0)))
    assert F.as_names() == {"{1|1}": "{1|1}", "{1,g|1}": "{1|1}", "{1,g|g}": "{1|1}"}


def test_functor_laws():
    fx = [fixtures.sl2(), fixtures.z2(), fixtures.disj()]
    szs = [build_sz(R) for R in fx]
    for i, S in enumerate(fx):
        ident = sz_functor(ElementMapping.identity(S), szs[i], szs[i])
        assert ident == ElementMapping.identity(szs[i].structure)
        for j, T in enumerate(fx):
            for f in search.restriction_morphisms(S, T):
                Ff = sz_functor(f, szs[i], szs[j])
                for k, U in enumerate(fx):
                    for g in search.restriction_morphisms(T, U):
                        assert sz_functor(f.then(g), szs[i], szs[k]) == Ff.then(sz_functor(g, szs[j], szs[k]))


def test_eta_and_naturality(scan):
    rng = random.Random(5)
    pool = scan.structures
    for _ in range(20):
        S, T = rng.choice(pool), rng.choice(pool)
        for f in search.restriction_morphisms(S, T)[:3]:
            assert verify_naturality(f).passed
        eta(build_sz(S))


def test_guard(Z2):
    with pytest.raises(GuardExceeded):
        build_sz(Z2, guard=1)
