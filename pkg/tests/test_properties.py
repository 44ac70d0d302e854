"""Property tests over random tables, star maps, partial maps and generated structures."""
import random

import oracles
from hypothesis import given, strategies as st

from rsgpd import axioms, search, structure
from rsgpd.core import RestrictionSemigroupoid, Semigroupoid, compose, idempotents, opposite
from rsgpd.errors import ContradictionError
from rsgpd.partialmaps import PartialMap, pm_star_compose, pm_star_restriction
from rsgpd.representation import build_embedding, verify_embedding
from rsgpd.szendrei import build_sz, check_premorphism, evaluate_decomposition, generator_decomposition, iota_map


@st.composite
def tables(draw, max_n=3):
    n = draw(st.integers(1, max_n))
    cells = draw(st.lists(st.integers(-1, n - 1), min_size=n * n, max_size=n * n))
    return search._from_flat(cells, n)


@st.composite
def starred_tables(draw, max_n=3):
    S = draw(tables(max_n))
    star = tuple(draw(st.lists(st.integers(0, S.n - 1), min_size=S.n, max_size=S.n)))
    return RestrictionSemigroupoid(S, star)


@st.composite
def associative_starred(draw):
    n = draw(st.integers(1, 3))
    S = draw(st.sampled_from(_ASSOC[n]))
    star = tuple(draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))
    return RestrictionSemigroupoid(S, star)


_ASSOC = {n: list(search.all_semigroupoids(n)) for n in (1, 2, 3)}
_POOL = search.scan(2).structures


@st.composite
def lr_structures(draw):
    return search.random_left_restriction(random.Random(draw(st.integers(0, 2 ** 32))), 6, _POOL)


@given(tables())
def test_compose_undefined_iff_absent(S):
    for s in range(S.n):
        for t in range(S.n):
            assert (compose(S, s, t) is None) == ((s, t) not in S.composable_pairs)


@given(starred_tables())
def test_opposite_involution(R):
    assert opposite(opposite(R)) == R
    assert opposite(opposite(R.base)) == R.base


@given(tables())
def test_idempotents(S):
    for f in idempotents(S):
        assert 0 <= f < S.n and compose(S, f, f) == f
    assert len(idempotents(S)) == sum(compose(S, f, f) == f for f in range(S.n))


@given(tables())
def test_associativity_oracle(S):
    assert axioms.check_associativity(S).passed == oracles.assoc(S.n, S.table)


def _replay(R, v):
    """Re-derive the failure behind a violation from compose alone."""
    c = lambda a, b: None if a is None or b is None else compose(R, a, b)  # noqa: E731
    if v.rule in ("s1", "s2", "s3", "assoc"):
        s, t, r = v.witness
        st_, tr = c(s, t), c(t, r)
        lhs, rhs = c(st_, r), c(s, tr)
        return None in (st_, tr, lhs, rhs) or lhs != rhs
    star = R.star
    if v.rule == "lr1":
        (s,) = v.witness
        return c(star[s], s) != s
    if v.rule == "lr2":
        s, t = v.witness
        a, b = star[s], star[t]
        return c(a, b) != c(b, a)
    if v.rule == "lr3":
        s, t = v.witness
        u = c(star[s], t)
        return u is not None and (c(star[s], star[t]) is None or star[u] != c(star[s], star[t]))
    if v.rule == "lr4":
        s, t = v.witness
        u = c(s, t)
        return u is not None and (c(s, star[t]) is None or c(s, star[t]) != c(star[u], s))
    if v.rule == "lr-remark":
        s, t = v.witness
        return (c(s, t) is None) != (c(s, star[t]) is None)
    raise AssertionError(f"unexpected rule {v.rule}")


@given(starred_tables())
def test_witnesses_replay(R):
    for v in axioms.check_associativity(R).violations + axioms.check_left_restriction(R).violations:
        assert _replay(R, v), v


@given(associative_starred())
def test_duality(R):
    assert axioms.check_left_restriction(R).passed == axioms.check_right_restriction(opposite(R)).passed


@given(associative_starred())
def test_characterization_equivalence(R):
    lr = axioms.check_left_restriction(R).passed
    try:
        c = structure.characterize_left_restriction(R.base, R.distinct_set)
    except ContradictionError:
        assert False, "characterization raised"
    assert lr == (c.ok and c.star == R.star)
    if lr:
        assert structure.is_categorical(R)


@given(lr_structures())
def test_consequences_on_generated(R):
    assert axioms.check_distinct_set(R, set(R.star)).passed
    assert all(R.star[R.star[s]] == R.star[s] for s in range(R.n))
    assert structure.check_consequences(R).passed
    assert structure.is_categorical(R)
    L = structure.tilde_L(R, R.distinct_set)
    for s in range(R.n):
        for t in range(R.n):
            assert L.related(s, t) == (R.star[s] == R.star[t])


@given(lr_structures())
def test_natural_order_is_partial_order(R):
    order = structure.natural_order(R)
    assert not order.problems()
    E = R.distinct_set
    assert order.restrict(E).leq == structure.order_E(R, E).leq
    for s in range(R.n):
        for e in E:
            u = R.table.get((s, e))
            if u is not None:
                assert (u, s) in order.leq


@given(lr_structures())
def test_embedding_generated(R):
    emb = build_embedding(R)
    assert verify_embedding(emb).passed
    for (s, t), u in R.table.items():
        assert emb(u).map.dom == pm_star_compose(emb(t).map, emb(s).map).dom


@given(lr_structures())
def test_szendrei_generated(R):
    sz = build_sz(R)
    T = sz.structure
    assert axioms.check_left_restriction(T).passed
    want = {i for i, x in enumerate(sz.elements)
            if R.table.get((x.a, x.a)) == x.a and all(R.table.get((x.a, y)) in x.A for y in x.A)}
    assert set(idempotents(T)) == want
    projections = {i for i, x in enumerate(sz.elements)
                   if x.a in R.distinct_set and all(R.table.get((x.a, y)) in x.A for y in x.A)}
    assert set(T.star) == projections
    assert check_premorphism(iota_map(sz)).passed
    for x in sz.elements:
        assert evaluate_decomposition(R, generator_decomposition(R, x)) == x


maps3 = st.dictionaries(st.sampled_from("123"), st.sampled_from("123"))


@given(maps3, maps3, maps3)
def test_partial_map_laws(f, g, h):
    X = ("1", "2", "3")
    F, G, H = (PartialMap(X, d) for d in (f, g, h))
    assert pm_star_compose(F, pm_star_compose(G, H)) == pm_star_compose(pm_star_compose(F, G), H)
    assert pm_star_compose(F, G).as_dict == oracles.after(f, g)
    R = pm_star_restriction(F)
    assert pm_star_compose(F, R) == F
    assert R.dom == F.dom
