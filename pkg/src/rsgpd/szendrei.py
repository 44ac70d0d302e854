"""The Szendrei expansion of a left restriction semigroupoid.

Elements are pairs ``(A, a)`` with ``a, a*`` in ``A`` and ``A`` inside the
L~_E block of ``a``.  The product is ``(A,a)(B,b) = ((ab)*A ∪ aB, ab)``,
defined exactly when ``ab`` is, and ``(A,a)* = (A,a*)``.  Premorphisms out of
``S`` correspond to restriction morphisms out of ``Sz(S)`` via ``ι(s) = ({s*,s}, s)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from . import axioms, structure
from .core import (AxiomReport, ElementMapping, RestrictionSemigroupoid, Semigroupoid, checker,
                   idempotents)
from .errors import ContradictionError, GuardExceeded, PreconditionError, ProductUndefined


@dataclass(frozen=True)
class SzElement:
    A: frozenset
    a: int

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))

    def name(self, S) -> str:
        return "{" + ",".join(S.names[x] for x in sorted(self.A)) + "|" + S.names[self.a] + "}"


def _mul(S, s, t):
    u = S.table.get((s, t))
    if u is None:
        raise ContradictionError(f"{S.names[s]}{S.names[t]} undefined inside an Sz product")
    return u


def sz_compose(S: RestrictionSemigroupoid, x: SzElement, y: SzElement):
    """Product in Sz(S), or ``None`` when ``xy`` is undefined in ``S``."""
    ab = S.table.get((x.a, y.a))
    if ab is None:
        return None
    e = S.star[ab]
    A = {_mul(S, e, s) for s in x.A} | {_mul(S, x.a, t) for t in y.A}
    return SzElement(A, ab)


def sz_star(S: RestrictionSemigroupoid, x: SzElement) -> SzElement:
    return SzElement(x.A, S.star[x.a])


def iota(S: RestrictionSemigroupoid, s: int) -> SzElement:
    return SzElement({S.star[s], s}, s)


def is_sz_element(S: RestrictionSemigroupoid, x: SzElement, L: structure.EquivalenceRelation | None = None) -> bool:
    L = structure.tilde_L(S, S.distinct_set) if L is None else L
    block = set(L.classes[L.block_of[x.a]])
    return x.a in x.A and S.star[x.a] in x.A and x.A <= block


def natural_leq(S: RestrictionSemigroupoid, s: int, t: int) -> bool:
    e = S.star[s]
    return S.table.get((e, t)) == s


def sz_order(S: RestrictionSemigroupoid, x: SzElement, y: SzElement) -> bool:
    """``(A,a) <= (B,b)`` iff ``a <= b`` and ``a* B ⊆ A``."""
    if not natural_leq(S, x.a, y.a):
        return False
    e = S.star[x.a]
    return all(S.table.get((e, b)) in x.A for b in y.A)


class SzExpansion:
    """Sz(S) materialized: ``elements[i]`` is the pair behind element ``i`` of ``structure``."""

    def __init__(self, base: RestrictionSemigroupoid, elements):
        self.base = base
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def id(self, x: SzElement) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise ContradictionError(f"{x.name(self.base)} is not an element of Sz") from None

    def names(self) -> tuple:
        return tuple(x.name(self.base) for x in self.elements)

    @cached_property
    def structure(self) -> RestrictionSemigroupoid:
        S = self.base
        table = {}
        for i, x in enumerate(self.elements):
            for j, y in enumerate(self.elements):
                z = sz_compose(S, x, y)
                if z is not None:
                    table[(i, j)] = self.id(z)
        star = tuple(self.id(sz_star(S, x)) for x in self.elements)
        E = frozenset(self.distinct_elements())
        return RestrictionSemigroupoid(Semigroupoid(self.names(), table), star, E)

    def distinct_elements(self) -> list:
        """``{(F, f) : f in E and fF ⊆ F}``."""
        S = self.base
        E = S.distinct_set
        return [i for i, x in enumerate(self.elements)
                if x.a in E and all(S.table.get((x.a, y)) in x.A for y in x.A)]

    def iota_id(self, s: int) -> int:
        return self.id(iota(self.base, s))


def build_sz(S: RestrictionSemigroupoid, guard: int = 16) -> SzExpansion:
    L = structure.tilde_L(S, S.distinct_set)
    biggest = max((len(b) for b in L.classes), default=0)
    if biggest > guard:
        raise GuardExceeded(f"largest L~_E block has {biggest} elements, guard is {guard}")
    blocks = L.block_of
    elements = []
    for a in range(S.n):
        core = {a, S.star[a]}
        block = L.classes[blocks[a]]
        if not core <= set(block):
            raise PreconditionError(f"{S.names[a]}* is not L~_E-related to {S.names[a]}")
        rest = [x for x in block if x not in core]
        for k in range(len(rest) + 1):
            for extra in itertools.combinations(rest, k):
                elements.append(SzElement(core | set(extra), a))
    sz = SzExpansion(S, elements)
    R = sz.structure
    if frozenset(R.star) != R.distinct_set:
        raise ContradictionError("star image of Sz differs from {(F,f) : f in E, fF ⊆ F}")
    report = axioms.check_left_restriction(R, fast=True)
    if not report.passed:
        raise ContradictionError(f"Sz fails the left restriction axioms: {report.violations[0]}")
    return sz


def generator_decomposition(S: RestrictionSemigroupoid, x: SzElement) -> tuple:
    """``(s_1, ..., s_n)`` with ``x = ι(s_1)* ... ι(s_n)* ι(s_n)`` and ``s_n = a``."""
    rest = sorted(x.A - {S.star[x.a], x.a})
    return tuple(rest) + (x.a,)


def evaluate_decomposition(S: RestrictionSemigroupoid, seq) -> SzElement:
    acc = None
    for s in seq:
        f = sz_star(S, iota(S, s))
        acc = f if acc is None else sz_compose(S, acc, f)
        if acc is None:
            raise ProductUndefined(f"partial product undefined at {S.names[s]}")
    out = sz_compose(S, acc, iota(S, seq[-1]))
    if out is None:
        raise ProductUndefined("final product undefined")
    return out


def _leq_T(T, u, v):
    return T.table.get((T.star[u], v)) == u


@checker
def check_premorphism(report: AxiomReport, phi: ElementMapping):
    """(a) ``st`` defined ⇒ ``φ(s)φ(t) = φ(s)*φ(st)``, both defined; (b) ``φ(s)* <= φ(s*)``.

    When (a) and (b) hold the consequences pm1-pm5 are rechecked; a failure
    there is recorded as ``contradiction:pmK`` since it can only come from
    inputs that are not left restriction structures or from a bug.
    """
    S, T = phi.source, phi.target
    m = phi.map
    TT = T.table
    sn, tn = S.names, T.names
    for (s, t), u in sorted(S.table.items()):
        a, b = m[s], m[t]
        lhs = TT.get((a, b))
        rhs = TT.get((T.star[a], m[u]))
        if lhs is None or rhs is None:
            report.add("a", (s, t), f"phi({sn[s]})phi({sn[t]}) or phi({sn[s]})*phi({sn[s]}{sn[t]}) undefined")
        elif lhs != rhs:
            report.add("a", (s, t), f"phi({sn[s]})phi({sn[t]}) = {tn[lhs]} but phi(s)*phi(st) = {tn[rhs]}")
    for s in range(S.n):
        if not _leq_T(T, T.star[m[s]], m[S.star[s]]):
            report.add("b", (s,), f"phi({sn[s]})* not below phi({sn[s]}*)")
    if not report.passed:
        return

    def bug(rule, w, msg):
        report.add("contradiction:" + rule, w, msg)

    idem_T = set(idempotents(T))
    for e in idempotents(S):
        if m[e] not in idem_T:
            bug("pm1", (e,), f"idempotent {sn[e]} maps to non-idempotent {tn[m[e]]}")
    for e in sorted(S.distinct_set):
        if m[e] not in T.distinct_set:
            bug("pm2", (e,), f"{sn[e]} in E but its image is outside F")
    for u in range(S.n):
        for v in range(S.n):
            if natural_leq(S, u, v) and not _leq_T(T, m[u], m[v]):
                rule = "pm3" if u in S.distinct_set and v in S.distinct_set else "pm4"
                bug(rule, (u, v), f"{sn[u]} <= {sn[v]} but images are not ordered")
    for (s, t) in sorted(S.table):
        st_ = S.table.get((s, S.star[t]))
        if st_ is None or TT.get((m[st_], m[t])) != TT.get((m[s], m[t])):
            bug("pm5", (s, t), "phi(s)phi(t) != phi(st*)phi(t)")


def _restriction_morphism(psi, what):
    rep = axioms.check_morphism(psi)
    if not rep.passed:
        raise PreconditionError(f"{what} is not a restriction morphism: {rep.violations[0]}")


def factorize(phi: ElementMapping, sz: SzExpansion | None = None) -> ElementMapping:
    """The restriction morphism ``Sz(S) → T`` sending
    ``({s*, s_1, ..., s_n = s}, s)`` to ``φ(s_1)* ... φ(s_n)* φ(s)``, evaluated left to right."""
    S, T = phi.source, phi.target
    sz = build_sz(S) if sz is None else sz
    out = []
    for x in sz.elements:
        seq = generator_decomposition(S, x)
        acc = T.star[phi(seq[0])]
        for s in seq[1:]:
            nxt = T.table.get((acc, T.star[phi(s)]))
            if nxt is None:
                raise ProductUndefined(f"{T.names[acc]} {T.names[T.star[phi(s)]]} undefined "
                                       f"while factorizing {x.name(S)}")
            acc = nxt
        val = T.table.get((acc, phi(x.a)))
        if val is None:
            raise ProductUndefined(f"final factor undefined while factorizing {x.name(S)}")
        out.append(val)
    bar = ElementMapping(sz.structure, T, tuple(out))
    rep = axioms.check_morphism(bar)
    if not rep.passed:
        raise ContradictionError(f"factorization is not a restriction morphism: {rep.violations[0]}")
    if tuple(bar(sz.iota_id(s)) for s in range(S.n)) != phi.map:
        raise ContradictionError("factorization does not restrict to phi along iota")
    return bar


def premorphism_from_morphism(sz: SzExpansion, psi: ElementMapping) -> ElementMapping:
    """``ψ ∘ ι`` for a restriction morphism ``ψ: Sz(S) → T``."""
    _restriction_morphism(psi, "psi")
    phi = ElementMapping(sz.base, psi.target, tuple(psi(sz.iota_id(s)) for s in range(sz.base.n)))
    rep = check_premorphism(phi)
    if not rep.passed:
        raise ContradictionError(f"psi ∘ iota is not a premorphism: {rep.violations[0]}")
    return phi


def iota_map(sz: SzExpansion) -> ElementMapping:
    return ElementMapping(sz.base, sz.structure, tuple(sz.iota_id(s) for s in range(sz.base.n)))


def category_identities(S) -> dict:
    """Object → its identity element, for a semigroupoid that is a category.

    Raises ``PreconditionError`` if some object of the canonical graphing has
    no two-sided identity.
    """
    G = structure.graphing(S)
    T = S.table
    out = {}
    for v in G.objects:
        for i in range(S.n):
            if G.dom[i] != v or G.ran[i] != v:
                continue
            if all(T.get((s, i)) == s for s in range(S.n) if G.dom[s] == v) and \
                    all(T.get((i, s)) == s for s in range(S.n) if G.ran[s] == v):
                out[v] = i
                break
        else:
            raise PreconditionError(f"object {v} has no identity")
    return out


def sz_category_structure(S: RestrictionSemigroupoid, sz: SzExpansion | None = None):
    """Objects of ``S`` and the identities ``u_e = ({1_e}, 1_e)`` of Sz(S), each verified two-sided."""
    sz = build_sz(S) if sz is None else sz
    ids = category_identities(S)
    R = sz.structure
    units = {}
    for v, one in ids.items():
        if S.star[one] != one:
            raise ContradictionError(f"identity {S.names[one]} is not fixed by the star")
        u = sz.id(SzElement({one}, one))
        for (x, y), z in R.table.items():
            if (y == u and z != x) or (x == u and z != y):
                raise ContradictionError(f"{R.names[u]} is not an identity at ({R.names[x]},{R.names[y]})")
        units[v] = u
    G = structure.graphing(S)
    return tuple(G.objects), units


def check_unitary(phi: ElementMapping) -> bool:
    """Does ``φ`` send every identity of its source category to an identity of the target?"""
    src = category_identities(phi.source)
    tgt = set(category_identities(phi.target).values())
    return all(phi(i) in tgt for i in src.values())


def sz_functor(f: ElementMapping, sz_s: SzExpansion | None = None,
               sz_t: SzExpansion | None = None) -> ElementMapping:
    """``Sz(f)(A, s) = (f(A), f(s))``."""
    _restriction_morphism(f, "f")
    sz_s = build_sz(f.source) if sz_s is None else sz_s
    sz_t = build_sz(f.target) if sz_t is None else sz_t
    m = tuple(sz_t.id(SzElement({f(x) for x in e.A}, f(e.a))) for e in sz_s.elements)
    out = ElementMapping(sz_s.structure, sz_t.structure, m)
    rep = axioms.check_morphism(out)
    if not rep.passed:
        raise ContradictionError(f"Sz(f) is not a restriction morphism: {rep.violations[0]}")
    return out


def eta(sz: SzExpansion) -> ElementMapping:
    """Second projection ``(A, s) ↦ s``, a surjective restriction morphism."""
    out = ElementMapping(sz.structure, sz.base, tuple(x.a for x in sz.elements))
    rep = axioms.check_morphism(out, surjective=True)
    if not rep.passed:
        raise ContradictionError(f"eta fails: {rep.violations[0]}")
    return out


@checker
def verify_naturality(report: AxiomReport, f: ElementMapping, sz_s: SzExpansion | None = None,
                      sz_t: SzExpansion | None = None):
    """``f ∘ η_S = η_T ∘ Sz(f)`` elementwise on Sz(S)."""
    sz_s = build_sz(f.source) if sz_s is None else sz_s
    sz_t = build_sz(f.target) if sz_t is None else sz_t
    F = sz_functor(f, sz_s, sz_t)
    left = eta(sz_s).then(f)
    right = F.then(eta(sz_t))
    for i in range(len(sz_s)):
        if left(i) != right(i):
            report.add("square", (i,), f"square fails at {sz_s.structure.names[i]}")
