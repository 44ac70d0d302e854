"""Derived structure: orders, the relations L~_E / R~_E, categoricity, graphings,
congruences, and the characterization of left restriction by conditions r1-r3.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, NamedTuple

from . import axioms
from .core import (AxiomReport, RestrictionSemigroupoid, Violation, base_of, checker,
                   idempotents)
from .errors import ContradictionError, GraphingFailed, NotCategorical, PreconditionError


@dataclass(frozen=True)
class PartialOrder:
    carrier: tuple
    leq: frozenset

    def __contains__(self, pair):
        return pair in self.leq

    def problems(self) -> list:
        """Reflexivity, antisymmetry and transitivity failures (empty for a partial order)."""
        out = []
        c, le = self.carrier, self.leq
        for x in c:
            if (x, x) not in le:
                out.append(("reflexive", (x,)))
        for x, y in sorted(le):
            if x != y and (y, x) in le and x < y:
                out.append(("antisymmetric", (x, y)))
            for z in c:
                if (y, z) in le and (x, z) not in le:
                    out.append(("transitive", (x, y, z)))
        return out

    def restrict(self, subset) -> "PartialOrder":
        sub = set(subset)
        return PartialOrder(tuple(x for x in self.carrier if x in sub),
                            frozenset((x, y) for x, y in self.leq if x in sub and y in sub))


@dataclass(frozen=True)
class EquivalenceRelation:
    carrier: tuple
    classes: tuple

    @classmethod
    def from_key(cls, carrier, key: Callable) -> "EquivalenceRelation":
        blocks = {}
        for x in carrier:
            blocks.setdefault(key(x), []).append(x)
        return cls(tuple(carrier), tuple(tuple(b) for b in blocks.values()))

    @classmethod
    def identity(cls, carrier) -> "EquivalenceRelation":
        return cls(tuple(carrier), tuple((x,) for x in carrier))

    @classmethod
    def total(cls, carrier) -> "EquivalenceRelation":
        return cls(tuple(carrier), (tuple(carrier),) if carrier else ())

    @property
    def block_of(self) -> dict:
        return {x: i for i, b in enumerate(self.classes) for x in b}

    def related(self, x: Hashable, y: Hashable) -> bool:
        b = self.block_of
        return b[x] == b[y]

    def is_partition(self) -> bool:
        flat = [x for b in self.classes for x in b]
        return (all(self.classes) and len(flat) == len(set(flat))
                and set(flat) == set(self.carrier))


@dataclass(frozen=True)
class Graphing:
    """Vertex set plus domain and range of every element (indexed by element id)."""

    objects: tuple
    dom: tuple
    ran: tuple


class Categoricity(NamedTuple):
    categorical: bool
    witness: tuple | None
    dual_categorical: bool

    def __bool__(self):
        return self.categorical


class Characterization(NamedTuple):
    ok: bool
    star: tuple | None
    witness: Violation | None


def star_image(R: RestrictionSemigroupoid) -> frozenset:
    img = frozenset(R.star)
    if not img <= set(idempotents(R)):
        raise ContradictionError(f"star image {R.fmt(img)} contains non-idempotents")
    return img


def order_E(S, E) -> PartialOrder:
    """``e <= f`` iff ``(e, f)`` composable and ``e = ef``, on ``E``."""
    B = base_of(S)
    E = tuple(sorted(set(E)))
    T = B.table
    leq = frozenset((e, f) for e in E for f in E if T.get((e, f)) == e)
    order = PartialOrder(E, leq)
    bad = order.problems()
    if bad:
        raise PreconditionError(f"not a partial order on E: {bad[0]}")
    return order


def natural_order(R: RestrictionSemigroupoid) -> PartialOrder:
    """``s <= t`` iff ``(s*, t)`` composable and ``s* t = s``.

    Cross-checked against the existential form (some ``e`` in the star image
    with ``et = s``) and against ``order_E`` on the star image.
    """
    T = R.table
    n = R.n
    st = R.star
    leq = frozenset((s, t) for s in range(n) for t in range(n) if T.get((st[s], t)) == s)
    order = PartialOrder(tuple(range(n)), leq)
    if order.problems():
        raise ContradictionError(f"natural order is not a partial order: {order.problems()[0]}")
    E = sorted(set(st))
    eform = frozenset((T[(e, t)], t) for e in E for t in range(n) if (e, t) in T)
    if eform != leq:
        raise ContradictionError("natural order disagrees with its existential form")
    if order.restrict(E) != order_E(R, E):
        raise ContradictionError("natural order restricted to E differs from the order on E")
    return order


def _signature_left(B, E, s):
    T = B.table
    return tuple(((e, s) in T, T.get((e, s)) == s) for e in E)


def _signature_right(B, E, s):
    T = B.table
    return tuple(((s, e) in T, T.get((s, e)) == s) for e in E)


def tilde_L(S, E) -> EquivalenceRelation:
    """Elements related iff they have the same left identities (and left composability) in ``E``."""
    B = base_of(S)
    E = sorted(set(E))
    return EquivalenceRelation.from_key(range(B.n), lambda s: _signature_left(B, E, s))


def tilde_R(S, E) -> EquivalenceRelation:
    B = base_of(S)
    E = sorted(set(E))
    return EquivalenceRelation.from_key(range(B.n), lambda s: _signature_right(B, E, s))


def _overlap_witness(sets):
    n = len(sets)
    for s in range(n):
        for t in range(s + 1, n):
            common = sets[s] & sets[t]
            if common and sets[s] != sets[t]:
                return (s, t, min(common))
    return None


def is_categorical(S) -> Categoricity:
    """Are the sets ``S^s`` pairwise equal or disjoint?

    The witness ``(s, t, u)`` has ``u`` in ``S^s ∩ S^t`` with ``S^s != S^t``.
    The same question for the sets ``S_s`` is answered alongside; for an
    associative input the two answers must agree.
    """
    B = base_of(S)
    w = _overlap_witness(B.right_sets)
    dual = _overlap_witness(B.left_sets) is None
    result = Categoricity(w is None, w, dual)
    if result.categorical != dual and axioms.check_associativity(B, fast=True).passed:
        raise ContradictionError("categoricity via S^s and via S_s disagree on an associative input")
    return result


def graphing(S) -> Graphing:
    """Canonical graphing of a categorical semigroupoid.

    ``R(t)`` is the vertex of the set ``S_t``; ``D(s)`` is the vertex of ``S_u``
    for any ``u`` with ``su`` defined.  Vertices are named after the first
    element carrying them.  Elements with nothing composable on the right
    share one sink ``⊥x``; elements with nothing composable on the left share
    one source ``⊤x`` (``x`` the first such element).
    """
    B = base_of(S)
    if not is_categorical(B):
        raise NotCategorical("semigroupoid is not categorical")
    left = B.left_sets
    vertex = {}
    for t in range(B.n):
        if left[t]:
            vertex.setdefault(left[t], B.names[t])
    objects = list(vertex.values())
    no_right = [s for s in range(B.n) if not B.right_sets[s]]
    no_left = [t for t in range(B.n) if not left[t]]
    sink = "⊥" + B.names[no_right[0]] if no_right else None
    source = "⊤" + B.names[no_left[0]] if no_left else None
    objects += [v for v in (sink, source) if v is not None]
    ran = tuple(vertex[left[t]] if left[t] else source for t in range(B.n))
    dom = tuple(vertex[left[min(B.right_sets[s])]] if B.right_sets[s] else sink
                for s in range(B.n))
    G = Graphing(tuple(objects), dom, ran)
    report = verify_graphing(B, G)
    if not report.passed:
        raise GraphingFailed(report)
    return G


@checker
def verify_graphing(report: AxiomReport, S, G: Graphing):
    B = base_of(S)
    T = B.table
    n = B.n
    for s in range(n):
        for t in range(n):
            c = (s, t) in B.composable
            if c != (G.dom[s] == G.ran[t]):
                report.add("gs2", (s, t), f"({B.names[s]},{B.names[t]}) composable={c} "
                                          f"but D(s)={G.dom[s]}, R(t)={G.ran[t]}")
            if c:
                u = T[(s, t)]
                if G.dom[u] != G.dom[t]:
                    report.add("gs2-dom", (s, t), f"D(st)={G.dom[u]} != D(t)={G.dom[t]}")
                if G.ran[u] != G.ran[s]:
                    report.add("gs2-ran", (s, t), f"R(st)={G.ran[u]} != R(s)={G.ran[s]}")
    for (g, h), gh in T.items():
        for k in range(n):
            if G.dom[h] == G.ran[k] and (h, k) in T:
                hk = T[(h, k)]
                if (gh, k) not in T or (g, hk) not in T or T[(gh, k)] != T[(g, hk)]:
                    report.add("gs3", (g, h, k), f"(gh)k != g(hk) for ({B.names[g]},{B.names[h]},{B.names[k]})")


@checker
def check_left_congruence(report: AxiomReport, S, G: Graphing, rho0: EquivalenceRelation,
                          rho1: EquivalenceRelation):
    """(lc1) ``s ρ1 t ⇒ R(s) ρ0 R(t)``; (lc2) ``s ρ1 t`` with ``us``, ``ut`` defined ⇒ ``us ρ1 ut``."""
    _congruence(report, S, G, rho0, rho1, "left")


@checker
def check_right_congruence(report: AxiomReport, S, G: Graphing, rho0: EquivalenceRelation,
                           rho1: EquivalenceRelation):
    """(rc1) ``s ρ1 t ⇒ D(s) ρ0 D(t)``; (rc2) ``s ρ1 t`` with ``su``, ``tu`` defined ⇒ ``su ρ1 tu``."""
    _congruence(report, S, G, rho0, rho1, "right")


def _congruence(report, S, G, rho0, rho1, side):
    B = base_of(S)
    T = B.table
    b1 = rho1.block_of
    b0 = rho0.block_of
    tag = "lc" if side == "left" else "rc"
    ends = G.ran if side == "left" else G.dom
    for block in rho1.classes:
        for i, s in enumerate(block):
            for t in block[i + 1:]:
                if b0[ends[s]] != b0[ends[t]]:
                    report.add(f"{tag}1", (s, t), f"{B.names[s]} ρ1 {B.names[t]} but {ends[s]}, {ends[t]} "
                                                  "not ρ0-related")
                for u in range(B.n):
                    pair_s, pair_t = ((u, s), (u, t)) if side == "left" else ((s, u), (t, u))
                    if pair_s in T and pair_t in T and b1[T[pair_s]] != b1[T[pair_t]]:
                        report.add(f"{tag}2", (s, t, u),
                                   f"{B.names[s]} ρ1 {B.names[t]} but products with {B.names[u]} are not related")


def characterize_left_restriction(S, E) -> Characterization:
    """Decide left restriction with star image ``E`` through conditions r1-r3.

    r1: every L~_E block holds exactly one member of ``E``; r2: L~_E is a left
    congruence (identity relation on objects); r3: ``se`` defined with ``e`` in
    ``E`` gives ``se = (se)* s``.  On success the induced star is returned and
    re-verified with the axioms directly.
    """
    B = base_of(S)
    E = frozenset(E)
    ds = axioms.check_distinct_set(B, E, fast=True)
    if not ds.passed:
        return Characterization(False, None, ds.violations[0])
    T = B.table
    L = tilde_L(B, E)
    star = [None] * B.n
    for block in L.classes:
        members = [x for x in block if x in E]
        if len(members) != 1:
            return Characterization(False, None, Violation(
                "r1", block, f"block {B.fmt(block)} contains {len(members)} members of E"))
        for x in block:
            star[x] = members[0]
    cat = is_categorical(B)
    if not cat:
        return Characterization(False, None, Violation(
            "r2", cat.witness, "untestable: semigroupoid is not categorical"))
    G = graphing(B)
    lc = check_left_congruence(B, G, EquivalenceRelation.identity(G.objects), L, fast=True)
    if not lc.passed:
        v = lc.violations[0]
        return Characterization(False, None, Violation("r2", v.witness, v.message))
    for s in range(B.n):
        for e in sorted(E):
            if (s, e) not in T:
                continue
            se = T[(s, e)]
            if (star[se], s) not in T or T[(star[se], s)] != se:
                return Characterization(False, None, Violation(
                    "r3", (s, e), f"se != (se)*s for s={B.names[s]}, e={B.names[e]}"))
    star = tuple(star)
    if not axioms.check_left_restriction(RestrictionSemigroupoid(B, star, E), fast=True).passed:
        raise ContradictionError("r1-r3 hold but the induced star fails the left restriction axioms")
    return Characterization(True, star, None)


@checker
def check_consequences(report: AxiomReport, R: RestrictionSemigroupoid):
    """Identities that hold in every left restriction semigroupoid with ``E`` the star image.

    ``p1`` star image idempotent; ``p2`` ``e* = e`` on it; ``st*`` ``(st)* = (st*)*``;
    ``sts`` ``(st)* = (st)* s*``; ``minleft`` ``es = s`` with ``e`` in E gives
    ``s* <= e``; ``se<=s`` ``se`` below ``s`` in the natural order; ``L=star``
    ``s L~ t`` iff ``s* = t*``.
    """
    T = R.table
    st = R.star
    n = R.n
    E = sorted(set(st))
    for e in E:
        if T.get((e, e)) != e:
            report.add("p1", (e,), f"{R.names[e]} is not idempotent")
        if st[e] != e:
            report.add("p2", (e,), f"{R.names[e]}* != {R.names[e]}")
    for (s, t), u in T.items():
        if (s, st[t]) not in T or st[u] != st[T[(s, st[t])]]:
            report.add("st*", (s, t), "(st)* != (st*)*")
        if (st[u], st[s]) not in T or T[(st[u], st[s])] != st[u]:
            report.add("sts", (s, t), "(st)* != (st)* s*")
    for e in E:
        for s in range(n):
            if T.get((e, s)) == s and T.get((st[s], e)) != st[s]:
                report.add("minleft", (e, s), "s* is not below a left identity e")
            if (s, e) in T:
                se = T[(s, e)]
                if T.get((st[se], s)) != se:
                    report.add("se<=s", (s, e), "se is not below s")
    L = tilde_L(R, E)
    for s in range(n):
        for t in range(n):
            if L.related(s, t) != (st[s] == st[t]):
                report.add("L=star", (s, t), "L~_E disagrees with equality of stars")
