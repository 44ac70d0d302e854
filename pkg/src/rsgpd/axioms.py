"""Verifiers for the axiom systems: associativity, left/right/bilateral
restriction, distinct sets, and (restriction) morphisms.

Every checker enumerates all tuples and collects every violation.  Pass
``fast=True`` to stop at the first one, which is what search loops want.
Associativity is O(n^3), the restriction axioms O(n^2).
"""
from __future__ import annotations

from .core import AxiomReport, ElementMapping, RestrictionSemigroupoid, base_of, checker, idempotents


def _nm(S, *ids):
    return ", ".join(S.names[i] for i in ids)


@checker
def check_associativity(report: AxiomReport, S):
    """Exel associativity: whenever one of (s1)-(s3) holds for ``(s, t, r)``,
    all four of ``(s,t) (t,r) (st,r) (s,tr)`` are composable and ``(st)r = s(tr)``."""
    B = base_of(S)
    C = B.composable_pairs
    T = B.table
    n = B.n
    for s in range(n):
        for t in range(n):
            st_ok = (s, t) in C
            st = T.get((s, t)) if st_ok else None
            for r in range(n):
                tr_ok = (t, r) in C
                tr = T.get((t, r)) if tr_ok else None
                c1 = st_ok and tr_ok
                c2 = st_ok and (st, r) in C
                c3 = tr_ok and (s, tr) in C
                if not (c1 or c2 or c3):
                    continue
                clause = "s1" if c1 else ("s2" if c2 else "s3")
                missing = []
                if not st_ok:
                    missing.append("(s,t)")
                if not tr_ok:
                    missing.append("(t,r)")
                if st is None or (st, r) not in C:
                    missing.append("(st,r)")
                if tr is None or (s, tr) not in C:
                    missing.append("(s,tr)")
                if missing:
                    report.add(clause, (s, t, r),
                               f"({_nm(B, s, t, r)}) meets {clause} but {' '.join(missing)} not composable")
                    continue
                left, right = T[(st, r)], T[(s, tr)]
                if left != right:
                    report.add("assoc", (s, t, r),
                               f"({_nm(B, s, t, r)}): (st)r = {B.names[left]} but s(tr) = {B.names[right]}")


def _restriction_rules(report, R: RestrictionSemigroupoid, side: str):
    """Shared body for the left (``side='l'``) and right (``side='r'``) axioms.

    The right axioms are checked literally rather than by passing through the
    opposite structure, so that the duality test compares two independent scans.
    """
    B = R.base
    C = B.composable_pairs
    T = B.table
    st = R.star
    n = B.n
    image = sorted(set(st))
    rep = {}
    for s in range(n):
        rep.setdefault(st[s], s)
    tag = "lr" if side == "l" else "rr"

    # (1)
    for s in range(n):
        e = st[s]
        pair = (e, s) if side == "l" else (s, e)
        if pair not in C:
            report.add(f"{tag}1", (s,), f"{_nm(B, *pair)} not composable for s={B.names[s]}")
        elif T[pair] != s:
            report.add(f"{tag}1", (s,), f"product of {_nm(B, *pair)} is {B.names[T[pair]]}, not {B.names[s]}")

    # (2) over the image of the unary operation
    for i, e in enumerate(image):
        for f in image[i:]:
            a, b = (e, f) in C, (f, e) in C
            if a != b:
                report.add(f"{tag}2", (rep[e], rep[f]),
                           f"({B.names[e]},{B.names[f]}) composable={a} but reverse composable={b}")
            elif a and T[(e, f)] != T[(f, e)]:
                report.add(f"{tag}2", (rep[e], rep[f]),
                           f"{B.names[e]}{B.names[f]} = {B.names[T[(e, f)]]} differs from "
                           f"{B.names[f]}{B.names[e]} = {B.names[T[(f, e)]]}")

    # (3)
    for e in image:
        s = rep[e]
        for t in range(n):
            if side == "l":
                if (e, t) not in C:
                    continue
                et = T[(e, t)]
                if (e, st[t]) not in C:
                    report.add("lr3", (s, t), f"s*t defined but s*t* undefined ({_nm(B, e, st[t])})")
                    continue
                lhs, rhs = st[et], T[(e, st[t])]
            else:
                if (t, e) not in C:
                    continue
                te = T[(t, e)]
                if (st[t], e) not in C:
                    report.add("rr3", (t, s), f"s+ t+ undefined ({_nm(B, st[t], e)})")
                    continue
                lhs, rhs = st[te], T[(st[t], e)]
            if lhs != rhs:
                w = (s, t) if side == "l" else (t, s)
                report.add(f"{tag}3", w, f"({_nm(B, *w)}): unary of product is {B.names[lhs]}, "
                                         f"product of unaries is {B.names[rhs]}")

    # (4) and the composability remark
    for s in range(n):
        for t in range(n):
            c = (s, t) in C
            alt = (s, st[t]) if side == "l" else (st[s], t)
            if c != (alt in C):
                report.add(f"{tag}-remark", (s, t),
                           f"({_nm(B, s, t)}) composable={c} but ({_nm(B, *alt)}) composable={not c}")
            if not c:
                continue
            u = T[(s, t)]
            if side == "l":
                # s t* = (st)* s
                if (s, st[t]) not in C or (st[u], s) not in C:
                    report.add("lr4", (s, t), f"st* or (st)*s undefined for ({_nm(B, s, t)})")
                    continue
                lhs, rhs = T[(s, st[t])], T[(st[u], s)]
            else:
                # s+ t = t (st)+
                if (st[s], t) not in C or (t, st[u]) not in C:
                    report.add("rr4", (s, t), f"s+t or t(st)+ undefined for ({_nm(B, s, t)})")
                    continue
                lhs, rhs = T[(st[s], t)], T[(t, st[u])]
            if lhs != rhs:
                report.add(f"{tag}4", (s, t),
                           f"({_nm(B, s, t)}): {B.names[lhs]} != {B.names[rhs]}")


@checker
def check_left_restriction(report: AxiomReport, R: RestrictionSemigroupoid):
    """Rules ``lr1``-``lr4`` plus ``lr-remark``: ``(s,t)`` composable iff ``(s,t*)`` is."""
    _restriction_rules(report, R, "l")


@checker
def check_right_restriction(report: AxiomReport, R: RestrictionSemigroupoid):
    """Rules ``rr1``-``rr4`` with the star field read as ``+``.

    ``rr3`` is taken with hypothesis ``(s, t+)`` composable, the exact mirror of
    ``lr3``; ``rr-remark`` is ``(s,t)`` composable iff ``(s+,t)`` is.
    """
    _restriction_rules(report, R, "r")


@checker
def check_bilateral(report: AxiomReport, R: RestrictionSemigroupoid, plus):
    report.merge(check_left_restriction(R))
    report.merge(check_right_restriction(R.with_star(plus)))
    star = R.star
    plus = tuple(plus)
    for s in range(R.n):
        if plus[star[s]] != star[s]:
            report.add("compat*+", (s,), f"(s*)+ = {R.names[plus[star[s]]]} != s* = {R.names[star[s]]}")
        if star[plus[s]] != plus[s]:
            report.add("compat+*", (s,), f"(s+)* = {R.names[star[plus[s]]]} != s+ = {R.names[plus[s]]}")


def _components(E, C):
    """Connected components of the composability graph restricted to ``E``."""
    E = sorted(E)
    parent = {e: e for e in E}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in E:
        for f in E:
            if (e, f) in C:
                a, b = find(e), find(f)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    blocks = {}
    for e in E:
        blocks.setdefault(find(e), []).append(e)
    return [tuple(b) for b in blocks.values()]


@checker
def check_distinct_set(report: AxiomReport, S, E):
    """Distinct-set conditions for ``E``.

    (i) nonempty set of idempotents; (ii) composable members commute with a
    product in ``E``; (iii) ``e <= f iff (e,f) composable and ef = e`` is a
    partial order; (iv) every class of the reachability relation of
    composability has all pairwise meets.  ``details`` receives ``classes``
    and ``meets``.
    """
    B = base_of(S)
    C = B.composable_pairs
    T = B.table
    E = sorted(set(E))
    if not E:
        report.add("empty", (), "empty distinct set")
        return
    idem = set(idempotents(B))
    for e in E:
        if e not in idem:
            report.add("idempotent", (e,), f"{B.names[e]} is not idempotent")
    Eset = set(E)
    for e in E:
        for f in E:
            if (e, f) not in C:
                continue
            if (f, e) not in C:
                report.add("commute", (e, f), f"({_nm(B, e, f)}) composable but not ({_nm(B, f, e)})")
            elif T[(e, f)] != T[(f, e)]:
                report.add("commute", (e, f), f"{_nm(B, e, f)} do not commute")
            elif T[(e, f)] not in Eset:
                report.add("closed", (e, f), f"product of {_nm(B, e, f)} is outside E")

    def leq(e, f):
        return (e, f) in C and T[(e, f)] == e

    for e in E:
        if not leq(e, e):
            report.add("order", (e,), f"{B.names[e]} <= {B.names[e]} fails")
        for f in E:
            if e != f and leq(e, f) and leq(f, e):
                if e < f:
                    report.add("order", (e, f), f"antisymmetry fails for {_nm(B, e, f)}")
            for g in E:
                if leq(e, f) and leq(f, g) and not leq(e, g):
                    report.add("order", (e, f, g), f"transitivity fails for {_nm(B, e, f, g)}")

    classes = _components(E, C)
    meets = {}
    for block in classes:
        for i, e in enumerate(block):
            for f in block[i:]:
                lower = [j for j in block if leq(j, e) and leq(j, f)]
                greatest = [m for m in lower if all(leq(j, m) for j in lower)]
                if len(greatest) != 1:
                    report.add("meet", (e, f), f"no meet for {_nm(B, e, f)} in class {B.fmt(block)}")
                else:
                    meets[(e, f)] = greatest[0]
    report.details["classes"] = classes
    report.details["meets"] = meets


@checker
def check_morphism(report: AxiomReport, phi: ElementMapping, *, restriction=True,
                   rigid=False, injective=False, surjective=False):
    """Semigroupoid morphism checks; ``restriction`` also requires ``phi(s*) = phi(s)*``."""
    S, T = phi.source, phi.target
    m = phi.map
    CT = T.composable
    for (s, t), u in sorted(S.table.items()):
        a, b = m[s], m[t]
        if (a, b) not in CT:
            report.add("morphism", (s, t), f"({_nm(S, s, t)}) composable but images are not")
        elif T.table[(a, b)] != m[u]:
            report.add("morphism", (s, t), f"phi({_nm(S, s, t)} product) != phi(s)phi(t)")
    if restriction:
        for s in range(S.n):
            if m[S.star[s]] != T.star[m[s]]:
                report.add("star", (s,), f"phi({S.names[s]}*) = {T.names[m[S.star[s]]]} "
                                         f"but phi({S.names[s]})* = {T.names[T.star[m[s]]]}")
    if rigid:
        for s in range(S.n):
            for t in range(S.n):
                if (m[s], m[t]) in CT and (s, t) not in S.composable:
                    report.add("rigid", (s, t), f"images of ({_nm(S, s, t)}) composable but pair is not")
    if injective:
        seen = {}
        for s, x in enumerate(m):
            if x in seen:
                report.add("injective", (seen[x], s), f"{_nm(S, seen[x], s)} have the same image")
            seen.setdefault(x, s)
    if surjective:
        for x in sorted(set(range(T.n)) - set(m)):
            report.add("surjective", (x,), f"{T.names[x]} is not in the image")
