"""Exhaustive and random sources of small structures and maps, used by the
property tests and the acceptance run.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import axioms, structure
from .core import ElementMapping, RestrictionSemigroupoid, Semigroupoid
from .errors import ContradictionError
from .partialmaps import FiberedFunction, enumerate_ptop


def _raw_associative(T, n):
    """Exel associativity on a flat table with ``-1`` for undefined."""
    for s in range(n):
        row = s * n
        for t in range(n):
            st = T[row + t]
            trow = t * n
            for r in range(n):
                tr = T[trow + r]
                st_r = T[st * n + r] if st >= 0 else -1
                s_tr = T[row + tr] if tr >= 0 else -1
                if (st >= 0 and tr >= 0) or st_r >= 0 or s_tr >= 0:
                    if st < 0 or tr < 0 or st_r < 0 or s_tr < 0 or st_r != s_tr:
                        return False
    return True


def _from_flat(T, n, names=None):
    names = names or tuple("abcdefghij"[:n])
    return Semigroupoid(names, {(i // n, i % n): v for i, v in enumerate(T) if v >= 0})


def _consistent(T, n):
    """Associativity restricted to triples whose relevant cells are all assigned (``-2`` = open)."""
    for s in range(n):
        row = s * n
        for t in range(n):
            st = T[row + t]
            if st == -2:
                continue
            trow = t * n
            for r in range(n):
                tr = T[trow + r]
                if tr == -2:
                    continue
                st_r = T[st * n + r] if st >= 0 else -1
                s_tr = T[row + tr] if tr >= 0 else -1
                if st_r == -2 or s_tr == -2:
                    continue
                if (st >= 0 and tr >= 0) or st_r >= 0 or s_tr >= 0:
                    if st < 0 or tr < 0 or st_r < 0 or s_tr < 0 or st_r != s_tr:
                        return False
    return True


def all_semigroupoids(n: int):
    """Every associative partial table on ``n`` labelled elements (no isomorphism reduction).

    Cells are filled in row-major order and a branch is cut as soon as a fully
    determined triple breaks associativity.
    """
    T = [-2] * (n * n)

    def fill(i):
        if i == n * n:
            if _raw_associative(T, n):
                yield _from_flat(T, n)
            return
        for v in range(-1, n):
            T[i] = v
            if _consistent(T, n):
                yield from fill(i + 1)
        T[i] = -2

    yield from fill(0)


def all_tables(n: int):
    """Every partial table, associative or not."""
    for T in itertools.product(range(-1, n), repeat=n * n):
        yield _from_flat(T, n)


def star_maps(n: int):
    return itertools.product(range(n), repeat=n)


@dataclass
class ScanResult:
    semigroupoids: int = 0
    candidates: int = 0
    left_restriction: int = 0
    not_categorical: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)
    structures: list = field(default_factory=list)


def lr1_star_maps(S):
    """Star maps with ``s* s = s``; the only candidates that can pass lr1."""
    T = S.table
    choices = [[e for e in range(S.n) if T.get((e, e)) == e and T.get((e, s)) == s] for s in range(S.n)]
    return itertools.product(*choices)


def scan(max_n: int = 3, keep=True, lr1_only=False) -> ScanResult:
    """Run every associative table on ``1..max_n`` elements against every star map.

    Records left restriction structures that are not categorical, and every
    disagreement between the axioms and the r1-r3 characterization (with
    ``E`` the star image).  ``lr1_only`` restricts to star maps passing lr1
    (the characterization can only ever return such a map), which makes
    ``max_n = 4`` affordable.
    """
    out = ScanResult()
    for n in range(1, max_n + 1):
        for S in all_semigroupoids(n):
            out.semigroupoids += 1
            cat = structure.is_categorical(S).categorical
            char = {}
            for star in (lr1_star_maps(S) if lr1_only else star_maps(n)):
                out.candidates += 1
                R = RestrictionSemigroupoid(S, star)
                lr = axioms.check_left_restriction(R, fast=True).passed
                E = R.distinct_set
                if E not in char:
                    try:
                        char[E] = structure.characterize_left_restriction(S, E)
                    except ContradictionError as exc:
                        char[E] = structure.Characterization(False, None, str(exc))
                        out.mismatches.append((S, star, str(exc)))
                c = char[E]
                agrees = c.ok and c.star == tuple(star)
                if lr != agrees:
                    out.mismatches.append((S, star, c.witness))
                if lr:
                    out.left_restriction += 1
                    if keep:
                        out.structures.append(R)
                    if not cat:
                        out.not_categorical.append(R)
    return out


def all_maps(S, T):
    for m in itertools.product(range(T.n), repeat=S.n):
        yield ElementMapping(S, T, m)


def restriction_morphisms(S, T):
    return [f for f in all_maps(S, T) if axioms.check_morphism(f, fast=True).passed]


def premorphisms(S, T):
    from .szendrei import check_premorphism
    return [f for f in all_maps(S, T) if check_premorphism(f, fast=True).passed]


def disjoint_union(R1: RestrictionSemigroupoid, R2: RestrictionSemigroupoid) -> RestrictionSemigroupoid:
    k = R1.n
    names = tuple(f"{x}_0" for x in R1.names) + tuple(f"{x}_1" for x in R2.names)
    table = dict(R1.table)
    table.update({(s + k, t + k): u + k for (s, t), u in R2.table.items()})
    star = R1.star + tuple(e + k for e in R2.star)
    return RestrictionSemigroupoid(Semigroupoid(names, table), star)


def direct_product(R1: RestrictionSemigroupoid, R2: RestrictionSemigroupoid) -> RestrictionSemigroupoid:
    pairs = [(a, b) for a in range(R1.n) for b in range(R2.n)]
    idx = {p: i for i, p in enumerate(pairs)}
    names = tuple(f"{R1.names[a]}_{R2.names[b]}" for a, b in pairs)
    table = {}
    for (a, b) in pairs:
        for (c, d) in pairs:
            u, v = R1.table.get((a, c)), R2.table.get((b, d))
            if u is not None and v is not None:
                table[(idx[(a, b)], idx[(c, d)])] = idx[(u, v)]
    star = tuple(idx[(R1.star[a], R2.star[b])] for a, b in pairs)
    return RestrictionSemigroupoid(Semigroupoid(names, table), star)


def substructure(R: RestrictionSemigroupoid, gens, limit: int) -> RestrictionSemigroupoid | None:
    """Closure of ``gens`` under product and star, or ``None`` if it exceeds ``limit``."""
    have = set(gens)
    frontier = list(have)
    while frontier:
        new = set()
        for x in frontier:
            new.add(R.star[x])
        for x in list(have | new):
            for y in list(have | new):
                u = R.table.get((x, y))
                if u is not None:
                    new.add(u)
        frontier = list(new - have)
        have |= new
        if len(have) > limit:
            return None
    keep = sorted(have)
    pos = {x: i for i, x in enumerate(keep)}
    table = {(pos[s], pos[t]): pos[u] for (s, t), u in R.table.items() if s in pos and t in pos}
    names = tuple(f"m{i}" for i in range(len(keep)))
    return RestrictionSemigroupoid(Semigroupoid(names, table), tuple(pos[R.star[x]] for x in keep))


_PTOP_CACHE = {}


def _ptop(shape):
    if shape not in _PTOP_CACHE:
        X = tuple(str(i + 1) for i in range(sum(shape)))
        Y = tuple("xyz"[:len(shape)])
        pi, k = {}, 0
        for y, size in zip(Y, shape):
            for _ in range(size):
                pi[X[k]] = y
                k += 1
        _PTOP_CACHE[shape] = enumerate_ptop(FiberedFunction(X, Y, pi))[0]
    return _PTOP_CACHE[shape]


def random_left_restriction(rng: random.Random, max_n: int = 6, pool=None) -> RestrictionSemigroupoid:
    """A random left restriction semigroupoid with at most ``max_n`` elements.

    Mixes sub-structures of PT^op(π) generated by random morphisms, disjoint
    unions and direct products of members of ``pool`` (e.g. the exhaustive
    scan output).  Every result is re-verified.
    """
    while True:
        kind = rng.randrange(3) if pool else 0
        if kind == 0:
            shape = rng.choice([(2,), (3,), (1, 1), (1, 2), (2, 1), (1, 1, 1)])
            P = _ptop(shape)
            gens = rng.sample(range(P.n), rng.randint(1, 2))
            R = substructure(P, gens, max_n)
        elif kind == 1:
            R = disjoint_union(rng.choice(pool), rng.choice(pool))
        else:
            R = direct_product(rng.choice(pool), rng.choice(pool))
        if R is None or R.n > max_n:
            continue
        if not axioms.check_left_restriction(R, fast=True).passed:
            raise ContradictionError("random generator produced a structure failing the axioms")
        return R
