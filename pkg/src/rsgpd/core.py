"""Finite semigroupoids: elements, a partial composition table and star maps.

Elements are identified by their 0-based position in declaration order.  A
missing composition is reported as ``None`` (``UNDEFINED``) rather than raised,
since partiality is the normal situation in a semigroupoid.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import InvalidElement

UNDEFINED = None


@dataclass(frozen=True)
class Violation:
    rule: str
    witness: tuple
    message: str

    def __str__(self):
        return f"{self.rule} {self.witness}: {self.message}"


class _Stop(Exception):
    pass


@dataclass
class AxiomReport:
    """Outcome of a verifier: a list of violations plus optional details.

    ``passed`` is true exactly when no violation was recorded.  In fast mode the
    first violation aborts the check (see :func:`checker`).
    """

    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    fast: bool = field(default=False, repr=False, compare=False)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, rule, witness, message):
        self.violations.append(Violation(rule, tuple(witness), message))
        if self.fast:
            raise _Stop

    def merge(self, other: "AxiomReport", prefix: str = ""):
        for v in other.violations:
            self.add(prefix + v.rule, v.witness, v.message)

    def rules(self) -> set:
        return {v.rule for v in self.violations}

    def __str__(self):
        if self.passed:
            return "pass"
        return "fail\n" + "\n".join(f"  {v}" for v in self.violations)


def checker(fn):
    """Turn ``fn(report, *args)`` into ``fn(*args, fast=False) -> AxiomReport``."""

    @functools.wraps(fn)
    def wrapper(*args, fast=False, **kwargs):
        report = AxiomReport(fast=fast)
        try:
            fn(report, *args, **kwargs)
        except _Stop:
            pass
        report.fast = False
        return report

    return wrapper


@dataclass(frozen=True, eq=False)
class Semigroupoid:
    """A finite set with a partially defined binary operation.

    ``table`` maps each composable pair ``(s, t)`` to the id of ``st``.  The
    composable set defaults to the keys of the table; passing it explicitly is
    only useful to build (and then diagnose) malformed inputs.
    """

    names: tuple
    table: Mapping
    composable_pairs: frozenset | None = None

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "table", dict(self.table))
        if self.composable_pairs is None:
            object.__setattr__(self, "composable_pairs", frozenset(self.table))
        else:
            object.__setattr__(self, "composable_pairs", frozenset(self.composable_pairs))

    @classmethod
    def from_names(cls, names: Sequence[str], products: Mapping) -> "Semigroupoid":
        """Build from a ``{(name, name): name}`` table."""
        idx = {x: i for i, x in enumerate(names)}
        return cls(tuple(names), {(idx[s], idx[t]): idx[u] for (s, t), u in products.items()})

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def composable(self) -> frozenset:
        return self.composable_pairs

    @cached_property
    def index(self) -> dict:
        idx = {}
        for i, x in enumerate(self.names):
            idx.setdefault(x, i)
        return idx

    def id(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise InvalidElement(f"unknown element {name!r}") from None

    def ids(self, names: Iterable[str]) -> list:
        return [self.id(x) for x in names]

    def name(self, i: int) -> str:
        return self.names[i]

    def fmt(self, ids) -> str:
        return "{" + ",".join(self.names[i] for i in sorted(ids)) + "}"

    def compose(self, s: int, t: int):
        if not (0 <= s < self.n and 0 <= t < self.n):
            raise InvalidElement(f"element id out of range: {(s, t)}")
        if (s, t) not in self.composable_pairs:
            return UNDEFINED
        return self.table.get((s, t))

    @cached_property
    def right_sets(self) -> tuple:
        """``S^s = {t : (s, t) composable}`` for every ``s``."""
        sets = [set() for _ in range(self.n)]
        for s, t in self.composable_pairs:
            sets[s].add(t)
        return tuple(frozenset(x) for x in sets)

    @cached_property
    def left_sets(self) -> tuple:
        """``S_s = {t : (t, s) composable}`` for every ``s``."""
        sets = [set() for _ in range(self.n)]
        for t, s in self.composable_pairs:
            sets[s].add(t)
        return tuple(frozenset(x) for x in sets)

    def __eq__(self, other):
        if not isinstance(other, Semigroupoid):
            return NotImplemented
        return (self.names == other.names and self.table == other.table
                and self.composable_pairs == other.composable_pairs)

    def __repr__(self):
        return f"Semigroupoid({len(self.names)} elements, {len(self.table)} products)"


@dataclass(frozen=True, eq=False)
class RestrictionSemigroupoid:
    """A semigroupoid with a unary star map and a designated distinct set.

    The distinct set defaults to the image of ``star``.  Nothing is checked on
    construction; use :func:`validate` and the verifiers in ``axioms``.
    """

    base: Semigroupoid
    star: tuple
    distinct_set: frozenset | None = None

    def __post_init__(self):
        object.__setattr__(self, "star", tuple(self.star))
        if self.distinct_set is None:
            object.__setattr__(self, "distinct_set", frozenset(self.star))
        else:
            object.__setattr__(self, "distinct_set", frozenset(self.distinct_set))

    @classmethod
    def from_names(cls, names, products, star, distinct_set=None):
        base = Semigroupoid.from_names(names, products)
        st = tuple(base.id(star[x]) for x in names) if isinstance(star, Mapping) else tuple(star)
        E = None if distinct_set is None else frozenset(base.ids(distinct_set))
        return cls(base, st, E)

    # forwarded so that functions needing only the semigroupoid accept either
    names = property(lambda self: self.base.names)
    n = property(lambda self: self.base.n)
    table = property(lambda self: self.base.table)
    composable = property(lambda self: self.base.composable)
    right_sets = property(lambda self: self.base.right_sets)
    left_sets = property(lambda self: self.base.left_sets)

    def id(self, name):
        return self.base.id(name)

    def ids(self, names):
        return self.base.ids(names)

    def name(self, i):
        return self.base.names[i]

    def fmt(self, ids):
        return self.base.fmt(ids)

    def compose(self, s, t):
        return self.base.compose(s, t)

    def with_star(self, star, distinct_set=None) -> "RestrictionSemigroupoid":
        return RestrictionSemigroupoid(self.base, star, distinct_set)

    def __eq__(self, other):
        if not isinstance(other, RestrictionSemigroupoid):
            return NotImplemented
        return (self.base == other.base and self.star == other.star
                and self.distinct_set == other.distinct_set)

    def __repr__(self):
        return f"RestrictionSemigroupoid({self.n} elements, |E|={len(self.distinct_set)})"


def base_of(S) -> Semigroupoid:
    return S.base if isinstance(S, RestrictionSemigroupoid) else S


@dataclass(frozen=True, eq=False)
class ElementMapping:
    """A total function on element ids from ``source`` to ``target``."""

    source: object
    target: object
    map: tuple

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))

    @classmethod
    def from_names(cls, source, target, pairs: Mapping) -> "ElementMapping":
        return cls(source, target, tuple(target.id(pairs[x]) for x in source.names))

    @classmethod
    def identity(cls, S) -> "ElementMapping":
        return cls(S, S, tuple(range(S.n)))

    def __call__(self, s: int) -> int:
        return self.map[s]

    def then(self, g: "ElementMapping") -> "ElementMapping":
        """``g ∘ self``: apply ``self`` first."""
        return ElementMapping(self.source, g.target, tuple(g.map[x] for x in self.map))

    def as_names(self) -> dict:
        return {self.source.names[s]: self.target.names[t] for s, t in enumerate(self.map)}

    def __eq__(self, other):
        if not isinstance(other, ElementMapping):
            return NotImplemented
        return (self.map == other.map and self.source == other.source
                and self.target == other.target)

    def __repr__(self):
        return f"ElementMapping({self.as_names()})"


def compose(S, s: int, t: int):
    """Return the id of ``st`` or ``UNDEFINED`` when the pair is not composable."""
    return S.compose(s, t)


def idempotents(S) -> list:
    """Ids ``f`` with ``ff`` defined and equal to ``f``, in declaration order."""
    table = base_of(S).table
    return [f for f in range(S.n) if table.get((f, f)) == f]


def validate(S) -> AxiomReport:
    """Check the well-formedness invariants of the data model."""
    report = AxiomReport()
    B = base_of(S)
    seen = {}
    for i, x in enumerate(B.names):
        if x in seen:
            report.add("duplicate name", (seen[x], i), f"element name {x!r} declared twice")
        seen.setdefault(x, i)
    n = B.n
    for key in sorted(B.table):
        s, t = key
        if not (0 <= s < n and 0 <= t < n):
            report.add("element out of range", key, f"table key {key} out of range")
        if key not in B.composable_pairs:
            report.add("table key not composable", key, f"table has an entry for {key} which is not composable")
        v = B.table[key]
        if not (isinstance(v, int) and 0 <= v < n):
            report.add("element out of range", key, f"table value {v!r} at {key} out of range")
    for key in sorted(B.composable_pairs - set(B.table)):
        report.add("composable pair without product", key, f"pair {key} is composable but has no table entry")
    if isinstance(S, RestrictionSemigroupoid):
        if len(S.star) != n:
            report.add("star not total", (), f"star has {len(S.star)} entries for {n} elements")
        for s, v in enumerate(S.star):
            if not (isinstance(v, int) and 0 <= v < n):
                report.add("element out of range", (s,), f"star value {v!r} out of range")
        idem = set(idempotents(B))
        for e in sorted(S.distinct_set):
            if not (0 <= e < n):
                report.add("element out of range", (e,), f"distinct set member {e!r} out of range")
            elif e not in idem:
                report.add("distinct set not idempotent", (e,), f"{B.names[e]} is not idempotent")
    return report


def opposite(S):
    """The opposite structure: ``s ·op t`` is defined iff ``(t, s)`` is, and equals ``ts``."""
    B = base_of(S)
    op = Semigroupoid(B.names, {(t, s): v for (s, t), v in B.table.items()},
                      frozenset((t, s) for s, t in B.composable_pairs))
    if isinstance(S, RestrictionSemigroupoid):
        return RestrictionSemigroupoid(op, S.star, S.distinct_set)
    return op

