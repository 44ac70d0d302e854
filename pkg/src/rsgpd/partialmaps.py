"""Partial maps of a finite set and the category PT^op(π) of partial maps
between the fibers of a surjection π: X → Y.

A morphism ``(x, f, y)`` is a partial map ``f`` from the fiber over ``y`` into
the fiber over ``x``.  It is composable after ``(y', g, z)`` when ``y' = y``:
``(y, g, z) ∘ (x, f, y) = (x, f ⋆ g, z)`` where ``f ⋆ g`` means "g, then f".
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .core import RestrictionSemigroupoid, Semigroupoid
from .errors import GuardExceeded, NotComposable, PreconditionError


def _key(ambient):
    order = {x: i for i, x in enumerate(ambient)}
    return lambda p: order[p[0]]


@dataclass(frozen=True)
class PartialMap:
    """A function from a subset of ``ambient`` into ``ambient``; the image plays the codomain."""

    ambient: tuple
    pairs: frozenset

    def __post_init__(self):
        object.__setattr__(self, "ambient", tuple(self.ambient))
        pairs = frozenset(self.pairs.items() if isinstance(self.pairs, Mapping) else self.pairs)
        object.__setattr__(self, "pairs", pairs)
        amb = set(self.ambient)
        srcs = [a for a, _ in pairs]
        if len(srcs) != len(set(srcs)):
            raise PreconditionError("partial map assigns two values to one point")
        if not all(a in amb and b in amb for a, b in pairs):
            raise PreconditionError("partial map leaves its ambient set")

    @classmethod
    def identity(cls, ambient, subset=None) -> "PartialMap":
        subset = ambient if subset is None else subset
        return cls(ambient, {x: x for x in subset})

    @classmethod
    def empty(cls, ambient) -> "PartialMap":
        return cls(ambient, {})

    @cached_property
    def as_dict(self) -> dict:
        return dict(self.pairs)

    @property
    def dom(self) -> frozenset:
        return frozenset(a for a, _ in self.pairs)

    @property
    def image(self) -> frozenset:
        return frozenset(b for _, b in self.pairs)

    def __call__(self, x):
        return self.as_dict[x]

    def sorted_pairs(self) -> list:
        return sorted(self.pairs, key=_key(self.ambient))

    def is_injective(self) -> bool:
        return len(self.image) == len(self.pairs)

    def inverse(self) -> "PartialMap":
        if not self.is_injective():
            raise PreconditionError("partial map is not injective")
        return PartialMap(self.ambient, {b: a for a, b in self.pairs})

    def __str__(self):
        return ", ".join(f"{a}->{b}" for a, b in self.sorted_pairs())


def pm_star_compose(f: PartialMap, g: PartialMap) -> PartialMap:
    """``f ⋆ g``: first ``g`` then ``f``, defined on ``g⁻¹(im g ∩ dom f)``."""
    if f.ambient != g.ambient:
        raise PreconditionError("partial maps over different sets")
    fd = f.as_dict
    return PartialMap(f.ambient, {x: fd[y] for x, y in g.pairs if y in fd})


def pm_bullet_compose(f: PartialMap, g: PartialMap) -> PartialMap:
    """The opposite product ``f • g = g ⋆ f``."""
    return pm_star_compose(g, f)


def pm_star_restriction(f: PartialMap) -> PartialMap:
    """Identity on the domain of ``f``."""
    return PartialMap.identity(f.ambient, f.dom)


@dataclass(frozen=True)
class FiberedFunction:
    X: tuple
    Y: tuple
    pi: Mapping

    def __post_init__(self):
        object.__setattr__(self, "X", tuple(self.X))
        object.__setattr__(self, "Y", tuple(self.Y))
        object.__setattr__(self, "pi", dict(self.pi))
        if set(self.pi) != set(self.X) or not set(self.pi.values()) <= set(self.Y):
            raise PreconditionError("pi must be a total function X -> Y")
        missing = [y for y in self.Y if y not in set(self.pi.values())]
        if missing:
            raise PreconditionError(f"pi is not surjective: {missing[0]!r} has an empty fiber")

    @classmethod
    def trivial(cls, X, point="•") -> "FiberedFunction":
        return cls(X, (point,), {x: point for x in X})

    @cached_property
    def fibers(self) -> dict:
        out = {y: [] for y in self.Y}
        for x in self.X:
            out[self.pi[x]].append(x)
        return {y: tuple(v) for y, v in out.items()}

    def fiber(self, y) -> tuple:
        return self.fibers[y]


@dataclass(frozen=True)
class PTOpMorphism:
    """Triple ``(x, f, y)``: ``f`` maps part of the fiber over ``y`` into the fiber over ``x``."""

    target_fiber: object
    map: PartialMap
    source_fiber: object

    def check(self, pi: FiberedFunction):
        if not self.map.dom <= set(pi.fiber(self.source_fiber)):
            raise PreconditionError(f"{self}: domain leaves the fiber over {self.source_fiber}")
        if not self.map.image <= set(pi.fiber(self.target_fiber)):
            raise PreconditionError(f"{self}: image leaves the fiber over {self.target_fiber}")
        return self

    def __str__(self):
        body = str(self.map)
        return f"({self.target_fiber} | {body} | {self.source_fiber})" if body else \
            f"({self.target_fiber} | | {self.source_fiber})"


def ptop_compose(g: PTOpMorphism, f: PTOpMorphism, pi: FiberedFunction | None = None) -> PTOpMorphism:
    """``(y, g, z) ∘ (x, f, y) = (x, f ⋆ g, z)``."""
    if f.source_fiber != g.target_fiber:
        raise NotComposable(f"{g} ∘ {f}: fibers {g.target_fiber!r} and {f.source_fiber!r} differ")
    m = PTOpMorphism(f.target_fiber, pm_star_compose(f.map, g.map), g.source_fiber)
    return m.check(pi) if pi is not None else m


def ptop_star(m: PTOpMorphism) -> PTOpMorphism:
    return PTOpMorphism(m.source_fiber, pm_star_restriction(m.map), m.source_fiber)


def ptop_identity(pi: FiberedFunction, x) -> PTOpMorphism:
    return PTOpMorphism(x, PartialMap.identity(pi.X, pi.fiber(x)), x)


def is_bijective(m: PTOpMorphism) -> bool:
    return m.map.is_injective()


def jop_inverse(m: PTOpMorphism) -> PTOpMorphism:
    if not is_bijective(m):
        raise PreconditionError(f"{m} is not a bijection")
    return PTOpMorphism(m.source_fiber, m.map.inverse(), m.target_fiber)


def count_ptop(pi: FiberedFunction) -> int:
    """Number of morphisms: for each fiber pair, ``(|fiber x| + 1) ** |fiber y|``."""
    return sum((len(pi.fiber(x)) + 1) ** len(pi.fiber(y)) for x in pi.Y for y in pi.Y)


def ptop_morphisms(pi: FiberedFunction, guard: int = 4096) -> list:
    total = count_ptop(pi)
    if total > guard:
        raise GuardExceeded(f"PT^op has {total} morphisms, guard is {guard}")
    out = []
    for x in pi.Y:
        for y in pi.Y:
            src, tgt = pi.fiber(y), pi.fiber(x)
            for values in itertools.product((None,) + tgt, repeat=len(src)):
                f = PartialMap(pi.X, {a: b for a, b in zip(src, values) if b is not None})
                out.append(PTOpMorphism(x, f, y))
    return out


def _table(elements, product, defined, star):
    index = {m: i for i, m in enumerate(elements)}
    table = {}
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            if defined(a, b):
                table[(i, j)] = index[product(a, b)]
    names = tuple(str(m) for m in elements)
    return RestrictionSemigroupoid(Semigroupoid(names, table), tuple(index[star(m)] for m in elements))


def enumerate_ptop(pi: FiberedFunction, guard: int = 4096):
    """All of PT^op(π) as a finite left restriction semigroupoid.

    Returns ``(R, morphisms)`` with ``morphisms[i]`` the triple behind element ``i``.
    ``s·t`` is ``ptop_compose(s, t)``.
    """
    ms = ptop_morphisms(pi, guard)
    R = _table(ms, lambda a, b: ptop_compose(a, b),
               lambda a, b: a.target_fiber == b.source_fiber, ptop_star)
    return R, ms


def partial_maps(X) -> list:
    X = tuple(X)
    return [PartialMap(X, {a: b for a, b in zip(X, vals) if b is not None})
            for vals in itertools.product((None,) + X, repeat=len(X))]


def pt_table(X, opposite=True):
    """PT(X) with product ``⋆`` (or ``•`` when ``opposite``) and ``f* = f+ = id_dom f``.

    Returns ``(R, maps)``.
    """
    maps = partial_maps(X)
    prod = pm_bullet_compose if opposite else pm_star_compose
    R = _table(maps, prod, lambda a, b: True, pm_star_restriction)
    names = tuple("{" + str(m) + "}" for m in maps)
    return RestrictionSemigroupoid(Semigroupoid(names, R.table), R.star), maps
