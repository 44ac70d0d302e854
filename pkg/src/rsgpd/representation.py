"""Faithful representation of a left restriction semigroupoid by partial maps
between fibers of its domain function.

For each ``s`` let ``_sX = {t : t s* defined and equal to t}`` and
``α_s(t) = ts``.  Then ``s ↦ (D(s), α_s, R(s))`` is an injective rigid
morphism into PT^op(D) that preserves the star.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import structure
from .core import AxiomReport, RestrictionSemigroupoid, checker
from .errors import PreconditionError
from .partialmaps import (FiberedFunction, PartialMap, PTOpMorphism, is_bijective, jop_inverse,
                          pm_star_compose, ptop_compose, ptop_star)


@dataclass(frozen=True)
class Embedding:
    source: RestrictionSemigroupoid
    graphing: structure.Graphing
    pi: FiberedFunction
    images: tuple

    def __call__(self, s: int) -> PTOpMorphism:
        return self.images[s]

    def with_images(self, images) -> "Embedding":
        return Embedding(self.source, self.graphing, self.pi, tuple(images))

    def lines(self) -> list:
        """``alpha s : R(s) -> D(s) ; t->ts, ...`` for every element."""
        R = self.source
        out = []
        for s, m in enumerate(self.images):
            body = ", ".join(f"{a}->{b}" for a, b in m.map.sorted_pairs())
            out.append(f"alpha {R.names[s]} : {m.source_fiber} -> {m.target_fiber} ; {body}".rstrip())
        return out


def domain_set(R: RestrictionSemigroupoid, s: int) -> list:
    """``_sX``: elements ``t`` with ``t s* = t``, in declaration order."""
    e = R.star[s]
    return [t for t in range(R.n) if R.table.get((t, e)) == t]


def build_embedding(R: RestrictionSemigroupoid, graphing: structure.Graphing | None = None) -> Embedding:
    G = structure.graphing(R) if graphing is None else graphing
    X = R.names
    Y = tuple(dict.fromkeys(v for v in G.objects if v in set(G.dom)))
    pi = FiberedFunction(X, Y, {X[t]: G.dom[t] for t in range(R.n)})
    images = []
    for s in range(R.n):
        alpha = PartialMap(X, {X[t]: X[R.table[(t, s)]] for t in domain_set(R, s)})
        m = PTOpMorphism(G.dom[s], alpha, G.ran[s])
        if G.ran[s] not in pi.fibers:
            raise PreconditionError(f"R({X[s]}) = {G.ran[s]} is not the domain of any element")
        images.append(m.check(pi))
    return Embedding(R, G, pi, tuple(images))


@checker
def verify_embedding(report: AxiomReport, emb: Embedding):
    """Morphism, rigidity, injectivity and star preservation, plus two side facts:
    ``dom(α_st) = dom(α_t ⋆ α_s)`` and ``s* ∈ _sX``."""
    R = emb.source
    img = emb.images
    n = R.n
    nm = R.names
    for s in range(n):
        for t in range(n):
            comp = img[s].target_fiber == img[t].source_fiber
            if (s, t) in R.composable:
                if not comp:
                    report.add("morphism", (s, t), f"({nm[s]},{nm[t]}) composable but images are not")
                    continue
                u = R.table[(s, t)]
                if ptop_compose(img[s], img[t]) != img[u]:
                    report.add("morphism", (s, t), f"alpha({nm[s]}{nm[t]}) != alpha({nm[s]}) alpha({nm[t]})")
                if img[u].map.dom != pm_star_compose(img[t].map, img[s].map).dom:
                    report.add("dom", (s, t), f"dom alpha_st differs from dom (alpha_t * alpha_s)")
            elif comp:
                report.add("rigid", (s, t), f"images of ({nm[s]},{nm[t]}) composable but the pair is not")
    seen = {}
    for s in range(n):
        if img[s] in seen:
            report.add("injective", (seen[img[s]], s), f"{nm[seen[img[s]]]} and {nm[s]} share an image")
        seen.setdefault(img[s], s)
        if img[R.star[s]] != ptop_star(img[s]):
            report.add("star", (s,), f"alpha({nm[s]}*) != alpha({nm[s]})*")
        if nm[R.star[s]] not in img[s].map.dom:
            report.add("star-in-dom", (s,), f"{nm[s]}* not in the domain of alpha_{nm[s]}")


def _check_inverse(R, inv):
    T = R.table
    for s in range(R.n):
        i = inv[s]
        si = T.get((s, i))
        if si is None or T.get((si, s)) != s:
            raise PreconditionError(f"{R.names[s]} inv({R.names[s]}) {R.names[s]} != {R.names[s]}")
        is_ = T.get((i, s))
        if is_ is None or T.get((is_, i)) != i:
            raise PreconditionError(f"inv({R.names[s]}) is not a generalized inverse")
        if R.star[s] != si:
            raise PreconditionError(f"{R.names[s]}* != {R.names[s]} inv({R.names[s]})")


@checker
def inverse_embedding_check(report: AxiomReport, R: RestrictionSemigroupoid, inv, emb: Embedding | None = None):
    """For an inverse structure: every ``α_s`` is a bijection onto its image,
    ``α(s⁻¹) = α(s)⁻¹`` and ``X_s = dom α_{s⁻¹}``."""
    inv = tuple(inv)
    _check_inverse(R, inv)
    emb = build_embedding(R) if emb is None else emb
    img = emb.images
    nm = R.names
    for s in range(R.n):
        if not is_bijective(img[s]):
            report.add("bijective", (s,), f"alpha_{nm[s]} is not injective")
            continue
        if img[inv[s]] != jop_inverse(img[s]):
            report.add("inverse", (s,), f"alpha(inv {nm[s]}) != alpha({nm[s]})^-1")
        if img[s].map.image != img[inv[s]].map.dom:
            report.add("image", (s,), f"image of alpha_{nm[s]} != dom alpha_inv({nm[s]})")


def wagner_preston_semigroup(R: RestrictionSemigroupoid) -> Embedding:
    """The embedding of a semigroup with a left restriction star; there is a single object."""
    if len(R.composable) != R.n * R.n:
        raise PreconditionError("not a semigroup: some pair is not composable")
    emb = build_embedding(R)
    assert len(emb.pi.Y) == 1
    return emb
