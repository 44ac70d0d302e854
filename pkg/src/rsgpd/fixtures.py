"""Small named structures used as ground truth across the test-suite and demos.

``SL2``   two-element meet semilattice ``e < f``; star = identity.
``Z2``    the two-element group ``{1, g}``; star ≡ 1.
``DISJ``  two disjoint one-element groups ``p``, ``q``; star = identity.
``NC``    four elements, composable ``(a,c) (b,c) (b,d)`` all with value ``d``.
          ``S^a = {c}`` and ``S^b = {c, d}`` overlap without being equal, so it
          is not categorical.  The table is *not* associative: ``(a,c)`` and
          ``(b, ac) = (b, d)`` are composable while ``(b, a)`` is not.
``NC_SINK`` NC with the three products redirected to a fresh element ``z``;
          associative and still not categorical.
``Z2_ADJ`` Z2 with a new two-sided identity ``z`` adjoined (``z* = z``).
"""
from .core import RestrictionSemigroupoid, Semigroupoid


def sl2() -> RestrictionSemigroupoid:
    return RestrictionSemigroupoid.from_names(
        ["e", "f"],
        {("e", "e"): "e", ("e", "f"): "e", ("f", "e"): "e", ("f", "f"): "f"},
        {"e": "e", "f": "f"},
    )


def z2() -> RestrictionSemigroupoid:
    return RestrictionSemigroupoid.from_names(
        ["1", "g"],
        {("1", "1"): "1", ("1", "g"): "g", ("g", "1"): "g", ("g", "g"): "1"},
        {"1": "1", "g": "1"},
    )


def disj() -> RestrictionSemigroupoid:
    return RestrictionSemigroupoid.from_names(
        ["p", "q"],
        {("p", "p"): "p", ("q", "q"): "q"},
        {"p": "p", "q": "q"},
    )


def nc() -> Semigroupoid:
    return Semigroupoid.from_names(
        ["a", "b", "c", "d"],
        {("a", "c"): "d", ("b", "c"): "d", ("b", "d"): "d"},
    )


def nc_sink() -> Semigroupoid:
    return Semigroupoid.from_names(
        ["a", "b", "c", "d", "z"],
        {("a", "c"): "z", ("b", "c"): "z", ("b", "d"): "z"},
    )


def z2_adj() -> RestrictionSemigroupoid:
    names = ["1", "g", "z"]
    products = {("1", "1"): "1", ("1", "g"): "g", ("g", "1"): "g", ("g", "g"): "1"}
    for x in names:
        products[("z", x)] = x
        products[(x, "z")] = x
    return RestrictionSemigroupoid.from_names(names, products, {"1": "1", "g": "1", "z": "z"})


def bad1() -> Semigroupoid:
    """``xy = x``, ``yx = y``, ``(x, x)`` undefined.

    The triple ``(x, y, x)`` meets clause (s1) but ``(xy, x) = (x, x)`` is not
    composable.
    """
    return Semigroupoid.from_names(["x", "y"], {("x", "y"): "x", ("y", "x"): "y"})


RESTRICTION_FIXTURES = {"SL2": sl2, "Z2": z2, "DISJ": disj}
