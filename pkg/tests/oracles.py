"""Brute-force reference implementations, written straight from the definitions
and sharing no code with the package.  Structures are plain dicts:
``prod[(s, t)] = u`` for composable pairs, ``star[s] = e``.
"""
import itertools


def assoc(n, prod):
    for s, t, r in itertools.product(range(n), repeat=3):
        st, tr = prod.get((s, t)), prod.get((t, r))
        s1 = st is not None and tr is not None
        s2 = st is not None and (st, r) in prod
        s3 = tr is not None and (s, tr) in prod
        if s1 or s2 or s3:
            if st is None or tr is None or (st, r) not in prod or (s, tr) not in prod:
                return False
            if prod[(st, r)] != prod[(s, tr)]:
                return False
    return True


def left_restriction(n, prod, star):
    """lr1-lr4 exactly as stated, nothing else."""
    for s in range(n):
        if prod.get((star[s], s)) != s:
            return False
    for s, t in itertools.product(range(n), repeat=2):
        a, b = star[s], star[t]
        if ((a, b) in prod) != ((b, a) in prod):
            return False
        if (a, b) in prod and prod[(a, b)] != prod[(b, a)]:
            return False
        if (a, t) in prod:
            if (a, b) not in prod or star[prod[(a, t)]] != prod[(a, b)]:
                return False
        if (s, t) in prod:
            u = prod[(s, t)]
            if (s, b) not in prod or (star[u], s) not in prod:
                return False
            if prod[(s, b)] != prod[(star[u], s)]:
                return False
    return True


def categorical(n, prod):
    right = [frozenset(t for t in range(n) if (s, t) in prod) for s in range(n)]
    return all(a == b or not (a & b) for a in right for b in right)


def tilde_l_class(n, prod, E, a):
    def sig(s):
        return [((e, s) in prod, prod.get((e, s)) == s) for e in sorted(E)]
    return frozenset(t for t in range(n) if sig(t) == sig(a))


def sz_carrier(n, prod, star, E):
    """All ``(A, a)`` over the full power set, filtered by the definition."""
    out = set()
    for a in range(n):
        cls = tilde_l_class(n, prod, E, a)
        for mask in range(1 << n):
            A = frozenset(i for i in range(n) if mask >> i & 1)
            if a in A and star[a] in A and A <= cls:
                out.add((A, a))
    return out


def sz_product(prod, star, x, y):
    (A, a), (B, b) = x, y
    if (a, b) not in prod:
        return None
    ab = prod[(a, b)]
    return (frozenset(prod[(star[ab], s)] for s in A) | frozenset(prod[(a, t)] for t in B), ab)


def partial_maps(X):
    out = []
    for vals in itertools.product([None] + list(X), repeat=len(X)):
        out.append({x: v for x, v in zip(X, vals) if v is not None})
    return out


def after(f, g):
    """``f`` after ``g`` as dicts."""
    return {x: f[g[x]] for x in g if g[x] in f}


def natural_leq(prod, star, s, t):
    return prod.get((star[s], t)) == s
