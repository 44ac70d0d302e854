"""The Szendrei expansion of Z2, the factorization of a premorphism through
it, and the naturality square for the collapse map g -> 1."""
from rsgpd import fixtures, search
from rsgpd.core import ElementMapping
from rsgpd.szendrei import (build_sz, factorize, generator_decomposition, premorphism_from_morphism,
                            sz_functor, verify_naturality)

Z2 = fixtures.z2()
sz = build_sz(Z2)
print("Sz(Z2):", ", ".join(sz.names()))
for x in sz.elements:
    seq = generator_decomposition(Z2, x)
    print(f"  {x.name(Z2)} = product over {' '.join(Z2.names[s] for s in seq)}")

phis = search.premorphisms(Z2, Z2)
print(f"\n{len(phis)} premorphisms Z2 -> Z2")
for phi in phis:
    bar = factorize(phi, sz)
    back = premorphism_from_morphism(sz, bar)
    print(f"  {phi.as_names()}  ->  {bar.as_names()}  round trip ok: {back == phi}")

collapse = ElementMapping(Z2, Z2, (0, 0))
print("\nSz(collapse):", sz_functor(collapse).as_names())
print("naturality square:", verify_naturality(collapse).passed)

SL2 = fixtures.sl2()
print("\nSz(SL2):", ", ".join(build_sz(SL2).names()))
