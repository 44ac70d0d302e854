"""Every left restriction semigroupoid sits inside a category of partial maps
between fibres.  Build the embedding for Z2 and for DISJ and print the maps."""
from rsgpd import fixtures
from rsgpd.partialmaps import FiberedFunction, enumerate_ptop
from rsgpd.representation import build_embedding, verify_embedding

pi = FiberedFunction.trivial(("1", "2"))
R, morphisms = enumerate_ptop(pi)
print(f"PT^op over a single fibre of size 2 has {R.n} morphisms:")
for m in morphisms:
    print("  ", m)

for make in (fixtures.z2, fixtures.disj, fixtures.z2_adj):
    S = make()
    emb = build_embedding(S)
    print()
    print(f"{' '.join(S.names)}:")
    for line in emb.lines():
        print("  ", line)
    print("   verified:", verify_embedding(emb).passed)
