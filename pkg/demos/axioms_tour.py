"""Walk through the small fixtures: which axioms hold, and what the
categorical check and the canonical graphing look like."""
from rsgpd import axioms, fixtures, structure

for name, make in [("SL2", fixtures.sl2), ("Z2", fixtures.z2), ("DISJ", fixtures.disj)]:
    R = make()
    print(f"== {name}: elements {' '.join(R.names)}")
    print("  associative:     ", axioms.check_associativity(R).passed)
    print("  left restriction:", axioms.check_left_restriction(R).passed)
    print("  distinct set E:  ", R.fmt(R.distinct_set))
    G = structure.graphing(R)
    print("  objects:         ", " ".join(G.objects))
    for i, x in enumerate(R.names):
        print(f"    D({x})={G.dom[i]}  R({x})={G.ran[i]}")

# a star that breaks lr1 gets a witness
bad = fixtures.z2().with_star((0, 1))
for v in axioms.check_left_restriction(bad).violations:
    print("Z2 with g* = g:", v)

# NC overlaps S^a and S^b, so no graph can carry it
NC = fixtures.nc()
c = structure.is_categorical(NC)
s, t, _ = c.witness
print(f"NC categorical: {bool(c)}; S^{NC.names[s]}={NC.fmt(NC.right_sets[s])} "
      f"S^{NC.names[t]}={NC.fmt(NC.right_sets[t])}")
print("NC associative:", axioms.check_associativity(NC).passed)
for v in axioms.check_associativity(NC).violations:
    print("  ", v)
