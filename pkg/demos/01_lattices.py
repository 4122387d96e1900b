"""Build finite bounded lattices and poke at their structure.

A lattice is specified by its cover relation (the Hasse diagram edges);
everything else -- the order, meet and join tables, bottom and top -- is
computed and validated at construction time.
"""

from latcong import build_from_covers, catalogue, med_dual_check

# The five-element pentagon: bottom < a < c < top and bottom < b < top.
N5 = build_from_covers(
    5, [(0, 1), (1, 3), (0, 2), (3, 4), (2, 4)],
    name="pentagon", labels={0: "bot", 1: "a", 2: "b", 3: "c", 4: "top"})

print("pentagon:", N5)
print("  bottom =", N5.label_of(N5.bottom), " top =", N5.label_of(N5.top))
print("  a v b =", N5.label_of(N5.join(1, 2)))
print("  c ^ b =", N5.label_of(N5.meet(3, 2)))

# Distributivity is an exhaustive triple scan.  Chains and boolean cubes
# pass; the pentagon and the diamond are the canonical failures.
for name in ("chain(4)", "boolean(3)", "M3", "N5"):
    L = catalogue(name)
    print(f"{name:12s} distributive: {L.is_distributive}")

# The median term (x v y) ^ (y v z) ^ (z v x) has a dual join-of-meets
# form; the two agree exactly on distributive lattices.
print("median self-duality on boolean(3):", med_dual_check(catalogue("boolean(3)")))
print("median self-duality on M3:        ", med_dual_check(catalogue("M3")))

# On a chain the median really is the middle element.
C5 = catalogue("chain(5)")
print("median of 0, 4, 2 on chain(5):", C5.med(0, 4, 2))
