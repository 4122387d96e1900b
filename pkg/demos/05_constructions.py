"""Products and horizontal sums, and how the integral splits over them.

On a direct product the Sugeno integral works coordinate by coordinate.
On a horizontal sum (summands glued at shared bottom and top) the
integral is the join of per-summand integrals of the split capacity and
input -- but that claim lives on distributive sums, and gluing chains
longer than three elements already destroys distributivity.
"""

from latcong import (
    Capacity,
    catalogue,
    direct_product,
    enumerate_capacities,
    horizontal_sum,
    horizontal_sum_decomposition_check,
    is_isomorphic,
    product_decomposition_check,
    NotDistributive,
)

C2, C3, C4 = (catalogue(f"chain({k})") for k in (2, 3, 4))

P = direct_product([C2, C3])
print("chain(2) x chain(3):", P.size, "elements,",
      "distributive" if P.is_distributive else "not distributive")
ok = all(product_decomposition_check(P, m) for m in enumerate_capacities(P, 2))
print("  coordinatewise splitting holds for all capacities:", ok)

H = horizontal_sum([C3, C3])
print("chain(3) + chain(3):", H.size, "elements,",
      "isomorphic to boolean(2):", is_isomorphic(H, catalogue("boolean(2)")))
ok = all(horizontal_sum_decomposition_check(H, m)
         for m in enumerate_capacities(H, 2))
print("  per-summand splitting holds for all capacities:", ok)

# Three glued 3-chains give the diamond -- the smallest modular
# non-distributive lattice.
M = horizontal_sum([C3, C3, C3])
print("chain(3) + chain(3) + chain(3) is M3:",
      is_isomorphic(M, catalogue("M3")))

# Gluing longer chains breaks distributivity, so the splitting claim is
# refused by default; report-only mode still lets you look.
bad = horizontal_sum([C4, C4])
print("chain(4) + chain(4): distributive?", bad.is_distributive)
m = Capacity(bad, (bad.bottom, bad.bottom, bad.bottom, bad.top))
try:
    horizontal_sum_decomposition_check(bad, m)
except NotDistributive as err:
    print("  refused:", err)
print("  report-only outcome for the trivial capacity:",
      horizontal_sum_decomposition_check(bad, m, report_only=True))
