"""Independent brute-force oracles used to cross-check the library.

Everything here takes the slowest, most literal route on purpose: bounds
are found by scanning the order relation, congruences by filtering every
set partition through the two-pair definition, and monotonicity and
compatibility by comparing all input pairs.  None of it shares code with
the production algorithms it checks.
"""

import itertools
from functools import lru_cache

from latcong.congruences import Congruence


def lower_bounds(L, a, b):
    return [c for c in range(L.size) if L.leq(c, a) and L.leq(c, b)]


def upper_bounds(L, a, b):
    return [c for c in range(L.size) if L.leq(a, c) and L.leq(b, c)]


def greatest_lower_bound(L, a, b):
    """Unique greatest element among the common lower bounds, or None."""
    candidates = lower_bounds(L, a, b)
    greatest = [g for g in candidates if all(L.leq(c, g) for c in candidates)]
    return greatest[0] if len(greatest) == 1 else None


def least_upper_bound(L, a, b):
    candidates = upper_bounds(L, a, b)
    least = [g for g in candidates if all(L.leq(g, c) for c in candidates)]
    return least[0] if len(least) == 1 else None


def partitions(n):
    """Every partition of range(n), grown element by element."""
    parts = [[[0]]] if n else [[]]
    for e in range(1, n):
        grown = []
        for p in parts:
            for i in range(len(p)):
                grown.append([list(b) for b in p[:i]] + [p[i] + [e]]
                             + [list(b) for b in p[i + 1:]])
            grown.append([list(b) for b in p] + [[e]])
        parts = grown
    return parts


def is_congruence_two_pair(L, blocks):
    """The literal definition: related pairs combine to related pairs."""
    cls = {}
    for tag, block in enumerate(blocks):
        for e in block:
            cls[e] = tag
    related = [(a, b) for a in range(L.size) for b in range(L.size)
               if cls[a] == cls[b]]
    for a, b in related:
        for c, d in related:
            if cls[L.join(a, c)] != cls[L.join(b, d)]:
                return False
            if cls[L.meet(a, c)] != cls[L.meet(b, d)]:
                return False
    return True


@lru_cache(maxsize=None)
def all_congruences_two_pair(L):
    """Partition filtering through the two-pair definition."""
    out = []
    for blocks in partitions(L.size):
        if is_congruence_two_pair(L, blocks):
            out.append(Congruence.from_blocks(blocks, L.size))
    return sorted(out, key=lambda c: c.class_of)


def least_congruence_containing(L, a, b):
    """Intersection of every congruence relating the pair."""
    keepers = [c for c in all_congruences_two_pair(L) if c.relates(a, b)]
    assert keepers, "the total partition always qualifies"
    class_of = [tuple(c.class_of[x] for c in keepers) for x in range(L.size)]
    return Congruence.from_class_of(
        [sorted(set(class_of)).index(key) for key in class_of])


def is_monotone_all_pairs(L, table):
    """Every pointwise-ordered input pair, not just cover steps."""
    grid = list(itertools.product(range(L.size), repeat=table.arity))
    for x in grid:
        for y in grid:
            if all(L.leq(p, q) for p, q in zip(x, y)):
                if not L.leq(table.value_at(x), table.value_at(y)):
                    return False
    return True


def is_compatible_all_tuples(L, table):
    """Full-tuple compatibility against the brute-force congruence set."""
    grid = list(itertools.product(range(L.size), repeat=table.arity))
    for cong in all_congruences_two_pair(L):
        for x in grid:
            for y in grid:
                if all(cong.relates(p, q) for p, q in zip(x, y)):
                    if not cong.relates(table.value_at(x), table.value_at(y)):
                        return False
    return True


def sugeno_by_subsets(L, capacity_values, u):
    """Subset expansion written with explicit index combinations."""
    n = len(u)
    best = L.bottom
    for k in range(n + 1):
        for subset in itertools.combinations(range(n), k):
            mask = 0
            for i in subset:
                mask |= 1 << i
            term = capacity_values[mask]
            for i in subset:
                term = L.meet(term, u[i])
            best = L.join(best, term)
    return best
