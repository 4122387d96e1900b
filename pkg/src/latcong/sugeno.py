"""Lattice-valued capacities and the discrete Sugeno integral.

A capacity assigns a lattice value to every subset of the n criteria,
monotonically, with the empty set at bottom and the full set at top.  The
integral comes in three formulations: the subset expansion (join over
subsets of capacity ^ meet of the selected inputs), the level-set form
(join over thresholds t of t ^ capacity of the inputs above t), and the
pointwise form (join over criteria of input ^ capacity of the inputs at
least as large).  On chains all three agree; on general lattices only the
subset expansion is taken as the definition and the other two are compared
against it empirically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ArityMismatch, ForeignElement, NotAChain, NotAggregation, \
    ValidationError
from .lattice import Lattice
from .polynomials import is_monotone
from .tables import FunctionTable, all_inputs, vertex_input


class Capacity:
    """Monotone set function on subsets of the n criteria, with boundaries.

    ``values[mask]`` is the capacity of the subset whose 1-based criteria
    are the set bits of ``mask`` (bit i-1 for criterion i).  Validation is
    eager; downstream code assumes a valid capacity.
    """

    __slots__ = ("lattice", "n", "values")

    def __init__(self, lattice: Lattice, values):
        values = tuple(int(v) for v in values)
        n = len(values).bit_length() - 1
        if len(values) != 1 << n or not values:
            raise ValidationError(
                f"capacity needs 2^n entries, got {len(values)}")
        for v in values:
            if not 0 <= v < lattice.size:
                raise ForeignElement(
                    f"capacity value {v} outside lattice of size {lattice.size}")
        if values[0] != lattice.bottom:
            raise ValidationError(
                f"capacity of the empty set must be bottom, got {values[0]}")
        if values[-1] != lattice.top:
            raise ValidationError(
                f"capacity of the full set must be top, got {values[-1]}")
        leq = lattice.leq_table
        for mask in range(1 << n):
            for i in range(n):
                if mask >> i & 1 and not leq[values[mask & ~(1 << i)], values[mask]]:
                    raise ValidationError(
                        f"capacity not monotone between masks "
                        f"{mask & ~(1 << i):b} and {mask:b}")
        self.lattice = lattice
        self.n = n
        self.values = values

    def value(self, mask: int) -> int:
        return self.values[mask]

    def __eq__(self, other):
        if not isinstance(other, Capacity):
            return NotImplemented
        return (self.n, self.values) == (other.n, other.values) \
            and self.lattice == other.lattice

    def __hash__(self):
        return hash((self.n, self.values))

    def __repr__(self):
        return f"Capacity(n={self.n}, values={self.values})"


def enumerate_capacities(L: Lattice, n: int):
    """Every capacity on n criteria over L, in deterministic order."""
    total = 1 << n
    values = [L.bottom] * total
    values[total - 1] = L.top
    leq = L.leq_table

    def rec(mask):
        if mask == total - 1:
            yield Capacity(L, tuple(values))
            return
        for v in range(L.size):
            ok = all(leq[values[mask & ~(1 << i)], v]
                     for i in range(n) if mask >> i & 1)
            if ok:
                values[mask] = v
                yield from rec(mask + 1)
        values[mask] = L.bottom

    if n == 0:
        # Only the empty-set entry exists and it must be both bottom and top.
        if L.size == 1:
            yield Capacity(L, (L.bottom,))
        return
    yield from rec(1)


def _check_input(L, m, u):
    u = tuple(u)
    if len(u) != m.n:
        raise ArityMismatch(f"expected {m.n} inputs, got {len(u)}")
    for v in u:
        if not 0 <= v < L.size:
            raise ForeignElement(f"input {v} outside lattice of size {L.size}")
    return u


def sugeno_eval(L: Lattice, m: Capacity, u) -> int:
    """Subset expansion: join over subsets I of m(I) ^ meet of the u_i in I."""
    u = _check_input(L, m, u)
    meet, join = L.meet_table, L.join_table
    acc = L.bottom
    for mask in range(1 << m.n):
        term = m.values[mask]
        for i in range(m.n):
            if mask >> i & 1:
                term = meet[term, u[i]]
        acc = join[acc, term]
    return int(acc)


def sugeno_eval_levels(L: Lattice, m: Capacity, u) -> int:
    """Level-set form with the threshold ranging over all lattice elements."""
    u = _check_input(L, m, u)
    meet, join, leq = L.meet_table, L.join_table, L.leq_table
    acc = L.bottom
    for t in range(L.size):
        mask = 0
        for i in range(m.n):
            if leq[t, u[i]]:
                mask |= 1 << i
        acc = join[acc, meet[t, m.values[mask]]]
    return int(acc)


def sugeno_eval_pointwise(L: Lattice, m: Capacity, u) -> int:
    """Pointwise form: join over i of u_i ^ m({j : u_j >= u_i})."""
    u = _check_input(L, m, u)
    meet, join, leq = L.meet_table, L.join_table, L.leq_table
    acc = L.bottom
    for i in range(m.n):
        mask = 0
        for j in range(m.n):
            if leq[u[i], u[j]]:
                mask |= 1 << j
        acc = join[acc, meet[u[i], m.values[mask]]]
    return int(acc)


def sugeno_table(L: Lattice, m: Capacity) -> FunctionTable:
    """Lower the integral to an explicit function table."""
    return FunctionTable.from_callable(L.size, m.n, lambda u: sugeno_eval(L, m, u))


def capacity_from_function(L: Lattice, A: FunctionTable) -> Capacity:
    """Extract the capacity of an aggregation table: m(I) = A at the vertex of I.

    Raises NotAggregation unless A is monotone with bottom/top boundaries.
    """
    if A.size != L.size:
        raise ForeignElement(
            f"table over carrier {A.size} used with lattice of size {L.size}")
    if A.value_at((L.bottom,) * A.arity) != L.bottom \
            or A.value_at((L.top,) * A.arity) != L.top:
        raise NotAggregation("boundary conditions fail at the constant vertices")
    if not is_monotone(L, A):
        raise NotAggregation("table is not nondecreasing in every coordinate")
    values = [A.value_at(vertex_input(L, A.arity, mask))
              for mask in range(1 << A.arity)]
    return Capacity(L, values)


# --- axiomatic property checks (exhaustive at desk scale) ------------------


def check_idempotent(L: Lattice, m: Capacity) -> bool:
    """Integral of a constant vector is that constant."""
    return all(sugeno_eval(L, m, (c,) * m.n) == c for c in range(L.size))


def check_min_homogeneous(L: Lattice, m: Capacity) -> bool:
    """Integral of c ^ u equals c ^ integral of u, for every c and u."""
    meet = L.meet_table
    for u in all_inputs(L.size, m.n):
        su = sugeno_eval(L, m, u)
        for c in range(L.size):
            lowered = tuple(int(meet[c, v]) for v in u)
            if sugeno_eval(L, m, lowered) != meet[c, su]:
                return False
    return True


def _comonotone(leq, u, v):
    n = len(u)
    for i in range(n):
        for j in range(n):
            if leq[u[i], u[j]] and u[i] != u[j] \
                    and leq[v[j], v[i]] and v[i] != v[j]:
                return False
    return True


def check_comonotone_maxitive(L: Lattice, m: Capacity) -> bool:
    """Integral of u v v splits as a join, for comonotone u, v (chains only)."""
    if not L.is_chain:
        raise NotAChain("comonotonicity is only defined on chain lattices here")
    join, leq = L.join_table, L.leq_table
    grid = list(all_inputs(L.size, m.n))
    cached = {u: sugeno_eval(L, m, u) for u in grid}
    for u in grid:
        for v in grid:
            if not _comonotone(leq, u, v):
                continue
            merged = tuple(int(join[a, b]) for a, b in zip(u, v))
            if cached[merged] != join[cached[u], cached[v]]:
                return False
    return True


def check_horizontally_maxitive(L: Lattice, m: Capacity) -> bool:
    """Integral splits at every level c into the capped and the excess part.

    The excess part zeroes out coordinates at or below c and keeps the rest;
    chains only.
    """
    if not L.is_chain:
        raise NotAChain("horizontal splitting is only checked on chains here")
    meet, join, leq = L.meet_table, L.join_table, L.leq_table
    for u in all_inputs(L.size, m.n):
        su = sugeno_eval(L, m, u)
        for c in range(L.size):
            capped = tuple(int(meet[c, v]) for v in u)
            excess = tuple(L.bottom if leq[v, c] else v for v in u)
            if su != join[sugeno_eval(L, m, capped), sugeno_eval(L, m, excess)]:
                return False
    return True


# --- formulation comparison -------------------------------------------------


@dataclass(frozen=True)
class Disagreement:
    capacity_values: tuple[int, ...]
    input: tuple[int, ...]
    levels: int
    pointwise: int
    subsets: int


@dataclass(frozen=True)
class FormulationReport:
    """Exhaustive comparison of the three integral formulations."""

    lattice_name: str
    arity: int
    capacities: int
    inputs: int
    disagreements: tuple[Disagreement, ...] = field(default_factory=tuple)

    @property
    def agree(self) -> bool:
        return not self.disagreements

    def render(self) -> str:
        lines = [
            f"formulations on {self.lattice_name}, arity {self.arity}: "
            f"{self.capacities} capacities x {self.inputs} inputs, "
            f"{len(self.disagreements)} disagreements"
        ]
        for d in self.disagreements:
            lines.append(
                f"  m={d.capacity_values} u={d.input} "
                f"levels={d.levels} pointwise={d.pointwise} subsets={d.subsets}")
        return "\n".join(lines)


def compare_formulations(L: Lattice, n: int) -> FormulationReport:
    """Evaluate all three formulations over every capacity and input."""
    found = []
    count = 0
    grid = list(all_inputs(L.size, n))
    for m in enumerate_capacities(L, n):
        count += 1
        for u in grid:
            lv = sugeno_eval_levels(L, m, u)
            pw = sugeno_eval_pointwise(L, m, u)
            sub = sugeno_eval(L, m, u)
            if not (lv == pw == sub):
                found.append(Disagreement(m.values, u, lv, pw, sub))
    return FormulationReport(L.name or f"size-{L.size}", n, count,
                             len(grid), tuple(found))
