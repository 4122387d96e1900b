"""Finite bounded lattices with fully materialized order and operation tables.

A lattice is built once from its cover relation (Hasse diagram), validated
eagerly, and never mutated afterwards: the order must be a partial order,
every pair of elements must have a unique greatest lower bound and least
upper bound, and a global bottom and top must exist.  Elements are the
integers ``0 .. size-1``; labels are display-only decoration.
"""

from __future__ import annotations

import itertools
import re
from functools import cached_property

import numpy as np

from .errors import CyclicCovers, NotALattice, NotBounded, UnknownName

Element = int


class Lattice:
    """Immutable finite bounded lattice.

    Attributes:
        size: number of elements.
        leq_table: read-only boolean matrix, ``leq_table[a, b]`` iff a <= b.
        meet_table / join_table: read-only integer matrices of glb / lub.
        bottom / top: the global minimum / maximum element.
        covers: tuple of pairs ``(a, b)`` with b covering a.
        name: optional display name.
        labels: optional dict element -> display label.
    """

    def __init__(self, leq, *, name=None, labels=None):
        leq = np.array(leq, dtype=bool)
        n = leq.shape[0]
        if leq.shape != (n, n):
            raise NotALattice(f"order table must be square, got {leq.shape}")
        if n == 0:
            raise NotBounded("a bounded lattice needs at least one element")
        _check_partial_order(leq)
        self.size = n
        self.leq_table = leq
        self.bottom = _unique_bottom(leq)
        self.top = _unique_top(leq)
        self.meet_table, self.join_table = _meet_join_tables(leq)
        self.covers = _cover_pairs(leq)
        self.name = name
        self.labels = dict(labels) if labels else {}
        for arr in (self.leq_table, self.meet_table, self.join_table):
            arr.flags.writeable = False

    # --- basic queries ---------------------------------------------------

    def leq(self, a: Element, b: Element) -> bool:
        return bool(self.leq_table[a, b])

    def meet(self, a: Element, b: Element) -> Element:
        return int(self.meet_table[a, b])

    def join(self, a: Element, b: Element) -> Element:
        return int(self.join_table[a, b])

    def meet_all(self, elems) -> Element:
        """Meet of an iterable; the empty meet is top."""
        out = self.top
        for e in elems:
            out = int(self.meet_table[out, e])
        return out

    def join_all(self, elems) -> Element:
        """Join of an iterable; the empty join is bottom."""
        out = self.bottom
        for e in elems:
            out = int(self.join_table[out, e])
        return out

    def med(self, x: Element, y: Element, z: Element) -> Element:
        """Median term (x v y) ^ (y v z) ^ (z v x)."""
        j = self.join_table
        m = self.meet_table
        return int(m[m[j[x, y], j[y, z]], j[z, x]])

    def upper_covers(self, a: Element) -> tuple[Element, ...]:
        return self._upper_cover_lists[a]

    @cached_property
    def _upper_cover_lists(self):
        out = [[] for _ in range(self.size)]
        for a, b in self.covers:
            out[a].append(b)
        return tuple(tuple(lst) for lst in out)

    @cached_property
    def is_distributive(self) -> bool:
        """Whether a ^ (b v c) = (a ^ b) v (a ^ c) for all triples."""
        meet, join = self.meet_table, self.join_table
        for a in range(self.size):
            lhs = meet[a, join]
            rhs = join[np.ix_(meet[a], meet[a])]
            if not np.array_equal(lhs, rhs):
                return False
        return True

    @cached_property
    def is_chain(self) -> bool:
        return bool((self.leq_table | self.leq_table.T).all())

    def label_of(self, a: Element) -> str:
        return self.labels.get(a, str(a))

    # --- dunder ----------------------------------------------------------

    def __eq__(self, other):
        """Structural equality: same carrier size and same order."""
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.size == other.size and np.array_equal(
            self.leq_table, other.leq_table
        )

    def __hash__(self):
        return hash((self.size, self.leq_table.tobytes()))

    def __repr__(self):
        tag = self.name or f"{self.size} elements"
        return f"Lattice({tag})"


# --- construction ---------------------------------------------------------


def build_from_covers(size: int, covers, *, name=None, labels=None) -> Lattice:
    """Build and validate a lattice from cover pairs ``(i, j)``, i covered by j.

    Raises CyclicCovers, NotBounded, or NotALattice when the input does not
    describe a finite bounded lattice.
    """
    if size <= 0:
        raise NotBounded("a bounded lattice needs at least one element")
    edges = []
    for pair in covers:
        i, j = pair
        if not (0 <= i < size and 0 <= j < size):
            raise NotALattice(f"cover ({i}, {j}) out of range for size {size}")
        if i == j:
            raise CyclicCovers(f"self-cover at element {i}")
        edges.append((int(i), int(j)))
    _check_acyclic(size, edges)
    leq = np.eye(size, dtype=bool)
    for i, j in edges:
        leq[i, j] = True
    # Warshall closure over the cover DAG.
    for k in range(size):
        leq |= leq[:, k:k + 1] & leq[k:k + 1, :]
    return Lattice(leq, name=name, labels=labels)


def _check_acyclic(size, edges):
    succ = [[] for _ in range(size)]
    indeg = [0] * size
    for i, j in edges:
        succ[i].append(j)
        indeg[j] += 1
    stack = [v for v in range(size) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    if seen != size:
        raise CyclicCovers("cover relation contains a cycle")


def _check_partial_order(leq):
    n = len(leq)
    if not leq[np.diag_indices(n)].all():
        raise NotALattice("order is not reflexive")
    if (leq & leq.T).sum() != n:
        raise NotALattice("order is not antisymmetric")
    closure = leq @ leq
    if (closure & ~leq).any():
        raise NotALattice("order is not transitive")


def _unique_bottom(leq):
    rows = np.flatnonzero(leq.all(axis=1))
    if len(rows) != 1:
        raise NotBounded("no unique bottom element")
    return int(rows[0])


def _unique_top(leq):
    cols = np.flatnonzero(leq.all(axis=0))
    if len(cols) != 1:
        raise NotBounded("no unique top element")
    return int(cols[0])


def _meet_join_tables(leq):
    n = len(leq)
    up_of = {leq[i].tobytes(): i for i in range(n)}
    down_of = {leq[:, i].tobytes(): i for i in range(n)}
    meet = np.zeros((n, n), dtype=np.int64)
    join = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i, n):
            above = (leq[i] & leq[j]).tobytes()
            k = up_of.get(above)
            if k is None:
                raise NotALattice(f"elements {i} and {j} have no unique join")
            join[i, j] = join[j, i] = k
            below = (leq[:, i] & leq[:, j]).tobytes()
            k = down_of.get(below)
            if k is None:
                raise NotALattice(f"elements {i} and {j} have no unique meet")
            meet[i, j] = meet[j, i] = k
    return meet, join


def _cover_pairs(leq):
    lt = leq.copy()
    np.fill_diagonal(lt, False)
    direct = lt & ~(lt @ lt)
    return tuple((int(a), int(b)) for a, b in zip(*np.nonzero(direct)))


# --- derived checks -------------------------------------------------------


def med_dual_check(L: Lattice) -> bool:
    """Whether the join-of-meets median agrees with ``L.med`` on all triples."""
    meet, join = L.meet_table, L.join_table
    for x in range(L.size):
        primal = meet[meet[join[x][:, None], join], join[:, x][None, :]]
        dual = join[join[meet[x][:, None], meet], meet[:, x][None, :]]
        if not np.array_equal(primal, dual):
            return False
    return True


def is_isomorphic(a: Lattice, b: Lattice) -> bool:
    """Brute-force order-isomorphism test; intended for small test lattices."""
    if a.size != b.size:
        return False
    n = a.size
    # Degree profiles prune most permutations before the full scan.
    profile_a = sorted((int(a.leq_table[i].sum()), int(a.leq_table[:, i].sum()))
                       for i in range(n))
    profile_b = sorted((int(b.leq_table[i].sum()), int(b.leq_table[:, i].sum()))
                       for i in range(n))
    if profile_a != profile_b:
        return False
    for perm in itertools.permutations(range(n)):
        if all(a.leq_table[i, j] == b.leq_table[perm[i], perm[j]]
               for i in range(n) for j in range(n)):
            return True
    return False


# --- catalogue ------------------------------------------------------------

_CHAIN_RE = re.compile(r"^chain\((\d+)\)$")
_BOOLEAN_RE = re.compile(r"^boolean\((\d+)\)$")


def catalogue(name: str) -> Lattice:
    """Named test lattices: chain(k), boolean(k), M3, N5."""
    m = _CHAIN_RE.match(name)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise UnknownName(f"chain size must be positive: {name}")
        return build_from_covers(k, [(i, i + 1) for i in range(k - 1)], name=name)
    m = _BOOLEAN_RE.match(name)
    if m:
        k = int(m.group(1))
        if k > 12:
            raise UnknownName(f"boolean({k}) is too large for table storage")
        size = 1 << k
        covers = [(s, s | (1 << b)) for s in range(size) for b in range(k)
                  if not s & (1 << b)]
        return build_from_covers(size, covers, name=name)
    if name == "M3":
        return build_from_covers(
            5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], name="M3",
            labels={0: "bot", 1: "a", 2: "b", 3: "c", 4: "top"})
    if name == "N5":
        return build_from_covers(
            5, [(0, 1), (1, 3), (0, 2), (3, 4), (2, 4)], name="N5",
            labels={0: "bot", 1: "a", 2: "b", 3: "c", 4: "top"})
    raise UnknownName(f"no catalogue lattice named {name!r}")
