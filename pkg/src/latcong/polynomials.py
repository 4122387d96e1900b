"""Weighted lattice polynomials and their boolean-vertex normal form.

A weighted polynomial is a finite term built from projections, constants,
meet, and join.  Every monotone term is pinned down by its values at the
boolean vertices (inputs whose coordinates are all bottom or top), which
gives the normal form: a coefficient per subset mask, evaluated as a join
of coefficient-guarded meets.  The empty meet is top.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArityMismatch, ForeignElement
from .lattice import Lattice
from .tables import FunctionTable, all_inputs, vertex_input


@dataclass(frozen=True)
class Projection:
    index: int


@dataclass(frozen=True)
class Constant:
    value: int


@dataclass(frozen=True)
class Meet:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Join:
    left: "Node"
    right: "Node"


Node = Projection | Constant | Meet | Join


def _max_projection(node) -> int:
    if isinstance(node, Projection):
        return node.index
    if isinstance(node, Constant):
        return -1
    return max(_max_projection(node.left), _max_projection(node.right))


@dataclass(frozen=True)
class WeightedPolynomial:
    """Expression tree plus its declared arity."""

    arity: int
    root: Node

    def __post_init__(self):
        top_index = _max_projection(self.root)
        if top_index >= self.arity:
            raise ArityMismatch(
                f"projection {top_index} exceeds declared arity {self.arity}")


def evaluate(L: Lattice, p: WeightedPolynomial, x) -> int:
    """Evaluate the term at an input vector via the lattice tables."""
    x = tuple(x)
    if len(x) != p.arity:
        raise ArityMismatch(f"expected {p.arity} inputs, got {len(x)}")
    for v in x:
        if not 0 <= v < L.size:
            raise ForeignElement(f"input {v} outside lattice of size {L.size}")
    return _eval_node(L, p.root, x)


def _eval_node(L, node, x):
    if isinstance(node, Projection):
        return x[node.index]
    if isinstance(node, Constant):
        if not 0 <= node.value < L.size:
            raise ForeignElement(
                f"constant {node.value} outside lattice of size {L.size}")
        return node.value
    if isinstance(node, Meet):
        return L.meet(_eval_node(L, node.left, x), _eval_node(L, node.right, x))
    return L.join(_eval_node(L, node.left, x), _eval_node(L, node.right, x))


def to_table(L: Lattice, p: WeightedPolynomial) -> FunctionTable:
    """Lower a polynomial to its explicit table."""
    return FunctionTable.from_callable(L.size, p.arity, lambda x: evaluate(L, p, x))


@dataclass(frozen=True)
class NormalForm:
    """One coefficient per subset mask (bit i = coordinate i)."""

    arity: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) != 1 << self.arity:
            raise ArityMismatch(
                f"expected {1 << self.arity} coefficients for arity {self.arity}, "
                f"got {len(self.coefficients)}")

    def coefficient(self, mask: int) -> int:
        return self.coefficients[mask]

    def is_monotone_in_masks(self, L: Lattice) -> bool:
        """Coefficient table nondecreasing along subset inclusion."""
        g = self.coefficients
        for mask in range(1 << self.arity):
            for i in range(self.arity):
                if mask >> i & 1 and not L.leq(g[mask & ~(1 << i)], g[mask]):
                    return False
        return True


def to_normal_form(L: Lattice, p: WeightedPolynomial) -> NormalForm:
    """Read the coefficients off the boolean vertices."""
    coeffs = [evaluate(L, p, vertex_input(L, p.arity, mask))
              for mask in range(1 << p.arity)]
    return NormalForm(p.arity, tuple(coeffs))


def eval_normal_form(L: Lattice, nf: NormalForm, x) -> int:
    """Join over masks of coefficient ^ (meet of the selected coordinates).

    The empty meet is top, so the empty mask contributes its coefficient
    unguarded.
    """
    x = tuple(x)
    if len(x) != nf.arity:
        raise ArityMismatch(f"expected {nf.arity} inputs, got {len(x)}")
    meet, join = L.meet_table, L.join_table
    acc = L.bottom
    for mask in range(1 << nf.arity):
        term = nf.coefficients[mask]
        for i in range(nf.arity):
            if mask >> i & 1:
                term = meet[term, x[i]]
        acc = join[acc, term]
    return int(acc)


def normal_form_to_polynomial(nf: NormalForm) -> WeightedPolynomial:
    """Syntactic join-of-meets realization of a coefficient table."""
    terms = []
    for mask in range(1 << nf.arity):
        term: Node = Constant(nf.coefficients[mask])
        for i in range(nf.arity):
            if mask >> i & 1:
                term = Meet(term, Projection(i))
        terms.append(term)
    root = terms[0]
    for term in terms[1:]:
        root = Join(root, term)
    return WeightedPolynomial(nf.arity, root)


def is_monotone(L: Lattice, f: FunctionTable) -> bool:
    """Nondecreasing in each coordinate, checked over cover-adjacent inputs."""
    if f.size != L.size:
        raise ForeignElement(
            f"table over carrier {f.size} checked on lattice of size {L.size}")
    n = f.arity
    strides = [L.size ** (n - 1 - k) for k in range(n)]
    leq = L.leq_table
    vals = f.values
    for idx, x in enumerate(all_inputs(L.size, n)):
        fx = vals[idx]
        for k in range(n):
            for upper in L.upper_covers(x[k]):
                if not leq[fx, vals[idx + (upper - x[k]) * strides[k]]]:
                    return False
    return True


def enumerate_monotone_normal_forms(L: Lattice, arity: int):
    """All coefficient tables nondecreasing along subset inclusion."""
    total = 1 << arity
    coeffs = [0] * total
    leq = L.leq_table

    def rec(mask):
        if mask == total:
            yield NormalForm(arity, tuple(coeffs))
            return
        for v in range(L.size):
            ok = all(leq[coeffs[mask & ~(1 << i)], v]
                     for i in range(arity) if mask >> i & 1)
            if ok:
                coeffs[mask] = v
                yield from rec(mask + 1)

    # Masks must be filled in an order compatible with inclusion; the
    # numeric order 0,1,2,... is one such order (submasks are smaller).
    yield from rec(0)


def random_polynomial(rng, arity: int, lattice_size: int,
                      max_depth: int = 4) -> WeightedPolynomial:
    """Sample a random term; leaves more likely as depth runs out."""

    def node(depth):
        if depth <= 0:
            kind = rng.choice(("var", "const"))
        else:
            kind = rng.choice(("var", "const", "meet", "meet", "join", "join"))
        if kind == "var":
            return Projection(rng.randrange(arity))
        if kind == "const":
            return Constant(rng.randrange(lattice_size))
        left = node(depth - 1)
        right = node(depth - 1)
        return Meet(left, right) if kind == "meet" else Join(left, right)

    return WeightedPolynomial(arity, node(max_depth))
