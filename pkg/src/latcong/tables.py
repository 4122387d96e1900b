"""Explicit n-ary function tables over a finite carrier.

A FunctionTable stores a total map ``{0..size-1}^n -> {0..size-1}`` as a
flat tuple indexed by the mixed-radix encoding of the input (coordinate 0
is the most significant digit, matching ``itertools.product`` order).
Tables are the common currency between the polynomial, Sugeno, and
compatibility modules: everything is lowered to a table before it is
cross-checked.
"""

from __future__ import annotations

import itertools

from .errors import ArityMismatch, ForeignElement


def encode(x, size: int) -> int:
    idx = 0
    for v in x:
        idx = idx * size + v
    return idx


def decode(idx: int, size: int, arity: int) -> tuple[int, ...]:
    out = [0] * arity
    for k in range(arity - 1, -1, -1):
        idx, out[k] = divmod(idx, size)
    return tuple(out)


def all_inputs(size: int, arity: int):
    """Every input tuple, in encoding order."""
    return itertools.product(range(size), repeat=arity)


class FunctionTable:
    """Total function L^n -> L stored as a flat value tuple."""

    __slots__ = ("arity", "size", "values")

    def __init__(self, arity: int, size: int, values):
        values = tuple(int(v) for v in values)
        if len(values) != size ** arity:
            raise ArityMismatch(
                f"expected {size ** arity} entries for arity {arity}, "
                f"got {len(values)}")
        for v in values:
            if not 0 <= v < size:
                raise ForeignElement(f"output {v} outside carrier of size {size}")
        self.arity = arity
        self.size = size
        self.values = values

    @classmethod
    def from_callable(cls, size: int, arity: int, fn) -> "FunctionTable":
        return cls(arity, size, [fn(x) for x in all_inputs(size, arity)])

    def value_at(self, x) -> int:
        x = tuple(x)
        if len(x) != self.arity:
            raise ArityMismatch(f"expected {self.arity} inputs, got {len(x)}")
        for v in x:
            if not 0 <= v < self.size:
                raise ForeignElement(f"input {v} outside carrier of size {self.size}")
        return self.values[encode(x, self.size)]

    def inputs(self):
        return all_inputs(self.size, self.arity)

    def __eq__(self, other):
        if not isinstance(other, FunctionTable):
            return NotImplemented
        return (self.arity, self.size, self.values) == (
            other.arity, other.size, other.values)

    def __hash__(self):
        return hash((self.arity, self.size, self.values))

    def __repr__(self):
        return f"FunctionTable(arity={self.arity}, size={self.size})"


def vertex_input(L, arity: int, mask: int) -> tuple[int, ...]:
    """Boolean vertex for a subset mask: top at set bits, bottom elsewhere."""
    return tuple(L.top if mask >> i & 1 else L.bottom for i in range(arity))
