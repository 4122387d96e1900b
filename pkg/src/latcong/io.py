"""Text formats for lattices, capacities, function tables, and polynomials.

One object per file.  ``#`` starts a comment, tokens are whitespace
separated, and the leading keyword names the kind (a leading ``(`` means a
polynomial S-expression).  Parsers validate through the owning module, so
a file that parses is a file whose object holds its invariants.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError, ValidationError
from .lattice import Lattice, build_from_covers
from .polynomials import Constant, Join, Meet, Projection, WeightedPolynomial
from .sugeno import Capacity
from .tables import FunctionTable, all_inputs, encode


def _lines(text):
    """(lineno, tokens) for every non-empty line, comments stripped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body.split()))
    return out


def _int(token, lineno, what="index"):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {token!r}", lineno)


def sniff_kind(text: str) -> str:
    for _, tokens in _lines(text):
        head = tokens[0]
        if head.startswith("("):
            return "polynomial"
        if head in ("lattice", "capacity", "function"):
            return head
        raise ParseError(f"unrecognized leading keyword {head!r}")
    raise ParseError("empty input")


# --- lattice ----------------------------------------------------------------


def parse_lattice(text: str) -> Lattice:
    name = None
    size = None
    covers = []
    labels = {}
    for lineno, tokens in _lines(text):
        key = tokens[0]
        if key == "lattice":
            if len(tokens) != 2:
                raise ParseError("expected: lattice <name>", lineno)
            name = tokens[1]
        elif key == "elements":
            if len(tokens) != 2:
                raise ParseError("expected: elements <count>", lineno)
            size = _int(tokens[1], lineno, "element count")
        elif key == "cover":
            if len(tokens) != 3:
                raise ParseError("expected: cover <i> <j>", lineno)
            covers.append((_int(tokens[1], lineno), _int(tokens[2], lineno)))
        elif key == "label":
            if len(tokens) < 3:
                raise ParseError("expected: label <i> <text>", lineno)
            labels[_int(tokens[1], lineno)] = " ".join(tokens[2:])
        else:
            raise ParseError(f"unknown lattice keyword {key!r}", lineno)
    if name is None:
        raise ParseError("missing 'lattice <name>' line")
    if size is None:
        raise ParseError("missing 'elements <count>' line")
    return build_from_covers(size, covers, name=name, labels=labels or None)


def serialize_lattice(L: Lattice) -> str:
    lines = [f"lattice {L.name or 'unnamed'}", f"elements {L.size}"]
    lines.extend(f"cover {a} {b}" for a, b in L.covers)
    lines.extend(f"label {e} {L.labels[e]}" for e in sorted(L.labels))
    return "\n".join(lines) + "\n"


# --- capacity ---------------------------------------------------------------


def _parse_subset(token, n, lineno):
    if not (token.startswith("{") and token.endswith("}")):
        raise ParseError(f"expected a subset like {{1,3}}, got {token!r}", lineno)
    body = token[1:-1]
    mask = 0
    if body:
        for part in body.split(","):
            i = _int(part, lineno, "criterion")
            if not 1 <= i <= n:
                raise ParseError(f"criterion {i} outside 1..{n}", lineno)
            if mask >> (i - 1) & 1:
                raise ParseError(f"criterion {i} repeated in subset", lineno)
            mask |= 1 << (i - 1)
    return mask


def parse_capacity(text: str, L: Lattice) -> tuple[str, Capacity]:
    name = None
    n = None
    values = {}
    for lineno, tokens in _lines(text):
        key = tokens[0]
        if key == "capacity":
            if len(tokens) != 2:
                raise ParseError("expected: capacity <name>", lineno)
            name = tokens[1]
        elif key == "n":
            if len(tokens) != 2:
                raise ParseError("expected: n <arity>", lineno)
            n = _int(tokens[1], lineno, "arity")
        elif key == "m":
            if n is None:
                raise ParseError("the 'n <arity>' line must precede values", lineno)
            if len(tokens) != 3:
                raise ParseError("expected: m {subset} <element>", lineno)
            mask = _parse_subset(tokens[1], n, lineno)
            if mask in values:
                raise ParseError(f"subset {tokens[1]} given twice", lineno)
            values[mask] = _int(tokens[2], lineno, "element")
        else:
            raise ParseError(f"unknown capacity keyword {key!r}", lineno)
    if name is None:
        raise ParseError("missing 'capacity <name>' line")
    if n is None:
        raise ParseError("missing 'n <arity>' line")
    missing = [mask for mask in range(1 << n) if mask not in values]
    if missing:
        raise ValidationError(
            f"incomplete capacity: {len(missing)} of {1 << n} subsets missing")
    return name, Capacity(L, [values[mask] for mask in range(1 << n)])


def _subset_token(mask, n):
    return "{" + ",".join(str(i + 1) for i in range(n) if mask >> i & 1) + "}"


def serialize_capacity(m: Capacity, name: str = "capacity") -> str:
    lines = [f"capacity {name}", f"n {m.n}"]
    lines.extend(f"m {_subset_token(mask, m.n)} {m.values[mask]}"
                 for mask in range(1 << m.n))
    return "\n".join(lines) + "\n"


# --- function table -----------------------------------------------------------


def parse_function_table(text: str, L: Lattice) -> tuple[str, FunctionTable]:
    name = None
    n = None
    values = {}
    for lineno, tokens in _lines(text):
        key = tokens[0]
        if key == "function":
            if len(tokens) != 2:
                raise ParseError("expected: function <name>", lineno)
            name = tokens[1]
        elif key == "n":
            if len(tokens) != 2:
                raise ParseError("expected: n <arity>", lineno)
            n = _int(tokens[1], lineno, "arity")
        elif key == "f":
            if n is None:
                raise ParseError("the 'n <arity>' line must precede values", lineno)
            if len(tokens) != n + 3 or tokens[n + 1] != "->":
                raise ParseError(
                    f"expected: f <x1> .. <x{n}> -> <value>", lineno)
            x = tuple(_int(t, lineno) for t in tokens[1:n + 1])
            for v in x:
                if not 0 <= v < L.size:
                    raise ParseError(f"input {v} outside lattice", lineno)
            idx = encode(x, L.size)
            if idx in values:
                raise ParseError(f"input {x} given twice", lineno)
            values[idx] = _int(tokens[n + 2], lineno, "value")
        else:
            raise ParseError(f"unknown function keyword {key!r}", lineno)
    if name is None:
        raise ParseError("missing 'function <name>' line")
    if n is None:
        raise ParseError("missing 'n <arity>' line")
    if len(values) != L.size ** n:
        raise ValidationError(
            f"incomplete function table: {len(values)} of {L.size ** n} inputs")
    return name, FunctionTable(n, L.size, [values[i] for i in range(L.size ** n)])


def serialize_function_table(f: FunctionTable, name: str = "function") -> str:
    lines = [f"function {name}", f"n {f.arity}"]
    for x, v in zip(all_inputs(f.size, f.arity), f.values):
        lines.append("f " + " ".join(map(str, x)) + f" -> {v}")
    return "\n".join(lines) + "\n"


# --- polynomial ---------------------------------------------------------------


def _sexp_tokens(text):
    stripped = []
    for raw in text.splitlines():
        stripped.append(raw.split("#", 1)[0])
    return "\n".join(stripped).replace("(", " ( ").replace(")", " ) ").split()


def parse_polynomial(text: str, arity: int | None = None) -> WeightedPolynomial:
    """Parse a prefix S-expression like (join (meet (const 1) (var 0)) (var 1)).

    The declared arity defaults to one past the largest projection index.
    """
    tokens = _sexp_tokens(text)
    if not tokens:
        raise ParseError("empty polynomial")
    pos = 0

    def expect(token):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != token:
            got = tokens[pos] if pos < len(tokens) else "end of input"
            raise ParseError(f"expected {token!r}, got {got!r}")
        pos += 1

    def parse_node():
        nonlocal pos
        expect("(")
        if pos >= len(tokens):
            raise ParseError("unterminated S-expression")
        head = tokens[pos]
        pos += 1
        if head in ("var", "const"):
            if pos >= len(tokens):
                raise ParseError(f"missing argument after {head!r}")
            try:
                value = int(tokens[pos])
            except ValueError:
                raise ParseError(f"expected an integer after {head!r}, "
                                 f"got {tokens[pos]!r}")
            pos += 1
            node = Projection(value) if head == "var" else Constant(value)
        elif head in ("meet", "join"):
            args = []
            while pos < len(tokens) and tokens[pos] == "(":
                args.append(parse_node())
            if len(args) < 2:
                raise ParseError(f"{head!r} needs at least two arguments")
            node = args[0]
            ctor = Meet if head == "meet" else Join
            for arg in args[1:]:
                node = ctor(node, arg)
        else:
            raise ParseError(f"unknown polynomial operator {head!r}")
        expect(")")
        return node

    root = parse_node()
    if pos != len(tokens):
        raise ParseError(f"trailing tokens after polynomial: {tokens[pos]!r}")
    if arity is None:
        arity = _needed_arity(root)
    return WeightedPolynomial(arity, root)


def _needed_arity(node):
    if isinstance(node, Projection):
        return node.index + 1
    if isinstance(node, Constant):
        return 0
    return max(_needed_arity(node.left), _needed_arity(node.right))


def serialize_polynomial(p: WeightedPolynomial) -> str:
    def render(node):
        if isinstance(node, Projection):
            return f"(var {node.index})"
        if isinstance(node, Constant):
            return f"(const {node.value})"
        op = "meet" if isinstance(node, Meet) else "join"
        return f"({op} {render(node.left)} {render(node.right)})"

    return render(p.root) + "\n"


# --- workspace ----------------------------------------------------------------


@dataclass(frozen=True)
class Registered:
    name: str
    kind: str
    obj: object
    source: str | None


class Workspace:
    """Named registry of parsed objects, one namespace per kind."""

    KINDS = ("lattice", "capacity", "function", "polynomial")

    def __init__(self):
        self._by_kind = {kind: {} for kind in self.KINDS}

    def register(self, kind: str, name: str, obj, source=None) -> Registered:
        if kind not in self._by_kind:
            raise ValidationError(f"unknown kind {kind!r}")
        if name in self._by_kind[kind]:
            raise ValidationError(f"{kind} name {name!r} already registered")
        entry = Registered(name, kind, obj, source)
        self._by_kind[kind][name] = entry
        return entry

    def get(self, kind: str, name: str):
        try:
            return self._by_kind[kind][name].obj
        except KeyError:
            raise ValidationError(f"no {kind} named {name!r}")

    def names(self, kind: str):
        return sorted(self._by_kind[kind])

    def parse(self, text: str, kind: str | None = None, *,
              lattice: Lattice | None = None, source=None) -> Registered:
        """Parse, validate, and register one object from text."""
        if kind is None:
            kind = sniff_kind(text)
        if kind == "lattice":
            obj = parse_lattice(text)
            name = obj.name
        elif kind == "capacity":
            if lattice is None:
                raise ValidationError("a capacity file needs a lattice context")
            name, obj = parse_capacity(text, lattice)
        elif kind == "function":
            if lattice is None:
                raise ValidationError("a function file needs a lattice context")
            name, obj = parse_function_table(text, lattice)
        elif kind == "polynomial":
            obj = parse_polynomial(text)
            name = source or f"polynomial-{len(self._by_kind['polynomial'])}"
        else:
            raise ValidationError(f"unknown kind {kind!r}")
        return self.register(kind, name, obj, source)
