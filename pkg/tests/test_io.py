import pytest

from latcong import io
from latcong.errors import NotBounded, ParseError, ValidationError
from latcong.lattice import catalogue
from latcong.polynomials import Constant, Join, Meet, Projection, \
    WeightedPolynomial
from latcong.sugeno import Capacity, enumerate_capacities, sugeno_table

C3_TEXT = """\
# three-element chain
lattice c3
elements 3
cover 0 1
cover 1 2
"""

CAP_TEXT = """\
capacity m
n 2
m {} 0
m {1} 1
m {2} 1
m {1,2} 2
"""


def test_parse_lattice_basic():
    L = io.parse_lattice(C3_TEXT)
    assert L.size == 3
    assert L.name == "c3"
    assert L.covers == ((0, 1), (1, 2))


def test_parse_lattice_with_labels():
    text = C3_TEXT + "label 0 zero\nlabel 2 two words\n"
    L = io.parse_lattice(text)
    assert L.labels == {0: "zero", 2: "two words"}


def test_lattice_round_trip_all_catalogue():
    for name in ("chain(5)", "boolean(3)", "M3", "N5"):
        L = catalogue(name)
        text = io.serialize_lattice(L)
        back = io.parse_lattice(text)
        assert back == L
        assert back.name == L.name
        assert back.labels == L.labels
        assert io.serialize_lattice(back) == text


def test_parse_lattice_errors_carry_lines():
    with pytest.raises(ParseError) as err:
        io.parse_lattice("lattice x\nelements 2\ncover 0\n")
    assert err.value.line == 3
    with pytest.raises(ParseError):
        io.parse_lattice("elements 2\n")  # missing name
    with pytest.raises(ParseError):
        io.parse_lattice("lattice x\nwhat 1\n")
    with pytest.raises(NotBounded):
        io.parse_lattice("lattice x\nelements 2\n")  # two minimal elements


def test_parse_capacity(c3):
    name, m = io.parse_capacity(CAP_TEXT, c3)
    assert name == "m"
    assert m.values == (0, 1, 1, 2)


def test_capacity_round_trip(c3):
    for i, m in enumerate(enumerate_capacities(c3, 2)):
        text = io.serialize_capacity(m, f"c{i}")
        name, back = io.parse_capacity(text, c3)
        assert back == m
        assert io.serialize_capacity(back, name) == text


def test_capacity_missing_subset_rejected(c3):
    text = "capacity m\nn 2\nm {} 0\nm {1} 1\nm {1,2} 2\n"
    with pytest.raises(ValidationError) as err:
        io.parse_capacity(text, c3)
    assert "incomplete" in str(err.value)


def test_capacity_bad_boundary_rejected(c3):
    text = CAP_TEXT.replace("m {} 0", "m {} 1")
    with pytest.raises(ValidationError) as err:
        io.parse_capacity(text, c3)
    assert "bottom" in str(err.value)


def test_capacity_subset_syntax_errors(c3):
    with pytest.raises(ParseError):
        io.parse_capacity("capacity m\nn 2\nm 1 0\n", c3)
    with pytest.raises(ParseError):
        io.parse_capacity("capacity m\nn 2\nm {3} 0\n", c3)
    with pytest.raises(ParseError):
        io.parse_capacity("capacity m\nn 2\nm {1,1} 0\n", c3)
    with pytest.raises(ParseError):
        io.parse_capacity("capacity m\nm {} 0\n", c3)  # n line must come first


def test_function_table_round_trip(c3):
    m = Capacity(c3, (0, 1, 0, 2))
    table = sugeno_table(c3, m)
    text = io.serialize_function_table(table, "su")
    name, back = io.parse_function_table(text, c3)
    assert name == "su"
    assert back == table
    assert io.serialize_function_table(back, name) == text


def test_function_table_accepts_any_line_order(c3):
    text = ("function f\nn 1\nf 2 -> 2\nf 0 -> 0\nf 1 -> 1\n")
    _, table = io.parse_function_table(text, c3)
    assert table.values == (0, 1, 2)


def test_function_table_errors(c3):
    with pytest.raises(ValidationError):
        io.parse_function_table("function f\nn 1\nf 0 -> 0\n", c3)
    with pytest.raises(ParseError):
        io.parse_function_table("function f\nn 1\nf 0 0 -> 0\n", c3)
    with pytest.raises(ParseError):
        io.parse_function_table(
            "function f\nn 1\nf 0 -> 0\nf 0 -> 1\nf 2 -> 2\n", c3)


def test_polynomial_parse_and_arity():
    p = io.parse_polynomial("(join (meet (const 1) (var 0)) (var 1))")
    assert p.arity == 2
    assert p.root == Join(Meet(Constant(1), Projection(0)), Projection(1))


def test_polynomial_variadic_operators_fold():
    p = io.parse_polynomial("(meet (var 0) (var 1) (var 2))")
    assert p.root == Meet(Meet(Projection(0), Projection(1)), Projection(2))


def test_polynomial_round_trip():
    p = WeightedPolynomial(3, Join(Meet(Constant(2), Projection(2)),
                                   Projection(0)))
    text = io.serialize_polynomial(p)
    assert io.parse_polynomial(text, arity=3) == p


def test_polynomial_parse_errors():
    for bad in ("", "(frob 1)", "(var x)", "(meet (var 0))",
                "(var 0) trailing", "(join (var 0) (var 1)"):
        with pytest.raises(ParseError):
            io.parse_polynomial(bad)


def test_sniff_kind():
    assert io.sniff_kind(C3_TEXT) == "lattice"
    assert io.sniff_kind(CAP_TEXT) == "capacity"
    assert io.sniff_kind("function f\nn 1\n") == "function"
    assert io.sniff_kind("(var 0)") == "polynomial"
    with pytest.raises(ParseError):
        io.sniff_kind("bogus stuff")


def test_workspace_registry(c3):
    ws = io.Workspace()
    entry = ws.parse(C3_TEXT, source="c3.lat")
    assert entry.kind == "lattice"
    assert ws.get("lattice", "c3").size == 3
    ws.parse(CAP_TEXT, lattice=c3, source="m.cap")
    assert ws.names("capacity") == ["m"]
    with pytest.raises(ValidationError):
        ws.parse(C3_TEXT)  # duplicate name for the kind
    with pytest.raises(ValidationError):
        ws.parse(CAP_TEXT)  # capacity without lattice context
    with pytest.raises(ValidationError):
        ws.get("lattice", "nope")
