import pytest

from latcong import io
from latcong.cli import main
from latcong.lattice import catalogue
from latcong.sugeno import Capacity, sugeno_table


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    root = tmp_path_factory.mktemp("cli")
    C3 = catalogue("chain(3)")
    paths = {}

    def write(key, text):
        p = root / key
        p.write_text(text)
        paths[key] = str(p)

    write("c3.lat", io.serialize_lattice(C3))
    write("c2.lat", io.serialize_lattice(catalogue("chain(2)")))
    write("m3.lat", io.serialize_lattice(catalogue("M3")))
    m = Capacity(C3, (0, 1, 1, 2))
    write("m.cap", io.serialize_capacity(m, "m"))
    write("su.fn", io.serialize_function_table(sugeno_table(C3, m), "su"))
    write("bent.fn", "function bent\nn 1\nf 0 -> 0\nf 1 -> 2\nf 2 -> 2\n")
    write("p.poly", "(join (meet (const 1) (var 0)) (var 1))\n")
    write("broken.cap", "capacity x\nn 2\nm {} 1\nm {1} 1\nm {2} 1\nm {1,2} 2\n")
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info(files, capsys):
    code, out, _ = run(capsys, "info", "--lattice", files["c3.lat"])
    assert code == 0
    assert "elements 3" in out
    assert "distributive true" in out


def test_distributive_verdicts(files, capsys):
    code, out, _ = run(capsys, "distributive", "--lattice", files["m3.lat"])
    assert (code, out.strip()) == (1, "false")
    code, out, _ = run(capsys, "distributive", "--lattice", files["c3.lat"])
    assert (code, out.strip()) == (0, "true")


def test_congruences_listing(files, capsys):
    code, out, _ = run(capsys, "congruences", "--lattice", files["c3.lat"])
    assert code == 0
    assert out.splitlines() == ["{0,1,2}", "{0,1}{2}", "{0}{1,2}", "{0}{1}{2}"]


def test_principal(files, capsys):
    code, out, _ = run(capsys, "principal", "0", "1",
                       "--lattice", files["c3.lat"])
    assert (code, out.strip()) == (0, "{0,1}{2}")
    code, out, _ = run(capsys, "principal", "0", "1",
                       "--lattice", files["m3.lat"])
    assert (code, out.strip()) == (0, "{0,1,2,3,4}")


def test_principal_range_check(files, capsys):
    code, _, err = run(capsys, "principal", "0", "9",
                       "--lattice", files["c3.lat"])
    assert code == 2
    assert "error" in err


def test_sugeno_worked_example(files, capsys):
    code, out, _ = run(capsys, "sugeno", "--lattice", files["c3.lat"],
                       "--capacity", files["m.cap"], "--input", "2", "0")
    assert (code, out.strip()) == (0, "1")


def test_compat_and_median(files, capsys):
    code, out, _ = run(capsys, "compat", "--lattice", files["c3.lat"],
                       "--function", files["su.fn"])
    assert (code, out.strip()) == (0, "true")
    code, out, _ = run(capsys, "compat", "--lattice", files["c3.lat"],
                       "--function", files["bent.fn"], "--mode", "all")
    assert (code, out.strip()) == (1, "false")
    code, out, _ = run(capsys, "median-check", "--lattice", files["c3.lat"],
                       "--function", files["bent.fn"])
    assert (code, out.strip()) == (1, "false")


def test_compat_accepts_polynomial(files, capsys):
    code, out, _ = run(capsys, "compat", "--lattice", files["c3.lat"],
                       "--poly", files["p.poly"])
    assert (code, out.strip()) == (0, "true")


def test_synthesize(files, capsys):
    code, out, _ = run(capsys, "synthesize", "--lattice", files["c3.lat"],
                       "--function", files["su.fn"])
    assert code == 0
    assert out.splitlines() == ["g {} 0", "g {1} 1", "g {2} 1", "g {1,2} 2",
                                "verified true"]
    code, out, _ = run(capsys, "synthesize", "--lattice", files["c3.lat"],
                       "--function", files["bent.fn"])
    assert code == 1
    assert "verified false" in out


def test_capacity_of(files, capsys):
    code, out, _ = run(capsys, "capacity-of", "--lattice", files["c3.lat"],
                       "--function", files["su.fn"])
    assert code == 0
    assert "m {1} 1" in out


def test_sugeno_compare(files, capsys):
    code, out, _ = run(capsys, "sugeno-compare", "--lattice", files["c3.lat"],
                       "--max-arity", "2")
    assert code == 0
    assert "0 disagreements" in out


def test_product_emits_parseable_lattice(files, capsys):
    code, out, _ = run(capsys, "product", files["c2.lat"], files["c3.lat"])
    assert code == 0
    L = io.parse_lattice(out)
    assert L.size == 6
    assert "# factor 0" in out


def test_hsum_emits_parseable_lattice(files, capsys):
    code, out, _ = run(capsys, "hsum", files["c3.lat"], files["c3.lat"])
    assert code == 0
    L = io.parse_lattice(out)
    assert L.size == 4
    assert "# element 1: summand 0" in out


def test_parse_errors_exit_2(files, capsys):
    code, _, err = run(capsys, "sugeno", "--lattice", files["c3.lat"],
                       "--capacity", files["broken.cap"],
                       "--input", "0", "0")
    assert code == 2
    assert "bottom" in err


def test_missing_file_exits_2(files, capsys):
    code, _, err = run(capsys, "info", "--lattice", "no-such-file.lat")
    assert code == 2


def test_verify_suite(files, capsys):
    code, out, _ = run(capsys, "verify", "--suite", "counts")
    assert code == 0
    assert "[PASS] AC03" in out
    assert "1/1 checks passed" in out


def test_verify_output_is_deterministic(files, capsys):
    first = run(capsys, "verify", "--suite", "principal")
    second = run(capsys, "verify", "--suite", "principal")
    assert first == second


def test_verify_json_mode(files, capsys):
    import json
    code, out, _ = run(capsys, "verify", "--suite", "counts", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == payload["passed"] == 1
    assert payload["checks"][0]["id"] == "AC03"


def test_sugeno_compare_json_mode(files, capsys):
    import json
    code, out, _ = run(capsys, "sugeno-compare", "--lattice", files["c3.lat"],
                       "--max-arity", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert [r["arity"] for r in payload] == [1, 2]
    assert all(r["disagreements"] == [] for r in payload)


def test_verify_respects_extent_knobs(files, capsys):
    code, out, _ = run(capsys, "verify", "--suite", "principal",
                       "--max-size", "4")
    assert code == 0
    assert "4 lattices" in out  # chains 2..4 plus boolean(2)
