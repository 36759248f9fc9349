import io

import pytest
from hypothesis import given
import hypothesis.strategies as st

from tdpairs import cli, textio

from strategies import elements, fields
from test_params import arrays

D1 = """# the d=1 example
field: Q
d: 1
type: I
beta: 3
theta: 1, -1
theta_star: 1, -1
zeta: 1, 2
"""

TD = """field: Q
d: 3
type: II
a: 1
b: 2
c: 3
a_star: 0
b_star: 1
c_star: 5
"""


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def d1(tmp_path):
    p = tmp_path / "d1.txt"
    p.write_text(D1)
    return p


def test_validate(d1):
    code, out, _ = run("validate", d1)
    assert code == 0
    assert "beta: 3" in out and "type: I" in out


def test_drinfeld_example(d1):
    assert run("drinfeld", d1) == (0, "[4, -1]\n", "")


def test_d4_check_and_specials(d1):
    assert run("d4-check", d1)[0] == 0
    code, out, _ = run("specials", d1)
    assert code == 0 and out.strip().endswith("PASS")


def test_relative_flag(d1):
    code, out, _ = run("validate", d1, "--relative", "dDs", "--echo")
    assert code == 0
    assert "theta: -1, 1" in out


def test_phi_key(tmp_path):
    p = tmp_path / "a.txt"
    p.write_text(D1.replace("zeta: 1, 2", "phi: 2"))
    assert run("drinfeld", p)[1] == "[4, -1]\n"


@pytest.mark.parametrize("text,msg", [
    (D1 + "zeta: 1, 2\n", "duplicate key"),
    (D1.replace("beta: 3", "beta: 2"), "type I claimed"),
    (D1.replace("d: 1", "d: x"), "expected an integer"),
    (D1.replace("zeta: 1, 2", "zeta: 1, 2\nphi: 2"), "exactly one"),
    (D1.replace("theta: 1, -1", "theta: 1, 1"), "distinct"),
    (D1.replace("zeta: 1, 2", "zeta: 1, 2.5"), "line 8"),
    (D1.replace("field: Q", "field: Fp:4"), "line 2"),
    (D1 + "colour: red\n", "unknown key"),
])
def test_input_errors(tmp_path, text, msg):
    p = tmp_path / "bad.txt"
    p.write_text(text)
    code, out, err = run("drinfeld", p)
    assert code == 2 and out == ""
    assert msg in err


def test_missing_file(tmp_path):
    code, _, err = run("validate", tmp_path / "nope.txt")
    assert code == 2 and "cannot read" in err


def test_bad_usage():
    code, _, err = run("frobnicate")
    assert code == 2 and "invalid choice" in err
    assert run("bracket", "1", "1")[0] == 2


def test_bracket():
    assert run("bracket", 1, 1, 1, "--type", "II") == (0, "4/3\n", "")
    assert run("bracket", 1, 1, 3, "--type", "III-")[1] == "0\n"
    assert run("bracket", 1, 1, 1, "--type", "IV", "--field", "GF4")[1] == "0\n"
    assert run("bracket", 2, 2, 1, "--type", "I")[0] == 2


def test_fail_exit_code(tmp_path, monkeypatch):
    from tdpairs import drinfeld
    p = tmp_path / "a.txt"
    p.write_text(D1)
    monkeypatch.setattr(drinfeld, "check_d4_invariance",
                        lambda pa, normalized=True: (False, ("s", "P", drinfeld.drinfeld_poly(pa),
                                                             drinfeld.drinfeld_poly(pa) + 1)))
    code, out, _ = run("d4-check", p)
    assert code == 1
    assert "relative 's'" in out and "coefficient of x^0" in out


def test_leonard_pipeline(tmp_path):
    td = tmp_path / "td.txt"
    td.write_text(TD)
    code, out, _ = run("leonard", "phi", "--type", "II", "--data", td, "--t", "1/5", "--psi", "11")
    assert code == 0 and out.startswith("phi: ")
    code, out, _ = run("leonard", "roots", "--data", td, "--t", "1/5", "--solve-psi")
    assert code == 0 and out.startswith("roots: ")
    code, out, _ = run("leonard", "realize", "--data", td, "--t", "1/5", "--psi", "11")
    assert code == 0
    m = tmp_path / "m.txt"
    m.write_text(out)
    zeta = run("leonard", "phi", "--data", td, "--t", "1/5")[1].splitlines()[2].split(": ")[1]
    for path in ("word", "E"):
        code, out, _ = run("leonard", "oracle", m, "--path", path, "--relations")
        assert code == 0
        assert out.splitlines() == [f"zeta: {zeta}", "relations: PASS"]
    assert run("leonard", "phi", "--data", td, "--t", "1/5", "--psi", "3")[0] == 2
    assert run("leonard", "phi", "--type", "I", "--data", td, "--t", "1/5")[0] == 2


def test_series_commands():
    assert run("series", "eval", "--kind", "2F1", "--num=-1,2", "--den", "5", "--arg", "1") == (0, "3/5\n", "")
    code, out, _ = run("series", "check", "--identity", "q-saalschutz", "--n", 3, "--params", "A=2,B=1/3,C=5,q=2")
    assert code == 0 and out.endswith("PASS\n")
    code, out, _ = run("series", "check", "--identity", "chu-vandermonde", "--random", 30, "--seed", 4)
    assert (code, out) == (0, "30/30 PASS\n")
    assert run("series", "check", "--identity", "nope")[0] == 2
    assert run("series", "eval", "--kind", "3phi2", "--num", "1/2,3,4", "--den", "5,6", "--arg", "2",
               "--q", "3")[0] == 2


def test_relations_commands():
    assert run("krawtchouk", "--d", 3, "--zeta", "2,3,5")[1].endswith("PASS\n")
    assert run("qgeometric", "--d", 3, "--q", 2, "--zeta", "2,3,5")[1].endswith("PASS\n")
    assert run("krawtchouk", "--d", 3, "--zeta", "2,3")[0] == 2


def test_oracle_is_deterministic():
    a = run("oracle", "--type", "II", "--d", 3, "--count", 3, "--seed", 7)
    b = run("oracle", "--type", "II", "--d", 3, "--count", 3, "--seed", 7)
    assert a == b and a[0] == 0
    assert run("oracle", "--type", "IV", "--field", "GF16", "--count", 2)[0] == 0


@given(arrays)
def test_array_roundtrip(pa):
    assert textio.read_array(textio.format_array(pa)) == pa


@given(fields.flatmap(lambda F: st.tuples(st.just(F), st.lists(elements(F), max_size=5))))
def test_list_roundtrip(args):
    F, xs = args
    text = ", ".join(F.render(x) for x in xs)
    assert textio.parse_list(F, text) == tuple(xs)


def test_field_override(d1):
    code, out, _ = run("validate", d1, "--field", "Fp:7")
    assert code == 0 and "beta: 3" in out
