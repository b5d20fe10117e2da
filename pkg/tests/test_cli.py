import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from kfl import cli, circulant


def run(*argv):
    buf = io.StringIO()
    code = cli.run(list(argv), stdout=buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, out = run(*argv)
    return code, json.loads(out)


def test_seq_example():
    code, out = run_json("seq", "--k", "1", "--a", "1", "--b", "1", "--kind", "kfl", "--n", "5")
    assert code == 0
    assert out == ["2", "2", "4", "6", "10", "16"]


def test_negative_rational_flags():
    code, out = run_json("seq", "--k", "-1/2", "--kind", "kfib", "--n", "3")
    assert (code, out) == (0, ["0", "1", "-1/2", "5/4"])


def test_pair_example():
    code, out = run_json("pair", "--type", "1", "--n", "2", "--k", "2")
    assert code == 0
    assert (out["a"], out["b"], out["discriminant"]) == ("-27/16", "27/32", "0")


def test_zsig_fibonacci():
    code, out = run_json("zsig", "--seq", "fib", "--bound", "120")
    assert code == 0 and out["z_set"] == [1, 2, 6, 12]
    assert out["per_index"][12]["term"] == "144"


def test_zsig_conventions():
    _, plain = run_json("zsig", "--seq", "kfib:2", "--bound", "12")
    _, carm = run_json("zsig", "--seq", "kfib:2", "--bound", "12", "--convention", "carmichael")
    assert plain["z_set"] == [1] and carm["z_set"] == [1, 2]


def test_zsig_file(tmp_path):
    path = tmp_path / "ones.txt"
    path.write_text("1\n" * 6)
    code, out = run_json("zsig", "--seq", f"file:{path}", "--bound", "5")
    assert code == 0 and out["z_set"] == [0, 1, 2, 3, 4, 5]


def test_identity_and_poly():
    code, out = run_json("identity", "--id", "catalan", "--k", "1", "--a", "1", "--b", "1", "--n", "3", "--r", "2")
    assert code == 0 and out == {"id": "catalan", "lhs": "-4", "rhs": "-4", "residual": "0", "holds": True}
    _, out = run_json("identity", "--id", "geometric", "--k", "3/2", "--a", "5", "--b", "2")
    assert out["holds"] is True
    _, out = run_json("poly", "--family", "Q", "--n", "3")
    assert out["coefficients"] == ["2", "3", "4", "1", "1"]


def test_exset():
    code, out = run_json("exset", "--kind", "C", "--n", "2")
    assert code == 0 and out["rational_roots"] == ["-1", "0"] and out["cardinality"] == 2
    _, out = run_json("exset", "--kind", "A", "--n", "3", "--precision", "1/1024")
    lo, hi = out["irrational_roots"][0]
    assert Fraction(hi) - Fraction(lo) <= Fraction(1, 1024)


def test_matrix():
    code, out = run_json("matrix", "--kind", "circ", "--k", "1", "--a", "1", "--b", "1", "--n", "3")
    assert code == 0
    assert (out["det"], out["rank"], out["verdict"]) == ("144", 3, "invertible")
    code, text = run("matrix", "--kind", "skew", "--k", "1", "--a", "1", "--b", "1", "--n", "3", "--dump")
    assert text == "2,4,6\n-6,2,4\n-4,-6,2\n"
    _, out = run_json("matrix", "--kind", "circ", "--k", "1", "--a", "1", "--b", "1", "--n", "3", "--what", "spectral")
    assert out["spectral_invertible"] is True


def test_variety():
    code, out = run_json("variety", "--kind", "skew", "--n", "3", "--k", "2")
    assert code == 0 and out["points"][0]["rank"] == 2
    code, out = run_json("variety", "--kind", "circ", "--n", "4", "--grid", "-3:3:25", "--seed", "5")
    assert code == 0 and out["histogram"] == {"3": 50} and out["flagged"] == []
    code, text = run("variety", "--kind", "circ", "--n", "3", "--grid", "1:2:4", "--format", "csv")
    assert text == "rank,count\n2,4\n"


def test_construct():
    code, out = run_json("construct", "--k", "1", "--N", "4")
    assert code == 0
    assert out["construction"] == {"k": 1, "N": 4, "r": 4, "a": "7/2", "b": "-3/2", "sigma0_r": 3}
    assert out["passed"] and out["missed"] == [0] and out["notes"]


@pytest.mark.parametrize(
    "argv,code",
    [
        (["pair", "--type", "2", "--n", "2", "--k", "1"], "EXCEPTIONAL_K"),
        (["seq", "--k", "1/0", "--n", "3"], "DIVISION_BY_ZERO"),
        (["seq", "--k", "0.5", "--n", "3"], "BAD_ARGUMENT"),
        (["seq", "--k", "1"], "BAD_ARGUMENT"),
        (["seq", "--k", "1", "--n", "-1"], "BAD_INDEX"),
        (["nosuch"], "BAD_ARGUMENT"),
        (["identity", "--id", "sum-all", "--k", "0", "--n", "3"], "ZERO_K"),
        (["identity", "--id", "livio", "--k", "1", "--p", "0", "--n", "3"], "BAD_P"),
        (["identity", "--id", "catalan", "--k", "1", "--n", "3"], "BAD_ARGUMENT"),
        (["matrix", "--kind", "circ", "--k", "0", "--n", "3", "--what", "verdict"], "ZERO_K"),
        (["variety", "--kind", "skew", "--n", "4", "--k", "2"], "BAD_SHAPE"),
        (["variety", "--kind", "skew", "--n", "3"], "BAD_ARGUMENT"),
        (["exset", "--kind", "A", "--n", "0"], "BAD_INDEX"),
        (["exset", "--kind", "A", "--n", "2", "--precision", "0"], "BAD_ARGUMENT"),
        (["construct", "--k", "1", "--N", "4", "--bound", "7"], "BAD_INDEX"),
        (["zsig", "--seq", "tribonacci", "--bound", "5"], "BAD_ARGUMENT"),
    ],
)
def test_domain_errors_exit_2(argv, code):
    status, out = run_json(*argv)
    assert status == 2
    assert out["error_code"] == code and out["message"]


def test_non_integer_file_exits_2(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1\n3/2\n")
    status, out = run_json("zsig", "--seq", f"file:{path}", "--bound", "1")
    assert (status, out["error_code"]) == (2, "NON_INTEGER_TERM")


def test_internal_inconsistency_exits_1(monkeypatch):
    monkeypatch.setattr(circulant, "det_exact", lambda m: 0)
    status, out = run_json("matrix", "--kind", "circ", "--k", "1", "--a", "1", "--b", "1", "--n", "3")
    assert (status, out["error_code"]) == (1, "INTERNAL_INCONSISTENCY")


def _subprocess(*argv):
    return subprocess.run(
        [sys.executable, "-m", "kfl", *argv], capture_output=True, check=False
    )


def test_module_entry_point_and_determinism():
    argv = ["variety", "--kind", "circ", "--n", "5", "--grid", "-2:2:10", "--seed", "99"]
    a, b = _subprocess(*argv), _subprocess(*argv)
    assert a.returncode == 0
    assert a.stdout == b.stdout
    status = _subprocess("pair", "--type", "2", "--n", "2", "--k", "1")
    assert status.returncode == 2
    assert json.loads(status.stdout)["error_code"] == "EXCEPTIONAL_K"
