"""Exit codes and output formats of the cab tool."""

import json

from cab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_mul_circle(capsys):
    code, out, _ = run(capsys, "mul", "--op", "circle", "(a)", "(b)")
    assert code == 0
    assert out == "1 (b(a))\n"


def test_mul_star_coefficients(capsys):
    code, out, _ = run(capsys, "mul", "--op", "star:-1,1", "(a)", "(b)")
    assert code == 0
    assert out.splitlines() == ["-1 (a,b)", "1 (b(a))"]


def test_mul_json(capsys):
    code, out, _ = run(capsys, "mul", "--op", "dot", "(a)", "(b)", "--json")
    assert code == 0
    assert json.loads(out) == [{"coeff": "1", "key": "(a,b)"}]


def test_trees_enum(capsys):
    code, out, _ = run(capsys, "trees", "enum", "--degree", "2", "--colors", "a,b")
    assert code == 0
    lines = out.splitlines()
    assert len([l for l in lines if not l.startswith("#")]) == 8
    code, out, _ = run(capsys, "trees", "enum", "--degree", "3", "--colors", "1", "--json")
    data = json.loads(out)
    assert data["count"] == 5


def test_coproduct_both_forms(capsys):
    code, out, _ = run(capsys, "coproduct", "(a,b,c)")
    assert code == 0
    assert out.splitlines() == ["1 (a) ⊗ (b,c)", "1 (a,b) ⊗ (c)"]
    code, closed_out, _ = run(capsys, "coproduct", "--closed", "(a,b,c)")
    assert code == 0
    assert closed_out == out


def test_prim_basis(capsys):
    code, out, _ = run(capsys, "prim-basis", "--degree", "2", "--colors", "1")
    assert code == 0
    assert "(a(a))" in out and "(a,a)" in out


def test_nop(capsys):
    code, out, _ = run(capsys, "nop", "--n", "2", "(a)", "(b)")
    assert code == 0
    assert out.splitlines() == ["-1 (a,b)", "1 (b(a))"]
    code, _, err = run(capsys, "nop", "--n", "3", "(a)", "(b)")
    assert code == 1
    assert "3" in err


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "(d(c(a,b)))")
    assert code == 0
    assert out.strip() == "a|b.c.d"


def test_word_mul(capsys):
    code, out, _ = run(capsys, "word-mul", "--op", "circ", "a|b", "c|d")
    assert code == 0
    assert out.strip() == "a|b.c|d"


def test_path_commands(capsys):
    code, out, _ = run(capsys, "path", "mul", "--points", "a,b,x", "p[a,x]", "p[x,b]")
    assert code == 0
    assert out.strip() == "1 p[a,b]"
    code, out, _ = run(capsys, "path", "circ", "--points", "a,b,x", "p[a,x]", "p[x,b]")
    assert out.strip() == "1 p[a,x,b]"
    code, out, _ = run(capsys, "path", "R", "--points", "a,b", "p[a,b]")
    assert out.strip() == "1 p[a,a,b]"
    code, out, _ = run(capsys, "path", "coproduct", "--points", "a,b,x", "p[a,x,b]")
    assert out.splitlines() == ["1 p[a,b] ⊗ p[a,x,b]", "1 p[a,x,b] ⊗ p[a,b]"]
    code, out, _ = run(capsys, "path", "mul", "--points", "a,b", "p[a,b]", "p[x,b]")
    assert code == 1


def test_mismatched_product_is_zero(capsys):
    code, out, _ = run(capsys, "path", "mul", "--points", "a,b,c", "p[a,b]", "p[c,b]")
    assert code == 0
    assert out.strip() == "0"


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "--max", "6", "--colors", "1")
    assert code == 0
    assert "2^(n-1)" in out
    code, out, _ = run(capsys, "dims", "--max", "4", "--colors", "2", "--json")
    data = json.loads(out)
    assert data["ok"] is True
    assert data["rows"][2]["tree_dim"] == 40


def test_verify_small_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "coalgebra", "--max-degree", "4",
                       "--seed", "7")
    assert code == 0
    assert "FAIL" not in out
    assert "checks passed" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "nalgebra", "--max-degree", "3",
                       "--json")
    assert code == 0
    checks = json.loads(out)
    assert checks and all(c["ok"] for c in checks)


def test_usage_errors_exit_one(capsys):
    assert run(capsys, "mul", "--op", "bogus", "(a)", "(b)")[0] == 1
    assert run(capsys, "mul", "--op", "dot", "(a", "(b)")[0] == 1
    assert run(capsys, "bogus-command")[0] == 1
    assert run(capsys, "trees", "enum", "--degree", "2", "--colors", "99")[0] == 1


def test_byte_stable_output(capsys):
    first = run(capsys, "verify", "--suite", "coalgebra", "--max-degree", "3", "--seed", "11")
    second = run(capsys, "verify", "--suite", "coalgebra", "--max-degree", "3", "--seed", "11")
    assert first == second
