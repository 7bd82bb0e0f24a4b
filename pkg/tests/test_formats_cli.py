import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import STEANE_ROWS, random_basis, random_stabilizer

from qnonadd.cli import main
from qnonadd.css import LinearBinaryCode, build_css, css_stabilizer
from qnonadd.formats import (
    ParseError,
    Recipe,
    format_basis,
    format_code_rows,
    format_sign_table,
    format_stabilizer,
    parse_basis,
    parse_linear_code,
    parse_recipe,
    parse_sign_table,
    parse_stabilizer,
)
from qnonadd.nonadditive import HADAMARD_ROWS
from qnonadd.stabilizer import codespace_basis, coset_structure, extract_signs


@pytest.fixture
def files(tmp_path):
    steane = tmp_path / "steane.code"
    steane.write_text(format_code_rows(7, [int(r, 2) for r in STEANE_ROWS]))
    rows = tmp_path / "rows.code"
    rows.write_text(format_code_rows(11, [int(r, 2) for r in HADAMARD_ROWS]))
    rep10 = tmp_path / "rep10.code"
    rep10.write_text("10 1\n1111111111\n")
    bad = tmp_path / "bad.code"
    bad.write_text("7 2\n0001111\n01x0011\n")
    return tmp_path


# --- formats -----------------------------------------------------------------


def test_code_round_trip():
    text = format_code_rows(7, [int(r, 2) for r in STEANE_ROWS])
    assert text.splitlines()[0] == "7 3"
    code = parse_linear_code(text)
    assert code.k == 3


@pytest.mark.parametrize("text", ["", "7\n", "3 1\n10\n", "3 2\n101\n", "2 1\n1a\n"])
def test_code_parse_errors(text):
    with pytest.raises(ParseError):
        parse_linear_code(text)


def test_basis_round_trip_random():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(1, 5)
        b = random_basis(rng, n).with_distance(rng.randint(1, 3))
        text = format_basis(b, ["note"])
        assert text.startswith("# note\n")
        back = parse_basis(text)
        assert back.params == b.params and back.vectors == b.vectors


def test_basis_header_line(steane):
    text = format_basis(build_css(steane))
    first = [l for l in text.splitlines() if not l.startswith("#")][0]
    assert first == "7 2 3"


def test_stabilizer_and_sign_table_round_trip():
    rng = random.Random(5)
    for _ in range(20):
        s = random_stabilizer(rng, rng.randint(1, 5))
        back = parse_stabilizer(format_stabilizer(s), s.n)
        assert back.generators == s.generators
        cs = coset_structure(s)
        t = extract_signs(codespace_basis(s), cs.C_basis, cs.Gamma_basis, cs.offset)
        t2 = parse_sign_table(format_sign_table(t))
        assert (t2.c_rows, t2.gamma_rows, t2.offset, t2.sgn) == (t.c_rows, t.gamma_rows, t.offset, t.sgn)


def test_recipe_round_trip():
    r = Recipe("tau-coset", "rep.code", 2, 9)
    assert str(r) == "CONSTRUCT tau-coset rep.code d=2 K=9"
    assert parse_recipe(str(r)) == [r]
    assert parse_recipe("CONSTRUCT hadamard11 -") == [Recipe("hadamard11")]
    with pytest.raises(ParseError):
        parse_recipe("CONSTRUCT nope x.code")


# --- CLI ---------------------------------------------------------------------


def test_construct_hadamard_header(files, capsys):
    out = files / "h.basis"
    assert main(["construct", "hadamard11", "--out", str(out)]) == 0
    body = [l for l in out.read_text().splitlines() if not l.startswith("#")]
    assert body[0] == "11 2 3"
    assert out.read_text().startswith("# CONSTRUCT hadamard11")


def test_construct_css_header(files):
    out = files / "s.basis"
    assert main(["construct", "css", str(files / "steane.code"), "--out", str(out)]) == 0
    assert parse_basis(out.read_text()).params == (7, 2, 3)


def test_malformed_code_exit_2(files, capsys):
    assert main(["construct", "css", str(files / "bad.code")]) == 2
    assert "line 3" in capsys.readouterr().err


def test_usage_errors_exit_2(files):
    assert main(["construct"]) == 2
    assert main(["verify", "kl", str(files / "missing.basis")]) == 2
    assert main(["nonsense"]) == 2


def test_infeasible_construction_exit_1(files):
    assert main(["construct", "cssnonadd", str(files / "steane.code"), "--d", "3"]) == 1


def test_verify_kl_exit_codes(files, capsys):
    h = files / "h.basis"
    main(["construct", "hadamard11", "--out", str(h)])
    capsys.readouterr()
    assert main(["verify", "kl", "--d", "3", "--workers", "1", str(h)]) == 0
    assert main(["verify", "kl", "--d", "4", "--workers", "1", "--early-exit", str(h)]) == 1
    out = capsys.readouterr().out.splitlines()
    assert out[-2] == "KL d=4 mode=general result=fail errors_checked=542"
    assert out[-1] == "VIOLATION + 00000000000|11100000000 i=1 j=1 value=-4 expected=4"


def test_verify_nonadd_hadamard(files, capsys):
    h = files / "h.basis"
    main(["construct", "hadamard11", "--out", str(h)])
    capsys.readouterr()
    code = ["verify", "nonadd", "--containing", str(files / "rows.code"), "--ell", "1", str(h)]
    assert main(code) == 0
    assert "verdict=strongly-nonadditive-criteria-met" in capsys.readouterr().out
    assert main(code + ["--expect", "nonadditive"]) == 1


def test_verify_dual_distance(files, capsys, steane):
    st_file = files / "steane.stab"
    st_file.write_text(format_stabilizer(css_stabilizer(steane)))
    assert main(["verify", "dual-distance", "--d", "3", str(st_file)]) == 0
    assert main(["verify", "dual-distance", "--d", "4", str(st_file)]) == 1
    assert "WITNESS" in capsys.readouterr().out


def test_verify_stabilizer_and_signs(files, capsys, steane):
    h = files / "h.basis"
    main(["construct", "hadamard11", "--out", str(h)])
    assert main(["verify", "stabilizer", "--expect-trivial", str(h)]) == 0
    s = files / "s.basis"
    main(["construct", "css", str(files / "steane.code"), "--out", str(s)])
    assert main(["verify", "stabilizer", "--expect-trivial", str(s)]) == 1
    cs = coset_structure(css_stabilizer(steane))
    t = extract_signs(build_css(steane), cs.C_basis, cs.Gamma_basis)
    tf = files / "steane.signs"
    tf.write_text(format_sign_table(t))
    assert main(["verify", "signs", "--rebuild", str(tf)]) == 0
    bad = t.flipped(t.c_rows[0] ^ t.c_rows[1], 0)
    tf.write_text(format_sign_table(bad))
    assert main(["verify", "signs", str(tf)]) == 1


def test_bounds_output(capsys):
    assert main(["bounds", "8", "1", "2"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "greedy-shifts: 126 < 128 OK; ell=3"
    main(["bounds", "10", "1", "2"])
    assert capsys.readouterr().out.splitlines()[0] == "greedy-shifts: 198 < 512 OK; ell=5"
    main(["bounds", "10", "1", "1"])
    assert "V=1" in capsys.readouterr().out


@pytest.mark.parametrize(
    "family,code,extra",
    [
        ("hadamard11", None, ["--d", "3"]),
        ("css", "steane.code", []),
        ("twisted-css", "steane.code", []),
        ("tau-coset", "rep10.code", ["--d", "2"]),
        ("tau-coset", "rep10.code", ["--d", "2", "--K", "9"]),
    ],
)
def test_construct_then_verify_gate(files, family, code, extra):
    out = files / f"{family}.basis"
    argv = ["construct", family] + ([str(files / code)] if code else []) + extra + ["--out", str(out)]
    assert main(argv) == 0
    b = parse_basis(out.read_text())
    assert main(["verify", "kl", "--workers", "1", "--d", str(b.d), str(out)]) == 0


def test_option_before_code_file(files):
    out = files / "t.basis"
    assert main(["construct", "tau-coset", "--d", "2", "--K", "9", str(files / "rep10.code"), "--out", str(out)]) == 0
    assert parse_basis(out.read_text()).K == 9


def test_manifest_replay_is_byte_identical(files):
    out = files / "g.basis"
    man = files / "run.json"
    argv = ["--manifest", str(man), "construct", "tau-coset", str(files / "rep10.code"), "--d", "2", "--out", str(out)]
    assert main(argv) == 0
    first = out.read_bytes()
    data = json.loads(man.read_text())
    assert data["command"] == "construct" and data["params"]["d"] == 2
    out.unlink()
    assert main(["run", str(man)]) == 0
    assert out.read_bytes() == first
    assert main(argv[2:]) == 0 and out.read_bytes() == first


def test_recipe_file(files):
    rec = files / "r.recipe"
    rec.write_text(f"CONSTRUCT css {files / 'steane.code'}\n")
    out = files / "r.basis"
    assert main(["construct", "--recipe", str(rec), "--out", str(out)]) == 0
    assert parse_basis(out.read_text()).params == (7, 2, 3)
