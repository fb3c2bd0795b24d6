"""Exit-code contract and round-trips through the command-line entry point."""

import pytest

from ght import Signal, cyclotomic, equal, k4, rationals, walsh
from ght.cli import main, parse_ring_spec
from ght.fileio import load_matrix, load_signal, save_matrix, save_signal
from ght.ring import RingError


def test_parse_ring_spec():
    assert parse_ring_spec("rationals").spec.kind == "rationals"
    assert parse_ring_spec("cyclotomic:12").spec.w == 12
    assert parse_ring_spec("gf:7").spec.p == 7
    assert parse_ring_spec("gf:5:1,1,1").spec.ext_poly == (1, 1, 1)
    assert parse_ring_spec("complex:1e-6").spec.tol == 1e-6
    with pytest.raises(RingError):
        parse_ring_spec("octonions")


def test_gen_and_verify(tmp_path, capsys):
    out = tmp_path / "w3.json"
    assert main(["gen", "walsh:3", "-o", str(out)]) == 0
    M = load_matrix(out)
    assert equal(M, walsh(3))
    assert main(["verify", str(out)]) == 0
    text = capsys.readouterr().out
    assert "is-gbh: true" in text


def test_gen_with_ring_override(tmp_path):
    out = tmp_path / "w2.json"
    assert main(["gen", "walsh:2", "--ring", "cyclotomic:4", "-o", str(out)]) == 0
    assert load_matrix(out).ring.spec.kind == "cyclotomic-rationals"


def test_verify_failure_is_one(tmp_path):
    from ght import GMatrix

    bad = GMatrix.from_rows(rationals(), [[1, 1], [1, 1]])
    path = tmp_path / "bad.json"
    save_matrix(bad, path)
    assert main(["verify", str(path)]) == 1


def test_width_report(tmp_path, capsys):
    path = tmp_path / "k4.json"
    save_matrix(k4(), path)
    assert main(["width", str(path)]) == 0
    text = capsys.readouterr().out
    assert "width: 1" in text


def test_equiv_exit_codes(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    save_matrix(k4(), a)
    save_matrix(k4(), b)
    assert main(["equiv", str(a), str(b)]) == 0
    save_matrix(walsh(3, cyclotomic(4)), b)
    assert main(["equiv", str(a), str(b)]) == 1


def test_equiv_budget_exhaustion(tmp_path):
    from ght import Permutation, k3, permute, tensor

    ring = cyclotomic(12)
    A = tensor(k3(ring), walsh(1, ring))
    B = permute(
        A,
        Permutation((5, 3, 8, 1, 11, 0, 7, 2, 9, 4, 10, 6)),
        Permutation((2, 6, 0, 10, 4, 8, 1, 11, 3, 7, 5, 9)),
    )
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    save_matrix(A, a)
    save_matrix(B, b)
    assert main(["equiv", str(a), str(b), "--budget", "2"]) == 2


def test_apply_invert_roundtrip(tmp_path):
    m = tmp_path / "m.json"
    x = tmp_path / "x.json"
    y = tmp_path / "y.json"
    z = tmp_path / "z.json"
    save_matrix(walsh(3), m)
    sig = Signal.from_ints(rationals(), [3, -1, 4, 1, -5, 9, 2, -6])
    save_signal(sig, x)
    assert main(["apply", str(m), str(x), "-o", str(y)]) == 0
    assert main(["invert", str(m), str(y), "-o", str(z)]) == 0
    assert load_signal(z) == sig


def test_apply_fast_prints_counts(tmp_path, capsys):
    m = tmp_path / "m.json"
    x = tmp_path / "x.json"
    y = tmp_path / "y.json"
    save_matrix(walsh(4), m)
    save_signal(Signal.from_ints(rationals(), [1] * 16), x)
    assert main(["apply", "--fast", str(m), str(x), "-o", str(y)]) == 0
    text = capsys.readouterr().out
    assert "multiplications: 128" in text


def test_seqsearch_exit_codes(capsys):
    assert main(["seqsearch", "4"]) == 0
    text = capsys.readouterr().out
    assert "perfect-count:" in text
    assert main(["seqsearch", "3"]) == 1  # no perfect quadriphase of length 3
    assert main(["seqsearch", "99"]) == 2  # outside the exhaustive bound


def test_bench(capsys):
    assert main(["bench", "--t-min", "2", "--t-max", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("order\t")
    assert len(lines) == 3


def test_enumerate2x2(capsys):
    assert main(["enumerate2x2", "--group-order", "4"]) == 0
    assert "count: 1" in capsys.readouterr().out


def test_usage_errors_are_two(tmp_path, capsys):
    assert main([]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["verify", str(tmp_path / "missing.json")]) == 2
    assert main(["gen", "nope", "-o", str(tmp_path / "x.json")]) == 2
    capsys.readouterr()
