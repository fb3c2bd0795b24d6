"""JSON round-trips for matrices and signals across all backends."""

import json

import pytest

from ght import (
    MatrixError,
    Signal,
    b3,
    cbt,
    complex_ring,
    cyclotomic,
    dft_matrix,
    equal,
    jacketize_cbt,
    k2,
    k4,
    quadratic_field,
    rationals,
    walsh,
)
from ght.fileio import (
    load_matrix,
    load_signal,
    matrix_from_json,
    matrix_to_json,
    ring_spec_from_json,
    ring_spec_to_json,
    save_matrix,
    save_signal,
    signal_from_json,
    signal_to_json,
)
from ght.ring import RingError


@pytest.mark.parametrize(
    "mk",
    [
        lambda: walsh(3),
        lambda: k2(2),
        lambda: cbt(2),
        lambda: dft_matrix(5, cyclotomic(5)),
        lambda: b3(quadratic_field(5)),
        lambda: b3(cyclotomic(3)),
    ],
)
def test_matrix_roundtrip(tmp_path, mk):
    M = mk()
    path = tmp_path / "m.json"
    save_matrix(M, path)
    N = load_matrix(path)
    assert equal(M, N)
    assert N.ring.spec == M.ring.spec


def test_matrix_roundtrip_complex(tmp_path):
    M = dft_matrix(4, complex_ring())
    path = tmp_path / "m.json"
    save_matrix(M, path)
    N = load_matrix(path)
    assert equal(M, N)


def test_tree_roundtrip(tmp_path):
    J, _ = jacketize_cbt(3)
    path = tmp_path / "j.json"
    save_matrix(J, path)
    K = load_matrix(path)
    assert K.tree is not None
    assert equal(K.tree.expand(), J)


def test_tensor_tree_roundtrip(tmp_path):
    W = walsh(4)
    path = tmp_path / "w.json"
    save_matrix(W, path)
    V = load_matrix(path)
    assert V.tree is not None and V.tree.order == 16
    assert equal(V.tree.expand(), W)


@pytest.mark.parametrize(
    "ring", [rationals(), cyclotomic(6), quadratic_field(5)]
)
def test_signal_roundtrip(tmp_path, ring):
    x = Signal(
        ring,
        (ring.from_int(3), ring.root_of_unity(2), ring.int_inverse(2) if ring.characteristic() != 2 else ring.one()),
    )
    path = tmp_path / "x.json"
    save_signal(x, path)
    assert load_signal(path) == x


def test_ring_spec_json_identity():
    for ring in (rationals(), cyclotomic(12), quadratic_field(5), complex_ring()):
        spec = ring.spec
        assert ring_spec_from_json(ring_spec_to_json(spec)) == spec


def test_malformed_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(MatrixError):
        load_matrix(path)
    with pytest.raises(MatrixError):
        load_signal(path)


def test_wrong_shape_rejected(tmp_path):
    data = matrix_to_json(walsh(1))
    data["order"] = 3
    with pytest.raises(MatrixError):
        matrix_from_json(data)


def test_wrong_length_rejected():
    x = Signal.from_ints(rationals(), [1, 2])
    data = signal_to_json(x)
    data["length"] = 5
    with pytest.raises(MatrixError):
        signal_from_json(data)


def test_bad_ring_spec_rejected():
    with pytest.raises(RingError):
        ring_spec_from_json({"w": 4})


def test_file_is_plain_json(tmp_path):
    path = tmp_path / "m.json"
    save_matrix(k4(), path)
    data = json.loads(path.read_text())
    assert data["order"] == 8
    assert data["ring"]["kind"] == "cyclotomic-rationals"
