"""Forward/inverse transform pair and the tensor-factored fast apply."""

import random

import pytest

from ght import (
    MatrixError,
    Signal,
    b3,
    cbt,
    cyclotomic,
    dft_matrix,
    fast_apply,
    ght,
    ight,
    jacketize_cbt,
    k3,
    k4,
    quadratic_field,
    rationals,
    tensor,
    walsh,
)
from ght.ring import RingError
from ght.transform import OpCount, bench, bench_table


def test_s1_on_ones():
    x = Signal.from_ints(rationals(), [1, 1])
    y = ght(walsh(1), x)
    assert y == Signal.from_ints(rationals(), [2, 0])


def test_impulse_gives_first_column():
    M = k4()
    ring = M.ring
    x = Signal(ring, tuple([ring.one()] + [ring.zero()] * 7))
    y = ght(M, x)
    assert y == Signal(ring, tuple(M.entry(i, 0) for i in range(8)))


def test_dft3_on_root_powers():
    ring = cyclotomic(3)
    beta = ring.root_of_unity(3)
    F = dft_matrix(3, ring)
    x = Signal(ring, (ring.one(), beta, beta * beta))
    y = ght(F, x)
    assert y == Signal(ring, (ring.zero(), ring.zero(), ring.from_int(3)))


def test_length_and_ring_mismatch():
    with pytest.raises(MatrixError):
        ght(walsh(2), Signal.from_ints(rationals(), [1, 2]))
    with pytest.raises(MatrixError):
        ght(walsh(1), Signal.from_ints(cyclotomic(4), [1, 2]))


@pytest.mark.parametrize(
    "mk",
    [
        lambda: walsh(3),
        lambda: cbt(3),
        lambda: dft_matrix(5, cyclotomic(5)),
        lambda: k4(),
        lambda: k3(quadratic_field(5)),
        lambda: b3(quadratic_field(5)),
    ],
)
def test_round_trip(mk):
    M = mk()
    rng = random.Random(11)
    x = Signal.from_ints(M.ring, [rng.randint(-9, 9) for _ in range(M.order)])
    assert ight(M, ght(M, x)) == x
    assert ght(M, ight(M, x)) == x


def test_round_trip_needs_invertible_order():
    from ght.ring import prime_field

    M = b3(prime_field(7))  # fine: 7 does not divide 3
    x = Signal.from_ints(M.ring, [1, 2, 3])
    assert ight(M, ght(M, x)) == x
    # order 2 over GF(2)-like obstruction is caught at int_inverse
    with pytest.raises(RingError):
        prime_field(3).int_inverse(3)


def test_linearity():
    M = k4()
    ring = M.ring
    rng = random.Random(3)
    a = Signal.from_ints(ring, [rng.randint(-5, 5) for _ in range(8)])
    b = Signal.from_ints(ring, [rng.randint(-5, 5) for _ in range(8)])
    s = Signal(ring, tuple(p + q for p, q in zip(a.elements, b.elements)))
    ya, yb, ys = ght(M, a), ght(M, b), ght(M, s)
    assert ys == Signal(ring, tuple(p + q for p, q in zip(ya.elements, yb.elements)))


def test_int_lane_matches_ring_path():
    M = walsh(4)
    ring = M.ring
    rng = random.Random(5)
    ints = [rng.randint(-20, 20) for _ in range(16)]
    x = Signal.from_ints(ring, ints)
    fast = ght(M, x)
    rows = [M.row(i) for i in range(16)]
    slow = Signal(
        ring, tuple(ring.dot(zip(rows[i], x.elements)) for i in range(16))
    )
    assert fast == slow


@pytest.mark.parametrize(
    "mk",
    [
        lambda: walsh(5),
        lambda: tensor(k4(), cbt(2)),
        lambda: tensor(b3(cyclotomic(12)), dft_matrix(4, cyclotomic(12))),
    ],
)
def test_fast_apply_matches_naive(mk):
    M = mk()
    rng = random.Random(17)
    x = Signal.from_ints(M.ring, [rng.randint(-9, 9) for _ in range(M.order)])
    y, count = fast_apply(M.tree, x)
    assert y == ght(M, x)
    assert count.mul < M.order * M.order


def test_fast_apply_leaf_tree_is_naive():
    M = cbt(3)
    x = Signal.from_ints(M.ring, list(range(1, 9)))
    y, count = fast_apply(M.as_tree(), x)
    assert y == ght(M, x)
    assert count.mul == 64


@pytest.mark.parametrize("t", [3, 6, 9])
def test_fast_apply_walsh_op_counts(t):
    v = 2 ** t
    x = Signal.from_ints(rationals(), [1] * v)
    _, count = fast_apply(walsh(t).tree, x)
    assert count.mul == v * 2 * t
    assert count.add == v * t  # each 2-point stage: one add per output pair


def test_fast_apply_length_mismatch():
    with pytest.raises(MatrixError):
        fast_apply(walsh(2).tree, Signal.from_ints(rationals(), [1, 2]))


def test_fast_apply_permuted_node():
    J, _ = jacketize_cbt(3)
    rng = random.Random(23)
    x = Signal.from_ints(J.ring, [rng.randint(-5, 5) for _ in range(8)])
    y, _ = fast_apply(J.tree, x)
    assert y == ght(J, x)


def test_opcount_addition():
    assert OpCount(2, 3) + OpCount(5, 7) == OpCount(7, 10)


def test_bench_counts_only():
    rows = bench([walsh(2).tree, walsh(3).tree], repetitions=0)
    assert [r.order for r in rows] == [4, 8]
    assert rows[0].naive_time is None and rows[0].fast_time is None
    assert rows[0].naive_mul == 16 and rows[0].fast_mul == 16
    assert rows[1].naive_mul == 64 and rows[1].fast_mul == 48


def test_bench_with_repetitions():
    rows = bench([walsh(3).tree], repetitions=3)
    assert rows[0].naive_time is not None and rows[0].fast_time is not None
    table = bench_table(rows)
    lines = table.splitlines()
    assert lines[0].startswith("order\t")
    assert lines[1].split("\t")[0] == "8"
