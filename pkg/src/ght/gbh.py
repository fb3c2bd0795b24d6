"""Generalised Butson Hadamard verification and the basic constructors.

A square matrix M of unit entries over R is GBH when M M* = M* M = v I_v and
char R does not divide v. Verification is exact on exact backends; +1/-1
rational matrices take a numpy integer path so Sylvester orders around 1000
stay fast.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .matrix import GMatrix, MatrixError, mat_mul, star
from .ring import RingContext, RingElement, RingError


@dataclass
class GbhReport:
    """Outcome of verify_gbh.

    w is the order of the group generated by the entries, or None when some
    entry order exceeded the search bound (infinite/unknown).
    """

    is_gbh: bool
    v: int
    w: int | None
    char_check: bool
    failures: list = field(default_factory=list)

    def to_text(self):
        lines = [
            f"is-gbh: {str(self.is_gbh).lower()}",
            f"order: {self.v}",
            f"entry-group-order: {self.w if self.w is not None else 'infinite/unknown'}",
            f"char-check: {str(self.char_check).lower()}",
            f"failure-count: {len(self.failures)}",
        ]
        if self.failures:
            head = ", ".join(f"({i},{j})" for i, j in self.failures[:10])
            lines.append(f"failures: {head}")
        return "\n".join(lines)


def _element_order(el: RingElement, bound):
    one = el.ring.one()
    acc = el
    for k in range(1, bound + 1):
        if acc == one:
            return k
        acc = acc * el
    return None


def _entry_group_order(M: GMatrix, bound):
    if M._int:
        return 2 if (M._a == -1).any() else 1
    orders = {}
    for i in range(M.order):
        for j in range(M.order):
            e = M.entry(i, j)
            k = e.key()
            if k not in orders:
                o = _element_order(e, bound)
                if o is None:
                    return None
                orders[k] = o
    w = 1
    for o in orders.values():
        w = w * o // np.gcd(w, o)
    return int(w)


def _product_failures(P: GMatrix, v):
    ring = P.ring
    target_diag = ring.from_int(v)
    zero = ring.zero()
    fails = []
    for i in range(v):
        for j in range(v):
            want = target_diag if i == j else zero
            if P.entry(i, j) != want:
                fails.append((i, j))
    return fails


def verify_gbh(M: GMatrix, order_bound=None) -> GbhReport:
    """Check M M* = M* M = v I and char R does not divide v.

    Both products are computed; all provided backends are commutative, so the
    second is cheap insurance rather than new information.
    """
    v = M.order
    if v < 2:
        raise MatrixError("GBH matrices have order >= 2")
    ring = M.ring
    ch = ring.characteristic()
    char_check = ch == 0 or v % ch != 0
    if M._int:
        a = M._a.astype(np.int64)
        failures = []
        for prod in (a @ a.T, a.T @ a):
            bad = np.argwhere(prod != v * np.eye(v, dtype=np.int64))
            failures.extend((int(i), int(j)) for i, j in bad)
    else:
        ms = star(M)
        failures = _product_failures(mat_mul(M, ms), v)
        failures += _product_failures(mat_mul(ms, M), v)
    seen = set()
    failures = [f for f in failures if not (f in seen or seen.add(f))]
    if order_bound is None:
        order_bound = 2 * v * ring.unit_order_hint()
    w = _entry_group_order(M, order_bound)
    return GbhReport(
        is_gbh=not failures and char_check,
        v=v,
        w=w,
        char_check=char_check,
        failures=failures,
    )


def row_sums(M: GMatrix):
    """Row sums of M and column sums of the entrywise-inverse matrix.

    For a normalised GBH all sums except the first are zero.
    """
    v = M.order
    ring = M.ring
    sums = []
    for i in range(v):
        acc = ring.zero()
        for j in range(v):
            acc = acc + M.entry(i, j)
        sums.append(acc)
    inv_col_sums = []
    for j in range(v):
        acc = ring.zero()
        for i in range(v):
            acc = acc + M.entry(i, j).inverse()
        inv_col_sums.append(acc)
    return sums, inv_col_sums


def dft_matrix(v, ring: RingContext) -> GMatrix:
    """[omega^(j*k)] for the canonical order-v root omega of the ring."""
    if v < 1:
        raise RingError("order must be positive")
    omega = ring.root_of_unity(v)
    powers = [ring.one()]
    for _ in range(v - 1):
        powers.append(powers[-1] * omega)
    rows = [[powers[(j * k) % v] for k in range(v)] for j in range(v)]
    return GMatrix.from_rows(ring, rows)


def b3(ring: RingContext) -> GMatrix:
    """The normalised GBH(3, 3) built on a primitive cube root of unity."""
    beta = ring.root_of_unity(3)
    beta2 = beta * beta
    one = ring.one()
    return GMatrix.from_rows(
        ring,
        [[one, one, one], [one, beta, beta2], [one, beta2, beta]],
    )
