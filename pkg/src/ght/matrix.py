"""Dense square matrices over a ring context.

Entries are ring units (every exact backend here is a field, so unit ==
nonzero). Matrices built from +1/-1 rationals are stored as small integer
numpy arrays, which keeps Sylvester-type constructions of order ~4096 cheap;
everything else lives in object arrays of RingElement.

A matrix may carry a FactorTree recording how it was assembled from tensor
products and index permutations; the transform module exploits the tree for
fast application.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .ring import RingContext, RingElement


class MatrixError(ValueError):
    """Shape, ring, or entry violations."""


@dataclass(frozen=True)
class Permutation:
    """Bijection on 0..v-1; image[i] is where index i is sent."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise MatrixError("image array is not a bijection")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def from_cycle(cls, n, cycle):
        """Cycle in 0-based indices: each entry maps to the next one."""
        img = list(range(n))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            img[a] = b
        return cls(tuple(img))

    @property
    def order(self):
        return len(self.image)

    def __call__(self, i):
        return self.image[i]

    def inverse(self):
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.image))


# --- factor trees ---


class FactorTree:
    """Construction record: leaf matrices combined by tensor products and
    row/column permutations."""

    @property
    def order(self):
        raise NotImplementedError

    def expand(self) -> "GMatrix":
        raise NotImplementedError


@dataclass(frozen=True)
class Leaf(FactorTree):
    matrix: "GMatrix"

    @property
    def order(self):
        return self.matrix.order

    def expand(self):
        return self.matrix


@dataclass(frozen=True)
class TensorNode(FactorTree):
    left: FactorTree
    right: FactorTree

    @property
    def order(self):
        return self.left.order * self.right.order

    def expand(self):
        return tensor(self.left.expand(), self.right.expand())


@dataclass(frozen=True)
class PermutedNode(FactorTree):
    child: FactorTree
    rowp: Permutation
    colp: Permutation

    @property
    def order(self):
        return self.child.order

    def expand(self):
        return permute(self.child.expand(), self.rowp, self.colp)


class GMatrix:
    """Immutable square matrix of ring units."""

    __slots__ = ("ring", "order", "tree", "_a", "_int")

    def __init__(self, ring: RingContext, array, tree=None, validate=True, _int=None):
        a = np.asarray(array)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise MatrixError("matrix must be square")
        is_int = a.dtype != object if _int is None else _int
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "order", a.shape[0])
        object.__setattr__(self, "tree", tree)
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_int", is_int)
        if validate:
            self._validate_units()

    def __setattr__(self, name, value):
        raise AttributeError("GMatrix is immutable")

    def _validate_units(self):
        if self._int:
            if self.ring.spec.kind != "rationals":
                raise MatrixError("integer storage is only for the rationals")
            if not np.isin(self._a, (-1, 1)).all():
                raise MatrixError("integer-lane entries must be +1/-1")
            return
        zero = self.ring.zero()
        for i in range(self.order):
            for j in range(self.order):
                e = self._a[i, j]
                if not isinstance(e, RingElement) or e.ring.spec != self.ring.spec:
                    raise MatrixError(f"entry ({i},{j}) is not in the matrix ring")
                if e == zero:
                    raise MatrixError(f"entry ({i},{j}) is not a unit")

    @classmethod
    def from_rows(cls, ring, rows, tree=None, validate=True):
        """Build from nested lists of RingElements (plain ints are embedded).

        Rational matrices whose entries are all +1/-1 drop into the integer
        fast lane automatically.
        """
        v = len(rows)
        out = np.empty((v, v), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != v:
                raise MatrixError("matrix must be square")
            for j, e in enumerate(row):
                out[i, j] = ring.from_int(e) if isinstance(e, int) else e
        if ring.spec.kind == "rationals":
            vals = [[e.payload for e in row] for row in rows_as_elems(out)]
            if all(f.denominator == 1 and abs(f) == 1 for r in vals for f in r):
                arr = np.array([[int(f) for f in r] for r in vals], dtype=np.int8)
                return cls(ring, arr, tree=tree, validate=False, _int=True)
        return cls(ring, out, tree=tree, validate=validate)

    def entry(self, i, j) -> RingElement:
        if self._int:
            return self.ring.element(Fraction(int(self._a[i, j])))
        return self._a[i, j]

    def row(self, i):
        return [self.entry(i, j) for j in range(self.order)]

    def rows(self):
        return [self.row(i) for i in range(self.order)]

    def as_tree(self) -> FactorTree:
        return self.tree if self.tree is not None else Leaf(self)

    def is_normalised(self):
        one = self.ring.one()
        return all(self.entry(0, j) == one for j in range(self.order)) and all(
            self.entry(i, 0) == one for i in range(self.order)
        )

    def __repr__(self):
        return f"GMatrix(order={self.order}, ring={self.ring!r})"


def rows_as_elems(a):
    return [list(r) for r in a]


def _check_same_ring(A: GMatrix, B: GMatrix):
    if A.ring.spec != B.ring.spec:
        raise MatrixError("ring mismatch")


def star(M: GMatrix) -> GMatrix:
    """M* : transpose of the entrywise inverses; an involution."""
    if M._int:
        # +1/-1 entries are self-inverse
        return GMatrix(M.ring, M._a.T.copy(), validate=False, _int=True)
    v = M.order
    out = np.empty((v, v), dtype=object)
    for i in range(v):
        for j in range(v):
            out[j, i] = M._a[i, j].inverse()
    return GMatrix(M.ring, out, validate=False)


def tensor(A: GMatrix, B: GMatrix) -> GMatrix:
    """Kronecker product; the result records both factors in its tree."""
    _check_same_ring(A, B)
    tree = TensorNode(A.as_tree(), B.as_tree())
    if A._int and B._int:
        return GMatrix(
            A.ring, np.kron(A._a, B._a).astype(np.int8), tree=tree,
            validate=False, _int=True,
        )
    va, vb = A.order, B.order
    out = np.empty((va * vb, va * vb), dtype=object)
    for i in range(va):
        for j in range(va):
            aij = A.entry(i, j)
            for k in range(vb):
                for l in range(vb):
                    out[i * vb + k, j * vb + l] = aij * B.entry(k, l)
    return GMatrix(A.ring, out, tree=tree, validate=False)


def permute(M: GMatrix, rowp: Permutation, colp: Permutation) -> GMatrix:
    """Entry (i, j) of the result is M[rowp^-1(i), colp^-1(j)]."""
    if rowp.order != M.order or colp.order != M.order:
        raise MatrixError("permutation size mismatch")
    rinv = rowp.inverse().image
    cinv = colp.inverse().image
    a = M._a[np.ix_(rinv, cinv)]
    tree = PermutedNode(M.as_tree(), rowp, colp)
    return GMatrix(M.ring, a.copy(), tree=tree, validate=False, _int=M._int)


def normalize(M: GMatrix):
    """Scale rows then columns so the first row and column are all 1s.

    Returns (N, row_scalars, col_scalars) with
    M[i][j] == row_scalars[i] * N[i][j] * col_scalars[j].
    """
    v = M.order
    row_scalars = [M.entry(i, 0) for i in range(v)]
    row_inv = [r.inverse() for r in row_scalars]
    col_scalars = [row_inv[0] * M.entry(0, j) for j in range(v)]
    col_inv = [c.inverse() for c in col_scalars]
    out = np.empty((v, v), dtype=object)
    for i in range(v):
        ri = row_inv[i]
        for j in range(v):
            out[i, j] = ri * M.entry(i, j) * col_inv[j]
    N = GMatrix.from_rows(M.ring, rows_as_elems(out), validate=False)
    return N, row_scalars, col_scalars


def mat_mul(A: GMatrix, B: GMatrix) -> GMatrix:
    """Plain matrix product. The result is not unit-checked (products of GBH
    matrices legitimately contain zeros)."""
    _check_same_ring(A, B)
    if A.order != B.order:
        raise MatrixError("dimension mismatch")
    v = A.order
    if A._int and B._int:
        prod = A._a.astype(np.int64) @ B._a.astype(np.int64)
        out = np.empty((v, v), dtype=object)
        ring = A.ring
        for i in range(v):
            for j in range(v):
                out[i, j] = ring.element(Fraction(int(prod[i, j])))
        return GMatrix(A.ring, out, validate=False)
    ring = A.ring
    bcols = [[B.entry(k, j) for k in range(v)] for j in range(v)]
    arows = [A.row(i) for i in range(v)]
    out = np.empty((v, v), dtype=object)
    for i in range(v):
        ai = arows[i]
        for j in range(v):
            out[i, j] = ring.dot(zip(ai, bcols[j]))
    return GMatrix(ring, out, validate=False)


def scalar_mul(c, M: GMatrix) -> GMatrix:
    if isinstance(c, int):
        c = M.ring.from_int(c)
    v = M.order
    out = np.empty((v, v), dtype=object)
    for i in range(v):
        for j in range(v):
            out[i, j] = c * M.entry(i, j)
    return GMatrix.from_rows(M.ring, rows_as_elems(out), validate=False)


def equal(A: GMatrix, B: GMatrix) -> bool:
    if A.ring.spec != B.ring.spec or A.order != B.order:
        return False
    if A._int and B._int:
        return bool(np.array_equal(A._a, B._a))
    return all(
        A.entry(i, j) == B.entry(i, j)
        for i in range(A.order)
        for j in range(A.order)
    )


def identity_gmatrix(ring, v, scale=1) -> GMatrix:
    """scale * I_v, unchecked (off-diagonal zeros)."""
    s = ring.from_int(scale) if isinstance(scale, int) else scale
    zero = ring.zero()
    out = np.empty((v, v), dtype=object)
    for i in range(v):
        for j in range(v):
            out[i, j] = s if i == j else zero
    return GMatrix(ring, out, validate=False)


def from_blocks(ring, blocks) -> GMatrix:
    """Assemble a matrix from a 2D grid of GMatrix blocks."""
    rows = []
    for brow in blocks:
        for b in brow:
            _check_same_ring(b, brow[0])
        height = brow[0].order
        for i in range(height):
            rows.append([e for b in brow for e in b.row(i)])
    return GMatrix.from_rows(ring, rows, validate=False)
