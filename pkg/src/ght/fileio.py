"""Text file formats for matrices and signals.

Both formats are JSON with a ring-spec header and per-backend element
encodings: rationals as "p/q" strings, cyclotomic elements as coefficient
lists of such strings, field elements as integer coefficient lists, complex
as [re, im] float pairs. Exact backends round-trip bit-exactly.
"""

from __future__ import annotations

import json

from .matrix import GMatrix, Leaf, MatrixError, Permutation, PermutedNode, TensorNode
from .ring import RingError, RingSpec, make_ring
from .transform import Signal


def ring_spec_to_json(spec: RingSpec) -> dict:
    out = {"kind": spec.kind}
    if spec.w is not None:
        out["w"] = spec.w
    if spec.p is not None:
        out["p"] = spec.p
    if spec.ext_poly is not None:
        out["ext-poly"] = list(spec.ext_poly)
    if spec.tol is not None:
        out["tol"] = spec.tol
    return out


def ring_spec_from_json(data: dict) -> RingSpec:
    try:
        return RingSpec(
            kind=data["kind"],
            w=data.get("w"),
            p=data.get("p"),
            ext_poly=tuple(data["ext-poly"]) if "ext-poly" in data else None,
            tol=data.get("tol"),
        )
    except (KeyError, TypeError) as ex:
        raise RingError(f"malformed ring spec: {ex}")


def _tree_to_json(tree):
    if tree is None:
        return None
    if isinstance(tree, Leaf):
        return {"kind": "leaf", "matrix": matrix_to_json(tree.matrix, with_tree=False)}
    if isinstance(tree, TensorNode):
        return {
            "kind": "tensor",
            "left": _tree_to_json(tree.left),
            "right": _tree_to_json(tree.right),
        }
    if isinstance(tree, PermutedNode):
        return {
            "kind": "permuted",
            "child": _tree_to_json(tree.child),
            "row": list(tree.rowp.image),
            "col": list(tree.colp.image),
        }
    raise MatrixError(f"unknown tree node {tree!r}")


def _tree_from_json(data, ring):
    if data is None:
        return None
    kind = data["kind"]
    if kind == "leaf":
        return Leaf(matrix_from_json(data["matrix"]))
    if kind == "tensor":
        return TensorNode(
            _tree_from_json(data["left"], ring), _tree_from_json(data["right"], ring)
        )
    if kind == "permuted":
        return PermutedNode(
            _tree_from_json(data["child"], ring),
            Permutation(tuple(data["row"])),
            Permutation(tuple(data["col"])),
        )
    raise MatrixError(f"unknown tree node kind {kind!r}")


def matrix_to_json(M: GMatrix, with_tree=True) -> dict:
    ring = M.ring
    return {
        "ring": ring_spec_to_json(ring.spec),
        "order": M.order,
        "entries": [
            [ring.encode(M.entry(i, j)) for j in range(M.order)]
            for i in range(M.order)
        ],
        "tree": _tree_to_json(M.tree) if with_tree else None,
    }


def matrix_from_json(data: dict) -> GMatrix:
    ring = make_ring(ring_spec_from_json(data["ring"]))
    v = data["order"]
    entries = data["entries"]
    if len(entries) != v or any(len(r) != v for r in entries):
        raise MatrixError("entry grid does not match the declared order")
    rows = [[ring.decode(e) for e in row] for row in entries]
    tree = _tree_from_json(data.get("tree"), ring)
    return GMatrix.from_rows(ring, rows, tree=tree)


def save_matrix(M: GMatrix, path):
    with open(path, "w") as fh:
        json.dump(matrix_to_json(M), fh)
        fh.write("\n")


def load_matrix(path) -> GMatrix:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as ex:
            raise MatrixError(f"{path}: invalid matrix file at {ex.pos}: {ex.msg}")
    return matrix_from_json(data)


def signal_to_json(x: Signal) -> dict:
    return {
        "ring": ring_spec_to_json(x.ring.spec),
        "length": x.length,
        "elements": [x.ring.encode(e) for e in x.elements],
    }


def signal_from_json(data: dict) -> Signal:
    ring = make_ring(ring_spec_from_json(data["ring"]))
    elems = data["elements"]
    if len(elems) != data["length"]:
        raise MatrixError("element list does not match the declared length")
    return Signal(ring, tuple(ring.decode(e) for e in elems))


def save_signal(x: Signal, path):
    with open(path, "w") as fh:
        json.dump(signal_to_json(x), fh)
        fh.write("\n")


def load_signal(path) -> Signal:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as ex:
            raise MatrixError(f"{path}: invalid signal file at {ex.pos}: {ex.msg}")
    return signal_from_json(data)
