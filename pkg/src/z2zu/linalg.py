"""Matrices of mixed-alphabet rows: Gram matrices, invertibility over R,
standard-form reduction, the dual generator template, and F2 row reduction
for binary images.

The standard form partitions rows into three classes and permutes columns
within each block so the matrix matches the template

    ( I_k0  A1 | 0     0      uP     )     k0 rows: binary pivots
    ( 0     S  | I_k1  A      B1+uB2 )     k1 rows: unit ring pivots
    ( 0     0  | 0     uI_k2  uD     )     k2 rows: u pivots

with column order [k0 pivots | rest] on the binary side and
[k1 pivots | k2 pivots | rest] on the ring side. The generated code is
permutation equivalent to the input's and has exactly 2^(k0+2k1+k2)
codewords.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf2, ring
from .ambient import BinaryVector, MixedVector, Shape
from .errors import ShapeMismatchError


class MixedMatrix:
    """Rows of mixed vectors sharing one shape. Zero rows are allowed and a
    0-row matrix represents a generator of the zero code."""

    __slots__ = ("shape", "bits", "ring")

    def __init__(self, shape: Shape, bits, ring_part):
        self.shape = shape
        b = np.ascontiguousarray(bits, dtype=np.uint8)
        r = np.ascontiguousarray(ring_part, dtype=np.uint8)
        if b.ndim == 1:
            b = b.reshape(1, -1) if shape.alpha else b.reshape(r.shape[0] if r.ndim == 2 else 1, 0)
        if r.ndim == 1:
            r = r.reshape(1, -1) if shape.beta else r.reshape(b.shape[0], 0)
        if b.shape[1] != shape.alpha or r.shape[1] != shape.beta:
            raise ShapeMismatchError(
                f"blocks of widths ({b.shape[1]}, {r.shape[1]}) do not match shape "
                f"({shape.alpha}, {shape.beta})"
            )
        if b.shape[0] != r.shape[0]:
            raise ShapeMismatchError("binary and ring blocks have different row counts")
        self.bits = b
        self.ring = r

    @classmethod
    def from_rows(cls, rows: list[MixedVector], shape: Shape | None = None) -> "MixedMatrix":
        if not rows:
            if shape is None:
                raise ValueError("shape required for an empty matrix")
            return cls.empty(shape)
        shape = rows[0].shape
        for r in rows:
            if r.shape != shape:
                raise ShapeMismatchError("rows of mixed shapes")
        return cls(shape, np.stack([r.bits for r in rows]), np.stack([r.ring for r in rows]))

    @classmethod
    def empty(cls, shape: Shape) -> "MixedMatrix":
        return cls(shape, np.zeros((0, shape.alpha), np.uint8), np.zeros((0, shape.beta), np.uint8))

    @property
    def k(self) -> int:
        return self.bits.shape[0]

    def row(self, i: int) -> MixedVector:
        return MixedVector(self.shape, self.bits[i], self.ring[i])

    def rows(self) -> list[MixedVector]:
        return [self.row(i) for i in range(self.k)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MixedMatrix)
            and self.shape == other.shape
            and np.array_equal(self.bits, other.bits)
            and np.array_equal(self.ring, other.ring)
        )

    def __hash__(self):
        return hash((self.shape, self.bits.tobytes(), self.ring.tobytes()))

    def scaled_rows_by_u(self) -> "MixedMatrix":
        """u * each row: binary block vanishes, ring entries multiplied by u."""
        return MixedMatrix(
            self.shape,
            np.zeros_like(self.bits),
            ring.mul(np.uint8(ring.U), self.ring),
        )

    def flatten_f2(self) -> np.ndarray:
        """(k, alpha+2*beta) bit rows in (a | s | t) layout; addition is XOR."""
        s = ring.s_bit(self.ring)
        t = ring.t_bit(self.ring)
        return np.concatenate([self.bits, s, t], axis=1)

    @classmethod
    def from_flat_f2(cls, flat: np.ndarray, shape: Shape) -> "MixedMatrix":
        flat = np.asarray(flat, dtype=np.uint8).reshape(-1, shape.alpha + 2 * shape.beta)
        a = flat[:, : shape.alpha]
        s = flat[:, shape.alpha : shape.alpha + shape.beta]
        t = flat[:, shape.alpha + shape.beta :]
        return cls(shape, a, s | (t << 1))


def gram(m: MixedMatrix) -> np.ndarray:
    """k x k matrix of pairwise inner products of the rows (ring codes)."""
    bdot = (m.bits @ m.bits.T) & 1
    acc = (np.uint8(ring.U) * bdot).astype(np.uint8)
    if m.shape.beta:
        prods = ring.mul(m.ring[:, None, :], m.ring[None, :, :])
        acc = ring.add(acc, np.bitwise_xor.reduce(prods, axis=2))
    return acc.astype(np.uint8)


def untwisted_gram(m: MixedMatrix) -> np.ndarray:
    """Plain row product G G^T over R, binary entries embedded as 0/1.

    This drops the u factor the inner product puts on binary coordinates;
    it is the matrix the source article displays in its worked examples
    and is used only for checking those displays.
    """
    bdot = ((m.bits @ m.bits.T) & 1).astype(np.uint8)
    acc = bdot
    if m.shape.beta:
        prods = ring.mul(m.ring[:, None, :], m.ring[None, :, :])
        acc = ring.add(acc, np.bitwise_xor.reduce(prods, axis=2))
    return acc.astype(np.uint8)


def r_invertible(rmat: np.ndarray) -> bool:
    """Invertibility over R, decided modulo the radical: R is local, so M is
    invertible iff residue(M) is invertible over F2."""
    rmat = np.asarray(rmat, dtype=np.uint8)
    if rmat.ndim != 2 or rmat.shape[0] != rmat.shape[1]:
        raise ValueError("square matrix required")
    if rmat.shape[0] == 0:
        return True
    return gf2.is_invertible(gf2.matrix_to_bits(ring.residue(rmat)))


@dataclass(frozen=True)
class StandardForm:
    """Reduction result: template matrix, applied column permutations (new
    position -> original column index) and the pivot counts."""

    matrix: MixedMatrix
    bin_perm: np.ndarray
    ring_perm: np.ndarray
    k0: int
    k1: int
    k2: int

    @property
    def shape(self) -> Shape:
        return self.matrix.shape

    @property
    def type_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.shape.alpha, self.shape.beta, self.k0, self.k1, self.k2)

    @property
    def dimension(self) -> int:
        """log2 of the codeword count: k0 + 2*k1 + k2."""
        return self.k0 + 2 * self.k1 + self.k2

    # Template blocks, used by the dual generator.
    def blocks(self) -> dict[str, np.ndarray]:
        a, b = self.shape.alpha, self.shape.beta
        k0, k1, k2 = self.k0, self.k1, self.k2
        bits, rg = self.matrix.bits, self.matrix.ring
        return {
            "A1": bits[:k0, k0:],
            "S": bits[k0 : k0 + k1, k0:],
            "P": ring.t_bit(rg[:k0, k1 + k2 :]),
            "A": ring.s_bit(rg[k0 : k0 + k1, k1 : k1 + k2]),
            "B": rg[k0 : k0 + k1, k1 + k2 :],
            "D": ring.t_bit(rg[k0 + k1 :, k1 + k2 :]),
        }


def standard_form(m: MixedMatrix) -> StandardForm:
    """Reduce to the standard-form template.

    Pivot preference: unit pivots in the ring block (k1 rows), then binary
    pivots (k0 rows), then u pivots (k2 rows); within a phase the first
    eligible (column, row) pair wins. Each pivot's column is cleared from
    every other row at pivot time, so skipped columns stay clean. Rows that
    reduce to zero are dropped.
    """
    alpha, beta = m.shape.alpha, m.shape.beta
    bits = m.bits.copy()
    rg = m.ring.copy()
    k = m.k
    used = np.zeros(k, dtype=bool)

    k1_rows: list[int] = []
    k1_cols: list[int] = []
    for col in range(beta):
        pivot = None
        for r in range(k):
            if not used[r] and ring.is_unit(rg[r, col]):
                pivot = r
                break
        if pivot is None:
            continue
        inv = ring.unit_inverse(int(rg[pivot, col]))
        rg[pivot] = ring.mul(np.uint8(inv), rg[pivot])
        # residue(inv) = 1: binary block unchanged by normalization
        for r in range(k):
            c = int(rg[r, col])
            if r == pivot or c == 0:
                continue
            bits[r] ^= bits[pivot] * ring.residue(c)
            rg[r] = ring.add(rg[r], ring.mul(np.uint8(c), rg[pivot]))
        used[pivot] = True
        k1_rows.append(pivot)
        k1_cols.append(col)

    k0_rows: list[int] = []
    k0_cols: list[int] = []
    for col in range(alpha):
        pivot = None
        for r in range(k):
            if not used[r] and bits[r, col]:
                pivot = r
                break
        if pivot is None:
            continue
        for r in range(k):
            if r != pivot and bits[r, col]:
                bits[r] ^= bits[pivot]
                rg[r] = ring.add(rg[r], rg[pivot])
        used[pivot] = True
        k0_rows.append(pivot)
        k0_cols.append(col)

    k2_rows: list[int] = []
    k2_cols: list[int] = []
    taken = set(k1_cols)
    for col in range(beta):
        if col in taken:
            continue
        pivot = None
        for r in range(k):
            if not used[r] and rg[r, col] == ring.U:
                pivot = r
                break
        if pivot is None:
            continue
        for r in range(k):
            if r != pivot and ring.t_bit(rg[r, col]):
                bits[r] ^= bits[pivot]  # pivot binary block is zero
                rg[r] = ring.add(rg[r], rg[pivot])
        used[pivot] = True
        k2_rows.append(pivot)
        k2_cols.append(col)

    for r in range(k):
        if not used[r] and (bits[r].any() or rg[r].any()):
            raise AssertionError("unreduced nonzero row left after elimination")

    row_order = k0_rows + k1_rows + k2_rows
    bin_perm = np.array(k0_cols + [c for c in range(alpha) if c not in set(k0_cols)], dtype=int)
    rest = [c for c in range(beta) if c not in set(k1_cols) | set(k2_cols)]
    ring_perm = np.array(k1_cols + k2_cols + rest, dtype=int)

    new_bits = bits[row_order][:, bin_perm] if row_order else np.zeros((0, alpha), np.uint8)
    new_ring = rg[row_order][:, ring_perm] if row_order else np.zeros((0, beta), np.uint8)
    return StandardForm(
        matrix=MixedMatrix(m.shape, new_bits, new_ring),
        bin_perm=bin_perm,
        ring_perm=ring_perm,
        k0=len(k0_rows),
        k1=len(k1_rows),
        k2=len(k2_rows),
    )


def matches_template(sf: StandardForm) -> bool:
    """Structural check of the block template (used by tests and input
    validation for constructions that require standard-form inputs)."""
    k0, k1, k2 = sf.k0, sf.k1, sf.k2
    bits, rg = sf.matrix.bits, sf.matrix.ring
    alpha, beta = sf.shape.alpha, sf.shape.beta
    ok = True
    ok &= np.array_equal(bits[:k0, :k0], np.eye(k0, dtype=np.uint8))
    ok &= not bits[k0:, :k0].any()
    ok &= np.array_equal(
        ring.s_bit(rg[k0 : k0 + k1, :k1]) | (ring.t_bit(rg[k0 : k0 + k1, :k1]) << 1),
        np.eye(k1, dtype=np.uint8),
    )
    ok &= not rg[:k0, :k1].any()
    ok &= not rg[k0 + k1 :, :k1].any()
    ok &= not bits[k0 + k1 :].any()
    ok &= np.array_equal(rg[k0 + k1 :, k1 : k1 + k2], ring.U * np.eye(k2, dtype=np.uint8))
    ok &= not rg[:k0, k1 : k1 + k2].any()
    ok &= not ring.t_bit(rg[k0 : k0 + k1, k1 : k1 + k2]).any()
    ok &= not ring.s_bit(rg[:k0, k1 + k2 :]).any()
    ok &= not ring.s_bit(rg[k0 + k1 :, k1 + k2 :]).any()
    return bool(ok)


def dual_generator(sf: StandardForm) -> MixedMatrix:
    """Generator of the dual code from the standard-form blocks.

    Signs in the template collapse to + in characteristic 2. The column
    permutations of `sf` are un-applied, so the result generates the dual
    of the original (unpermuted) code. Row groups: alpha-k0 binary-pivot
    rows, beta-k1-k2 unit-pivot rows, k2 u-pivot rows.
    """
    alpha, beta = sf.shape.alpha, sf.shape.beta
    k0, k1, k2 = sf.k0, sf.k1, sf.k2
    rem = beta - k1 - k2  # free ring columns
    bk = alpha - k0  # free binary columns
    blk = sf.blocks()
    A1, S, P, A, B, D = blk["A1"], blk["S"], blk["P"], blk["A"], blk["B"], blk["D"]

    u8 = np.uint8
    bits = np.zeros((bk + rem + k2, alpha), dtype=u8)
    rg = np.zeros((bk + rem + k2, beta), dtype=u8)

    # group 1: (A1^T, I | u S^T, 0, 0)
    bits[:bk, :k0] = A1.T
    bits[:bk, k0:] = np.eye(bk, dtype=u8)
    rg[:bk, :k1] = u8(ring.U) * S.T

    # group 2: (P^T, 0 | (B1+uB2)^T + D^T A^T, D^T, I)
    g2 = slice(bk, bk + rem)
    bits[g2, :k0] = P.T
    q = B.T.copy()
    if k2:
        q = ring.add(q, ((D.T.astype(np.uint16) @ A.T.astype(np.uint16)) & 1).astype(u8))
    rg[g2, :k1] = q
    rg[g2, k1 : k1 + k2] = D.T
    rg[g2, k1 + k2 :] = np.eye(rem, dtype=u8)

    # group 3: (0, 0 | u A^T, u I, 0)
    g3 = slice(bk + rem, bk + rem + k2)
    rg[g3, :k1] = u8(ring.U) * A.T
    rg[g3, k1 : k1 + k2] = u8(ring.U) * np.eye(k2, dtype=u8)

    out_bits = np.zeros_like(bits)
    out_ring = np.zeros_like(rg)
    out_bits[:, sf.bin_perm] = bits
    out_ring[:, sf.ring_perm] = rg
    return MixedMatrix(sf.shape, out_bits, out_ring)


class BinaryMatrix:
    """Rectangular bit matrix; rows generate a binary linear code."""

    __slots__ = ("bits",)

    def __init__(self, bits, n: int | None = None):
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.size == 0:
            if n is None:
                raise ValueError("column count required for an empty binary matrix")
            arr = arr.reshape(0, n)
        self.bits = np.ascontiguousarray(arr)

    @property
    def k(self) -> int:
        return self.bits.shape[0]

    @property
    def n(self) -> int:
        return self.bits.shape[1]

    def row(self, i: int) -> BinaryVector:
        return BinaryVector(self.bits[i])

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryMatrix) and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.bits.shape, self.bits.tobytes()))


def binary_row_reduce(b: BinaryMatrix) -> tuple[BinaryMatrix, int]:
    """Reduced row-echelon basis (zero rows dropped) and the rank."""
    basis, _ = gf2.rref(gf2.matrix_to_bits(b.bits))
    return BinaryMatrix(gf2.bits_to_matrix(basis, b.n), n=b.n), len(basis)


def binary_dual(b: BinaryMatrix) -> BinaryMatrix:
    """Generator of the dual under the standard dot product."""
    kern = gf2.kernel_basis(gf2.matrix_to_bits(b.bits), b.n)
    return BinaryMatrix(gf2.bits_to_matrix(kern, b.n), n=b.n)


def binary_gram_invertible(b: BinaryMatrix) -> bool:
    """Classical binary LCD test on a row-reduced generator: B B^T invertible."""
    rows = gf2.matrix_to_bits(b.bits)
    return gf2.is_invertible(gf2.gram_bits(rows))
