"""Small GF(2) linear algebra on int bitsets.

Rows are Python ints; bit i of a row is column i. Everything is exact and
sized for the generator matrices handled here (tens of columns); the large
span enumerations live in `kernels`.
"""

from __future__ import annotations

import numpy as np


def pack_row(bits) -> int:
    """uint8 0/1 vector -> int bitset."""
    x = 0
    for i, b in enumerate(bits):
        if b:
            x |= 1 << i
    return x


def unpack_row(x: int, n: int) -> np.ndarray:
    out = np.zeros(n, dtype=np.uint8)
    i = 0
    while x:
        if x & 1:
            out[i] = 1
        x >>= 1
        i += 1
    return out


def rref(rows: list[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon basis and its pivot columns (ascending)."""
    basis: list[int] = []
    pivots: list[int] = []
    for row in rows:
        cur = row
        for b, p in zip(basis, pivots):
            if (cur >> p) & 1:
                cur ^= b
        if cur == 0:
            continue
        p = (cur & -cur).bit_length() - 1
        # reduce existing rows by the new pivot
        basis = [b ^ cur if (b >> p) & 1 else b for b in basis]
        basis.append(cur)
        pivots.append(p)
        order = sorted(range(len(pivots)), key=lambda i: pivots[i])
        basis = [basis[i] for i in order]
        pivots = [pivots[i] for i in order]
    return basis, pivots


def rank(rows: list[int]) -> int:
    return len(rref(rows)[0])


def in_span(vec: int, basis: list[int], pivots: list[int]) -> bool:
    cur = vec
    for b, p in zip(basis, pivots):
        if (cur >> p) & 1:
            cur ^= b
    return cur == 0


def kernel_basis(rows: list[int], n: int) -> list[int]:
    """Basis of {x : parity(row & x) = 0 for every row}, length-n vectors."""
    basis, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    out = []
    for j in free:
        v = 1 << j
        for b, p in zip(basis, pivots):
            if (b >> j) & 1:
                v |= 1 << p
        out.append(v)
    return out


def parity(x: int) -> int:
    return x.bit_count() & 1


def gram_bits(rows: list[int]) -> list[int]:
    """B B^T over F2 as bitset rows: entry (i,j) = parity(|row_i & row_j|)."""
    k = len(rows)
    out = []
    for i in range(k):
        acc = 0
        for j in range(k):
            if (rows[i] & rows[j]).bit_count() & 1:
                acc |= 1 << j
        out.append(acc)
    return out


def is_invertible(rows: list[int]) -> bool:
    """Square matrix given as bitset rows; invertible iff full rank."""
    return rank(rows) == len(rows)


def matrix_to_bits(m: np.ndarray) -> list[int]:
    return [pack_row(row) for row in m]


def bits_to_matrix(rows: list[int], n: int) -> np.ndarray:
    if not rows:
        return np.zeros((0, n), dtype=np.uint8)
    return np.stack([unpack_row(r, n) for r in rows])
