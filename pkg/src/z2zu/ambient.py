"""Vectors in Z2^alpha x R^beta: scalar action, inner product, Gray map.

A vector keeps its binary block as a uint8 0/1 array and its R block as a
uint8 array of ring codes. The scalar action twists the binary block
through the residue map: r * (a | x) = (residue(r) * a | r * x).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import ring
from .errors import ShapeMismatchError


@dataclass(frozen=True)
class Shape:
    """Ambient shape: alpha binary coordinates, beta ring coordinates."""

    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0 or self.alpha + self.beta < 1:
            raise ValueError(f"invalid shape ({self.alpha}, {self.beta})")

    @property
    def n(self) -> int:
        """Length of the binary image: alpha + 2*beta."""
        return self.alpha + 2 * self.beta


class BinaryVector:
    """Plain bit vector with explicit length."""

    __slots__ = ("bits",)

    def __init__(self, bits):
        self.bits = np.ascontiguousarray(bits, dtype=np.uint8)

    def __len__(self) -> int:
        return len(self.bits)

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryVector) and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((len(self.bits), self.bits.tobytes()))

    def __xor__(self, other: "BinaryVector") -> "BinaryVector":
        return BinaryVector(self.bits ^ other.bits)

    def __repr__(self):
        return f"BinaryVector({''.join(map(str, self.bits))})"

    def weight(self) -> int:
        return int(self.bits.sum())

    def dot(self, other: "BinaryVector") -> int:
        if len(self) != len(other):
            raise ShapeMismatchError("binary vectors of different length")
        return int((self.bits & other.bits).sum() & 1)


class MixedVector:
    """One element of Z2^alpha x R^beta."""

    __slots__ = ("shape", "bits", "ring")

    def __init__(self, shape: Shape, bits, ring_part):
        self.shape = shape
        self.bits = np.ascontiguousarray(bits, dtype=np.uint8)
        self.ring = np.ascontiguousarray(ring_part, dtype=np.uint8)
        if len(self.bits) != shape.alpha or len(self.ring) != shape.beta:
            raise ShapeMismatchError(
                f"vector blocks ({len(self.bits)}, {len(self.ring)}) do not match shape "
                f"({shape.alpha}, {shape.beta})"
            )

    @classmethod
    def zero(cls, shape: Shape) -> "MixedVector":
        return cls(shape, np.zeros(shape.alpha, np.uint8), np.zeros(shape.beta, np.uint8))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MixedVector)
            and self.shape == other.shape
            and np.array_equal(self.bits, other.bits)
            and np.array_equal(self.ring, other.ring)
        )

    def __hash__(self):
        return hash((self.shape, self.bits.tobytes(), self.ring.tobytes()))

    def __repr__(self):
        a = " ".join(str(b) for b in self.bits)
        x = " ".join(ring.to_token(c) for c in self.ring)
        return f"MixedVector({a} | {x})"

    def is_zero(self) -> bool:
        return not self.bits.any() and not self.ring.any()

    def __add__(self, other: "MixedVector") -> "MixedVector":
        if self.shape != other.shape:
            raise ShapeMismatchError(f"cannot add vectors of shapes {self.shape} and {other.shape}")
        return MixedVector(self.shape, self.bits ^ other.bits, ring.add(self.ring, other.ring))

    def scale(self, r: int) -> "MixedVector":
        """Scalar action r * (a | x) = (residue(r)*a | r*x)."""
        return MixedVector(self.shape, self.bits * ring.residue(r), ring.mul(r, self.ring))

    def lee_weight(self) -> int:
        return int(self.bits.sum()) + int(ring.lee_weight(self.ring).sum())

    def gray(self) -> BinaryVector:
        """(a | s + u t) -> (a, t, s + t); additive and weight-preserving."""
        s = ring.s_bit(self.ring)
        t = ring.t_bit(self.ring)
        return BinaryVector(np.concatenate([self.bits, t, s ^ t]))


def inner_product(v: MixedVector, w: MixedVector) -> int:
    """[v, w] = u * (binary dot) + (R dot), a ring code."""
    if v.shape != w.shape:
        raise ShapeMismatchError(
            f"inner product of shapes {v.shape} and {w.shape} is undefined"
        )
    bdot = int((v.bits & w.bits).sum() & 1)
    acc = ring.U * bdot
    prods = ring.mul(v.ring, w.ring)
    if len(prods):
        acc = ring.add(acc, int(np.bitwise_xor.reduce(prods)))
    return acc


def gray_inverse(b: BinaryVector, shape: Shape) -> MixedVector:
    """Invert the Gray map: second block is t, third block plus t is s."""
    if len(b) != shape.n:
        raise ShapeMismatchError(
            f"binary vector of length {len(b)} does not match shape image length {shape.n}"
        )
    a = b.bits[: shape.alpha]
    t = b.bits[shape.alpha : shape.alpha + shape.beta]
    st = b.bits[shape.alpha + shape.beta :]
    s = st ^ t
    return MixedVector(shape, a, s | (t << 1))
