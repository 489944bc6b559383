"""Code objects: the mixed-alphabet code defined by a generator matrix and
the binary codes carrying Gray images and duals.

Additively, Z2^alpha x R^beta is F2^(alpha+2*beta) in the (a | s | t) bit
layout, so the codeword set is the F2 span of the generator rows together
with their u-multiples; that span has exactly 2^(k0+2k1+k2) elements.
Cached properties are computed once under a lock and are safe to read
concurrently.
"""

from __future__ import annotations

import threading

import numpy as np

from . import gf2, kernels, ring
from .ambient import BinaryVector, MixedVector, Shape, gray_inverse
from .errors import EnumerationCapError, InternalCheckError
from .linalg import (
    BinaryMatrix,
    MixedMatrix,
    StandardForm,
    binary_dual,
    binary_gram_invertible,
    binary_row_reduce,
    dual_generator,
    gram,
    standard_form,
)

DEFAULT_CAP_EXPONENT = 24


class _ZeroCodeDistance:
    """Marker for the minimum distance of the zero code (neither 0 nor inf,
    so comparisons in search never see a fake numeric value)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "zero-code"


ZERO_CODE_DISTANCE = _ZeroCodeDistance()


class BinaryCode:
    """Binary linear code; the stored generator is the reduced row-echelon
    basis, so equal codes have equal generators."""

    def __init__(self, generator: BinaryMatrix, cap_exponent: int = DEFAULT_CAP_EXPONENT):
        reduced, rank = binary_row_reduce(generator)
        self.generator = reduced
        self.n = generator.n
        self.dimension = rank
        self.cap_exponent = cap_exponent
        self._lock = threading.RLock()
        self._cache: dict[str, object] = {}

    def _once(self, key, fn):
        with self._lock:
            if key not in self._cache:
                self._cache[key] = fn()
            return self._cache[key]

    def dual(self) -> "BinaryCode":
        return BinaryCode(binary_dual(self.generator), self.cap_exponent)

    def is_lcd(self) -> bool:
        return binary_gram_invertible(self.generator)

    def min_distance(self, jobs: int = 1):
        def compute():
            if self.dimension == 0:
                return ZERO_CODE_DISTANCE
            if self.dimension > self.cap_exponent:
                bound = kernels.sampled_min_weight(self._packed(), 1 << 16)
                raise EnumerationCapError(
                    f"2^{self.dimension} codewords exceed the 2^{self.cap_exponent} cap",
                    upper_bound=bound,
                )
            return int(kernels.min_weight(self._packed(), jobs=jobs))

        return self._once("min_distance", compute)

    def _packed(self) -> np.ndarray:
        return kernels.pack_bit_rows(self.generator.bits.reshape(-1, self.n))

    def contains(self, v: BinaryVector) -> bool:
        rows = gf2.matrix_to_bits(self.generator.bits)
        basis, pivots = gf2.rref(rows)
        return gf2.in_span(gf2.pack_row(v.bits), basis, pivots)

    def same_codewords(self, other: "BinaryCode") -> bool:
        return self.n == other.n and self.generator == other.generator

    def codewords(self) -> set[BinaryVector]:
        if self.dimension > self.cap_exponent:
            raise EnumerationCapError(
                f"2^{self.dimension} codewords exceed the 2^{self.cap_exponent} cap"
            )
        table = kernels.span_table(self._packed())
        return {BinaryVector(kernels.unpack_bit_row(w, self.n)) for w in table}


class Code:
    """Mixed-alphabet linear code defined by a generator matrix."""

    def __init__(self, generator: MixedMatrix, cap_exponent: int = DEFAULT_CAP_EXPONENT):
        self.generator = generator
        self.shape: Shape = generator.shape
        self.cap_exponent = cap_exponent
        self._lock = threading.RLock()
        self._cache: dict[str, object] = {}

    @classmethod
    def from_rows(cls, rows: list[MixedVector], shape: Shape | None = None, **kw) -> "Code":
        return cls(MixedMatrix.from_rows(rows, shape), **kw)

    def _once(self, key, fn):
        with self._lock:
            if key not in self._cache:
                self._cache[key] = fn()
            return self._cache[key]

    # ---- structure ----

    def standard_form(self) -> StandardForm:
        return self._once("sf", lambda: standard_form(self.generator))

    def type_tuple(self) -> tuple[int, int, int, int, int]:
        return self.standard_form().type_tuple

    def dimension(self) -> int:
        """log2 of the codeword count."""
        dim = self.standard_form().dimension
        flat = self._f2_basis()[0]
        if len(flat) != dim:
            raise InternalCheckError(
                f"standard form dimension {dim} != F2 span rank {len(flat)}"
            )
        return dim

    def size(self) -> int:
        return 1 << self.dimension()

    def _f2_basis(self) -> tuple[list[int], list[int]]:
        """rref basis of {rows, u*rows} in the flat (a|s|t) bit layout."""

        def compute():
            flat = np.concatenate(
                [self.generator.flatten_f2(), self.generator.scaled_rows_by_u().flatten_f2()]
            )
            return gf2.rref(gf2.matrix_to_bits(flat))

        return self._once("f2", compute)

    # ---- enumeration ----

    def codewords(self) -> set[MixedVector]:
        basis, _ = self._f2_basis()
        if len(basis) > self.cap_exponent:
            raise EnumerationCapError(
                f"2^{len(basis)} codewords exceed the 2^{self.cap_exponent} cap:"
                " too large to enumerate"
            )
        width = self.shape.alpha + 2 * self.shape.beta
        flat = gf2.bits_to_matrix(basis, width)
        table = kernels.span_table(kernels.pack_bit_rows(flat.reshape(-1, width)))
        out = set()
        for w in table:
            m = MixedMatrix.from_flat_f2(kernels.unpack_bit_row(w, width), self.shape)
            out.add(m.row(0))
        return out

    def contains(self, v: MixedVector) -> bool:
        basis, pivots = self._f2_basis()
        flat = MixedMatrix.from_rows([v]).flatten_f2()[0]
        return gf2.in_span(gf2.pack_row(flat), basis, pivots)

    def same_codewords(self, other: "Code") -> bool:
        return self.shape == other.shape and self._f2_basis()[0] == other._f2_basis()[0]

    # ---- Gray side ----

    def gray_image(self) -> BinaryCode:
        def compute():
            basis, _ = self._f2_basis()
            width = self.shape.alpha + 2 * self.shape.beta
            flat = gf2.bits_to_matrix(basis, width)
            a = flat[:, : self.shape.alpha]
            s = flat[:, self.shape.alpha : self.shape.alpha + self.shape.beta]
            t = flat[:, self.shape.alpha + self.shape.beta :]
            img = np.concatenate([a, t, s ^ t], axis=1)
            return BinaryCode(BinaryMatrix(img, n=self.shape.n), self.cap_exponent)

        return self._once("gray", compute)

    def min_lee_distance(self, jobs: int = 1):
        """Least Lee weight of a nonzero codeword, equal to the least Hamming
        weight in the Gray image."""
        return self.gray_image().min_distance(jobs=jobs)

    # ---- duality ----

    def dual(self, strategy: str = "gray") -> "Code":
        """Dual code. `gray`: invert the Gray map on the binary dual of the
        Gray image. `structural`: the standard-form dual template."""
        if strategy == "gray":
            bdual = binary_dual(self.gray_image().generator)
            rows = [
                gray_inverse(BinaryVector(bdual.bits[i]), self.shape)
                for i in range(bdual.k)
            ]
            return Code(MixedMatrix.from_rows(rows, self.shape), self.cap_exponent)
        if strategy == "structural":
            return Code(dual_generator(self.standard_form()), self.cap_exponent)
        raise ValueError(f"unknown dual strategy {strategy!r}")

    def is_self_orthogonal(self) -> bool:
        return not gram(self.generator).any()

    # ---- projections / separability ----

    def projection_alpha(self) -> BinaryCode:
        """Projection onto the binary block (u-multiples project to zero)."""
        return BinaryCode(
            BinaryMatrix(self.generator.bits, n=self.shape.alpha), self.cap_exponent
        )

    def projection_beta(self) -> "Code":
        """Projection onto the ring block, as a code of shape (0, beta)."""
        if self.shape.beta == 0:
            raise ValueError("code has no ring block to project onto")
        shape = Shape(0, self.shape.beta)
        return Code(
            MixedMatrix(shape, np.zeros((self.generator.k, 0), np.uint8), self.generator.ring),
            self.cap_exponent,
        )

    def is_separable(self) -> bool:
        """C equals the product of its projections iff the sizes agree."""
        if self.shape.alpha == 0 or self.shape.beta == 0:
            return True  # one projection is the whole code, the other is trivial
        total = self.projection_alpha().dimension + self.projection_beta().dimension()
        if total > self.cap_exponent:
            raise EnumerationCapError(
                f"projection product dimension {total} exceeds cap {self.cap_exponent}"
            )
        return self.dimension() == total
