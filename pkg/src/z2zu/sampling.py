"""Seeded samplers for randomized checks (claims engine and test sweeps).

All draws go through counter-based Philox streams so sweeps are
reproducible and independent of evaluation order.
"""

from __future__ import annotations

import numpy as np

from .ambient import Shape
from .linalg import BinaryMatrix, MixedMatrix, binary_gram_invertible, gram, standard_form
from .search import random_generator, trial_rng


def stream(seed: int, index: int) -> np.random.Generator:
    return trial_rng(seed, index)


def random_mixed(shape: Shape, k: int, rng: np.random.Generator) -> MixedMatrix:
    return random_generator(shape, k, rng)


def random_shape(rng: np.random.Generator, max_alpha: int = 5, max_beta: int = 5) -> Shape:
    while True:
        alpha = int(rng.integers(0, max_alpha + 1))
        beta = int(rng.integers(0, max_beta + 1))
        if alpha + beta >= 1:
            return Shape(alpha, beta)


def random_binary_lcd(k: int, n: int, rng: np.random.Generator, max_tries: int = 500) -> BinaryMatrix:
    """Random k x n binary generator with invertible B B^T (rejection)."""
    for _ in range(max_tries):
        b = BinaryMatrix(rng.integers(0, 2, size=(k, n), dtype=np.uint8))
        if binary_gram_invertible(b):
            return b
    raise RuntimeError(f"no binary LCD generator found for k={k}, n={n}")


def random_self_orthogonal_standard(
    shape: Shape,
    k: int,
    rng: np.random.Generator,
    unit_free: bool,
    max_tries: int = 2000,
) -> MixedMatrix | None:
    """Standard-form generator of a random self-orthogonal code (rejection).

    With unit_free=True the ring block is drawn from {0, u} only, so the
    result is annihilated by u (k1 = 0).
    """
    for _ in range(max_tries):
        bits = rng.integers(0, 2, size=(k, shape.alpha), dtype=np.uint8)
        if unit_free:
            ringp = rng.integers(0, 2, size=(k, shape.beta), dtype=np.uint8) * 2
        else:
            ringp = rng.integers(0, 4, size=(k, shape.beta), dtype=np.uint8)
        m = MixedMatrix(shape, bits, ringp)
        if gram(m).any():
            continue
        sf = standard_form(m)
        if sf.matrix.k == 0:
            continue
        return sf.matrix
    return None


def random_row_unit_matrix(shape: Shape, k: int, rng: np.random.Generator) -> MixedMatrix:
    """Random matrix where every row gets at least one ring-block unit."""
    if shape.beta == 0:
        raise ValueError("row-unit sampling needs a ring block")
    m = random_generator(shape, k, rng)
    ringp = m.ring.copy()
    for i in range(k):
        if not (ringp[i] & 1).any():
            pos = int(rng.integers(0, shape.beta))
            ringp[i, pos] = 1 + 2 * int(rng.integers(0, 2))
    return MixedMatrix(shape, m.bits, ringp)
