"""Span-enumeration kernels on bit-packed rows.

Minimum-weight search enumerates every element of an F2 row span (up to
2^24 by default), which dominates runtime for distance computations. The
hot loop is compiled with numba when available; setting the environment
variable ``Z2ZU_PURE_NUMPY=1`` (or numba being absent) selects a
vectorized pure-numpy path. Both paths enumerate the same set and return
identical results; ``benchmarks/bench_min_weight.py`` compares them.

Rows passed to `min_weight` must be F2-independent so that index 0 is the
only encoding of the zero element.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

PURE_NUMPY = os.environ.get("Z2ZU_PURE_NUMPY", "") not in ("", "0")

if not PURE_NUMPY:
    try:
        from numba import njit

        NUMBA_AVAILABLE = True
    except ImportError:
        NUMBA_AVAILABLE = False
else:
    NUMBA_AVAILABLE = False

USE_NUMBA = NUMBA_AVAILABLE and not PURE_NUMPY


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def pack_bit_rows(bits: np.ndarray) -> np.ndarray:
    """(k, n) uint8 0/1 matrix -> (k, ceil(n/64)) uint64, little-endian bits."""
    bits = np.atleast_2d(np.asarray(bits, dtype=np.uint8))
    k, n = bits.shape
    nw = max(1, (n + 63) // 64)
    padded = np.zeros((k, nw * 64), dtype=np.uint8)
    padded[:, :n] = bits
    chunks = padded.reshape(k, nw, 8, 8)
    bytes_ = np.packbits(chunks[:, :, :, ::-1], axis=3).reshape(k, nw, 8)
    return bytes_.view(np.uint64).reshape(k, nw).copy()


def unpack_bit_row(words: np.ndarray, n: int) -> np.ndarray:
    bytes_ = words.astype(np.uint64).view(np.uint8).reshape(-1, 8)
    bits = np.unpackbits(bytes_, axis=1, bitorder="little").reshape(-1)
    return bits[:n].astype(np.uint8)


def span_table(rows: np.ndarray) -> np.ndarray:
    """All 2^k XOR combinations of the packed rows, index = coefficient bits."""
    k, nw = rows.shape
    table = np.zeros((1 << k, nw), dtype=np.uint64)
    for j in range(k):
        size = 1 << j
        table[size : 2 * size] = table[:size] ^ rows[j]
    return table


def _word_weights(words: np.ndarray) -> np.ndarray:
    return np.bitwise_count(words).sum(axis=-1, dtype=np.int64)


if USE_NUMBA:
    _M1 = np.uint64(0x5555555555555555)
    _M2 = np.uint64(0x3333333333333333)
    _M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    _H01 = np.uint64(0x0101010101010101)
    _ONE = np.uint64(1)
    _TWO = np.uint64(2)
    _FOUR = np.uint64(4)
    _S56 = np.uint64(56)

    @njit(cache=True, nogil=True)
    def _popcount64(x):
        x = x - ((x >> _ONE) & _M1)
        x = (x & _M2) + ((x >> _TWO) & _M2)
        x = (x + (x >> _FOUR)) & _M4
        return (x * _H01) >> _S56

    @njit(cache=True, nogil=True)
    def _min_weight_range_numba(rows, start, stop):
        k, nw = rows.shape
        cur = np.zeros(nw, dtype=np.uint64)
        g = start ^ (start >> 1)
        for j in range(k):
            if (g >> j) & 1:
                for w in range(nw):
                    cur[w] ^= rows[j, w]
        best = np.int64(1) << 62
        if start != 0:
            wt = np.int64(0)
            for w in range(nw):
                wt += np.int64(_popcount64(cur[w]))
            if wt < best:
                best = wt
        i = start
        while i + 1 < stop:
            i += 1
            j = 0
            while ((i >> j) & 1) == 0:
                j += 1
            for w in range(nw):
                cur[w] ^= rows[j, w]
            wt = np.int64(0)
            for w in range(nw):
                wt += np.int64(_popcount64(cur[w]))
            if wt < best:
                best = wt
        return best


def _min_weight_range_numpy(rows: np.ndarray, start: int, stop: int, lo_bits: int = 14) -> int:
    """Min weight over span elements with index in [start, stop), subset encoding."""
    k, nw = rows.shape
    b = min(k, lo_bits)
    block = 1 << b
    if start % block or stop % block:
        raise ValueError("range must be aligned to the low-bit block size")
    table = span_table(rows[:b])
    best = np.iinfo(np.int64).max
    hi = rows[b:]
    for h in range(start // block, stop // block):
        base = np.zeros(nw, dtype=np.uint64)
        m = h
        j = 0
        while m:
            if m & 1:
                base ^= hi[j]
            m >>= 1
            j += 1
        wts = _word_weights(table ^ base)
        if h == 0:
            wts[0] = np.iinfo(np.int64).max
        best = min(best, int(wts.min()))
    return best


def _aligned_chunks(total: int, jobs: int, block: int) -> list[tuple[int, int]]:
    jobs = max(1, min(jobs, max(1, total // block)))
    n_blocks = total // block
    out = []
    lo = 0
    for i in range(jobs):
        hi = ((n_blocks * (i + 1)) // jobs) * block
        if hi > lo:
            out.append((lo, hi))
        lo = hi
    return out


def min_weight(rows: np.ndarray, jobs: int = 1) -> int | None:
    """Minimum Hamming weight over the nonzero span of F2-independent rows.

    Returns None for an empty row set (zero code). Result does not depend
    on `jobs` or on the backend.
    """
    rows = np.asarray(rows, dtype=np.uint64)
    k = rows.shape[0]
    if k == 0:
        return None
    total = 1 << k
    if USE_NUMBA:
        block = 1
        chunks = _aligned_chunks(total, jobs, block)
        if len(chunks) == 1:
            return int(_min_weight_range_numba(rows, 0, total))
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            mins = pool.map(lambda c: _min_weight_range_numba(rows, c[0], c[1]), chunks)
            return int(min(mins))
    block = 1 << min(k, 14)
    chunks = _aligned_chunks(total, jobs, block)
    return min(_min_weight_range_numpy(rows, lo, hi) for lo, hi in chunks)


def sampled_min_weight(rows: np.ndarray, n_samples: int, seed: int = 0) -> int | None:
    """Upper bound on min weight from random nonzero combinations plus the rows."""
    rows = np.asarray(rows, dtype=np.uint64)
    k, nw = rows.shape
    if k == 0:
        return None
    best = int(_word_weights(rows).min())
    rng = np.random.Generator(np.random.Philox(key=seed))
    batch = 1 << 12
    done = 0
    while done < n_samples:
        m = min(batch, n_samples - done)
        coeffs = rng.integers(0, 2, size=(m, k), dtype=np.uint8)
        coeffs[coeffs.sum(axis=1) == 0, 0] = 1
        picked = np.where(coeffs[:, :, None] == 1, rows[None, :, :], np.uint64(0))
        elems = np.bitwise_xor.reduce(picked, axis=1)
        best = min(best, int(_word_weights(elems).min()))
        done += m
    return best


def span_has_orthogonal_nonzero(span_rows: np.ndarray, check_rows: np.ndarray) -> bool:
    """True iff some nonzero span element has zero F2 dot with every check row.

    Literal enumeration of the span; intended for small dimensions (the
    LCD intersection cross-check).
    """
    span_rows = np.asarray(span_rows, dtype=np.uint64)
    table = span_table(span_rows)
    ok = np.ones(len(table), dtype=bool)
    for c in np.atleast_2d(np.asarray(check_rows, dtype=np.uint64)):
        par = _word_weights(table & c) & 1
        ok &= par == 0
    ok[0] = False
    return bool(ok.any())


def warmup() -> None:
    """Trigger JIT compilation so timed paths measure only the computation."""
    rows = pack_bit_rows(np.eye(2, dtype=np.uint8))
    min_weight(rows)
