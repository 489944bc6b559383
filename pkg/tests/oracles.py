"""Independent brute-force oracles for the test suite.

Deliberately naive and structurally unlike the package code: spans are
enumerated over all 4^k coefficient tuples, duals by scanning the whole
ambient space, weights from the definition tables. Nothing here imports
package internals beyond the plain data containers.
"""

from __future__ import annotations

import itertools

U, V = 2, 3


def mul(a: int, b: int) -> int:
    s1, t1 = a & 1, a >> 1
    s2, t2 = b & 1, b >> 1
    return (s1 & s2) | (((s1 & t2) ^ (t1 & s2)) << 1)


MUL = [[mul(a, b) for b in range(4)] for a in range(4)]
THETA = [0, 1, 0, 1]
LEE = [0, 1, 2, 1]


def vadd(v: tuple, w: tuple) -> tuple:
    return tuple(x ^ y for x, y in zip(v, w))


def smul(lam: int, v: tuple, alpha: int) -> tuple:
    return tuple(
        (x & THETA[lam]) if i < alpha else MUL[lam][x] for i, x in enumerate(v)
    )


def inner(v: tuple, w: tuple, alpha: int) -> int:
    bdot = 0
    for i in range(alpha):
        bdot ^= v[i] & w[i]
    acc = 2 * bdot
    for i in range(alpha, len(v)):
        acc ^= MUL[v[i]][w[i]]
    return acc


def span(rows: list[tuple], alpha: int, n: int) -> set[tuple]:
    out = set()
    for coeffs in itertools.product(range(4), repeat=len(rows)):
        v = tuple([0] * n)
        for lam, r in zip(coeffs, rows):
            v = vadd(v, smul(lam, r, alpha))
        out.add(v)
    return out


def ambient(alpha: int, beta: int):
    for bbits in itertools.product(range(2), repeat=alpha):
        for rpart in itertools.product(range(4), repeat=beta):
            yield bbits + rpart


def dual(code: set[tuple], alpha: int, beta: int) -> set[tuple]:
    return {
        v for v in ambient(alpha, beta) if all(inner(v, w, alpha) == 0 for w in code)
    }


def gray(v: tuple, alpha: int) -> tuple:
    a = v[:alpha]
    s = [x & 1 for x in v[alpha:]]
    t = [x >> 1 for x in v[alpha:]]
    return tuple(a) + tuple(t) + tuple(si ^ ti for si, ti in zip(s, t))


def lee_weight(v: tuple, alpha: int) -> int:
    return sum(v[:alpha]) + sum(LEE[x] for x in v[alpha:])


def min_lee(code: set[tuple], alpha: int):
    weights = [lee_weight(v, alpha) for v in code if any(v)]
    return min(weights) if weights else None


def is_lcd(rows: list[tuple], alpha: int, beta: int) -> bool:
    c = span(rows, alpha, alpha + beta)
    d = dual(c, alpha, beta)
    return c & d == {tuple([0] * (alpha + beta))}


def r_independent(rows: list[tuple], alpha: int) -> bool:
    """Literal sweep over all 4^k coefficient tuples."""
    n = len(rows[0])
    zero = tuple([0] * n)
    if any(r == zero for r in rows):
        return False
    for coeffs in itertools.product(range(4), repeat=len(rows)):
        total = zero
        terms = []
        for lam, r in zip(coeffs, rows):
            term = smul(lam, r, alpha)
            terms.append(term)
            total = vadd(total, term)
        if total == zero and any(t != zero for t in terms):
            return False
    return True


def binary_dual(rows: list[tuple], n: int) -> set[tuple]:
    out = []
    for cand in itertools.product(range(2), repeat=n):
        if all(sum(a & b for a, b in zip(cand, row)) % 2 == 0 for row in rows):
            out.append(cand)
    return set(out)


def binary_span(rows: list[tuple]) -> set[tuple]:
    out = set()
    for coeffs in itertools.product(range(2), repeat=len(rows)):
        v = tuple([0] * len(rows[0]))
        for c, r in zip(coeffs, rows):
            if c:
                v = vadd(v, r)
        out.add(v)
    return out


def ring_inverse_exists(mat: list[list[int]]) -> bool:
    """Exhaustive two-sided inverse search over R^(k x k), k <= 2."""
    k = len(mat)
    idx = list(range(k))

    def matmul(a, b):
        return [
            [
                _sum(MUL[a[i][l]][b[l][j]] for l in idx)
                for j in idx
            ]
            for i in idx
        ]

    def _sum(vals):
        acc = 0
        for v in vals:
            acc ^= v
        return acc

    ident = [[1 if i == j else 0 for j in idx] for i in idx]
    for flat in itertools.product(range(4), repeat=k * k):
        cand = [list(flat[i * k : (i + 1) * k]) for i in idx]
        if matmul(mat, cand) == ident and matmul(cand, mat) == ident:
            return True
    return False


def to_tuple_rows(m) -> list[tuple]:
    """MixedMatrix -> oracle row tuples (binary bits then ring codes)."""
    return [
        tuple(int(x) for x in m.bits[i]) + tuple(int(x) for x in m.ring[i])
        for i in range(m.k)
    ]
