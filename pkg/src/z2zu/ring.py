"""Arithmetic in the four-element local ring R = Z2 + uZ2 with u^2 = 0.

Elements are coded in two bits, code = s + 2t for the element s + u*t:

    0 -> 0,   1 -> 1,   2 -> u,   3 -> 1+u (text token `v`)

All operations work elementwise on plain ints and on numpy integer arrays,
so vectors over R are just uint8 arrays of codes.
"""

from __future__ import annotations

import numpy as np

ZERO = 0
ONE = 1
U = 2
V = 3  # 1 + u

ELEMENTS = (ZERO, ONE, U, V)

TOKENS = "01uv"
TOKEN_TO_CODE = {"0": ZERO, "1": ONE, "u": U, "v": V}

# Lee weights of 0, 1, u, 1+u.
LEE_TABLE = np.array([0, 1, 2, 1], dtype=np.uint8)


def add(a, b):
    """Sum in R; characteristic 2, so componentwise XOR of (s, t)."""
    return a ^ b


def mul(a, b):
    """Product in R: (s1+u t1)(s2+u t2) = s1 s2 + u(s1 t2 + t1 s2)."""
    s1, t1 = a & 1, (a >> 1) & 1
    s2, t2 = b & 1, (b >> 1) & 1
    s = s1 & s2
    t = (s1 & t2) ^ (t1 & s2)
    return s | (t << 1)


def residue(a):
    """Reduction R -> Z2 modulo the maximal ideal {0, u}: s + u*t -> s."""
    return a & 1


def is_unit(a):
    """Units are exactly 1 and 1+u, i.e. the elements with residue 1."""
    return (a & 1) == 1


def unit_inverse(a: int) -> int:
    """Inverse of a unit; both units square to 1, so each is self-inverse."""
    if not is_unit(a):
        raise ValueError(f"ring element {a!r} is not a unit")
    return a


def lee_weight(a):
    """Lee weight: 0 for 0, 1 for the units, 2 for u."""
    return LEE_TABLE[a]


def s_bit(a):
    """Coefficient of 1."""
    return a & 1


def t_bit(a):
    """Coefficient of u."""
    return (a >> 1) & 1


def to_token(a: int) -> str:
    return TOKENS[a]


def from_token(tok: str) -> int:
    try:
        return TOKEN_TO_CODE[tok]
    except KeyError:
        raise ValueError(f"unknown ring token {tok!r}") from None
