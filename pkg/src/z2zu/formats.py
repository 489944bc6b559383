"""Text formats: mixed matrices/vectors, binary matrices, key=value records.

Matrix format (bit-exact round trip):

    alpha=<int> beta=<int>
    <alpha binary tokens> | <beta ring tokens>      one line per row
    ...

Ring tokens are 0, 1, u, v (= 1+u). A header-only file is the 0-row
generator of the zero code. Vector format is one row without the header.
Binary matrices (concat inputs) are plain lines of 0/1 tokens.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from pathlib import Path

import numpy as np

from . import ring
from .ambient import BinaryVector, MixedVector, Shape
from .errors import ParseError
from .linalg import BinaryMatrix, MixedMatrix

MAX_COLUMNS = 1 << 20  # shape overflow guard

_HEADER_RE = re.compile(r"^alpha=(\d+)\s+beta=(\d+)\s*$")


def _read_text(source) -> str:
    if isinstance(source, Path):
        return source.read_text(encoding="utf-8")
    if isinstance(source, str):
        return source
    return source.read()


def _tokens_with_cols(text: str, offset: int) -> list[tuple[str, int]]:
    return [(m.group(0), m.start() + offset + 1) for m in re.finditer(r"\S+", text)]


def _parse_row(line: str, lineno: int, shape: Shape) -> tuple[np.ndarray, np.ndarray]:
    if line.count("|") != 1:
        raise ParseError("row must contain exactly one `|` separator", lineno, 1)
    left, right = line.split("|")
    ltoks = _tokens_with_cols(left, 0)
    rtoks = _tokens_with_cols(right, len(left) + 1)
    if len(ltoks) != shape.alpha:
        raise ParseError(f"expected {shape.alpha} binary tokens, got {len(ltoks)}", lineno, 1)
    if len(rtoks) != shape.beta:
        raise ParseError(
            f"expected {shape.beta} ring tokens, got {len(rtoks)}", lineno, len(left) + 2
        )
    bits = np.zeros(shape.alpha, np.uint8)
    ringv = np.zeros(shape.beta, np.uint8)
    for i, (tok, col) in enumerate(ltoks):
        if tok not in ("0", "1"):
            raise ParseError(f"unknown binary token {tok!r}", lineno, col)
        bits[i] = int(tok)
    for i, (tok, col) in enumerate(rtoks):
        if tok not in ring.TOKEN_TO_CODE:
            raise ParseError(f"unknown ring token {tok!r}", lineno, col)
        ringv[i] = ring.TOKEN_TO_CODE[tok]
    return bits, ringv


def parse_matrix(source) -> MixedMatrix:
    """Parse the matrix format from a path, string, or stream."""
    text = _read_text(source)
    lines = text.splitlines()
    body = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip()]
    if not body:
        raise ParseError("empty input: missing `alpha=<int> beta=<int>` header", 1, 1)
    lineno, header = body[0]
    m = _HEADER_RE.match(header.strip())
    if not m:
        raise ParseError("malformed header, expected `alpha=<int> beta=<int>`", lineno, 1)
    alpha, beta = int(m.group(1)), int(m.group(2))
    if alpha + beta < 1:
        raise ParseError("alpha + beta must be at least 1", lineno, 1)
    if alpha > MAX_COLUMNS or beta > MAX_COLUMNS:
        raise ParseError("shape overflow", lineno, 1)
    shape = Shape(alpha, beta)
    bit_rows, ring_rows = [], []
    for lineno, line in body[1:]:
        b, r = _parse_row(line, lineno, shape)
        bit_rows.append(b)
        ring_rows.append(r)
    if not bit_rows:
        return MixedMatrix.empty(shape)
    return MixedMatrix(shape, np.stack(bit_rows), np.stack(ring_rows))


def serialize_matrix(m: MixedMatrix) -> str:
    lines = [f"alpha={m.shape.alpha} beta={m.shape.beta}"]
    for i in range(m.k):
        left = " ".join(str(int(b)) for b in m.bits[i])
        right = " ".join(ring.to_token(int(c)) for c in m.ring[i])
        lines.append(f"{left} | {right}".strip())
    return "\n".join(lines) + "\n"


def parse_vector(line: str, shape: Shape | None = None) -> MixedVector:
    """Parse `1 0 | u v 0`; the shape is inferred when not given."""
    if shape is None:
        if line.count("|") != 1:
            raise ParseError("vector must contain exactly one `|` separator", 1, 1)
        left, right = line.split("|")
        shape = Shape(len(left.split()), len(right.split()))
    bits, ringv = _parse_row(line, 1, shape)
    return MixedVector(shape, bits, ringv)


def serialize_vector(v: MixedVector) -> str:
    left = " ".join(str(int(b)) for b in v.bits)
    right = " ".join(ring.to_token(int(c)) for c in v.ring)
    return f"{left} | {right}".strip()


def parse_binary_matrix(source) -> BinaryMatrix:
    text = _read_text(source)
    rows = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        toks = line.split()
        for tok in toks:
            if tok not in ("0", "1"):
                raise ParseError(f"unknown binary token {tok!r}", lineno, line.index(tok) + 1)
        if width is None:
            width = len(toks)
        elif len(toks) != width:
            raise ParseError(f"ragged row: expected {width} tokens, got {len(toks)}", lineno, 1)
        rows.append([int(t) for t in toks])
    if not rows:
        raise ParseError("empty binary matrix", 1, 1)
    return BinaryMatrix(np.array(rows, dtype=np.uint8))


def serialize_binary_matrix(b: BinaryMatrix) -> str:
    return "\n".join(" ".join(str(int(x)) for x in row) for row in b.bits) + "\n"


def matrix_to_line(m: MixedMatrix) -> str:
    """One-line encoding for logs: header and rows joined by `;`."""
    return serialize_matrix(m).strip().replace("\n", ";")


def matrix_from_line(line: str) -> MixedMatrix:
    return parse_matrix(line.replace(";", "\n"))


def _format_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    return str(v)


def render_record(items: dict | Iterable[tuple[str, object]]) -> str:
    """Line-delimited key=value record (LF newlines)."""
    pairs = items.items() if isinstance(items, dict) else items
    return "\n".join(f"{k}={_format_value(v)}" for k, v in pairs) + "\n"
