"""Vectorized kernels for sweep-scale field computations.

Arrays hold little-endian coefficient rows, one field element per row, as
int64; all values stay far below overflow for q <= 2**20. The scalar
operations in gfext are the semantic reference and the tests pin exact
agreement, so these kernels are an acceleration, never a second truth.
"""

from __future__ import annotations

import numpy as np

from .gfext import FieldElement, FieldParams


def coeff_rows(field: FieldParams) -> np.ndarray:
    """(q-1, n) rows of the nonzero elements in ascending encoding order."""
    enc = np.arange(1, field.q, dtype=np.int64)
    rows = np.empty((field.q - 1, field.n), dtype=np.int64)
    for i in range(field.n):
        rows[:, i] = enc % field.p
        enc //= field.p
    return rows


def mul_matrix(field: FieldParams, coeffs) -> np.ndarray:
    """n x n matrix of multiplication by the element with the given coeffs.

    Column j holds the coefficient vector of a * x**j mod the field modulus,
    so for a row vector v the product a*v has coefficients v @ M.T.
    """
    p, n = field.p, field.n
    mod = field.modulus.coeffs
    col = [int(c) % p for c in coeffs]
    cols = [col]
    for _ in range(n - 1):
        prev = cols[-1]
        lead = prev[-1]
        col = [0] + list(prev[:-1])
        if lead:
            col = [(c - lead * m) % p for c, m in zip(col, mod)]
        cols.append(col)
    return np.array(cols, dtype=np.int64).T


def scale_rows(field: FieldParams, rows: np.ndarray, coeffs) -> np.ndarray:
    """Product of one fixed element with every row."""
    if field.n == 1:
        return rows * (int(coeffs[0]) % field.p) % field.p
    return rows @ mul_matrix(field, coeffs).T % field.p


def rowwise_mul(field: FieldParams, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-by-row field products of two equally shaped coefficient arrays."""
    p, n = field.p, field.n
    if n == 1:
        return a * b % p
    conv = np.zeros((a.shape[0], 2 * n - 1), dtype=np.int64)
    for i in range(n):
        col = a[:, i]
        for j in range(n):
            conv[:, i + j] += col * b[:, j]
    mod = np.array(field.modulus.coeffs[:n], dtype=np.int64)
    for d in range(2 * n - 2, n - 1, -1):
        c = conv[:, d] % p
        conv[:, d - n : d] -= c[:, None] * mod
    return conv[:, :n] % p


def row_encodings(field: FieldParams, rows: np.ndarray) -> np.ndarray:
    """Integer encoding of every row."""
    weights = field.p ** np.arange(field.n, dtype=np.int64)
    return rows @ weights


def rows_to_elements(field: FieldParams, rows: np.ndarray) -> tuple[FieldElement, ...]:
    """Materialize coefficient rows as FieldElement values."""
    return tuple(FieldElement(tuple(int(c) for c in row), field) for row in rows)
