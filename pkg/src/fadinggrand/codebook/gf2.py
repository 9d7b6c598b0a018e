"""
GF(2) linear algebra on numpy uint8 matrices, plus the bit-packed syndrome table that
serves as GRAND's membership predicate.
"""

from functools import reduce
from operator import xor

import numpy as np

from ..errors import InvalidArgumentError


def as_bits(values, length=None):
    """
    Coerce a sequence of 0/1 values to a 1-D uint8 array.

    Args:
        values: Iterable of binary values (or a '0101' string)
        length: Expected length, checked when given

    Returns:
        np.ndarray: uint8 vector
    """
    if isinstance(values, str):
        values = [int(ch) for ch in values]
    bits = np.asarray(values, dtype=np.uint8).reshape(-1)
    if np.any(bits > 1):
        raise InvalidArgumentError("bit vectors may only hold 0 and 1")
    if length is not None and bits.size != length:
        raise InvalidArgumentError(f"expected {length} bits, got {bits.size}")
    return bits


def rref(matrix):
    """
    Reduced row echelon form over GF(2).

    Returns:
        tuple: (reduced matrix without zero rows, list of pivot columns)
    """
    work = np.array(matrix, dtype=np.uint8) & 1
    rows, cols = work.shape
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        hits = np.nonzero(work[row:, col])[0]
        if hits.size == 0:
            continue
        pivot = row + hits[0]
        if pivot != row:
            work[[row, pivot]] = work[[pivot, row]]
        others = np.nonzero(work[:, col])[0]
        others = others[others != row]
        work[others] ^= work[row]
        pivots.append(col)
        row += 1
    return work[:row], pivots


def rank(matrix):
    return len(rref(matrix)[1])


def nullspace(matrix, n=None):
    """
    Basis of {x : matrix · xᵀ = 0} over GF(2).

    The basis is systematic on the free (non-pivot) columns of the row-reduced matrix.

    Returns:
        tuple: (basis as a (n - rank) × n matrix, list of free columns)
    """
    matrix = np.asarray(matrix, dtype=np.uint8)
    if n is None:
        n = matrix.shape[1]
    if matrix.size == 0:
        return np.eye(n, dtype=np.uint8), list(range(n))
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for i, col in enumerate(free):
        basis[i, col] = 1
        for r, pivot in enumerate(pivots):
            basis[i, pivot] = reduced[r, col]
    return basis, free


def matmul(a, b):
    """Matrix product over GF(2)."""
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64) % 2).astype(np.uint8)


class SyndromeTable:
    """
    Bit-packed parity-check columns.

    Column j of H is stored as a Python int whose bit r is H[r, j]. The syndrome of a word is
    the XOR of the columns at its 1-positions, so flipping a bit costs one word-parallel XOR.
    """

    def __init__(self, parity_check):
        parity_check = np.asarray(parity_check, dtype=np.uint8)
        self.n = parity_check.shape[1]
        weights = [1 << r for r in range(parity_check.shape[0])]
        self.columns = [
            sum(w for w, bit in zip(weights, parity_check[:, j]) if bit)
            for j in range(self.n)
        ]

    def syndrome(self, word):
        return reduce(xor, (self.columns[j] for j in np.flatnonzero(word)), 0)

    def is_zero(self, word):
        return self.syndrome(word) == 0
