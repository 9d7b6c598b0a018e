"""
Alist reader.

Layout (1-based indices, zero entries are padding):
    n m
    max_col_degree max_row_degree
    n column degrees
    m row degrees
    n lines: row indices of each column
    m lines: column indices of each row
"""

import logging
from pathlib import Path

import numpy as np

from ..errors import AlistParseError
from .linear import from_parity_check

logger = logging.getLogger(__name__)


def _int_lines(text):
    """Non-blank lines as (1-based line number, list of ints)."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            lines.append((number, [int(token) for token in raw.split()]))
        except ValueError:
            raise AlistParseError(f"non-integer token in {raw.strip()!r}", line=number) from None
    return lines


def _take(lines, cursor, what):
    if cursor >= len(lines):
        raise AlistParseError(f"unexpected end of input while reading {what}",
                              line=lines[-1][0] if lines else 1)
    return lines[cursor]


def parse_alist(text):
    """
    Parse alist text into a dense parity-check matrix.

    Returns:
        np.ndarray: m × n uint8 matrix

    Raises:
        AlistParseError: malformed counts or indices, with the offending line number
    """
    lines = _int_lines(text)
    if not lines:
        raise AlistParseError("empty alist input", line=1)

    number, header = _take(lines, 0, "dimensions")
    if len(header) != 2 or min(header) < 1:
        raise AlistParseError("first line must be 'n m' with positive values", line=number)
    n, m = header

    number, maxima = _take(lines, 1, "maximum degrees")
    if len(maxima) != 2:
        raise AlistParseError("second line must hold the two maximum degrees", line=number)
    max_col, max_row = maxima

    number, col_degrees = _take(lines, 2, "column degrees")
    if len(col_degrees) != n or max(col_degrees) > max_col or min(col_degrees) < 0:
        raise AlistParseError(f"expected {n} column degrees <= {max_col}", line=number)
    number, row_degrees = _take(lines, 3, "row degrees")
    if len(row_degrees) != m or max(row_degrees) > max_row or min(row_degrees) < 0:
        raise AlistParseError(f"expected {m} row degrees <= {max_row}", line=number)

    matrix = np.zeros((m, n), dtype=np.uint8)
    cursor = 4
    for col in range(n):
        number, entries = _take(lines, cursor, f"column {col + 1}")
        cursor += 1
        rows = [e for e in entries if e != 0]
        if len(rows) != col_degrees[col] or len(entries) > max_col:
            raise AlistParseError(f"column {col + 1} lists {len(rows)} entries, "
                                  f"declared {col_degrees[col]}", line=number)
        for row in rows:
            if not 1 <= row <= m:
                raise AlistParseError(f"row index {row} out of range 1..{m}", line=number)
            matrix[row - 1, col] = 1

    for row in range(m):
        number, entries = _take(lines, cursor, f"row {row + 1}")
        cursor += 1
        cols = [e for e in entries if e != 0]
        if len(cols) != row_degrees[row] or len(entries) > max_row:
            raise AlistParseError(f"row {row + 1} lists {len(cols)} entries, "
                                  f"declared {row_degrees[row]}", line=number)
        for col in cols:
            if not 1 <= col <= n:
                raise AlistParseError(f"column index {col} out of range 1..{n}", line=number)
        if sorted(cols) != (np.flatnonzero(matrix[row]) + 1).tolist():
            raise AlistParseError(f"row {row + 1} disagrees with the column lists", line=number)

    return matrix


def load_alist(text):
    """
    Build a LinearCode from alist text (or a path to an alist file).

    Raises:
        AlistParseError: malformed input
        ConstructionError: rank-deficient parity-check matrix
    """
    if isinstance(text, Path):
        text = text.read_text()
    parity_check = parse_alist(text)
    code = from_parity_check(parity_check, kind='from-file')
    logger.debug("loaded alist code (n=%d, k=%d)", code.n, code.k)
    return code


def load_alist_file(path):
    return load_alist(Path(path))
