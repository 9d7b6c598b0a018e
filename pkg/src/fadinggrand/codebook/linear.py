"""
Linear block codes over GF(2).

A LinearCode carries both a generator and a parity-check matrix. Words (code-words,
demapped words, noise patterns) are plain 1-D uint8 numpy arrays of fixed length.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Any, Optional

import numpy as np

from ..errors import ConstructionError, InvalidArgumentError
from . import gf2

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LinearCode:
    """
    An (n, k) binary linear code.

    Attributes:
        n: Code length in bits
        k: Information length in bits
        generator: k × n matrix, identity on `info_positions`
        parity_check: (n - k) × n matrix with generator · parity_checkᵀ = 0
        kind: Construction tag
        info_positions: Columns where the generator is the identity (empty if non-systematic)
        structure: Optional structural description (CyclicCodeSpec, PolarSpec)
    """

    n: int
    k: int
    generator: np.ndarray
    parity_check: np.ndarray
    kind: str
    info_positions: tuple = ()
    structure: Optional[Any] = field(default=None, repr=False)

    @property
    def rate(self):
        return self.k / self.n

    @property
    def is_systematic(self):
        return tuple(self.info_positions) == tuple(range(self.k))

    @cached_property
    def syndromes(self):
        """Bit-packed parity-check columns used by the decoder hot path."""
        return gf2.SyndromeTable(self.parity_check)

    def encode(self, info):
        return encode(info, self)

    def is_member(self, word):
        return is_member(word, self)


def encode(info, code):
    """
    Encode k information bits into an n-bit code-word (c = b · G).

    Raises:
        InvalidArgumentError: if len(info) != k
    """
    info = gf2.as_bits(info, code.k)
    if code.k == 0:
        return np.zeros(code.n, dtype=np.uint8)
    return gf2.matmul(info, code.generator)


def is_member(word, code):
    """
    Code-book membership test.

    For ca-polar codes the structural check is used (inverse polar transform, frozen
    positions zero, CRC passes); every other kind tests H · wordᵀ = 0 with the bit-packed table.
    """
    word = gf2.as_bits(word, code.n)
    if code.kind == 'ca-polar' and code.structure is not None:
        return code.structure.is_member(word)
    return code.syndromes.is_zero(word)


def from_generator(generator, kind, structure=None):
    """
    Build a LinearCode from any full-rank generator matrix.

    The generator is brought to reduced row echelon form, which is the identity on its
    pivot columns; the parity-check matrix is the nullspace of that form.
    """
    generator = np.asarray(generator, dtype=np.uint8) & 1
    k, n = generator.shape
    reduced, pivots = gf2.rref(generator)
    if len(pivots) != k:
        raise ConstructionError(f"generator has rank {len(pivots)}, expected {k}")
    parity_check, _ = gf2.nullspace(reduced, n)
    code = LinearCode(n=n, k=k, generator=reduced, parity_check=parity_check,
                      kind=kind, info_positions=tuple(pivots), structure=structure)
    logger.debug("built %s code (n=%d, k=%d)", kind, n, k)
    return code


def from_parity_check(parity_check, kind, structure=None):
    """
    Build a LinearCode from a full-rank parity-check matrix.

    The generator is derived by Gaussian elimination; its systematic (information)
    positions are the free columns of the reduced parity-check matrix.

    Raises:
        ConstructionError: if the parity-check matrix is rank deficient
    """
    parity_check = np.asarray(parity_check, dtype=np.uint8) & 1
    m, n = parity_check.shape
    if gf2.rank(parity_check) != m:
        raise ConstructionError("parity-check matrix is rank deficient")
    generator, free = gf2.nullspace(parity_check, n)
    code = LinearCode(n=n, k=n - m, generator=generator, parity_check=parity_check,
                      kind=kind, info_positions=tuple(free), structure=structure)
    logger.debug("built %s code (n=%d, k=%d)", kind, n, n - m)
    return code


def random_linear_code(n, k, seed):
    """
    Random systematic code with generator [I_k | P], P drawn from a seeded stream.

    Deterministic for a given (n, k, seed).
    """
    if not 0 < k < n:
        raise InvalidArgumentError(f"random linear code needs 0 < k < n, got n={n}, k={k}")
    rng = np.random.default_rng(seed)
    parity = rng.integers(0, 2, size=(k, n - k), dtype=np.uint8)
    generator = np.hstack([np.eye(k, dtype=np.uint8), parity])
    parity_check = np.hstack([parity.T, np.eye(n - k, dtype=np.uint8)])
    return LinearCode(n=n, k=k, generator=generator, parity_check=parity_check,
                      kind='random-linear', info_positions=tuple(range(k)))


HAMMING_7_4_PARITY = np.array([
    [1, 1, 0],
    [1, 0, 1],
    [0, 1, 1],
    [1, 1, 1],
], dtype=np.uint8)


def hamming_7_4():
    """Systematic Hamming(7,4) code: code-word = info followed by 3 parity bits."""
    generator = np.hstack([np.eye(4, dtype=np.uint8), HAMMING_7_4_PARITY])
    parity_check = np.hstack([HAMMING_7_4_PARITY.T, np.eye(3, dtype=np.uint8)])
    return LinearCode(n=7, k=4, generator=generator, parity_check=parity_check,
                      kind='hamming', info_positions=tuple(range(4)))


def uncoded(n):
    """Trivial rate-1 code: every length-n word is a member."""
    return LinearCode(n=n, k=n, generator=np.eye(n, dtype=np.uint8),
                      parity_check=np.zeros((0, n), dtype=np.uint8),
                      kind='uncoded', info_positions=tuple(range(n)))


def pad_code(code, multiple):
    """
    Extend a code with zero-valued pad bits up to the next multiple of `multiple`.

    The generator gets zero columns and the parity check one unit row per pad bit, so a
    padded word is a member only if its pad bits are zero. Returns `code` unchanged when
    no padding is needed.
    """
    pad = -code.n % multiple
    if pad == 0:
        return code
    n = code.n + pad
    generator = np.hstack([code.generator, np.zeros((code.k, pad), dtype=np.uint8)])
    parity_check = np.vstack([
        np.hstack([code.parity_check, np.zeros((code.parity_check.shape[0], pad), dtype=np.uint8)]),
        np.hstack([np.zeros((pad, code.n), dtype=np.uint8), np.eye(pad, dtype=np.uint8)]),
    ])
    logger.debug("padded %s code from n=%d to n=%d", code.kind, code.n, n)
    return LinearCode(n=n, k=code.k, generator=generator, parity_check=parity_check,
                      kind=code.kind, info_positions=code.info_positions)


def codewords(code, limit=20):
    """
    Enumerate the whole code-book (2^k words, rows of the returned matrix).

    The i-th row encodes the info word whose bits are the binary digits of i (MSB first),
    so rows come out in lexicographic order of the information word.
    """
    if code.k > limit:
        raise InvalidArgumentError(f"refusing to enumerate 2^{code.k} code-words")
    infos = np.array(list(product((0, 1), repeat=code.k)), dtype=np.uint8).reshape(-1, code.k)
    if code.k == 0:
        return np.zeros((1, code.n), dtype=np.uint8)
    return gf2.matmul(infos, code.generator)
