"""
GRAND decoding loop.

Patterns are generated in the rank domain and mapped through the rank permutation at
query time. Membership is tested on bit-packed syndromes: the syndrome of the hard word is
computed once and each query XORs the parity-check columns of its flipped bits.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.special import expit, log_expit

from ..codebook import gf2
from ..errors import InvalidArgumentError
from .patterns import (
    eta,
    exact_eta_patterns,
    hamming_patterns,
    logistic_hamming_tie_patterns,
    logistic_patterns,
    logistic_weight,
    symbol_logistic_weight,
)

logger = logging.getLogger(__name__)

SCHEDULE_KINDS = ('hamming', 'logistic', 'logistic-hamming-tie', 'exact-eta')

DECODER_SCHEDULES = {
    'grand-hard': 'hamming',
    'orbgrand': 'logistic',
    'orbgrand-ham-tie': 'logistic-hamming-tie',
    'sgrand': 'exact-eta',
}


@dataclass(frozen=True, eq=False)
class RankPermutation:
    """
    Attributes:
        perm: perm[r] is the 0-based bit position holding rank r + 1
        sorted_rel: Reliabilities in rank order (nondecreasing)
    """

    perm: np.ndarray
    sorted_rel: np.ndarray

    @property
    def is_uninformative(self):
        return self.sorted_rel.size == 0 or self.sorted_rel[0] == self.sorted_rel[-1]

    def to_positions(self, pattern):
        return [int(self.perm[r - 1]) for r in pattern]


@dataclass(frozen=True)
class QuerySchedule:
    """
    Attributes:
        kind: hamming | logistic | logistic-hamming-tie | exact-eta
        max_queries: Abandonment budget B, None for unlimited
        bits_per_symbol: q, used by logistic-hamming-tie
    """

    kind: str = 'logistic'
    max_queries: Optional[int] = None
    bits_per_symbol: int = 1

    def __post_init__(self):
        if self.kind not in SCHEDULE_KINDS:
            raise InvalidArgumentError(f"unknown schedule {self.kind!r}")
        if self.max_queries is not None and self.max_queries < 1:
            raise InvalidArgumentError("max_queries must be >= 1")
        if self.bits_per_symbol < 1:
            raise InvalidArgumentError("bits_per_symbol must be >= 1")

    @classmethod
    def for_decoder(cls, decoder, max_queries=None, bits_per_symbol=1):
        if decoder not in DECODER_SCHEDULES:
            raise InvalidArgumentError(f"decoder {decoder!r} has no query schedule")
        return cls(DECODER_SCHEDULES[decoder], max_queries, bits_per_symbol)


@dataclass(frozen=True, eq=False)
class DecodeResult:
    """
    Attributes:
        word: Decoded code-word, or the unmodified hard word when abandoned
        abandoned: Budget exhausted without a code-book hit
        queries: Patterns tested, the empty pattern included
        found_weight: Schedule weight of the accepted pattern (0 when abandoned)
        flips: 0-based bit positions inverted to reach `word`
    """

    word: np.ndarray
    abandoned: bool
    queries: int
    found_weight: float = 0.0
    flips: tuple = ()


def rank_bits(rel):
    """
    Order bit positions by ascending reliability, ties by ascending position.

    Raises:
        InvalidArgumentError: negative reliabilities
    """
    rel = np.asarray(rel, dtype=float).reshape(-1)
    if np.any(rel < 0) or np.any(np.isnan(rel)):
        raise InvalidArgumentError("reliabilities must be nonnegative")
    perm = np.argsort(rel, kind='stable')
    return RankPermutation(perm=perm, sorted_rel=rel[perm])


def pattern_stream(schedule, ranking, n):
    """The schedule's pattern generator, or Hamming order when the ranking is uninformative."""
    if schedule.kind == 'hamming' or ranking is None or ranking.is_uninformative:
        return hamming_patterns(n)
    if schedule.kind == 'logistic':
        return logistic_patterns(n)
    if schedule.kind == 'logistic-hamming-tie':
        return logistic_hamming_tie_patterns(n, schedule.bits_per_symbol)
    return exact_eta_patterns(ranking.sorted_rel)


def pattern_weight(pattern, schedule, ranking):
    if schedule.kind == 'hamming' or ranking is None or ranking.is_uninformative:
        return float(len(pattern))
    if schedule.kind == 'logistic':
        return float(logistic_weight(pattern))
    if schedule.kind == 'logistic-hamming-tie':
        return float(symbol_logistic_weight(pattern, schedule.bits_per_symbol))
    return eta(pattern, ranking.sorted_rel)


def grand_decode(hard_word, rel, schedule, code):
    """
    Guess noise patterns in schedule order until the corrected word is a code-word.

    Args:
        hard_word: Demapped word (length n)
        rel: Per-bit nonnegative reliabilities, or None for the hamming schedule
        schedule: QuerySchedule
        code: LinearCode

    Returns:
        DecodeResult

    Raises:
        InvalidArgumentError: length mismatch, or rel missing for a soft schedule
    """
    word = gf2.as_bits(hard_word, code.n)
    if rel is None:
        if schedule.kind != 'hamming':
            raise InvalidArgumentError(f"schedule {schedule.kind} needs reliabilities")
        ranking = None
        perm = np.arange(code.n)
    else:
        rel = np.asarray(rel, dtype=float).reshape(-1)
        if rel.size != code.n:
            raise InvalidArgumentError(f"expected {code.n} reliabilities, got {rel.size}")
        ranking = rank_bits(rel)
        perm = ranking.perm

    table = code.syndromes
    columns = [table.columns[p] for p in perm]
    syndrome = table.syndrome(word)
    budget = schedule.max_queries

    queries = 0
    for pattern in pattern_stream(schedule, ranking, code.n):
        queries += 1
        residual = syndrome
        for r in pattern:
            residual ^= columns[r - 1]
        if residual == 0:
            flips = tuple(sorted(int(perm[r - 1]) for r in pattern))
            decoded = word.copy()
            decoded[list(flips)] ^= 1
            return DecodeResult(word=decoded, abandoned=False, queries=queries,
                                found_weight=pattern_weight(pattern, schedule, ranking),
                                flips=flips)
        if budget is not None and queries >= budget:
            break

    logger.debug("abandoned after %d queries", queries)
    return DecodeResult(word=word, abandoned=True, queries=queries)


# ================================
# Bit-flip model
# ================================

def bit_flip_probability(llr):
    """Probability that the hard decision is wrong: e^{-|λ|} / (1 + e^{-|λ|})."""
    return expit(-np.abs(np.asarray(llr, dtype=float)))


def noise_log_likelihood(flips, rel):
    """
    log Pr(noise pattern) for independent bits with |λ| = rel.

    Equals -Σ log(1 + e^{-|λᵢ|}) - Σ_{flipped} |λᵢ|, so ordering by it is ordering by η.

    Args:
        flips: 0-based bit positions of the pattern
        rel: Per-bit reliabilities |λ|
    """
    rel = np.abs(np.asarray(rel, dtype=float))
    flipped = np.zeros(rel.size, dtype=bool)
    flipped[list(flips)] = True
    return float(np.sum(log_expit(-rel[flipped])) + np.sum(log_expit(rel[~flipped])))
