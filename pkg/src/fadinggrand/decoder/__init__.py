"""
Decoder module for fadinggrand.

GRAND query schedules (Hamming, logistic, logistic with Hamming tie-break, exact
reliability sum) and the decoding loop.
"""

from .grand import (
    DECODER_SCHEDULES,
    DecodeResult,
    QuerySchedule,
    RankPermutation,
    bit_flip_probability,
    grand_decode,
    noise_log_likelihood,
    rank_bits,
)
from .patterns import (
    eta,
    exact_eta_patterns,
    hamming_patterns,
    logistic_hamming_tie_patterns,
    logistic_patterns,
)

__all__ = [
    'grand_decode', 'rank_bits', 'QuerySchedule', 'DecodeResult', 'RankPermutation',
    'DECODER_SCHEDULES', 'bit_flip_probability', 'noise_log_likelihood',
    'hamming_patterns', 'logistic_patterns', 'logistic_hamming_tie_patterns',
    'exact_eta_patterns', 'eta',
]
