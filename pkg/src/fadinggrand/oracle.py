"""
Brute-force references for cross-checking the fast paths.

Everything here enumerates exhaustively and is capped to small sizes.
"""

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .codebook.linear import codewords
from .decoder.patterns import logistic_hamming_tie_key, symbol_logistic_weight
from .errors import OracleLimitError

MAX_PATTERN_BITS = 20
MAX_INFO_BITS = 20

METRICS = ('eta', 'logistic', 'hamming', 'logistic-hamming-tie')


@dataclass(frozen=True)
class SortedPatternTable:
    """All 2^N patterns (1-based rank tuples) with their weights, sorted by (weight, |S|, lex)."""

    patterns: tuple
    weights: tuple
    metric: str

    def __len__(self):
        return len(self.patterns)


def exhaustive_ml_decode(hard_word, rel, code):
    """
    Code-word minimizing Σ |rel| over the positions where it differs from hard_word.

    Ties go to the lexicographically smallest code-word.

    Raises:
        OracleLimitError: k > 20
    """
    if code.k > MAX_INFO_BITS:
        raise OracleLimitError(f"exhaustive ML needs k <= {MAX_INFO_BITS}, got {code.k}")
    book = codewords(code, limit=MAX_INFO_BITS)
    hard_word = np.asarray(hard_word, dtype=np.uint8).reshape(-1)
    rel = np.abs(np.asarray(rel, dtype=float).reshape(-1))
    costs = [math.fsum(rel[np.flatnonzero(row ^ hard_word)]) for row in book]
    # lexsort keys: last is primary
    order = np.lexsort(tuple(book[:, j] for j in range(code.n - 1, -1, -1)) + (np.array(costs),))
    return book[order[0]].copy()


def pattern_weight(pattern, rel, metric, q=1):
    if metric == 'hamming':
        return float(len(pattern))
    if metric == 'logistic':
        return float(sum(pattern))
    if metric == 'logistic-hamming-tie':
        return float(symbol_logistic_weight(pattern, q))
    return math.fsum(rel[r - 1] for r in pattern)


def brute_sort_patterns(rel, metric='eta', q=1):
    """
    Every subset of {1..N}, sorted by (weight, |S|, lexicographic).

    For 'hamming' the within-weight order is colexicographic, matching the Hamming generator.
    'logistic-hamming-tie' sorts by the full symbol-rank key with q bits per symbol.

    Args:
        rel: Reliabilities in rank order (their length sets N; values used by 'eta' only)
        metric: eta | logistic | hamming | logistic-hamming-tie
        q: Bits per symbol for logistic-hamming-tie

    Raises:
        OracleLimitError: N > 20, or N not divisible by q
    """
    if metric not in METRICS:
        raise OracleLimitError(f"unknown metric {metric!r}")
    rel = [float(v) for v in np.asarray(rel, dtype=float).reshape(-1)]
    n = len(rel)
    if n > MAX_PATTERN_BITS:
        raise OracleLimitError(f"brute sort needs N <= {MAX_PATTERN_BITS}, got {n}")
    if metric == 'logistic-hamming-tie' and (q < 1 or n % q):
        raise OracleLimitError(f"N={n} is not divisible by q={q}")
    subsets = [s for size in range(n + 1) for s in combinations(range(1, n + 1), size)]
    if metric == 'hamming':
        keys = [(len(s), tuple(reversed(s))) for s in subsets]
    elif metric == 'logistic-hamming-tie':
        keys = [logistic_hamming_tie_key(s, q) for s in subsets]
    else:
        keys = [(pattern_weight(s, rel, metric), len(s), s) for s in subsets]
    order = sorted(range(len(subsets)), key=keys.__getitem__)
    patterns = tuple(subsets[i] for i in order)
    return SortedPatternTable(
        patterns=patterns,
        weights=tuple(pattern_weight(p, rel, metric, q) for p in patterns),
        metric=metric,
    )


def analytic_uncoded_ber(snr_db):
    """Uncoded BPSK bit-error rate over Rayleigh fading: ½(1 - √(γ/(1+γ)))."""
    gamma = 10.0 ** (snr_db / 10.0)
    return 0.5 * (1.0 - math.sqrt(gamma / (1.0 + gamma)))


def analytic_uncoded_bler(snr_db, channel='rayleigh', modulation='bpsk', n=1):
    """
    Closed-form uncoded block-error rate, 1 - (1 - p)^n.

    Raises:
        OracleLimitError: any channel/modulation other than rayleigh/bpsk
    """
    if channel != 'rayleigh' or modulation != 'bpsk':
        raise OracleLimitError("closed form available for rayleigh + bpsk only")
    return 1.0 - (1.0 - analytic_uncoded_ber(snr_db)) ** n
