"""
Noise-pattern generators.

A pattern is a sorted tuple of 1-based reliability ranks to flip (rank 1 = least reliable
bit). Every generator is lazy and emits each subset of {1..N} exactly once.

Orders:
    hamming                 |S|, then colexicographic
    logistic                Σ ranks, then |S|, then lexicographic
    logistic-hamming-tie    Σ symbol ranks, then |S|, then lexicographic on the symbol-rank
                            tuple, then colexicographic on the bit ranks
    exact-eta               Σ rel[rank], then |S|, then lexicographic
"""

import heapq
import math
from itertools import product

import numpy as np

from ..errors import InvalidArgumentError


def _check_length(n):
    if n < 1:
        raise InvalidArgumentError(f"pattern length must be >= 1, got {n}")


# ================================
# Hamming order
# ================================

def _colex_subsets(size, top):
    """size-subsets of {1..top} in colexicographic order."""
    if size == 0:
        yield ()
        return
    for largest in range(size, top + 1):
        for rest in _colex_subsets(size - 1, largest - 1):
            yield rest + (largest,)


def hamming_patterns(n):
    """All subsets of {1..n} by increasing Hamming weight."""
    _check_length(n)
    for size in range(n + 1):
        yield from _colex_subsets(size, n)


# ================================
# Logistic order (basic ORBGRAND)
# ================================

def _min_distinct_sum(count, low):
    return count * low + count * (count - 1) // 2


def _max_distinct_sum(count, high):
    return count * high - count * (count - 1) // 2


def distinct_partitions(total, count, low, high):
    """
    Ascending tuples of `count` distinct integers in [low, high] summing to `total`,
    in lexicographic order.
    """
    if count == 0:
        if total == 0:
            yield ()
        return
    for first in range(low, high + 1):
        rest = total - first
        if rest < _min_distinct_sum(count - 1, first + 1):
            break
        if rest > _max_distinct_sum(count - 1, high):
            continue
        for tail in distinct_partitions(rest, count - 1, first + 1, high):
            yield (first,) + tail


def max_parts(total):
    """Largest s with 1 + 2 + ... + s <= total."""
    return int((math.isqrt(8 * total + 1) - 1) // 2)


def logistic_patterns(n):
    """All subsets of {1..n} by increasing logistic weight Σ ranks."""
    _check_length(n)
    for weight in range(n * (n + 1) // 2 + 1):
        for size in range(min(max_parts(weight), n) + 1):
            yield from distinct_partitions(weight, size, 1, n)


def logistic_weight(pattern):
    return sum(pattern)


# ================================
# Logistic weight on symbol ranks, Hamming tie-break
# ================================

def _bounded_multisets(total, count, low, high, multiplicity, run):
    """
    Nondecreasing tuples of `count` values in [low, high] summing to `total`, each value
    repeated at most `multiplicity` times, in lexicographic order. `run` is how many
    copies of `low` precede the tuple.
    """
    if count == 0:
        if total == 0:
            yield ()
        return
    for value in range(low, high + 1):
        used = run if value == low else 0
        if used >= multiplicity:
            continue
        rest = total - value
        if rest < (count - 1) * value:
            break
        if rest > (count - 1) * high:
            continue
        for tail in _bounded_multisets(rest, count - 1, value, high, multiplicity, used + 1):
            yield (value,) + tail


def _expand_symbols(symbol_ranks, q):
    """Bit-rank subsets for a multiset of symbol ranks, colexicographic on the bit ranks."""
    counts = {}
    for rank in symbol_ranks:
        counts[rank] = counts.get(rank, 0) + 1
    # highest symbol outermost: its bits are the largest elements of the tuple
    groups = [
        [tuple((symbol - 1) * q + bit for bit in choice) for choice in _colex_subsets(count, q)]
        for symbol, count in sorted(counts.items(), reverse=True)
    ]
    for choice in product(*groups):
        yield tuple(bit for group in reversed(choice) for bit in group)


def symbol_rank(bit_rank, q):
    return -(-bit_rank // q)


def logistic_hamming_tie_patterns(n, q):
    """
    Logistic order on symbol-granular ranks with Hamming weight as the tie-break.

    The q bits of a symbol share its rank, so no order is implied between them.
    """
    _check_length(n)
    if q < 1 or n % q:
        raise InvalidArgumentError(f"pattern length {n} is not divisible by q={q}")
    symbols = n // q
    for weight in range(q * symbols * (symbols + 1) // 2 + 1):
        for size in range(min(weight, n) + 1):
            for ranks in _bounded_multisets(weight, size, 1, symbols, q, 0):
                yield from _expand_symbols(ranks, q)


def symbol_logistic_weight(pattern, q):
    return sum(symbol_rank(r, q) for r in pattern)


def logistic_hamming_tie_key(pattern, q):
    """Sort key of the logistic-hamming-tie order; reversing the bit ranks gives colex."""
    symbols = tuple(symbol_rank(r, q) for r in pattern)
    return (sum(symbols), len(pattern), symbols, tuple(reversed(pattern)))


# ================================
# Exact reliability-sum order (SGRAND)
# ================================

def eta(pattern, rel):
    """Σ rel over the flipped ranks (rel in rank order, 0-based storage)."""
    return math.fsum(rel[r - 1] for r in pattern)


def exact_eta_patterns(rel):
    """
    All subsets by increasing η = Σ rel[rank], with ties on (|S|, lexicographic).

    Each popped pattern S with largest rank m < N pushes S ∪ {m+1} and (S \\ {m}) ∪ {m+1};
    both keys are >= the parent's, so the heap pops in sorted order and every subset
    is reached exactly once.

    Args:
        rel: Reliabilities in rank order, nondecreasing and nonnegative

    Raises:
        InvalidArgumentError: rel is not nondecreasing or has negative entries
    """
    rel = [float(v) for v in np.asarray(rel, dtype=float).reshape(-1)]
    n = len(rel)
    _check_length(n)
    if rel[0] < 0:
        raise InvalidArgumentError("reliabilities must be nonnegative")
    if any(b < a for a, b in zip(rel, rel[1:])):
        raise InvalidArgumentError("exact-eta order needs reliabilities in nondecreasing rank order")

    heap = [(0.0, 0, ())]
    while heap:
        _, _, pattern = heapq.heappop(heap)
        yield pattern
        largest = pattern[-1] if pattern else 0
        if largest == n:
            continue
        grown = pattern + (largest + 1,)
        heapq.heappush(heap, (eta(grown, rel), len(grown), grown))
        if pattern:
            shifted = pattern[:-1] + (largest + 1,)
            heapq.heappush(heap, (eta(shifted, rel), len(shifted), shifted))
