"""
Gray-mapped constellations, bit/symbol mapping, hard slicing and per-symbol LLRs.

Conventions:
- bit b maps to amplitude (1 - 2b) on each real axis; square QAM uses the 3GPP recursive
  Gray mapping per axis with even label bits on I and odd label bits on Q.
- The label of point index p is the q-bit binary expansion of p, MSB first.
- LLR sign: positive means bit 1 is more likely. Values are clamped to ±LLR_CLAMP.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import logsumexp

from .errors import InvalidArgumentError

LLR_CLAMP = 60.0

CONSTELLATION_BITS = {
    'bpsk': 1,
    'qpsk': 2,
    'qam16': 4,
    'qam64': 6,
}


@dataclass(frozen=True, eq=False)
class Constellation:
    """
    Attributes:
        name: bpsk | qpsk | qam16 | qam64
        points: complex array of 2^q unit-average-energy points, indexed by label value
        labels: (2^q, q) uint8 array, labels[p] is the bit label of points[p]
        q: bits per symbol
    """

    name: str
    points: np.ndarray
    labels: np.ndarray
    q: int

    @property
    def size(self):
        return self.points.size

    @property
    def bit_masks(self):
        """(q, 2^q) boolean array: bit_masks[j, p] is True when bit j of point p is 1."""
        return self.labels.T.astype(bool)


def _gray_pam(bits):
    """3GPP recursive Gray amplitude: a(b0, b1, ...) = (1-2b0) · (2^(len-1) - a(b1, ...))."""
    sign = 1 - 2 * int(bits[0])
    if len(bits) == 1:
        return sign
    return sign * ((1 << (len(bits) - 1)) - _gray_pam(bits[1:]))


def _label_table(q):
    values = np.arange(1 << q)
    return ((values[:, None] >> np.arange(q - 1, -1, -1)) & 1).astype(np.uint8)


@lru_cache(maxsize=None)
def get_constellation(name):
    """
    Built-in constellation by name (case-insensitive).

    Raises:
        InvalidArgumentError: unknown name
    """
    key = str(name).lower()
    if key not in CONSTELLATION_BITS:
        raise InvalidArgumentError(
            f"unknown constellation {name!r}; choose from {', '.join(CONSTELLATION_BITS)}")
    q = CONSTELLATION_BITS[key]
    labels = _label_table(q)
    if key == 'bpsk':
        points = (1.0 - 2.0 * labels[:, 0]).astype(complex)
    else:
        points = np.array([
            _gray_pam(label[0::2]) + 1j * _gray_pam(label[1::2]) for label in labels
        ], dtype=complex)
    points = points / np.sqrt(np.mean(np.abs(points) ** 2))
    points.setflags(write=False)
    labels.setflags(write=False)
    return Constellation(name=key, points=points, labels=labels, q=q)


def map_bits(word, cons):
    """
    Map a bit word to symbols, q consecutive bits per symbol.

    Raises:
        InvalidArgumentError: length not divisible by q
    """
    bits = np.asarray(word, dtype=np.uint8).reshape(-1)
    if bits.size % cons.q:
        raise InvalidArgumentError(f"word length {bits.size} is not divisible by q={cons.q}")
    weights = 1 << np.arange(cons.q - 1, -1, -1)
    indices = bits.reshape(-1, cons.q) @ weights
    return cons.points[indices]


def hard_slice(y_eq, cons):
    """Index of the nearest constellation point; ties go to the lowest index."""
    y_eq = np.asarray(y_eq)
    distances = np.abs(y_eq[..., None] - cons.points) ** 2
    return np.argmin(distances, axis=-1)


def demap_hard(symbols, cons):
    """Slice each symbol and concatenate the labels."""
    return cons.labels[hard_slice(np.atleast_1d(symbols), cons)].reshape(-1)


def _check_sigma2(sigma2):
    sigma2 = np.asarray(sigma2, dtype=float)
    if np.any(sigma2 <= 0):
        raise InvalidArgumentError("noise variance must be positive")
    return sigma2


def _distances(y, h, cons):
    y = np.atleast_1d(np.asarray(y, dtype=complex))
    h = np.broadcast_to(np.asarray(h, dtype=complex), y.shape)
    return np.abs(y[:, None] - h[:, None] * cons.points[None, :]) ** 2


def llr_maxlog(y, h, sigma2, cons):
    """
    Max-log LLRs for a frame of symbols.

    λ_j = (1/σ²) · (min_{x: bit j = 0} |y - h x|² - min_{x: bit j = 1} |y - h x|²)

    Args:
        y: Received samples (length M)
        h: Channel coefficients, broadcastable to y
        sigma2: Noise variances, broadcastable to y, all > 0
        cons: Constellation

    Returns:
        np.ndarray: length M·q LLRs, symbol-major
    """
    sigma2 = _check_sigma2(sigma2)
    dist = _distances(y, h, cons)
    sigma2 = np.broadcast_to(sigma2, (dist.shape[0],))
    masks = cons.bit_masks
    llrs = np.empty((dist.shape[0], cons.q))
    for j in range(cons.q):
        min0 = dist[:, ~masks[j]].min(axis=1)
        min1 = dist[:, masks[j]].min(axis=1)
        llrs[:, j] = (min0 - min1) / sigma2
    return np.clip(llrs, -LLR_CLAMP, LLR_CLAMP).reshape(-1)


def llr_exact(y, h, sigma2, cons):
    """Exact LLRs, log Σ_{bit=1} e^{-d/σ²} - log Σ_{bit=0} e^{-d/σ²}, via log-sum-exp."""
    sigma2 = _check_sigma2(sigma2)
    dist = _distances(y, h, cons)
    sigma2 = np.broadcast_to(sigma2, (dist.shape[0],))
    metric = -dist / sigma2[:, None]
    masks = cons.bit_masks
    llrs = np.empty((dist.shape[0], cons.q))
    for j in range(cons.q):
        llrs[:, j] = (logsumexp(metric[:, masks[j]], axis=1)
                      - logsumexp(metric[:, ~masks[j]], axis=1))
    return np.clip(llrs, -LLR_CLAMP, LLR_CLAMP).reshape(-1)


def llr_maxlog_symbol(y, h, sigma2, cons):
    return llr_maxlog([y], [h], sigma2, cons)


def llr_exact_symbol(y, h, sigma2, cons):
    return llr_exact([y], [h], sigma2, cons)
