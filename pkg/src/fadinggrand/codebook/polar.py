"""
CRC-aided polar codes.

The payload is extended with its CRC remainder, the k + width bits are placed on the most
reliable synthetic channels in ascending index order, frozen positions are zero, and the
code-word is u · F^{⊗n} with F = [[1, 0], [1, 1]] (no bit reversal).
"""

import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..config.code_tables import CRC_POLYNOMIALS, DEFAULT_CRC, poly_degree
from ..errors import InvalidArgumentError
from . import gf2
from .bch import poly_divmod
from .linear import LinearCode

logger = logging.getLogger(__name__)

# β = 2^(1/4), the polarization-weight expansion point
PW_BETA = 2 ** 0.25


@dataclass(frozen=True)
class CrcSpec:
    """
    CRC generator of degree `width`.

    `polynomial` holds the coefficients below the leading term (bit i = coefficient of x^i);
    the x^width term is implicit. width 0 means no CRC.
    """

    polynomial: int
    width: int

    def __post_init__(self):
        if self.width < 0:
            raise InvalidArgumentError("CRC width must be nonnegative")
        if self.width == 0:
            if self.polynomial:
                raise InvalidArgumentError("empty CRC must have polynomial 0")
            return
        if self.polynomial >> self.width:
            raise InvalidArgumentError(
                f"CRC polynomial {self.polynomial:#x} has degree >= width {self.width}")
        if not self.polynomial & 1:
            raise InvalidArgumentError("CRC polynomial must have constant term 1")

    @classmethod
    def none(cls):
        return cls(0, 0)

    @classmethod
    def from_hex(cls, text, width):
        """Parse a config value such as '0x621' (leading term implicit)."""
        try:
            value = int(str(text), 16) if isinstance(text, str) else int(text)
        except ValueError as exc:
            raise InvalidArgumentError(f"bad CRC polynomial {text!r}") from exc
        return cls(value, int(width))

    @classmethod
    def named(cls, name):
        full = CRC_POLYNOMIALS[name]
        width = poly_degree(full)
        return cls(full ^ (1 << width), width)

    @property
    def full_polynomial(self):
        return self.polynomial | (1 << self.width)

    def remainder(self, payload):
        """
        CRC bits of a payload: b(x) · x^width mod g(x), zero initial state.

        payload[0] is the highest-degree coefficient; the result is returned MSB first.
        """
        if self.width == 0:
            return np.zeros(0, dtype=np.uint8)
        value = 0
        for bit in payload:
            value = (value << 1) | int(bit)
        rem = poly_divmod(value << self.width, self.full_polynomial)[1]
        return np.array([(rem >> (self.width - 1 - i)) & 1 for i in range(self.width)],
                        dtype=np.uint8)

    def attach(self, payload):
        payload = gf2.as_bits(payload)
        return np.concatenate([payload, self.remainder(payload)])

    def check(self, bits):
        bits = gf2.as_bits(bits)
        if self.width == 0:
            return True
        payload, crc = bits[:-self.width], bits[-self.width:]
        return bool(np.array_equal(self.remainder(payload), crc))


def polar_transform(u):
    """
    x = u · F^{⊗n} over GF(2), along the last axis. The transform is its own inverse.
    """
    x = np.array(u, dtype=np.uint8)
    n = x.shape[-1]
    lead = x.shape[:-1]
    step = 1
    while step < n:
        view = x.reshape(*lead, -1, 2, step)
        view[..., 0, :] ^= view[..., 1, :]
        step *= 2
    return x


def _is_power_of_two(value):
    return value >= 1 and value & (value - 1) == 0


def beta_expand(index, beta=PW_BETA):
    """Σ_j bit_j(index) · β^j"""
    weight = 0.0
    exponent = 0
    while index:
        if index & 1:
            weight += beta ** exponent
        index >>= 1
        exponent += 1
    return weight


def polarization_weight_order(block_length):
    """
    Synthetic-channel indices sorted by ascending polarization weight (most reliable last).

    Args:
        block_length: Power of two

    Returns:
        list: permutation of range(block_length)
    """
    if not _is_power_of_two(block_length):
        raise InvalidArgumentError(f"block length {block_length} is not a power of two")
    weights = np.array([beta_expand(i) for i in range(block_length)])
    return np.argsort(weights, kind='stable').tolist()


def load_reliability_order(path):
    """Read a whitespace-separated list of 0-based indices, most reliable last."""
    text = Path(path).read_text()
    try:
        return [int(token) for token in text.split()]
    except ValueError as exc:
        raise InvalidArgumentError(f"reliability order {path} holds a non-integer token") from exc


@dataclass(frozen=True)
class PolarSpec:
    """
    Attributes:
        block_length: N, a power of two
        k: Payload bits
        info_set: Sorted indices carrying payload + CRC (size k + crc.width)
        crc: CrcSpec
    """

    block_length: int
    k: int
    info_set: tuple
    crc: CrcSpec

    @property
    def frozen_set(self):
        info = set(self.info_set)
        return tuple(i for i in range(self.block_length) if i not in info)

    def pre_transform(self, payload):
        u = np.zeros(self.block_length, dtype=np.uint8)
        u[list(self.info_set)] = self.crc.attach(payload)
        return u

    def encode(self, payload):
        return polar_transform(self.pre_transform(gf2.as_bits(payload, self.k)))

    def is_member(self, word):
        """Inverse transform, frozen positions zero, CRC passes."""
        u = polar_transform(gf2.as_bits(word, self.block_length))
        if np.any(u[list(self.frozen_set)]):
            return False
        return self.crc.check(u[list(self.info_set)])


def build_ca_polar(block_length, k, crc=None, reliability_order=None):
    """
    Build a CA-Polar code.

    Args:
        block_length: N, a power of two
        k: Payload length
        crc: CrcSpec (default: the 11-bit 5G CRC)
        reliability_order: Permutation of range(N), most reliable last
            (default: polarization_weight_order(N))

    Returns:
        tuple: (PolarSpec, LinearCode) with the natural (non-systematic) polar generator

    Raises:
        InvalidArgumentError: inconsistent sizes or a non-permutation order
    """
    crc = CrcSpec.named(DEFAULT_CRC) if crc is None else crc
    if not _is_power_of_two(block_length):
        raise InvalidArgumentError(f"block length {block_length} is not a power of two")
    if k < 1 or k + crc.width > block_length:
        raise InvalidArgumentError(
            f"k={k} with CRC width {crc.width} does not fit block length {block_length}")
    if reliability_order is None:
        reliability_order = polarization_weight_order(block_length)
    order = [int(i) for i in reliability_order]
    if sorted(order) != list(range(block_length)):
        raise InvalidArgumentError("reliability order is not a permutation of the block indices")

    info_size = k + crc.width
    spec = PolarSpec(block_length=block_length, k=k,
                     info_set=tuple(sorted(order[block_length - info_size:])), crc=crc)

    generator = np.array([spec.encode(row) for row in np.eye(k, dtype=np.uint8)], dtype=np.uint8)
    parity_check, _ = gf2.nullspace(generator, block_length)
    code = LinearCode(n=block_length, k=k, generator=generator, parity_check=parity_check,
                      kind='ca-polar', info_positions=(), structure=spec)
    logger.debug("CA-Polar(N=%d, k=%d, crc=%d): %d frozen", block_length, k, crc.width,
                 len(spec.frozen_set))
    return spec, code
