"""
Fading and noise synthesis.

Every frame gets its own counter-based random stream keyed by (master seed, SNR index,
frame index), so a frame's channel and noise never depend on which worker simulates it.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError

FADING_KINDS = ('awgn', 'rayleigh', 'rician')


@dataclass(frozen=True)
class FadingModel:
    kind: str = 'rayleigh'
    k_factor: float = 0.0

    def __post_init__(self):
        if self.kind not in FADING_KINDS:
            raise InvalidArgumentError(f"unknown fading model {self.kind!r}")
        if self.k_factor < 0:
            raise InvalidArgumentError("Rician K-factor must be nonnegative")


@dataclass(frozen=True)
class SnrPoint:
    """Per-symbol Es/N0 in dB; with unit-energy symbols and unit-power fading σ² = 1/SNR."""

    snr_db: float

    @property
    def sigma2(self):
        return 10.0 ** (-self.snr_db / 10.0)

    @property
    def linear(self):
        return 1.0 / self.sigma2


@dataclass(frozen=True, eq=False)
class ChannelRealization:
    """Per-symbol fading coefficients h and noise variances sigma2 (both length M)."""

    h: np.ndarray
    sigma2: np.ndarray

    def __post_init__(self):
        if self.h.shape != self.sigma2.shape:
            raise InvalidArgumentError("h and sigma2 must have the same length")
        if np.any(self.sigma2 <= 0):
            raise InvalidArgumentError("noise variances must be positive")

    @property
    def num_symbols(self):
        return self.h.size

    def bit_variances(self, q):
        """Per-bit noise variance vector: each σᵢ² repeated q times."""
        return np.repeat(self.sigma2, q)


def frame_rng(master_seed, snr_index, frame_index):
    """Independent Philox stream for one frame."""
    seed = np.random.SeedSequence(master_seed, spawn_key=(snr_index, frame_index))
    return np.random.Generator(np.random.Philox(seed))


def complex_gaussian(rng, size, variance=1.0):
    """Circularly symmetric complex Gaussian samples, E|z|² = variance."""
    scale = np.sqrt(np.asarray(variance, dtype=float) / 2.0)
    return scale * (rng.standard_normal(size) + 1j * rng.standard_normal(size))


def draw_channel(model, num_symbols, snr, rng):
    """
    Draw independent per-symbol fading coefficients.

    Rician: h = √(k/(1+k)) + √(1/(1+k)) · h_rayleigh, which has E|h|² = 1 for every k.

    Args:
        model: FadingModel
        num_symbols: M >= 1
        snr: SnrPoint
        rng: numpy Generator

    Returns:
        ChannelRealization
    """
    if num_symbols < 1:
        raise InvalidArgumentError("a frame needs at least one symbol")
    if model.kind == 'awgn':
        h = np.ones(num_symbols, dtype=complex)
    else:
        scattered = complex_gaussian(rng, num_symbols)
        if model.kind == 'rayleigh':
            h = scattered
        else:
            k = model.k_factor
            h = np.sqrt(k / (1.0 + k)) + np.sqrt(1.0 / (1.0 + k)) * scattered
    sigma2 = np.full(num_symbols, snr.sigma2)
    return ChannelRealization(h=h, sigma2=sigma2)


def apply_channel(symbols, channel, rng):
    """y = h ⊙ x + n with n ~ CN(0, σᵢ²)."""
    symbols = np.asarray(symbols, dtype=complex)
    if symbols.shape != channel.h.shape:
        raise InvalidArgumentError(
            f"frame has {symbols.size} symbols, channel has {channel.h.size}")
    return channel.h * symbols + complex_gaussian(rng, symbols.size, channel.sigma2)
