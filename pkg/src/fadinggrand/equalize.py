"""
Single-tap equalization, hard detection and reliability extraction.

Pseudo-soft reliabilities use only the channel state: the post-equalization SNR
1/post_var of each symbol, repeated over its q bits. Soft reliabilities are max-log LLRs
on the equalized sample with the post-equalization noise variance.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InvalidArgumentError
from .modem import hard_slice, llr_maxlog

DETECTORS = ('zf', 'mmse', 'ml')

# |h| below this is treated as a deep fade and clamped
DEEP_FADE_FLOOR = 1e-30


@dataclass(frozen=True, eq=False)
class EqualizedFrame:
    """
    Attributes:
        y_eq: Equalized samples (the raw samples for ml)
        post_var: Per-symbol noise variance after equalization
        detector: zf | mmse | ml
        h: Channel coefficients (kept for ml detection)
        deep_fades: Symbols whose |h| was clamped (zf only)
    """

    y_eq: np.ndarray
    post_var: np.ndarray
    detector: str
    h: Optional[np.ndarray] = None
    deep_fades: int = 0


def _clamp_deep_fades(h):
    magnitude = np.abs(h)
    faded = magnitude < DEEP_FADE_FLOOR
    if not faded.any():
        return h, 0
    phase = np.where(magnitude > 0, h / np.where(magnitude > 0, magnitude, 1.0), 1.0)
    return np.where(faded, DEEP_FADE_FLOOR * phase, h), int(faded.sum())


def zf_equalize(y, channel):
    """y_eq = y/h, post_var = σ²/|h|²; |h| < 1e-30 is clamped to 1e-30 keeping its phase."""
    h, deep_fades = _clamp_deep_fades(np.asarray(channel.h, dtype=complex))
    y = np.asarray(y, dtype=complex)
    return EqualizedFrame(y_eq=y / h, post_var=channel.sigma2 / np.abs(h) ** 2,
                          detector='zf', h=channel.h, deep_fades=deep_fades)


def mmse_equalize(y, channel):
    """y_eq = h* y/(|h|² + σ²), post_var = σ²/(|h|² + σ²). No bias correction."""
    h = np.asarray(channel.h, dtype=complex)
    power = np.abs(h) ** 2
    denominator = power + channel.sigma2
    return EqualizedFrame(y_eq=np.conj(h) * np.asarray(y, dtype=complex) / denominator,
                          post_var=channel.sigma2 / denominator, detector='mmse', h=channel.h)


def ml_frame(y, channel):
    """No equalization; post_var is the channel noise variance."""
    return EqualizedFrame(y_eq=np.asarray(y, dtype=complex), post_var=channel.sigma2.copy(),
                          detector='ml', h=channel.h)


def equalize(y, channel, detector):
    if detector == 'zf':
        return zf_equalize(y, channel)
    if detector == 'mmse':
        return mmse_equalize(y, channel)
    if detector == 'ml':
        return ml_frame(y, channel)
    raise InvalidArgumentError(f"unknown detector {detector!r}")


def pseudo_soft(frame, q):
    """
    Per-bit pseudo-soft reliabilities: 1/post_var for every bit of each symbol.

    For ml this is 1/σ², which carries no ordering information when σ is uniform.
    """
    return np.repeat(1.0 / frame.post_var, q)


def detect_hard(y, channel, detector, cons):
    """
    Hard decisions.

    ml slices argmin |y - h x|; zf and mmse slice the equalized sample.

    Returns:
        tuple: (bits, EqualizedFrame)
    """
    frame = equalize(y, channel, detector)
    if detector == 'ml':
        h = np.asarray(channel.h, dtype=complex)
        distances = np.abs(frame.y_eq[:, None] - h[:, None] * cons.points[None, :]) ** 2
        indices = np.argmin(distances, axis=1)
    else:
        indices = hard_slice(frame.y_eq, cons)
    return cons.labels[indices].reshape(-1), frame


def soft_llrs(frame, cons):
    """
    Max-log LLRs of the equalized samples with noise variance post_var.

    Raises:
        InvalidArgumentError: detector is not zf or mmse
    """
    if frame.detector not in ('zf', 'mmse'):
        raise InvalidArgumentError("soft LLRs are defined for zf and mmse frames")
    return llr_maxlog(frame.y_eq, 1.0, frame.post_var, cons)


def ml_llrs(y, channel, cons):
    """Max-log LLRs on the raw samples, the ML reference for profiling and identities."""
    return llr_maxlog(y, channel.h, channel.sigma2, cons)
