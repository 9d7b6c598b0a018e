"""Tests for ZF/MMSE equalization, hard detection and reliability extraction."""

import numpy as np
import pytest

from fadinggrand.channel import ChannelRealization, complex_gaussian
from fadinggrand.equalize import (
    DEEP_FADE_FLOOR,
    detect_hard,
    equalize,
    ml_frame,
    ml_llrs,
    mmse_equalize,
    pseudo_soft,
    soft_llrs,
    zf_equalize,
)
from fadinggrand.errors import InvalidArgumentError
from fadinggrand.modem import CONSTELLATION_BITS, get_constellation, map_bits


def make_channel(h, sigma2):
    h = np.asarray(h, dtype=complex)
    return ChannelRealization(h=h, sigma2=np.broadcast_to(np.asarray(sigma2, float), h.shape).copy())


def random_frame(rng, cons, size, sigma2):
    bits = rng.integers(0, 2, size * cons.q).astype(np.uint8)
    x = map_bits(bits, cons)
    channel = make_channel(complex_gaussian(rng, size), sigma2)
    y = channel.h * x + complex_gaussian(rng, size, sigma2)
    return bits, y, channel


# ================================
# Equalizers
# ================================

def test_zf_identity_channel():
    y = np.array([0.3 + 0.1j, -1.2j])
    frame = zf_equalize(y, make_channel([1, 1], 0.5))
    np.testing.assert_allclose(frame.y_eq, y)
    np.testing.assert_allclose(frame.post_var, [0.5, 0.5])


def test_zf_post_variance_formula():
    frame = zf_equalize(np.array([1.0]), make_channel([2.0], 0.4))
    assert frame.post_var[0] == pytest.approx(0.1)


def test_zf_noiseless_recovers_symbols(rng):
    cons = get_constellation('qam16')
    x = map_bits(rng.integers(0, 2, 40 * 4), cons)
    channel = make_channel(complex_gaussian(rng, 40), 0.1)
    np.testing.assert_allclose(zf_equalize(channel.h * x, channel).y_eq, x, atol=1e-9)


def test_zf_clamps_deep_fades():
    frame = zf_equalize(np.array([1e-35, 1.0]), make_channel([1e-40j, 1.0], 0.1))
    assert frame.deep_fades == 1
    assert np.all(np.isfinite(frame.post_var))
    assert frame.post_var[0] == pytest.approx(0.1 / DEEP_FADE_FLOOR ** 2)
    assert zf_equalize(np.ones(2), make_channel([0.5, 1.0], 0.1)).deep_fades == 0


def test_mmse_approaches_zf_at_vanishing_noise(rng):
    h = np.exp(1j * rng.uniform(0, 2 * np.pi, 20))
    y = complex_gaussian(rng, 20)
    channel = make_channel(h, 1e-8)
    zf = zf_equalize(y, channel).y_eq
    mmse = mmse_equalize(y, channel).y_eq
    assert np.max(np.abs(mmse - zf) / np.abs(zf)) < 1e-6


def test_mmse_with_zero_channel_returns_prior():
    frame = mmse_equalize(np.array([0.7 - 0.2j]), make_channel([0.0], 0.3))
    assert frame.y_eq[0] == 0
    assert frame.post_var[0] == pytest.approx(1.0)


def test_mmse_is_shrunk_zf(rng):
    channel = make_channel(complex_gaussian(rng, 200), 0.25)
    y = complex_gaussian(rng, 200)
    power = np.abs(channel.h) ** 2
    shrink = power / (power + 0.25)
    np.testing.assert_allclose(mmse_equalize(y, channel).y_eq,
                               shrink * zf_equalize(y, channel).y_eq, rtol=1e-12)
    np.testing.assert_allclose(mmse_equalize(y, channel).post_var, 0.25 / (power + 0.25))


def test_unknown_detector_is_rejected():
    with pytest.raises(InvalidArgumentError):
        equalize(np.ones(1), make_channel([1.0], 1.0), 'sic')


# ================================
# Pseudo-soft reliabilities
# ================================

def test_pseudo_soft_ml_is_constant(rng):
    channel = make_channel(complex_gaussian(rng, 10), 0.2)
    values = pseudo_soft(ml_frame(np.zeros(10), channel), 2)
    np.testing.assert_allclose(values, np.full(20, 5.0))


def test_pseudo_soft_zf_example():
    frame = zf_equalize(np.zeros(2), make_channel([1.0, 2.0], 1.0))
    np.testing.assert_allclose(pseudo_soft(frame, 1), [1.0, 4.0])


def test_pseudo_soft_is_a_stair_step(rng):
    frame = mmse_equalize(np.zeros(8), make_channel(complex_gaussian(rng, 8), 0.1))
    steps = pseudo_soft(frame, 4).reshape(8, 4)
    assert np.all(steps == steps[:, :1])


@pytest.mark.parametrize('detector', ['zf', 'mmse'])
def test_pseudo_soft_orders_symbols_like_channel_power(rng, detector):
    channel = make_channel(complex_gaussian(rng, 50), 0.3)
    values = pseudo_soft(equalize(np.zeros(50), channel, detector), 1)
    np.testing.assert_array_equal(np.argsort(values), np.argsort(np.abs(channel.h) ** 2))


# ================================
# Hard detection
# ================================

@pytest.mark.parametrize('detector', ['zf', 'mmse', 'ml'])
@pytest.mark.parametrize('name', list(CONSTELLATION_BITS))
def test_noiseless_detection_returns_transmitted_word(rng, detector, name):
    cons = get_constellation(name)
    bits = rng.integers(0, 2, 30 * cons.q).astype(np.uint8)
    h = (0.5 + rng.uniform(size=30)) * np.exp(1j * rng.uniform(0, 2 * np.pi, 30))
    channel = make_channel(h, 1e-9)
    decided, frame = detect_hard(h * map_bits(bits, cons), channel, detector, cons)
    np.testing.assert_array_equal(decided, bits)
    assert frame.detector == detector


@pytest.mark.parametrize('name', list(CONSTELLATION_BITS))
def test_zf_and_ml_decisions_agree(rng, name):
    cons = get_constellation(name)
    _, y, channel = random_frame(rng, cons, 100_000, 0.5)
    zf_bits, _ = detect_hard(y, channel, 'zf', cons)
    ml_bits, _ = detect_hard(y, channel, 'ml', cons)
    np.testing.assert_array_equal(zf_bits, ml_bits)


def test_bpsk_zf_and_mmse_decisions_agree(rng):
    cons = get_constellation('bpsk')
    _, y, channel = random_frame(rng, cons, 10_000, 1.0)
    np.testing.assert_array_equal(detect_hard(y, channel, 'zf', cons)[0],
                                  detect_hard(y, channel, 'mmse', cons)[0])


# ================================
# Soft LLRs
# ================================

@pytest.mark.parametrize('name', list(CONSTELLATION_BITS))
def test_zf_llrs_equal_ml_llrs(rng, name):
    cons = get_constellation(name)
    _, y, channel = random_frame(rng, cons, 2000, 0.4)
    np.testing.assert_allclose(soft_llrs(zf_equalize(y, channel), cons),
                               ml_llrs(y, channel, cons), rtol=1e-9, atol=1e-9)


@pytest.mark.parametrize('name', ['bpsk', 'qpsk'])
def test_mmse_llrs_equal_zf_llrs(rng, name):
    cons = get_constellation(name)
    _, y, channel = random_frame(rng, cons, 100_000, 0.4)
    np.testing.assert_allclose(soft_llrs(mmse_equalize(y, channel), cons),
                               soft_llrs(zf_equalize(y, channel), cons), rtol=1e-9, atol=1e-9)


def test_boundary_sample_has_zero_llr():
    cons = get_constellation('bpsk')
    frame = zf_equalize(np.array([0.0 + 0.3j]), make_channel([1.0], 0.5))
    assert soft_llrs(frame, cons)[0] == 0.0


def test_soft_llrs_reject_ml_frames():
    channel = make_channel([1.0], 1.0)
    with pytest.raises(InvalidArgumentError):
        soft_llrs(ml_frame(np.ones(1), channel), get_constellation('bpsk'))
