"""Tests for fading, noise and per-frame random streams."""

import numpy as np
import pytest

from fadinggrand.channel import (
    ChannelRealization,
    FadingModel,
    SnrPoint,
    apply_channel,
    draw_channel,
    frame_rng,
)
from fadinggrand.errors import InvalidArgumentError

DRAWS = 1_000_000


def test_snr_point_maps_to_noise_variance():
    assert SnrPoint(10.0).sigma2 == pytest.approx(0.1)
    assert SnrPoint(0.0).sigma2 == pytest.approx(1.0)
    assert SnrPoint(-3.0).linear == pytest.approx(10 ** -0.3)


def test_awgn_has_unit_coefficients():
    channel = draw_channel(FadingModel('awgn'), 16, SnrPoint(5.0), frame_rng(1, 0, 0))
    np.testing.assert_array_equal(channel.h, np.ones(16))
    np.testing.assert_allclose(channel.sigma2, SnrPoint(5.0).sigma2)


def test_rayleigh_has_unit_mean_power():
    channel = draw_channel(FadingModel('rayleigh'), DRAWS, SnrPoint(10.0), frame_rng(2022, 0, 0))
    assert abs(np.mean(np.abs(channel.h) ** 2) - 1.0) < 0.01
    assert abs(np.mean(channel.h)) < 0.01


@pytest.mark.parametrize('k_factor', [0.0, 4.0, 50.0])
def test_rician_normalization(k_factor):
    channel = draw_channel(FadingModel('rician', k_factor), DRAWS, SnrPoint(10.0),
                           frame_rng(2022, 1, 0))
    assert abs(np.mean(np.abs(channel.h) ** 2) - 1.0) < 0.01


def test_rician_with_huge_k_is_nearly_constant():
    channel = draw_channel(FadingModel('rician', 1e12), 1000, SnrPoint(10.0), frame_rng(3, 0, 0))
    assert np.all(np.abs(channel.h - 1.0) < 1e-4)


def test_rician_with_zero_k_matches_rayleigh():
    rician = draw_channel(FadingModel('rician', 0.0), 100, SnrPoint(10.0), frame_rng(4, 0, 7))
    rayleigh = draw_channel(FadingModel('rayleigh'), 100, SnrPoint(10.0), frame_rng(4, 0, 7))
    np.testing.assert_allclose(rician.h, rayleigh.h)


def test_noiseless_identity_channel_returns_symbols(rng):
    x = np.exp(1j * rng.uniform(0, 2 * np.pi, 32))
    channel = ChannelRealization(h=np.ones(32, dtype=complex), sigma2=np.full(32, 1e-30))
    np.testing.assert_allclose(apply_channel(x, channel, rng), x, atol=1e-12)


def test_same_stream_gives_identical_frames():
    x = np.ones(64, dtype=complex)
    outputs = []
    for _ in range(2):
        stream = frame_rng(2022, 3, 11)
        channel = draw_channel(FadingModel('rayleigh'), 64, SnrPoint(5.0), stream)
        outputs.append(apply_channel(x, channel, stream))
    np.testing.assert_array_equal(outputs[0], outputs[1])

    other = frame_rng(2022, 3, 12)
    channel = draw_channel(FadingModel('rayleigh'), 64, SnrPoint(5.0), other)
    assert not np.array_equal(apply_channel(x, channel, other), outputs[0])


def test_received_power_adds_noise_power():
    stream = frame_rng(5, 0, 0)
    x = np.exp(1j * stream.uniform(0, 2 * np.pi, DRAWS))
    channel = draw_channel(FadingModel('rayleigh'), DRAWS, SnrPoint(10.0), stream)
    y = apply_channel(x, channel, stream)
    assert abs(np.mean(np.abs(y) ** 2) - 1.1) < 0.01


def test_noise_is_circularly_symmetric():
    stream = frame_rng(6, 0, 0)
    channel = draw_channel(FadingModel('awgn'), DRAWS, SnrPoint(0.0), stream)
    noise = apply_channel(np.zeros(DRAWS), channel, stream)
    assert abs(np.corrcoef(noise.real, noise.imag)[0, 1]) < 0.01
    assert abs(np.var(noise.real) - np.var(noise.imag)) < 0.01


def test_invalid_inputs_are_rejected(rng):
    with pytest.raises(InvalidArgumentError):
        FadingModel('nakagami')
    with pytest.raises(InvalidArgumentError):
        FadingModel('rician', -1.0)
    with pytest.raises(InvalidArgumentError):
        draw_channel(FadingModel(), 0, SnrPoint(0.0), rng)
    with pytest.raises(InvalidArgumentError):
        ChannelRealization(h=np.ones(3), sigma2=np.ones(2))
    with pytest.raises(InvalidArgumentError):
        ChannelRealization(h=np.ones(2), sigma2=np.array([1.0, 0.0]))
    channel = draw_channel(FadingModel(), 4, SnrPoint(0.0), rng)
    with pytest.raises(InvalidArgumentError):
        apply_channel(np.ones(5), channel, rng)


def test_bit_variances_repeat_per_symbol():
    channel = ChannelRealization(h=np.ones(2, dtype=complex), sigma2=np.array([0.5, 2.0]))
    np.testing.assert_array_equal(channel.bit_variances(3), [0.5, 0.5, 0.5, 2.0, 2.0, 2.0])
