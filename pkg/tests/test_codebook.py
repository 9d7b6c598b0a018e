"""Tests for code construction, encoding and membership."""

from itertools import product

import numpy as np
import pytest

from fadinggrand.codebook import (
    CrcSpec,
    build_bch,
    build_ca_polar,
    codewords,
    encode,
    from_generator,
    is_member,
    load_alist,
    load_reliability_order,
    pad_code,
    polar_transform,
    polarization_weight_order,
    random_linear_code,
    uncoded,
)
from fadinggrand.codebook import gf2
from fadinggrand.config.code_tables import DEFAULT_CRC
from fadinggrand.errors import (
    AlistParseError,
    ConstructionError,
    InvalidArgumentError,
)


def assert_orthogonal(code):
    check = gf2.matmul(code.generator, code.parity_check.T)
    assert not check.any()
    assert gf2.rank(code.generator) == code.k
    assert gf2.rank(code.parity_check) == code.n - code.k


# ================================
# Generic linear codes
# ================================

def test_zero_info_encodes_to_zero_word(hamming):
    assert not encode(np.zeros(4, dtype=np.uint8), hamming).any()


def test_hamming_encoding_matches_brute_force_search(hamming):
    members = [w for w in product((0, 1), repeat=7)
               if not gf2.matmul(hamming.parity_check, np.array(w)).any()]
    expected = next(w for w in members if w[:4] == (1, 0, 1, 1))
    np.testing.assert_array_equal(encode([1, 0, 1, 1], hamming), expected)


def test_hamming_has_exactly_sixteen_members(hamming):
    count = sum(is_member(np.array(w, dtype=np.uint8), hamming)
                for w in product((0, 1), repeat=7))
    assert count == 16


def test_single_bit_flip_breaks_membership(hamming):
    for word in codewords(hamming):
        assert is_member(word, hamming)
        for position in range(7):
            flipped = word.copy()
            flipped[position] ^= 1
            assert not is_member(flipped, hamming)


def test_length_mismatch_is_rejected(hamming):
    with pytest.raises(InvalidArgumentError):
        encode([1, 0, 1], hamming)
    with pytest.raises(InvalidArgumentError):
        is_member(np.zeros(6, dtype=np.uint8), hamming)


def test_random_code_unit_vector_gives_first_generator_row():
    code = random_linear_code(16, 8, seed=1)
    unit = np.zeros(8, dtype=np.uint8)
    unit[0] = 1
    np.testing.assert_array_equal(encode(unit, code), code.generator[0])


def test_random_code_is_deterministic_and_full_rank():
    first = random_linear_code(16, 8, seed=7)
    second = random_linear_code(16, 8, seed=7)
    np.testing.assert_array_equal(first.generator, second.generator)
    assert gf2.rank(first.generator) == 8
    assert first.is_systematic
    book = codewords(first)
    assert len({tuple(row) for row in book}) == 256
    assert_orthogonal(first)


def test_random_code_rejects_bad_dimensions():
    with pytest.raises(InvalidArgumentError):
        random_linear_code(8, 8, seed=1)


def test_random_payloads_encode_to_members(rng):
    for code in (random_linear_code(24, 12, seed=3), build_bch(5, 2)[1]):
        for _ in range(50):
            word = encode(rng.integers(0, 2, code.k), code)
            assert is_member(word, code)


def test_from_generator_rejects_rank_deficiency():
    with pytest.raises(ConstructionError):
        from_generator([[1, 1, 0], [1, 1, 0]], kind='random-linear')


def test_uncoded_accepts_every_word(rng):
    code = uncoded(8)
    assert all(is_member(rng.integers(0, 2, 8), code) for _ in range(20))


def test_pad_code_forces_zero_pad_bits(hamming):
    padded = pad_code(hamming, 4)
    assert (padded.n, padded.k) == (8, 4)
    assert_orthogonal(padded)
    word = encode([1, 1, 0, 1], padded)
    assert word[-1] == 0 and is_member(word, padded)
    word[-1] = 1
    assert not is_member(word, padded)
    assert pad_code(hamming, 7) is hamming


# ================================
# BCH
# ================================

def _poly_mod(dividend, divisor):
    """Long division on coefficient lists (index = degree)."""
    rem = list(dividend)
    for shift in range(len(rem) - len(divisor), -1, -1):
        if rem[shift + len(divisor) - 1]:
            for i, c in enumerate(divisor):
                rem[shift + i] ^= c
    return rem[:len(divisor) - 1]


def _gf_mul(a, b, primitive, m):
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a >> m:
            a ^= primitive
    return result


def _gf_eval(poly, x, primitive, m):
    """Horner evaluation of a GF(2) polynomial at a GF(2^m) element."""
    value = 0
    for degree in range(poly.bit_length() - 1, -1, -1):
        value = _gf_mul(value, x, primitive, m) ^ (poly >> degree & 1)
    return value


def test_bch_15_11_uses_primitive_polynomial():
    spec, code = build_bch(4, 1)
    assert (code.n, code.k) == (15, 11)
    assert spec.generator_poly == 0b10011


def test_bch_127_113_generator_polynomial():
    spec, code = build_bch(7, 2)
    assert (code.n, code.k) == (127, 113)
    g = spec.generator_poly
    assert g.bit_length() - 1 == 14

    coeffs = [g >> i & 1 for i in range(15)]
    x127_minus_1 = [1] + [0] * 126 + [1]
    assert not any(_poly_mod(x127_minus_1, coeffs))

    primitive = 0b10001001
    alpha_powers = [1]
    for _ in range(4):
        alpha_powers.append(_gf_mul(alpha_powers[-1], 2, primitive, 7))
    for i in range(1, 5):
        assert _gf_eval(g, alpha_powers[i], primitive, 7) == 0


def test_bch_matrices_are_consistent_with_cyclic_structure(rng):
    spec, code = build_bch(7, 2)
    assert_orthogonal(code)
    assert code.is_systematic
    assert spec.divides_xn_minus_1()
    for _ in range(20):
        word = encode(rng.integers(0, 2, code.k), code)
        assert spec.is_member(word)
        shifted = np.roll(word, 1)
        assert is_member(shifted, code)


def test_bch_rejects_bad_parameters():
    with pytest.raises(InvalidArgumentError):
        build_bch(2, 1)
    with pytest.raises(InvalidArgumentError):
        build_bch(7, 0)
    with pytest.raises(ConstructionError):
        build_bch(3, 4)


# ================================
# CA-Polar
# ================================

def test_polar_transform_is_an_involution(rng):
    u = rng.integers(0, 2, 64).astype(np.uint8)
    np.testing.assert_array_equal(polar_transform(polar_transform(u)), u)
    np.testing.assert_array_equal(polar_transform([1, 1]), [0, 1])


def test_polarization_weight_order_small_case():
    assert polarization_weight_order(4) == [0, 1, 2, 3]
    order = polarization_weight_order(128)
    assert sorted(order) == list(range(128))
    assert order[0] == 0 and order[-1] == 127


def test_ca_polar_128_105_sizes():
    spec, code = build_ca_polar(128, 105, CrcSpec.named('crc11'))
    assert len(spec.info_set) == 116
    assert len(spec.frozen_set) == 12
    assert (code.n, code.k) == (128, 105)
    assert_orthogonal(code)
    assert code.rate == pytest.approx(105 / 128)


def test_ca_polar_defaults_to_the_11_bit_crc():
    spec, _ = build_ca_polar(128, 105)
    assert spec.crc == CrcSpec.named(DEFAULT_CRC)
    assert spec.crc.width == 11


def test_ca_polar_round_trip(rng):
    spec, code = build_ca_polar(128, 105, CrcSpec.from_hex('0x621', 11))
    for _ in range(1000):
        payload = rng.integers(0, 2, 105)
        word = encode(payload, code)
        np.testing.assert_array_equal(word, spec.encode(payload))
        assert is_member(word, code)
        assert code.syndromes.is_zero(word)


def test_ca_polar_frozen_perturbation_breaks_membership(rng):
    spec, code = build_ca_polar(128, 105)
    word = encode(rng.integers(0, 2, 105), code)
    u = polar_transform(word)
    for position in spec.frozen_set:
        perturbed = u.copy()
        perturbed[position] ^= 1
        assert not is_member(polar_transform(perturbed), code)


def test_ca_polar_crc_failure_breaks_membership(rng):
    spec, code = build_ca_polar(64, 20, CrcSpec.named('crc6'))
    u = spec.pre_transform(rng.integers(0, 2, 20))
    u[spec.info_set[-1]] ^= 1
    assert not spec.is_member(polar_transform(u))


def test_ca_polar_without_constraints_accepts_everything(rng):
    _, code = build_ca_polar(16, 16, CrcSpec.none())
    assert all(is_member(rng.integers(0, 2, 16), code) for _ in range(50))


def test_ca_polar_rejects_inconsistent_sizes():
    with pytest.raises(InvalidArgumentError):
        build_ca_polar(100, 50)
    with pytest.raises(InvalidArgumentError):
        build_ca_polar(128, 120, CrcSpec.named('crc11'))
    with pytest.raises(InvalidArgumentError):
        build_ca_polar(4, 1, CrcSpec.none(), reliability_order=[0, 1, 1, 3])


def test_crc_spec_validation():
    assert CrcSpec.named('crc11').polynomial == 0x621
    with pytest.raises(InvalidArgumentError):
        CrcSpec(0b110, 3)
    with pytest.raises(InvalidArgumentError):
        CrcSpec(0b10001, 3)


def test_reliability_order_file(tmp_path):
    path = tmp_path / 'order.txt'
    path.write_text("3 0\n2 1\n")
    assert load_reliability_order(path) == [3, 0, 2, 1]
    spec, _ = build_ca_polar(4, 1, CrcSpec.none(), reliability_order=load_reliability_order(path))
    assert spec.info_set == (1,)


# ================================
# Alist
# ================================

def test_alist_hamming_fixture(hamming_alist, hamming):
    code = load_alist(hamming_alist)
    assert (code.n, code.k) == (7, 4)
    np.testing.assert_array_equal(code.parity_check, hamming.parity_check)
    assert_orthogonal(code)
    for word in codewords(hamming):
        assert is_member(word, code)


def test_alist_empty_input():
    with pytest.raises(AlistParseError):
        load_alist("")


def test_alist_index_out_of_range(hamming_alist):
    lines = hamming_alist.splitlines()
    lines[4] = "1 9 0"
    with pytest.raises(AlistParseError) as excinfo:
        load_alist("\n".join(lines))
    assert excinfo.value.line == 5


def test_alist_rank_deficient_matrix():
    text = "3 2\n2 2\n2 2 0\n2 2\n1 2\n1 2\n0 0\n1 2\n1 2\n"
    with pytest.raises(ConstructionError):
        load_alist(text)
