"""
Binary BCH codes.

GF(2) polynomials are Python ints (bit i = coefficient of x^i). A length-n word maps to the
polynomial c(x) = Σ word[j] x^(n-1-j), i.e. word[0] is the highest-degree coefficient, which
puts the systematic information bits first and the parity bits last.
"""

import logging
from dataclasses import dataclass

import numpy as np

from ..config.code_tables import get_primitive_polynomial, poly_degree
from ..errors import ConstructionError, InvalidArgumentError
from .linear import LinearCode

logger = logging.getLogger(__name__)


def poly_mul(a, b):
    """Carry-less product of two GF(2) polynomials."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def poly_divmod(a, b):
    """Quotient and remainder of GF(2) polynomial division."""
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    quotient = 0
    db = poly_degree(b)
    while a and poly_degree(a) >= db:
        shift = poly_degree(a) - db
        quotient |= 1 << shift
        a ^= b << shift
    return quotient, a


class GaloisField:
    """GF(2^m) built from a primitive polynomial, with exp/log tables."""

    def __init__(self, m, primitive_poly=None):
        self.m = m
        self.order = (1 << m) - 1
        self.primitive_poly = primitive_poly or get_primitive_polynomial(m)
        self.exp = [0] * (2 * self.order)
        self.log = [0] * (1 << m)
        value = 1
        for power in range(self.order):
            self.exp[power] = value
            self.log[value] = power
            value <<= 1
            if value >> m:
                value ^= self.primitive_poly
        for power in range(self.order, 2 * self.order):
            self.exp[power] = self.exp[power - self.order]

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def alpha_power(self, i):
        return self.exp[i % self.order]

    def cyclotomic_coset(self, i):
        coset = []
        j = i % self.order
        while j not in coset:
            coset.append(j)
            j = (2 * j) % self.order
        return sorted(coset)

    def minimal_polynomial(self, i):
        """
        Minimal polynomial of α^i over GF(2): Π (x + α^j) over the cyclotomic coset of i.

        Returns:
            int: GF(2) polynomial
        """
        coeffs = [1]  # field-valued coefficients, index = degree
        for j in self.cyclotomic_coset(i):
            root = self.alpha_power(j)
            shifted = [0] + coeffs
            scaled = [self.mul(c, root) for c in coeffs] + [0]
            coeffs = [s ^ t for s, t in zip(shifted, scaled)]
        if any(c > 1 for c in coeffs):
            raise ConstructionError(f"minimal polynomial of alpha^{i} is not binary")
        return sum(1 << d for d, c in enumerate(coeffs) if c)


@dataclass(frozen=True)
class CyclicCodeSpec:
    """Cyclic code of length n generated by generator_poly (degree n - k)."""

    n: int
    generator_poly: int

    @property
    def k(self):
        return self.n - poly_degree(self.generator_poly)

    def divides_xn_minus_1(self):
        return poly_divmod((1 << self.n) | 1, self.generator_poly)[1] == 0

    def word_to_poly(self, word):
        return sum(1 << (self.n - 1 - int(j)) for j in np.flatnonzero(word))

    def is_member(self, word):
        return poly_divmod(self.word_to_poly(word), self.generator_poly)[1] == 0


def bch_generator_poly(m, t, field=None):
    """
    lcm of the minimal polynomials of α^1 .. α^(2t).

    Distinct minimal polynomials are irreducible and coprime, so the lcm is the product of
    one representative per cyclotomic coset.
    """
    field = field or GaloisField(m)
    generator = 1
    seen = set()
    for i in range(1, 2 * t + 1):
        coset = tuple(field.cyclotomic_coset(i))
        if coset in seen:
            continue
        seen.add(coset)
        generator = poly_mul(generator, field.minimal_polynomial(i))
    return generator


def cyclic_systematic_code(spec, kind='bch-cyclic'):
    """
    Systematic LinearCode of a cyclic code.

    Row i of the generator is x^(n-1-i) + (x^(n-1-i) mod g(x)): the info bit at column i and
    the remainder in the last n - k columns. H = [Pᵀ | I].
    """
    n, k = spec.n, spec.k
    r = n - k
    g = spec.generator_poly
    parity = np.zeros((k, r), dtype=np.uint8)
    rem = poly_divmod(1 << r, g)[1]
    for i in range(k - 1, -1, -1):
        for d in range(r):
            if rem >> d & 1:
                parity[i, r - 1 - d] = 1
        rem <<= 1
        if rem >> r & 1:
            rem ^= g
    generator = np.hstack([np.eye(k, dtype=np.uint8), parity])
    parity_check = np.hstack([parity.T, np.eye(r, dtype=np.uint8)])
    return LinearCode(n=n, k=k, generator=generator, parity_check=parity_check,
                      kind=kind, info_positions=tuple(range(k)), structure=spec)


def build_bch(m, t):
    """
    Narrow-sense primitive binary BCH code of length 2^m - 1 correcting t errors.

    The k×n matrices grow as 4^m; m above 12 needs gigabytes.

    Args:
        m: Field degree, 3..16
        t: Error-correction target, >= 1

    Returns:
        tuple: (CyclicCodeSpec, LinearCode)

    Raises:
        InvalidArgumentError: m or t out of range
        ConstructionError: t too large for m
    """
    if not 3 <= m <= 16:
        raise InvalidArgumentError(f"BCH field degree m must be in 3..16, got {m}")
    if t < 1:
        raise InvalidArgumentError(f"BCH error-correction target t must be >= 1, got {t}")
    n = (1 << m) - 1
    if 2 * t + 1 > n:
        raise ConstructionError(f"t={t} too large for m={m} (designed distance exceeds n={n})")
    spec = CyclicCodeSpec(n=n, generator_poly=bch_generator_poly(m, t))
    if spec.k < 1:
        raise ConstructionError(f"t={t} too large for m={m}: no information bits left")
    logger.debug("BCH(m=%d, t=%d): n=%d, k=%d", m, t, n, spec.k)
    return spec, cyclic_systematic_code(spec)
