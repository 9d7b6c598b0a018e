"""
Code-book module for fadinggrand.

Linear block code construction (random, Hamming, BCH, CA-Polar, alist), encoding and
membership testing.
"""

from .alist import load_alist, load_alist_file
from .bch import CyclicCodeSpec, build_bch
from .linear import (
    LinearCode,
    codewords,
    encode,
    from_generator,
    from_parity_check,
    hamming_7_4,
    is_member,
    pad_code,
    random_linear_code,
    uncoded,
)
from .polar import (
    CrcSpec,
    PolarSpec,
    build_ca_polar,
    load_reliability_order,
    polar_transform,
    polarization_weight_order,
)

__all__ = [
    'LinearCode', 'encode', 'is_member', 'from_generator', 'from_parity_check',
    'random_linear_code', 'hamming_7_4', 'uncoded', 'codewords', 'pad_code',
    'CyclicCodeSpec', 'build_bch',
    'CrcSpec', 'PolarSpec', 'build_ca_polar', 'polar_transform',
    'polarization_weight_order', 'load_reliability_order',
    'load_alist', 'load_alist_file',
]
