"""
fadinggrand - GRAND decoding over fading channels

A channel-code decoding library and Monte-Carlo link-level simulator for the GRAND family
of decoders (hard GRAND, ORBGRAND, SGRAND) driven by full soft information or by pseudo-soft
information taken from ZF/MMSE equalization.

Features:
- Linear block codes: random, Hamming, BCH, CA-Polar, alist files
- Gray-mapped BPSK/QPSK/16-QAM/64-QAM with exact and max-log LLRs
- AWGN, Rayleigh and Rician fading with ZF/MMSE/ML detection
- Lazy query-order generators and the GRAND decoding loop
- Seeded, worker-count independent BLER sweeps and reliability profiles
"""

__version__ = "1.0.0"

from .codebook import LinearCode, build_bch, build_ca_polar, encode, is_member
from .config.settings import SimConfig, load_config
from .decoder import QuerySchedule, grand_decode
from .harness import profile_reliability, run_curve, run_frame

__all__ = [
    'LinearCode', 'build_bch', 'build_ca_polar', 'encode', 'is_member',
    'QuerySchedule', 'grand_decode',
    'SimConfig', 'load_config',
    'run_curve', 'run_frame', 'profile_reliability',
]
