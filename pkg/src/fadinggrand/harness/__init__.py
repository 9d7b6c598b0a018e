"""
Harness module for fadinggrand.

Seeded parallel Monte-Carlo BLER sweeps, reliability profiling, oracle cross-checks and
result persistence.
"""

from .profile import profile_reliability
from .results import CurvePoint, points_to_frame, read_curve, required_snr, write_curve
from .simulate import FrameContext, FrameResult, build_code, run_curve, run_frame
from .verify import analytic_curve, verify_ml, verify_patterns, verify_uncoded

__all__ = [
    'run_curve', 'run_frame', 'build_code', 'FrameContext', 'FrameResult',
    'profile_reliability',
    'CurvePoint', 'points_to_frame', 'write_curve', 'read_curve', 'required_snr',
    'verify_patterns', 'verify_ml', 'verify_uncoded', 'analytic_curve',
]
