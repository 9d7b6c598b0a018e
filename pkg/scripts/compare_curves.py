#!/usr/bin/env python3
"""
Required SNR at a target BLER for saved curves, with gaps to the first curve.

Usage:
    python scripts/compare_curves.py results/bch_bpsk_rayleigh_hard.csv \
        results/bch_bpsk_rayleigh_psoft.csv results/bch_bpsk_rayleigh_soft.csv
"""

import argparse
import os
import sys

# Add the src directory to the Python path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(__file__)), 'src'))

from fadinggrand.harness import read_curve, required_snr  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description="Compare saved BLER curves")
    parser.add_argument('curves', nargs='+', help="curve CSV files")
    parser.add_argument('--target-bler', type=float, default=1e-3)
    args = parser.parse_args()

    print(f"SNR required for BLER {args.target_bler:g}")
    print("=" * 50)
    reference = None
    for path in args.curves:
        needed = required_snr(read_curve(path), args.target_bler)
        name = os.path.splitext(os.path.basename(path))[0]
        if needed is None:
            print(f"  {name:<32} not reached")
            continue
        if reference is None:
            reference = needed
            print(f"  {name:<32} {needed:6.2f} dB")
        else:
            print(f"  {name:<32} {needed:6.2f} dB  ({needed - reference:+.2f} dB)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
