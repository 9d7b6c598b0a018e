#!/usr/bin/env python3
"""
Run the preset BLER sweeps and compare the schemes at a target BLER.

Each group is a set of curves that share code, modulation and channel; the report shows
the SNR every scheme needs for the target BLER and the gaps between them. Uncoded
BPSK/Rayleigh baselines are also shown against their closed form.

Usage:
    python scripts/run_preset_groups.py                     # every group
    python scripts/run_preset_groups.py bch_bpsk_rayleigh   # one group
    python scripts/run_preset_groups.py --set workers=8 --set min_block_errors=50
"""

import argparse
import logging
import os
import sys

# Add the src directory to the Python path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(__file__)), 'src'))

from fadinggrand.config.settings import LOG_LEVEL, load_config  # noqa: E402
from fadinggrand.harness import analytic_curve, required_snr, run_curve  # noqa: E402

CONFIG_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'configs')

GROUPS = {
    'bch_bpsk_rayleigh': ['uncoded_bpsk_rayleigh', 'bch_bpsk_rayleigh_hard',
                          'bch_bpsk_rayleigh_psoft', 'bch_bpsk_rayleigh_soft'],
    'bch_bpsk_rician4': ['uncoded_bpsk_rician4', 'bch_bpsk_rician4_hard',
                         'bch_bpsk_rician4_psoft', 'bch_bpsk_rician4_soft'],
    'bch_qpsk_rayleigh': ['bch_qpsk_rayleigh_hard', 'bch_qpsk_rayleigh_psoft',
                          'bch_qpsk_rayleigh_soft'],
    'bch_qam16_rayleigh': ['bch_qam16_rayleigh_hard', 'bch_qam16_rayleigh_psoft',
                           'bch_qam16_rayleigh_psoft_orbgrand', 'bch_qam16_rayleigh_soft'],
    'bch_qam64_rayleigh': ['bch_qam64_rayleigh_hard', 'bch_qam64_rayleigh_psoft',
                           'bch_qam64_rayleigh_soft'],
    'polar_bpsk_rayleigh': ['uncoded_bpsk_rayleigh_105', 'polar_bpsk_rayleigh_hard',
                            'polar_bpsk_rayleigh_psoft', 'polar_bpsk_rayleigh_soft'],
}


def _shown(value):
    return "not reached" if value is None else f"{value:.2f} dB"


def run_group(group, overrides, target_bler):
    """Run every preset of a group; return {preset: required SNR or None}."""
    print(f"\n📈 {group}")
    print("=" * 50)
    needed = {}
    for preset in GROUPS[group]:
        config = load_config(os.path.join(CONFIG_DIR, f"{preset}.toml"), overrides)
        points = run_curve(config)
        needed[preset] = required_snr(points, target_bler)
        print(f"  {preset:<36} {_shown(needed[preset])}")
        closed_form = analytic_curve(config)
        if closed_form is not None:
            print(f"  {'  closed form':<36} {_shown(required_snr(closed_form, target_bler))}")
    return needed


def _scheme(needed, suffix):
    return next((v for k, v in needed.items() if k.endswith(suffix)), None)


def print_gaps(needed):
    uncoded = next((v for k, v in needed.items() if k.startswith('uncoded_')), None)
    hard = _scheme(needed, '_hard')
    psoft = _scheme(needed, '_psoft')
    plain = _scheme(needed, '_psoft_orbgrand')
    soft = _scheme(needed, '_soft')
    if uncoded is not None and hard is not None:
        print(f"  hard coding gain over uncoded:   {uncoded - hard:.2f} dB")
    if hard is not None and psoft is not None:
        print(f"  pseudo-soft gain over hard:      {hard - psoft:.2f} dB")
    if plain is not None and psoft is not None:
        print(f"  symbol tie-break gain:           {plain - psoft:.2f} dB")
    if psoft is not None and soft is not None:
        print(f"  soft gain over pseudo-soft:      {psoft - soft:.2f} dB")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument('groups', nargs='*', default=[],
                        help=f"groups to run: {', '.join(GROUPS)} (default: all)")
    parser.add_argument('--set', dest='overrides', action='append', default=[],
                        metavar='KEY=VALUE')
    parser.add_argument('--target-bler', type=float, default=1e-3)
    args = parser.parse_args()
    logging.basicConfig(level=LOG_LEVEL, format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    unknown = [g for g in args.groups if g not in GROUPS]
    if unknown:
        parser.error(f"unknown groups: {', '.join(unknown)}")

    for group in args.groups or list(GROUPS):
        print_gaps(run_group(group, args.overrides, args.target_bler))
    return 0


if __name__ == "__main__":
    sys.exit(main())
