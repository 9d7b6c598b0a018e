"""
Command-line interface.

    simulate              run a BLER sweep from a TOML/JSON config (+ --set overrides)
    profile-reliability   rank-ordered reliability profile at one SNR
    verify patterns|ml|uncoded
                          cross-check the fast paths against the brute-force oracles
"""

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .config.settings import LOG_LEVEL, load_config
from .errors import FadingGrandError
from .harness import (
    points_to_frame,
    profile_reliability,
    required_snr,
    run_curve,
    verify_ml,
    verify_patterns,
    verify_uncoded,
)


def _add_config_arguments(parser):
    parser.add_argument('--config', '-c', help="TOML or JSON config file")
    parser.add_argument('--set', dest='overrides', action='append', default=[],
                        metavar='KEY=VALUE', help="override one config field (repeatable)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog='fadinggrand',
        description="GRAND decoding with soft and pseudo-soft information over fading channels")
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--log-level', default=LOG_LEVEL,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
    commands = parser.add_subparsers(dest='command', required=True)

    simulate = commands.add_parser('simulate', help="run a Monte-Carlo BLER sweep")
    _add_config_arguments(simulate)
    simulate.add_argument('--target-bler', type=float, default=1e-3,
                          help="report the SNR needed for this BLER (default: 1e-3)")

    profile = commands.add_parser('profile-reliability',
                                  help="average rank-ordered reliabilities at one SNR")
    _add_config_arguments(profile)
    profile.add_argument('--snr', type=float, default=10.0, help="SNR in dB (default: 10)")
    profile.add_argument('--frames', type=int, default=10_000)
    profile.add_argument('--order-by', choices=['self', 'ml'], default='self')
    profile.add_argument('--output', help="CSV path (default: <output_dir>/<name>_profile.csv)")

    verify = commands.add_parser('verify', help="oracle cross-checks")
    checks = verify.add_subparsers(dest='check', required=True)
    patterns = checks.add_parser('patterns', help="pattern generators vs brute-force sort")
    patterns.add_argument('--n', type=int, default=10)
    patterns.add_argument('--trials', type=int, default=200)
    patterns.add_argument('--seed', type=int, default=0)
    ml = checks.add_parser('ml', help="SGRAND vs exhaustive ML on random codes")
    ml.add_argument('--trials', type=int, default=1000)
    ml.add_argument('--n', type=int, default=16)
    ml.add_argument('--k', type=int, default=8)
    ml.add_argument('--seed', type=int, default=0)
    uncoded = checks.add_parser('uncoded', help="simulated vs analytic uncoded BLER")
    uncoded.add_argument('--snr', type=float, nargs='+', default=[0, 5, 10, 15, 20, 25, 30])
    uncoded.add_argument('--frames', type=int, default=20_000)
    uncoded.add_argument('--workers', type=int, default=1)
    return parser


def cmd_simulate(args):
    config = load_config(args.config, args.overrides)
    points = run_curve(config)

    print(f"\n{config.name}")
    print("=" * 50)
    if not points:
        print("No SNR points configured")
        return 0
    table = points_to_frame(points)
    print(table[['snr_db', 'frames', 'block_errors', 'bler', 'avg_queries',
                 'abandon_rate']].to_string(index=False))
    needed = required_snr(points, args.target_bler)
    if needed is None:
        print(f"\nBLER {args.target_bler:g} not reached in this sweep")
    else:
        print(f"\nSNR for BLER {args.target_bler:g}: {needed:.2f} dB")
    print(f"Results: {config.output_stem.with_suffix('.csv')}")
    return 0


def cmd_profile(args):
    config = load_config(args.config, args.overrides)
    output = Path(args.output) if args.output else \
        Path(config.output_dir) / f"{config.name}_profile.csv"
    table = profile_reliability(config, args.snr, args.frames, args.order_by, output)

    print(f"\nReliability profile at {args.snr:g} dB ({args.frames} frames)")
    print("=" * 50)
    print(table.iloc[::max(len(table) // 8, 1)].to_string(index=False))
    print(f"\nProfile: {output}")
    return 0


def _report(title, results):
    print(f"\n{title}")
    print("=" * 50)
    for key, value in results.items():
        if key == 'points':
            for row in value:
                flag = "ok" if row['within_3sigma'] else "MISMATCH"
                print(f"  {row['snr_db']:6.2f} dB  simulated {row['simulated']:.4e}  "
                      f"analytic {row['analytic']:.4e}  {flag}")
        else:
            print(f"{key}: {value}")
    return 0 if results['valid'] else 1


def cmd_verify(args):
    if args.check == 'patterns':
        return _report("Pattern generator check", verify_patterns(args.n, args.trials, args.seed))
    if args.check == 'ml':
        return _report("SGRAND vs exhaustive ML",
                       verify_ml(args.trials, args.n, args.k, args.seed))
    return _report("Uncoded chain check",
                   verify_uncoded(tuple(args.snr), args.frames, workers=args.workers))


COMMANDS = {
    'simulate': cmd_simulate,
    'profile-reliability': cmd_profile,
    'verify': cmd_verify,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    try:
        return COMMANDS[args.command](args)
    except (FadingGrandError, OSError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 1
