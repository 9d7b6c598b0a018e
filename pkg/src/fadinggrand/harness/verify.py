"""
Cross-checks of the fast paths against the brute-force oracles.

Each check returns a results dict with a 'valid' flag, ready for console reporting.
"""

import math
from itertools import islice

import numpy as np
import pandas as pd

from ..codebook import random_linear_code
from ..config.settings import SimConfig
from ..decoder import (
    QuerySchedule,
    eta,
    exact_eta_patterns,
    grand_decode,
    hamming_patterns,
    logistic_hamming_tie_patterns,
    logistic_patterns,
)
from ..oracle import analytic_uncoded_bler, brute_sort_patterns, exhaustive_ml_decode
from .simulate import run_curve


def _covers_all_subsets(patterns, n):
    return len(patterns) == 2 ** n and len(set(patterns)) == 2 ** n


def verify_patterns(n=10, trials=200, seed=0, q=2):
    """
    Compare every generator with the brute-force sort at length n.

    Returns:
        dict: per-generator pass flags and the overall 'valid'
    """
    rng = np.random.default_rng(seed)
    uniform = np.ones(n)

    hamming = list(hamming_patterns(n))
    logistic = list(logistic_patterns(n))
    results = {
        'n': n,
        'hamming': (_covers_all_subsets(hamming, n)
                    and hamming == list(brute_sort_patterns(uniform, 'hamming').patterns)),
        'logistic': (_covers_all_subsets(logistic, n)
                     and logistic == list(brute_sort_patterns(uniform, 'logistic').patterns)),
    }

    if n % q == 0:
        tie = list(logistic_hamming_tie_patterns(n, q))
        expected = brute_sort_patterns(uniform, 'logistic-hamming-tie', q).patterns
        results['logistic_hamming_tie'] = _covers_all_subsets(tie, n) and tie == list(expected)

    eta_ok = True
    for _ in range(trials):
        rel = np.sort(rng.exponential(size=n))
        emitted = list(islice(exact_eta_patterns(rel), 2 ** n))
        expected = brute_sort_patterns(rel, 'eta').weights
        if not _covers_all_subsets(emitted, n) or \
                tuple(eta(p, rel) for p in emitted) != expected:
            eta_ok = False
            break
    results['exact_eta'] = eta_ok
    results['valid'] = all(v for k, v in results.items() if k != 'n')
    return results


def verify_ml(trials=1000, n=16, k=8, seed=0):
    """
    SGRAND with unlimited budget against exhaustive ML on random codes.

    Returns:
        dict: trial count, code size, η mismatches and 'valid'
    """
    rng = np.random.default_rng(seed)
    schedule = QuerySchedule('exact-eta')
    eta_mismatches = 0
    for trial in range(trials):
        code = random_linear_code(n, k, seed=seed * 100_003 + trial)
        hard = rng.integers(0, 2, size=n, dtype=np.uint8)
        rel = rng.exponential(size=n)
        decoded = grand_decode(hard, rel, schedule, code).word
        optimum = exhaustive_ml_decode(hard, rel, code)
        cost_grand = math.fsum(rel[np.flatnonzero(decoded ^ hard)])
        cost_ml = math.fsum(rel[np.flatnonzero(optimum ^ hard)])
        if not math.isclose(cost_grand, cost_ml, rel_tol=1e-12, abs_tol=1e-12):
            eta_mismatches += 1
    return {'trials': trials, 'n': n, 'k': k, 'eta_mismatches': eta_mismatches,
            'valid': eta_mismatches == 0}


def verify_uncoded(snr_db=(0, 5, 10, 15, 20, 25, 30), frames=20_000, n=1, workers=1,
                   seed=2022, output_dir='results'):
    """
    Simulated uncoded BPSK/Rayleigh/ZF BLER against the closed form, 3σ binomial bounds.

    Returns:
        dict: per-point rows and 'valid'
    """
    config = SimConfig(
        name='verify_uncoded', code='uncoded', code_n=n, modulation='bpsk',
        channel='rayleigh', detector='zf', softness='hard', decoder='none',
        snr_db=tuple(snr_db), min_block_errors=frames + 1, max_frames=frames,
        master_seed=seed, workers=workers, output_dir=output_dir,
    ).validate()
    rows = []
    for point in run_curve(config, write=False):
        expected = analytic_uncoded_bler(point.snr_db, n=n)
        bound = 3 * math.sqrt(expected * (1 - expected) / point.frames)
        rows.append({'snr_db': point.snr_db, 'simulated': point.bler, 'analytic': expected,
                     'within_3sigma': abs(point.bler - expected) <= bound})
    return {'points': rows, 'valid': all(r['within_3sigma'] for r in rows)}


def analytic_curve(config, step_db=0.1, stop_db=80.0):
    """
    Closed-form BLER curve for an uncoded BPSK/Rayleigh config, sampled from 0 dB.

    Returns:
        DataFrame with snr_db and bler, or None when the config has no closed form
    """
    if config.code != 'uncoded' or config.channel != 'rayleigh' or config.modulation != 'bpsk':
        return None
    snrs = np.round(np.arange(0.0, stop_db + step_db / 2, step_db), 10)
    return pd.DataFrame({
        'snr_db': snrs,
        'bler': [analytic_uncoded_bler(s, n=config.code_n) for s in snrs],
    })
