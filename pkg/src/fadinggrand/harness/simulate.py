"""
Monte-Carlo BLER simulation.

Frame f at SNR index s draws everything (payload, fading, noise) from
frame_rng(master_seed, s, f). Frames are simulated in contiguous batches, collected in
frame-index order and the stop rule is applied to that prefix, so the result of a sweep
does not depend on the number of workers or the batch size.
"""

import logging
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

import numpy as np

from ..channel import FadingModel, SnrPoint, apply_channel, draw_channel, frame_rng
from ..codebook import (
    CrcSpec,
    build_bch,
    build_ca_polar,
    encode,
    hamming_7_4,
    load_alist_file,
    load_reliability_order,
    pad_code,
    random_linear_code,
    uncoded,
)
from ..decoder import QuerySchedule, grand_decode
from ..equalize import detect_hard, pseudo_soft, soft_llrs
from ..modem import get_constellation, map_bits
from .results import CurvePoint, write_curve

logger = logging.getLogger(__name__)

BATCHES_PER_WORKER = 4


def build_code(config):
    """
    Construct the configured code (before symbol padding).

    Returns:
        LinearCode
    """
    if config.code == 'bch':
        return build_bch(config.bch_m, config.bch_t)[1]
    if config.code == 'ca-polar':
        crc = CrcSpec.from_hex(config.crc_poly, config.crc_width)
        order = (load_reliability_order(config.reliability_order_path)
                 if config.reliability_order_path else None)
        return build_ca_polar(config.polar_n, config.polar_k, crc, order)[1]
    if config.code == 'random':
        return random_linear_code(config.code_n, config.code_k, config.code_seed)
    if config.code == 'hamming':
        return hamming_7_4()
    if config.code == 'alist':
        return load_alist_file(config.alist_path)
    return uncoded(config.code_n)


@dataclass(frozen=True, eq=False)
class FrameContext:
    """Everything a worker needs to simulate frames, built once per process."""

    config: Any
    code: Any
    constellation: Any
    fading: FadingModel
    schedule: Optional[QuerySchedule]

    @classmethod
    def from_config(cls, config):
        cons = get_constellation(config.modulation)
        code = pad_code(build_code(config), cons.q)
        schedule = None
        if config.decoder != 'none':
            schedule = QuerySchedule.for_decoder(config.decoder, config.query_budget, cons.q)
        return cls(config=config, code=code, constellation=cons,
                   fading=FadingModel(config.channel, config.k_factor), schedule=schedule)


@dataclass(frozen=True)
class FrameResult:
    error: bool
    queries: int
    abandoned: bool
    deep_fades: int = 0


def frame_reliabilities(context, frame, bits_per_symbol):
    """Per-bit reliabilities for the configured softness, None for hard decoding."""
    config = context.config
    if config.decoder in ('grand-hard', 'none') or config.softness == 'hard':
        return None
    if config.softness == 'psoft':
        return pseudo_soft(frame, bits_per_symbol)
    return np.abs(soft_llrs(frame, context.constellation))


def run_frame(context, snr_index, frame_index):
    """
    Simulate one frame end to end.

    Args:
        context: FrameContext, or a SimConfig (a context is built from it)
        snr_index: Index into config.snr_points
        frame_index: Frame counter within the SNR point

    Returns:
        FrameResult
    """
    if not isinstance(context, FrameContext):
        context = FrameContext.from_config(context)
    config, code, cons = context.config, context.code, context.constellation
    snr = SnrPoint(config.snr_points[snr_index])
    rng = frame_rng(config.master_seed, snr_index, frame_index)

    payload = rng.integers(0, 2, size=code.k, dtype=np.uint8)
    codeword = encode(payload, code)
    symbols = map_bits(codeword, cons)
    channel = draw_channel(context.fading, symbols.size, snr, rng)
    received = apply_channel(symbols, channel, rng)

    hard_bits, frame = detect_hard(received, channel, config.detector, cons)
    if context.schedule is None:
        return FrameResult(error=not np.array_equal(hard_bits, codeword), queries=0,
                           abandoned=False, deep_fades=frame.deep_fades)

    rel = frame_reliabilities(context, frame, cons.q)
    result = grand_decode(hard_bits, rel, context.schedule, code)
    error = result.abandoned or not np.array_equal(result.word, codeword)
    return FrameResult(error=bool(error), queries=result.queries, abandoned=result.abandoned,
                       deep_fades=frame.deep_fades)


def simulate_batch(context, snr_index, start, stop):
    return [run_frame(context, snr_index, f) for f in range(start, stop)]


# Per-process context for pool workers
_WORKER_CONTEXT = None


def _init_worker(config):
    global _WORKER_CONTEXT
    _WORKER_CONTEXT = FrameContext.from_config(config)


def _worker_batch(task):
    snr_index, start, stop = task
    return simulate_batch(_WORKER_CONTEXT, snr_index, start, stop)


def check_output_writable(directory):
    """
    Fail early if results cannot be written.

    Raises:
        OSError: the directory cannot be created or written
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    with tempfile.NamedTemporaryFile(dir=directory):
        pass


def summarize_point(snr_db, results, seconds):
    frames = len(results)
    errors = sum(r.error for r in results)
    queries = np.array([r.queries for r in results], dtype=float)
    return CurvePoint(
        snr_db=float(snr_db),
        frames=frames,
        block_errors=int(errors),
        bler=errors / frames if frames else 0.0,
        avg_queries=float(queries.mean()) if frames else 0.0,
        p99_queries=float(np.percentile(queries, 99)) if frames else 0.0,
        abandon_rate=sum(r.abandoned for r in results) / frames if frames else 0.0,
        deep_fade_count=int(sum(r.deep_fades for r in results)),
        wallclock_seconds=seconds,
    )


def _simulate_point(config, snr_index, run_batches, round_batches):
    """Run rounds of batches until the stop rule holds on the frame-index prefix."""
    results = []
    errors = 0
    next_frame = 0
    while True:
        tasks = []
        for _ in range(round_batches):
            if next_frame >= config.max_frames:
                break
            stop = min(next_frame + config.batch_frames, config.max_frames)
            tasks.append((snr_index, next_frame, stop))
            next_frame = stop
        if not tasks:
            return results
        for batch in run_batches(tasks):
            for record in batch:
                results.append(record)
                errors += record.error
                if errors >= config.min_block_errors:
                    return results
        logger.debug("snr index %d: %d frames, %d errors", snr_index, len(results), errors)


def run_curve(config, write=True):
    """
    Run the configured SNR sweep.

    Args:
        config: Validated SimConfig
        write: Persist `<output_dir>/<name>.csv` and `.json`

    Returns:
        list: CurvePoint per SNR point

    Raises:
        OSError: output directory not writable (checked before simulating)
    """
    if write:
        check_output_writable(config.output_dir)

    snrs = config.snr_points
    points = []
    if snrs:
        context = FrameContext.from_config(config)
        logger.info("%s: %s n=%d k=%d (rate %.3f), %s over %s, %s/%s, decoder=%s, %d workers",
                    config.name, config.code, context.code.n, context.code.k,
                    context.code.rate,
                    config.modulation, config.channel, config.detector, config.softness,
                    config.decoder, config.workers)
        if config.workers == 1:
            def run_batches(tasks):
                return (simulate_batch(context, *task) for task in tasks)
            points = _sweep(config, snrs, run_batches, BATCHES_PER_WORKER)
        else:
            with ProcessPoolExecutor(max_workers=config.workers, initializer=_init_worker,
                                     initargs=(config,)) as executor:
                def run_batches(tasks):
                    return executor.map(_worker_batch, tasks)
                points = _sweep(config, snrs, run_batches,
                                BATCHES_PER_WORKER * config.workers)

    if write:
        write_curve(points, config, config.output_stem)
    return points


def _sweep(config, snrs, run_batches, round_batches):
    points = []
    for snr_index, snr_db in enumerate(snrs):
        started = time.perf_counter()
        results = _simulate_point(config, snr_index, run_batches, round_batches)
        point = summarize_point(snr_db, results, time.perf_counter() - started)
        logger.info("SNR %6.2f dB: BLER %.4g (%d/%d), avg queries %.1f",
                    point.snr_db, point.bler, point.block_errors, point.frames,
                    point.avg_queries)
        points.append(point)
    return points
