"""
Rank-ordered reliability profiles.

For every frame the soft (|LLR|) and pseudo-soft reliabilities are computed for the ml,
zf and mmse detectors, each vector is sorted, and the sorted vectors are averaged per rank.
"""

import logging
from pathlib import Path

import numpy as np
import pandas as pd

from ..channel import SnrPoint, apply_channel, draw_channel, frame_rng
from ..codebook import encode
from ..equalize import ml_frame, ml_llrs, mmse_equalize, pseudo_soft, soft_llrs, zf_equalize
from ..errors import InvalidArgumentError
from ..modem import map_bits
from .simulate import FrameContext

logger = logging.getLogger(__name__)

SERIES = ('soft_ml', 'soft_zf', 'soft_mmse', 'psoft_ml', 'psoft_zf', 'psoft_mmse')
ORDER_BY = ('self', 'ml')


def frame_profile(context, snr, rng):
    """Unsorted reliability vectors of one frame, keyed by series name."""
    code, cons = context.code, context.constellation
    payload = rng.integers(0, 2, size=code.k, dtype=np.uint8)
    symbols = map_bits(encode(payload, code), cons)
    channel = draw_channel(context.fading, symbols.size, snr, rng)
    received = apply_channel(symbols, channel, rng)

    zf = zf_equalize(received, channel)
    mmse = mmse_equalize(received, channel)
    return {
        'soft_ml': np.abs(ml_llrs(received, channel, cons)),
        'soft_zf': np.abs(soft_llrs(zf, cons)),
        'soft_mmse': np.abs(soft_llrs(mmse, cons)),
        'psoft_ml': pseudo_soft(ml_frame(received, channel), cons.q),
        'psoft_zf': pseudo_soft(zf, cons.q),
        'psoft_mmse': pseudo_soft(mmse, cons.q),
    }


def profile_reliability(config, snr_db, num_frames, order_by='self', output_path=None):
    """
    Mean reliability per rank for each (softness, detector) series.

    Args:
        config: SimConfig (code, modulation, channel, master_seed are used)
        snr_db: Operating point in dB
        num_frames: Frames to average over
        order_by: 'self' sorts every series by its own values; 'ml' sorts every series
            by the frame's ML soft reliabilities
        output_path: Optional CSV destination

    Returns:
        pd.DataFrame: columns rank (1-based) and one column per series
    """
    if order_by not in ORDER_BY:
        raise InvalidArgumentError(f"order_by must be one of {', '.join(ORDER_BY)}")
    if num_frames < 1:
        raise InvalidArgumentError("num_frames must be >= 1")

    context = FrameContext.from_config(config)
    snr = SnrPoint(snr_db)
    totals = {name: np.zeros(context.code.n) for name in SERIES}
    for frame_index in range(num_frames):
        rng = frame_rng(config.master_seed, 0, frame_index)
        vectors = frame_profile(context, snr, rng)
        if order_by == 'ml':
            order = np.argsort(vectors['soft_ml'], kind='stable')
            for name in SERIES:
                totals[name] += vectors[name][order]
        else:
            for name in SERIES:
                totals[name] += np.sort(vectors[name], kind='stable')

    table = pd.DataFrame({'rank': np.arange(1, context.code.n + 1)})
    for name in SERIES:
        table[name] = totals[name] / num_frames

    if output_path is not None:
        output_path = Path(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        table.to_csv(output_path, index=False, float_format='%.10g')
        logger.info("wrote reliability profile to %s", output_path)
    return table
