"""
Curve results: the CurvePoint record, CSV/JSON persistence and required-SNR lookup.
"""

import json
import logging
import math
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import pandas as pd

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurvePoint:
    snr_db: float
    frames: int
    block_errors: int
    bler: float
    avg_queries: float
    p99_queries: float
    abandon_rate: float
    deep_fade_count: int
    wallclock_seconds: float


CURVE_COLUMNS = [f.name for f in fields(CurvePoint)]


def points_to_frame(points):
    """CurvePoints as a DataFrame with the fixed column order."""
    return pd.DataFrame([asdict(p) for p in points], columns=CURVE_COLUMNS)


def write_curve(points, config, stem):
    """
    Write `<stem>.csv` and `<stem>.json`.

    Args:
        points: List of CurvePoint
        config: SimConfig embedded in the JSON for provenance
        stem: Output path without suffix

    Returns:
        tuple: (csv path, json path)
    """
    stem = Path(stem)
    stem.parent.mkdir(parents=True, exist_ok=True)
    csv_path = stem.with_suffix('.csv')
    json_path = stem.with_suffix('.json')

    points_to_frame(points).to_csv(csv_path, index=False, float_format='%.10g')
    with open(json_path, 'w') as handle:
        json.dump({'config': config.to_dict(), 'points': [asdict(p) for p in points]},
                  handle, indent=2)

    logger.info("wrote %s and %s", csv_path, json_path)
    return csv_path, json_path


def read_curve(path):
    """Load a curve CSV (or the CSV next to a JSON/stem path) into a DataFrame."""
    path = Path(path)
    if path.suffix != '.csv':
        path = path.with_suffix('.csv')
    return pd.read_csv(path)


def required_snr(points, target_bler=1e-3):
    """
    SNR at which a curve reaches target_bler, interpolating log10(BLER) linearly in dB.

    Args:
        points: List of CurvePoint or a DataFrame with snr_db and bler columns
        target_bler: Target block-error rate

    Returns:
        float or None: None when no point of the sweep reaches the target. If the first
        point is already at or below it, that point's SNR is returned.
    """
    table = points if isinstance(points, pd.DataFrame) else points_to_frame(points)
    table = table.sort_values('snr_db')
    snr = table['snr_db'].tolist()
    bler = table['bler'].tolist()
    for i, value in enumerate(bler):
        if value > target_bler:
            continue
        if i == 0:
            return float(snr[0])
        low_snr, low_bler = snr[i - 1], bler[i - 1]
        if value <= 0:
            return float(snr[i])
        fraction = ((math.log10(low_bler) - math.log10(target_bler))
                    / (math.log10(low_bler) - math.log10(value)))
        return float(low_snr + fraction * (snr[i] - low_snr))
    return None
