"""
Simulation settings.

Environment defaults come from a .env file (python-dotenv) and are read once at import.
A SimConfig is built from a TOML or JSON file plus `key=value` overrides and validated
before any simulation work starts.
"""

import json
import os

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Optional

import numpy as np
from dotenv import load_dotenv

from ..errors import ConfigError

# Load environment variables from .env file
load_dotenv()

DEFAULT_WORKERS = int(os.getenv('FADINGGRAND_WORKERS', os.cpu_count() or 1))
DEFAULT_OUTPUT_DIR = os.getenv('FADINGGRAND_OUTPUT_DIR', 'results')
DEFAULT_MASTER_SEED = int(os.getenv('FADINGGRAND_MASTER_SEED', 2022))
DEFAULT_MAX_QUERIES = int(os.getenv('FADINGGRAND_MAX_QUERIES', 1_000_000))
LOG_LEVEL = os.getenv('FADINGGRAND_LOG_LEVEL', 'INFO').upper()

CODE_KINDS = ('bch', 'ca-polar', 'random', 'hamming', 'alist', 'uncoded')
MODULATIONS = ('bpsk', 'qpsk', 'qam16', 'qam64')
CHANNELS = ('awgn', 'rayleigh', 'rician')
DETECTORS = ('zf', 'mmse', 'ml')
SOFTNESS = ('hard', 'psoft', 'soft')
DECODERS = ('grand-hard', 'orbgrand', 'orbgrand-ham-tie', 'sgrand', 'none')


@dataclass(frozen=True)
class SimConfig:
    """Flat simulation configuration; every field can be set with --set key=value."""

    name: str = 'curve'

    # code
    code: str = 'bch'
    bch_m: int = 7
    bch_t: int = 2
    polar_n: int = 128
    polar_k: int = 105
    crc_poly: str = '0x621'        # x^11 + x^10 + x^9 + x^5 + 1, leading term implicit
    crc_width: int = 11
    reliability_order_path: Optional[str] = None
    code_n: int = 16
    code_k: int = 8
    code_seed: int = 1
    alist_path: Optional[str] = None

    # link
    modulation: str = 'bpsk'
    channel: str = 'rayleigh'
    k_factor: float = 0.0
    detector: str = 'zf'
    softness: str = 'psoft'
    decoder: str = 'orbgrand'
    max_queries: object = DEFAULT_MAX_QUERIES

    # sweep
    snr_db: tuple = ()
    snr_start: Optional[float] = None
    snr_stop: Optional[float] = None
    snr_step: float = 1.0
    min_block_errors: int = 200
    max_frames: int = 2_000_000
    batch_frames: int = 32
    master_seed: int = DEFAULT_MASTER_SEED
    workers: int = DEFAULT_WORKERS
    output_dir: str = DEFAULT_OUTPUT_DIR

    @property
    def query_budget(self):
        """max_queries as an int, or None when unlimited."""
        if isinstance(self.max_queries, str) and self.max_queries.lower() == 'unlimited':
            return None
        try:
            return int(self.max_queries)
        except (TypeError, ValueError):
            raise ConfigError(
                f"max_queries={self.max_queries!r} is not an integer or 'unlimited'") from None

    @property
    def snr_points(self):
        """The SNR sweep in dB, either the explicit list or the configured range (inclusive)."""
        if self.snr_db:
            return [float(s) for s in self.snr_db]
        if self.snr_start is None or self.snr_stop is None:
            return []
        count = int(np.floor((self.snr_stop - self.snr_start) / self.snr_step + 1e-9)) + 1
        return [round(self.snr_start + i * self.snr_step, 10) for i in range(max(count, 0))]

    @property
    def output_stem(self):
        return Path(self.output_dir) / self.name

    def validate(self):
        """
        Check enum values and cross-field invariants.

        Returns:
            SimConfig: self, for chaining

        Raises:
            ConfigError: on the first violated rule
        """
        for value, allowed, key in (
            (self.code, CODE_KINDS, 'code'),
            (self.modulation, MODULATIONS, 'modulation'),
            (self.channel, CHANNELS, 'channel'),
            (self.detector, DETECTORS, 'detector'),
            (self.softness, SOFTNESS, 'softness'),
            (self.decoder, DECODERS, 'decoder'),
        ):
            if value not in allowed:
                raise ConfigError(f"{key}={value!r} is not one of {', '.join(allowed)}")

        if self.softness == 'soft' and self.detector not in ('zf', 'mmse'):
            raise ConfigError("softness=soft requires detector zf or mmse")
        if self.decoder == 'none' and self.code != 'uncoded':
            raise ConfigError("decoder=none is only meaningful with code=uncoded")
        if self.decoder not in ('grand-hard', 'none') and self.softness == 'hard':
            raise ConfigError(f"decoder={self.decoder} needs softness psoft or soft")
        if self.k_factor < 0:
            raise ConfigError("k_factor must be nonnegative")
        if self.code == 'alist' and not self.alist_path:
            raise ConfigError("code=alist requires alist_path")
        if self.query_budget is not None and self.query_budget < 1:
            raise ConfigError("max_queries must be >= 1 or 'unlimited'")
        if self.min_block_errors < 1 or self.max_frames < 1 or self.batch_frames < 1:
            raise ConfigError("min_block_errors, max_frames and batch_frames must be positive")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if self.snr_step <= 0:
            raise ConfigError("snr_step must be positive")
        return self

    def to_dict(self):
        data = asdict(self)
        data['snr_db'] = list(self.snr_db)
        return data


FIELD_NAMES = {f.name for f in fields(SimConfig)}


def parse_override(text):
    """
    Parse one `key=value` override.

    Values are decoded as JSON when possible (numbers, lists, true/false/null),
    otherwise kept as plain strings.
    """
    if '=' not in text:
        raise ConfigError(f"override {text!r} is not of the form key=value")
    key, raw = text.split('=', 1)
    key = key.strip()
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw.strip()
    return key, value


def _coerce(data):
    unknown = set(data) - FIELD_NAMES
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    data = dict(data)
    if 'snr_db' in data:
        snr = data['snr_db']
        data['snr_db'] = tuple(snr) if isinstance(snr, (list, tuple)) else (snr,)
    return data


def config_from_dict(data, overrides=()):
    """Build and validate a SimConfig from a mapping plus `key=value` override strings."""
    merged = dict(data)
    merged.update(parse_override(item) for item in overrides)
    return SimConfig(**_coerce(merged)).validate()


def load_config(path=None, overrides=()):
    """
    Load a SimConfig from a TOML or JSON file.

    Args:
        path: Config file path (.toml or .json), or None for defaults only
        overrides: Iterable of 'key=value' strings applied after the file

    Returns:
        SimConfig: validated configuration
    """
    data = {}
    if path is not None:
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"config file not found at {path}")
        if path.suffix == '.toml':
            with open(path, 'rb') as handle:
                data = tomllib.load(handle)
        elif path.suffix == '.json':
            with open(path) as handle:
                data = json.load(handle)
        else:
            raise ConfigError(f"unsupported config format {path.suffix!r} (use .toml or .json)")
        data.setdefault('name', path.stem)
    return config_from_dict(data, overrides)


def with_overrides(config, **changes):
    """Copy of config with fields replaced, re-validated."""
    return replace(config, **_coerce(changes)).validate()
