"""
Configuration module for fadinggrand.

Contains simulation settings, environment defaults and code construction tables.
"""

from .code_tables import CRC_POLYNOMIALS, PRIMITIVE_POLYNOMIALS, validate_tables
from .settings import SimConfig, config_from_dict, load_config, with_overrides

__all__ = [
    'SimConfig', 'load_config', 'config_from_dict', 'with_overrides',
    'PRIMITIVE_POLYNOMIALS', 'CRC_POLYNOMIALS', 'validate_tables',
]
