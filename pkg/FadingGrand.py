# -*- coding: utf-8 -*-
"""
FadingGrand - Main Script
GRAND decoding with soft and pseudo-soft information over fading channels

Runs the fadinggrand command-line interface straight from a source checkout.

Usage:
    python FadingGrand.py simulate --config configs/bch_bpsk_rayleigh_psoft.toml
    python FadingGrand.py simulate --config configs/bch_bpsk_rayleigh_psoft.toml --set workers=8
    python FadingGrand.py profile-reliability --config configs/profile_10db.toml
    python FadingGrand.py verify patterns

Outputs:
    - <output_dir>/<name>.csv and <name>.json: BLER curve per SNR point
    - Console output: Summary table and the SNR needed for BLER 1e-3
"""

import os
import sys

from dotenv import load_dotenv

sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

# Load environment variables from .env file
load_dotenv()

from fadinggrand.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
