"""Tests for configuration loading and the code tables."""

import importlib.util
import json
from pathlib import Path

import pytest

from fadinggrand.config import (
    CRC_POLYNOMIALS,
    PRIMITIVE_POLYNOMIALS,
    SimConfig,
    config_from_dict,
    load_config,
    validate_tables,
    with_overrides,
)
from fadinggrand.config.settings import parse_override
from fadinggrand.errors import ConfigError
from fadinggrand.harness import analytic_curve

CONFIG_DIR = Path(__file__).resolve().parent.parent / 'configs'


def test_tables_are_valid():
    validation = validate_tables()
    assert validation['valid']
    assert validation['field_degrees'] == list(range(3, 17))
    assert PRIMITIVE_POLYNOMIALS[7] == 0b10001001
    assert CRC_POLYNOMIALS['crc11'] == 0b111000100001


def test_defaults_validate():
    config = SimConfig().validate()
    assert config.code == 'bch'
    assert config.min_block_errors == 200
    assert config.max_frames == 2_000_000
    assert config.snr_points == []


@pytest.mark.parametrize('path', sorted(CONFIG_DIR.glob('*.toml')), ids=lambda p: p.stem)
def test_bundled_configs_load(path):
    config = load_config(path)
    assert config.name == path.stem


def test_toml_with_overrides(tmp_path):
    path = tmp_path / 'sweep.toml'
    path.write_text('code = "hamming"\nsnr_start = 0.0\nsnr_stop = 2.0\nsnr_step = 0.5\n')
    config = load_config(path, ['decoder=sgrand', 'max_queries=unlimited', 'workers=3'])
    assert config.name == 'sweep'
    assert config.snr_points == [0.0, 0.5, 1.0, 1.5, 2.0]
    assert config.decoder == 'sgrand'
    assert config.query_budget is None
    assert config.workers == 3


def test_json_config(tmp_path):
    path = tmp_path / 'curve.json'
    path.write_text(json.dumps({'name': 'custom', 'snr_db': [1, 3], 'modulation': 'qam16'}))
    config = load_config(path)
    assert config.name == 'custom'
    assert config.snr_points == [1.0, 3.0]
    assert config.output_stem.name == 'custom'


def test_parse_override():
    assert parse_override('snr_db=[1, 2]') == ('snr_db', [1, 2])
    assert parse_override('detector=mmse') == ('detector', 'mmse')
    assert parse_override('k_factor=4') == ('k_factor', 4)
    with pytest.raises(ConfigError):
        parse_override('detector')


@pytest.mark.parametrize('data', [
    {'modulation': 'qam256'},
    {'softness': 'soft', 'detector': 'ml'},
    {'decoder': 'none'},
    {'decoder': 'orbgrand', 'softness': 'hard'},
    {'k_factor': -1.0},
    {'code': 'alist'},
    {'max_queries': 0},
    {'max_queries': 'lots'},
    {'workers': 0},
    {'snr_step': 0.0},
    {'colour': 'blue'},
])
def test_invalid_configs_are_rejected(data):
    with pytest.raises(ConfigError):
        config_from_dict(data)


def test_pseudo_soft_accepts_every_detector():
    for detector in ('zf', 'mmse', 'ml'):
        assert config_from_dict({'softness': 'psoft', 'detector': detector}).detector == detector


def test_with_overrides_revalidates():
    config = SimConfig().validate()
    assert with_overrides(config, snr_db=[5]).snr_points == [5.0]
    with pytest.raises(ConfigError):
        with_overrides(config, detector='ml', softness='soft')


def test_missing_and_unsupported_files(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_config(tmp_path / 'missing.toml')
    path = tmp_path / 'config.yaml'
    path.write_text('code: bch\n')
    with pytest.raises(ConfigError):
        load_config(path)


def test_to_dict_is_json_serializable():
    config = config_from_dict({'snr_db': [1, 2]})
    assert json.loads(json.dumps(config.to_dict()))['snr_db'] == [1, 2]


def preset_groups():
    path = CONFIG_DIR.parent / 'scripts' / 'run_preset_groups.py'
    spec = importlib.util.spec_from_file_location('run_preset_groups', path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module.GROUPS


def test_preset_groups_name_bundled_configs():
    groups = preset_groups()
    assert {'bch_qpsk_rayleigh', 'bch_qam64_rayleigh'} <= set(groups)
    assert 'bch_qam16_rayleigh_psoft_orbgrand' in groups['bch_qam16_rayleigh']
    for group, presets in groups.items():
        configs = [load_config(CONFIG_DIR / f'{preset}.toml') for preset in presets]
        coded = [c for c in configs if c.code != 'uncoded']
        assert {c.softness for c in coded} == {'hard', 'psoft', 'soft'}, group
        for baseline in (c for c in configs if c.code == 'uncoded'):
            assert baseline.decoder == 'none'
            assert baseline.channel == coded[0].channel
            if baseline.channel == 'rayleigh':
                assert analytic_curve(baseline) is not None
