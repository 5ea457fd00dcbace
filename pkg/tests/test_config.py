import pytest

from floorpoly.config import DEFAULTS, Settings


def test_defaults():
    assert DEFAULTS.precision_start == 64
    assert DEFAULTS.precision_cap == 4096
    assert DEFAULTS.value_bits == 53
    assert DEFAULTS.uniform_ceiling < DEFAULTS.nonuniform_floor


def test_environment_overrides():
    settings = Settings.from_env({'FLOORPOLY_PRECISION_CAP': '1024', 'FLOORPOLY_JOBS': '4',
                                  'FLOORPOLY_LOG_LEVEL': 'debug'})
    assert settings.precision_cap == 1024
    assert settings.jobs == 4
    assert settings.log_level == 'DEBUG'


def test_empty_environment_gives_defaults():
    assert Settings.from_env({}) == DEFAULTS


def test_overrides_skip_none():
    settings = DEFAULTS.with_overrides(precision_cap=None, jobs=3)
    assert settings.precision_cap == DEFAULTS.precision_cap
    assert settings.jobs == 3


@pytest.mark.parametrize('environ', [
    {'FLOORPOLY_JOBS': 'two'},
    {'FLOORPOLY_JOBS': '0'},
    {'FLOORPOLY_PRECISION_CAP': '16'},
])
def test_invalid_environment(environ):
    with pytest.raises(ValueError):
        Settings.from_env(environ)


def test_invalid_fields():
    with pytest.raises(ValueError):
        Settings(max_unresolved_fraction=2)
    with pytest.raises(ValueError):
        Settings(precision_start=0)


def test_histogram_tolerance_settings():
    assert DEFAULTS.histogram_sigmas == 3.0
    assert DEFAULTS.histogram_bin_share == 0.97
    assert Settings(histogram_bin_share=1.0).histogram_bin_share == 1.0
    with pytest.raises(ValueError):
        Settings(histogram_bin_share=0)
    with pytest.raises(ValueError):
        Settings(histogram_sigmas=6.0)


def test_threshold_overrides_from_pilot_output():
    settings = Settings.from_env({'FLOORPOLY_UNIFORM_CEILING': '0.005', 'FLOORPOLY_NONUNIFORM_FLOOR': '0.03'})
    assert settings.uniform_ceiling == 0.005
    assert settings.nonuniform_floor == 0.03
    with pytest.raises(ValueError):
        Settings.from_env({'FLOORPOLY_UNIFORM_CEILING': 'low'})
    with pytest.raises(ValueError):
        Settings.from_env({'FLOORPOLY_UNIFORM_CEILING': '0.05'})
    with pytest.raises(ValueError):
        Settings(pilot_margin=0.5)
