""" Module holding the tunable settings of floorpoly and their environment overrides """
import logging
import os

from dataclasses import dataclass, replace
from typing import Mapping, Optional

logger = logging.getLogger(__name__)

ENV_PRECISION_CAP = 'FLOORPOLY_PRECISION_CAP'
ENV_JOBS = 'FLOORPOLY_JOBS'
ENV_LOG_LEVEL = 'FLOORPOLY_LOG_LEVEL'
ENV_UNIFORM_CEILING = 'FLOORPOLY_UNIFORM_CEILING'
ENV_NONUNIFORM_FLOOR = 'FLOORPOLY_NONUNIFORM_FLOOR'


@dataclass(frozen=True)
class Settings(object):
    """ Tunables shared by the library and the command line """
    precision_start: int = 64
    precision_cap: int = 4096
    value_bits: int = 53
    jobs: int = 1
    weyl_harmonics: int = 8
    histogram_bins: int = 100
    histogram_sigmas: float = 3.0
    # share of density-histogram bins within histogram_sigmas; 1.0 asks it of every bin
    histogram_bin_share: float = 0.97
    histogram_hard_limit: float = 5.0
    uniform_ceiling: float = 0.01
    nonuniform_floor: float = 0.02
    # factor between pilot measurements and the thresholds derived from them
    pilot_margin: float = 1.5
    max_unresolved_fraction: float = 0.001
    ci_points: int = 100_000
    full_points: int = 10_000_000
    witness_shard: int = 100_000
    log_level: str = 'WARNING'

    def __post_init__(self):
        self.validate_fields(self)

    @staticmethod
    def validate_fields(settings: 'Settings') -> None:
        """
        Validate the settings values

        Args:
            settings (Settings): The settings to validate

        Returns:
            None

        """
        if settings.precision_start < 1:
            raise ValueError("Expected Config Error || `precision_start` must be a positive number of bits")

        if settings.precision_cap < settings.precision_start:
            raise ValueError(
                f"Expected Config Error || `precision_cap` ({settings.precision_cap}) is below "
                f"`precision_start` ({settings.precision_start})")

        if settings.jobs < 1:
            raise ValueError("Expected Config Error || `jobs` must be at least 1")

        if not 0 <= settings.max_unresolved_fraction <= 1:
            raise ValueError("Expected Config Error || `max_unresolved_fraction` must lie in [0, 1]")

        if not 0 < settings.histogram_bin_share <= 1:
            raise ValueError("Expected Config Error || `histogram_bin_share` must lie in (0, 1]")

        if not 0 < settings.uniform_ceiling < settings.nonuniform_floor:
            raise ValueError(
                f"Expected Config Error || need 0 < `uniform_ceiling` ({settings.uniform_ceiling}) < "
                f"`nonuniform_floor` ({settings.nonuniform_floor})")

        if settings.pilot_margin < 1:
            raise ValueError("Expected Config Error || `pilot_margin` must be at least 1")

        if not 0 < settings.histogram_sigmas <= settings.histogram_hard_limit:
            raise ValueError("Expected Config Error || need 0 < `histogram_sigmas` <= `histogram_hard_limit`")

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> 'Settings':
        """
        Build settings from the defaults and the FLOORPOLY_* environment variables

        Args:
            environ (Optional[Mapping[str, str]]): Environment to read, `os.environ` when omitted

        Returns:
            Settings: The settings with the overrides applied

        """
        environ = os.environ if environ is None else environ
        overrides = {}

        if environ.get(ENV_PRECISION_CAP):
            overrides['precision_cap'] = _env_int(environ, ENV_PRECISION_CAP)

        if environ.get(ENV_JOBS):
            overrides['jobs'] = _env_int(environ, ENV_JOBS)

        if environ.get(ENV_UNIFORM_CEILING):
            overrides['uniform_ceiling'] = _env_float(environ, ENV_UNIFORM_CEILING)

        if environ.get(ENV_NONUNIFORM_FLOOR):
            overrides['nonuniform_floor'] = _env_float(environ, ENV_NONUNIFORM_FLOOR)

        if environ.get(ENV_LOG_LEVEL):
            overrides['log_level'] = environ[ENV_LOG_LEVEL].upper()

        if overrides:
            logger.debug('environment overrides: %s', overrides)

        return cls(**overrides)

    def with_overrides(self, **values) -> 'Settings':
        """ Return a copy with the non-None values replaced """
        return replace(self, **{key: value for key, value in values.items() if value is not None})


def _env_int(environ: Mapping[str, str], name: str) -> int:
    try:
        return int(environ[name])
    except ValueError:
        raise ValueError(f"Expected Config Error || {name} must be an integer, got {environ[name]!r}") from None


def _env_float(environ: Mapping[str, str], name: str) -> float:
    try:
        return float(environ[name])
    except ValueError:
        raise ValueError(f"Expected Config Error || {name} must be a number, got {environ[name]!r}") from None


DEFAULTS = Settings()
