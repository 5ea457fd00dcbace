""" Module to represent the measured distribution of a generated sequence and write it to disk """
import json
import logging
import os

from typing import Optional

from .. import __version__
from ..config import DEFAULTS
from .generate import GeneratedSequence
from .measures import histogram, star_discrepancy, weyl_sums

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

CONSISTENT_UNIFORM = 'consistent-uniform'
CONSISTENT_NONUNIFORM = 'consistent-nonuniform'
INCONCLUSIVE = 'inconclusive'


def trend_verdict(discrepancy: float, tenth_discrepancy: Optional[float],
                  uniform_ceiling: float = DEFAULTS.uniform_ceiling,
                  nonuniform_floor: float = DEFAULTS.nonuniform_floor) -> str:
    """
    Two-scale trend check on D*_N and D*_{N/10}

    Args:
        discrepancy (float): D*_N
        tenth_discrepancy (Optional[float]): D*_{N/10}, None when N/10 has no resolved points
        uniform_ceiling (float): D*_N must fall below this for a uniform verdict
        nonuniform_floor (float): Both scales must stay above this for a nonuniform verdict

    Returns:
        str: consistent-uniform, consistent-nonuniform or inconclusive

    """
    if tenth_discrepancy is None:
        return INCONCLUSIVE

    if discrepancy < tenth_discrepancy and discrepancy < uniform_ceiling:
        return CONSISTENT_UNIFORM

    if discrepancy > nonuniform_floor and tenth_discrepancy > nonuniform_floor:
        return CONSISTENT_NONUNIFORM

    return INCONCLUSIVE


class DistributionReport(object):
    """ Star discrepancy, Weyl sums and histogram of a generated sequence, at N and at N/10 """
    def __init__(self, sequence: GeneratedSequence, harmonics: int = DEFAULTS.weyl_harmonics,
                 bins: int = DEFAULTS.histogram_bins, label: Optional[str] = None):
        self.spec = sequence.spec
        self.label: Optional[str] = label
        self.N: int = sequence.spec.N
        self.unresolved_count: int = sequence.unresolved_count
        self.unresolved_indices: list[int] = list(sequence.unresolved)

        if len(sequence) == 0:
            self.star_discrepancy: Optional[float] = None
            self.weyl: list[float] = []
            self.histogram: list[int] = [0] * bins
        else:
            self.star_discrepancy = star_discrepancy(sequence.values)
            self.weyl = weyl_sums(sequence.values, harmonics)
            self.histogram = histogram(sequence.values, bins)

        self.tenth_N: int = self.N // 10
        tenth = sequence.prefix(self.tenth_N)
        self.tenth_star_discrepancy: Optional[float] = star_discrepancy(tenth) if len(tenth) else None
        self.tenth_weyl: list[float] = weyl_sums(tenth, harmonics) if len(tenth) else []

        assert sum(self.histogram) + self.unresolved_count == self.N

    def __len__(self):
        return self.N

    def __repr__(self):
        return f'DistributionReport({self.spec.variant}, N={self.N}, D*={self.star_discrepancy})'

    def verdict(self, uniform_ceiling: float = DEFAULTS.uniform_ceiling,
                nonuniform_floor: float = DEFAULTS.nonuniform_floor) -> str:
        """ The trend verdict for this report """
        if self.star_discrepancy is None:
            return INCONCLUSIVE

        return trend_verdict(self.star_discrepancy, self.tenth_star_discrepancy, uniform_ceiling, nonuniform_floor)

    def to_dict(self) -> dict:
        """
        The report as a JSON-ready dict

        Returns:
            dict: Measurements and the sequence spec, without run provenance

        """
        return dict(
            label=self.label,
            spec=self.spec.to_dict(),
            N=self.N,
            star_discrepancy=self.star_discrepancy,
            weyl=self.weyl,
            histogram=self.histogram,
            unresolved_count=self.unresolved_count,
            unresolved_indices=self.unresolved_indices,
            tenth_N=self.tenth_N,
            tenth_star_discrepancy=self.tenth_star_discrepancy,
            tenth_weyl=self.tenth_weyl,
        )


def report_document(body: dict, run_config: dict) -> dict:
    """ Wrap a report body with the schema version, the library version and the run configuration """
    return dict(schema_version=SCHEMA_VERSION, floorpoly_version=__version__, run_config=run_config, report=body)


def write_json(document: dict, path: str) -> None:
    """
    Write a document with sorted keys, so equal documents give identical files

    Args:
        document (dict): The JSON-ready document
        path (str): Target file

    Returns:
        None

    """
    directory = os.path.dirname(path)
    if directory and not os.path.isdir(directory):
        raise FileNotFoundError(f"Expected Structure Error || Target directory {directory} not found")

    with open(path, 'w') as output:
        json.dump(document, output, sort_keys=True, indent=2)
        output.write('\n')

    logger.info('wrote %s', path)


def write_csv(sequence: GeneratedSequence, path: str) -> None:
    """ One value per line in n order, 17 significant digits """
    with open(path, 'w') as output:
        for value in sequence.values:
            output.write(f'{value:.17g}\n')

    logger.info('wrote %d values to %s', len(sequence), path)
