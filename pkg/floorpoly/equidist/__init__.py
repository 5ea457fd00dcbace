""" Sequences mod 1 built from nested floors, their measured distribution and the uniformity experiments. """
from .alpha import AlphaSpec
from .experiments import (HYPOTHESIS_UNVERIFIED, OUTSIDE_HYPOTHESIS, PILOT_REFERENCES, WITHIN_HYPOTHESIS,
                          CorollaryReport, PilotThresholds, PointwiseCheck, check_unresolved, corollary_experiment,
                          derive_thresholds, expected_chain_behaviour, hypothesis_label, k2_closed_form_check,
                          pilot_thresholds, rational_power_scaling_check)
from .generate import GeneratedSequence, certified_fraction, generate, point_enclosure
from .measures import histogram, star_discrepancy, weyl_sums
from .report import (CONSISTENT_NONUNIFORM, CONSISTENT_UNIFORM, INCONCLUSIVE, SCHEMA_VERSION, DistributionReport,
                     report_document, trend_verdict, write_csv, write_json)
from .sequence_spec import SequenceSpec
