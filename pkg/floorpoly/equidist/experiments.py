""" Module with the uniformity experiments for sequences built from (alpha n)^{:k} """
import logging

from fractions import Fraction
from typing import Optional, Union

from ..config import DEFAULTS
from ..exact import Interval
from ..exceptions import DomainError, ExcessiveUnresolvedError
from .alpha import AlphaSpec
from .generate import GeneratedSequence, UndecidedFloor, chain_enclosure, generate, interval_floor
from .report import DistributionReport
from .sequence_spec import SequenceSpec

logger = logging.getLogger(__name__)

WITHIN_HYPOTHESIS = 'within-theorem-hypothesis'
OUTSIDE_HYPOTHESIS = 'outside-theorem-hypothesis'
HYPOTHESIS_UNVERIFIED = 'hypothesis-unverified'


def hypothesis_label(alpha: AlphaSpec, k: int) -> str:
    """
    Whether alpha^2, ..., alpha^{k-1} are all irrational, as the non-uniformity result for
    m (alpha n)^k - k m (alpha n)^{:k} assumes

    Args:
        alpha (AlphaSpec): The alpha
        k (int): Chain depth

    Returns:
        str: within-theorem-hypothesis, outside-theorem-hypothesis or hypothesis-unverified

    """
    decisions = [alpha.power_is_rational(j) for j in range(2, k)]
    if any(decision is True for decision in decisions):
        return OUTSIDE_HYPOTHESIS
    if any(decision is None for decision in decisions):
        return HYPOTHESIS_UNVERIFIED

    return WITHIN_HYPOTHESIS


def expected_chain_behaviour(alpha: AlphaSpec, k: int) -> str:
    """ {(alpha n)^{:k}} is uniform exactly when alpha^k is irrational """
    decision = alpha.power_is_rational(k)
    if decision is None:
        return 'unknown'

    return 'nonuniform' if decision else 'uniform'


def check_unresolved(sequence: GeneratedSequence, max_fraction: float = DEFAULTS.max_unresolved_fraction) -> None:
    """ Raise ExcessiveUnresolvedError when more than max_fraction of the N points were skipped """
    if sequence.unresolved_count > max_fraction * sequence.spec.N:
        raise ExcessiveUnresolvedError(
            f"Expected Precision Error || {sequence.unresolved_count} of {sequence.spec.N} points of "
            f"{sequence.spec!r} unresolvable at {sequence.spec.precision_cap} bits",
            sequence.unresolved_count, sequence.spec.N)


def _format(value: Optional[float]) -> str:
    return 'n/a' if value is None else f'{value:.6f}'


class CorollaryReport(object):
    """ Distribution reports and verdicts for {(alpha n)^{:k}} and the theorem combination """
    def __init__(self, alpha: AlphaSpec, k: int, m: int, N: int, uniform_ceiling: float, nonuniform_floor: float):
        self.alpha: AlphaSpec = alpha
        self.k: int = k
        self.m: int = m
        self.N: int = N
        self.uniform_ceiling: float = uniform_ceiling
        self.nonuniform_floor: float = nonuniform_floor
        self.hypothesis: str = hypothesis_label(alpha, k)
        self.expected_chain: str = expected_chain_behaviour(alpha, k)
        self.reports: dict[str, DistributionReport] = {}

    def __getitem__(self, variant: str) -> DistributionReport:
        return self.reports[variant]

    def __repr__(self):
        verdicts = ', '.join(f'{variant}: {verdict}' for variant, verdict in self.verdicts.items())
        return f'CorollaryReport({self.alpha}, k={self.k}, N={self.N}, {verdicts})'

    def add(self, report: DistributionReport):
        self.reports[report.spec.variant] = report

    @property
    def verdicts(self) -> dict[str, str]:
        return {variant: report.verdict(self.uniform_ceiling, self.nonuniform_floor)
                for variant, report in self.reports.items()}

    def summary(self) -> str:
        """ One line per sequence with its discrepancies and verdict """
        lines = [f'alpha={self.alpha} k={self.k} m={self.m} N={self.N} [{self.hypothesis}]']
        for variant, report in self.reports.items():
            lines.append(f'{variant}: D*(N)={_format(report.star_discrepancy)} '
                         f'D*(N/10)={_format(report.tenth_star_discrepancy)} -> {self.verdicts[variant]}')

        return '\n'.join(lines)

    def to_dict(self) -> dict:
        return dict(alpha=str(self.alpha), k=self.k, m=self.m, N=self.N, hypothesis=self.hypothesis,
                    expected_chain=self.expected_chain, uniform_ceiling=self.uniform_ceiling,
                    nonuniform_floor=self.nonuniform_floor, verdicts=self.verdicts,
                    reports={variant: report.to_dict() for variant, report in self.reports.items()})


def corollary_experiment(alpha: Union[AlphaSpec, str], k: int, N: int = DEFAULTS.ci_points, m: int = 1,
                         precision_cap: int = DEFAULTS.precision_cap, jobs: int = DEFAULTS.jobs,
                         uniform_ceiling: float = DEFAULTS.uniform_ceiling,
                         nonuniform_floor: float = DEFAULTS.nonuniform_floor,
                         max_unresolved_fraction: float = DEFAULTS.max_unresolved_fraction) -> CorollaryReport:
    """
    Measure {(alpha n)^{:k}} and {m (alpha n)^k - k m (alpha n)^{:k}} at N and N/10 and give each a trend
    verdict

    Args:
        alpha (Union[AlphaSpec, str]): The alpha, or its literal
        k (int): Chain depth, k >= 2
        N (int): Number of points
        m (int): Multiplier of the theorem combination
        precision_cap (int): Largest alpha precision, in bits
        jobs (int): Worker processes
        uniform_ceiling (float): D*_N bound for a uniform verdict
        nonuniform_floor (float): D* bound at both scales for a nonuniform verdict
        max_unresolved_fraction (float): Abort threshold for skipped points

    Returns:
        CorollaryReport: Both reports and their verdicts

    """
    alpha = alpha if isinstance(alpha, AlphaSpec) else AlphaSpec(alpha)
    if k < 2:
        raise DomainError(f"Expected Domain Error || the experiment needs k >= 2, got {k}")

    result = CorollaryReport(alpha, k, m, N, uniform_ceiling, nonuniform_floor)
    for variant in (SequenceSpec.POWER_CHAIN, SequenceSpec.THEOREM_COMBINATION):
        spec = SequenceSpec(variant, [alpha], k=k, m=m, N=N, precision_cap=precision_cap)
        sequence = generate(spec, jobs=jobs)
        check_unresolved(sequence, max_unresolved_fraction)
        result.add(DistributionReport(sequence, label=variant))

    logger.info('%r', result)

    return result


class PointwiseCheck(object):
    """ Outcome of comparing two certified enclosures for every n """
    def __init__(self, name: str, checked: int = 0, mismatches: Optional[list[int]] = None,
                 unresolved: Optional[list[int]] = None):
        self.name: str = name
        self.checked: int = checked
        self.mismatches: list[int] = mismatches or []
        self.unresolved: list[int] = unresolved or []

    def __repr__(self):
        return f'PointwiseCheck({self.name}, checked={self.checked}, mismatches={len(self.mismatches)}, ' \
               f'unresolved={len(self.unresolved)})'

    @property
    def passed(self) -> bool:
        """ True when every decided point agreed and at most one in a thousand was undecided """
        return not self.mismatches and len(self.unresolved) <= DEFAULTS.max_unresolved_fraction * max(1, self.checked)

    def to_dict(self) -> dict:
        return dict(name=self.name, checked=self.checked, mismatches=self.mismatches, unresolved=self.unresolved,
                    passed=self.passed)


def _compare(check: PointwiseCheck, n: int, first, second, spec: SequenceSpec) -> None:
    """ Refine both enclosure builders together until they are narrow enough to compare, then compare """
    tolerance = Fraction(1, 1 << spec.value_bits)
    precision = spec.precision_start
    while True:
        try:
            left, right = first(precision), second(precision)
            if left.width <= tolerance and right.width <= tolerance:
                check.checked += 1
                if left.hi < right.lo or right.hi < left.lo:
                    check.mismatches.append(n)
                return
        except UndecidedFloor:
            pass

        if precision * 2 > spec.precision_cap:
            check.unresolved.append(n)
            return

        precision *= 2


def _fraction_of(interval: Interval) -> Interval:
    return interval - interval_floor(interval)


def k2_closed_form_check(alpha: Union[AlphaSpec, str], N: int, precision_cap: int = DEFAULTS.precision_cap) \
        -> PointwiseCheck:
    """
    Check {(alpha n)^2 - 2 (alpha n)^{:2}} = {alpha n}^2 for n = 1..N to certified precision

    Args:
        alpha (Union[AlphaSpec, str]): The alpha, or its literal
        N (int): Number of points
        precision_cap (int): Largest alpha precision, in bits

    Returns:
        PointwiseCheck: Agreement per n

    """
    alpha = alpha if isinstance(alpha, AlphaSpec) else AlphaSpec(alpha)
    spec = SequenceSpec(SequenceSpec.THEOREM_COMBINATION, [alpha], k=2, m=1, N=N, precision_cap=precision_cap)
    check = PointwiseCheck('k2-closed-form')

    for n in range(1, N + 1):
        def combination(precision: int, n: int = n) -> Interval:
            scaled = alpha().enclosure(precision) * n
            return _fraction_of(scaled ** 2 - chain_enclosure(scaled, 2) * 2)

        def squared_fraction(precision: int, n: int = n) -> Interval:
            return _fraction_of(alpha().enclosure(precision) * n) ** 2

        _compare(check, n, combination, squared_fraction, spec)

    logger.info('%r', check)

    return check


def rational_power_scaling_check(alpha: Union[AlphaSpec, str], k: int, N: int,
                                 precision_cap: int = DEFAULTS.precision_cap) -> PointwiseCheck:
    """
    With alpha^k = p/q rational, check {q (alpha^k n^k - k (alpha n)^{:k})} = {-q k (alpha n)^{:k}} for
    n = 1..N to certified precision

    Args:
        alpha (Union[AlphaSpec, str]): An alpha with a rational k-th power
        k (int): Chain depth, k >= 1
        N (int): Number of points
        precision_cap (int): Largest alpha precision, in bits

    Returns:
        PointwiseCheck: Agreement per n

    """
    alpha = alpha if isinstance(alpha, AlphaSpec) else AlphaSpec(alpha)
    power = alpha().rational_power(k)
    if power is None:
        raise DomainError(f"Expected Domain Error || {alpha}^{k} is not known to be rational")

    spec = SequenceSpec(SequenceSpec.POWER_CHAIN, [alpha], k=k, N=N, precision_cap=precision_cap)
    check = PointwiseCheck('rational-power-scaling')
    q = power.denominator

    for n in range(1, N + 1):
        def scaled(precision: int, n: int = n) -> Interval:
            return _fraction_of((chain_enclosure(alpha().enclosure(precision) * n, k) * (-k) + power * n ** k) * q)

        def chain_only(precision: int, n: int = n) -> Interval:
            return _fraction_of(chain_enclosure(alpha().enclosure(precision) * n, k) * (-q * k))

        _compare(check, n, scaled, chain_only, spec)

    logger.info('%r', check)

    return check


UNIFORM = 'uniform'
NONUNIFORM = 'nonuniform'

# (variant, alpha, k, expected behaviour) of the sequences the verdict thresholds are calibrated on
PILOT_REFERENCES = (
    (SequenceSpec.POWER_CHAIN, 'pi', 3, UNIFORM),
    (SequenceSpec.POWER_CHAIN, 'root:2,3', 2, UNIFORM),
    (SequenceSpec.POWER_CHAIN, 'root:2,3', 3, NONUNIFORM),
    (SequenceSpec.POWER_CHAIN, 'root:2,2', 2, NONUNIFORM),
    (SequenceSpec.THEOREM_COMBINATION, 'pi', 3, NONUNIFORM),
)


def derive_thresholds(uniform: list[float], nonuniform: list[float],
                      margin: float = DEFAULTS.pilot_margin) -> tuple[float, float]:
    """
    Verdict thresholds from measured star discrepancies

    Args:
        uniform (list[float]): D*_N of the uniform references at the full pilot size
        nonuniform (list[float]): D* of the nonuniform references at both pilot sizes
        margin (float): Factor, >= 1, between a measurement and the threshold derived from it

    Returns:
        tuple[float, float]: (uniform_ceiling, nonuniform_floor)

    """
    if not uniform or not nonuniform:
        raise DomainError("Expected Domain Error || thresholds need uniform and nonuniform measurements")

    if margin < 1:
        raise DomainError(f"Expected Domain Error || the pilot margin must be >= 1, got {margin}")

    return max(uniform) * margin, min(nonuniform) / margin


class PilotThresholds(object):
    """ D* anchors of the reference sequences at N and N/10 and the thresholds derived from them """
    def __init__(self, N: int, margin: float, anchors: list[dict]):
        self.N: int = N
        self.margin: float = margin
        self.anchors: list[dict] = anchors

        uniform = [anchor['star_discrepancy'] for anchor in anchors if anchor['expected'] == UNIFORM]
        nonuniform = [value for anchor in anchors if anchor['expected'] == NONUNIFORM
                      for value in (anchor['star_discrepancy'], anchor['tenth_star_discrepancy'])
                      if value is not None]
        self.uniform_ceiling, self.nonuniform_floor = derive_thresholds(uniform, nonuniform, margin)

    def __repr__(self):
        return f'PilotThresholds(N={self.N}, uniform_ceiling={self.uniform_ceiling:.6f}, ' \
               f'nonuniform_floor={self.nonuniform_floor:.6f})'

    @property
    def separated(self) -> bool:
        """ True when the uniform ceiling stays below the nonuniform floor """
        return self.uniform_ceiling < self.nonuniform_floor

    def summary(self) -> str:
        lines = [f'pilot N={self.N} margin={self.margin}']
        for anchor in self.anchors:
            lines.append(f'{anchor["variant"]} {anchor["alpha"]} k={anchor["k"]} ({anchor["expected"]}): '
                         f'D*(N)={_format(anchor["star_discrepancy"])} '
                         f'D*(N/10)={_format(anchor["tenth_star_discrepancy"])}')
        lines.append(f'uniform_ceiling={self.uniform_ceiling:.6f} nonuniform_floor={self.nonuniform_floor:.6f}'
                     f'{"" if self.separated else " (not separated)"}')

        return '\n'.join(lines)

    def to_dict(self) -> dict:
        return dict(N=self.N, margin=self.margin, anchors=self.anchors, uniform_ceiling=self.uniform_ceiling,
                    nonuniform_floor=self.nonuniform_floor, separated=self.separated)


def pilot_thresholds(N: int = DEFAULTS.ci_points, margin: float = DEFAULTS.pilot_margin,
                     precision_cap: int = DEFAULTS.precision_cap, jobs: int = DEFAULTS.jobs,
                     max_unresolved_fraction: float = DEFAULTS.max_unresolved_fraction) -> PilotThresholds:
    """
    Measure every reference sequence at N and N/10 and derive the verdict thresholds: the ceiling sits
    `margin` above the largest uniform D*_N, the floor `margin` below the smallest nonuniform D* at either size

    Args:
        N (int): Full pilot size, the default gives anchors at 10^4 and 10^5
        margin (float): Factor between measurements and thresholds
        precision_cap (int): Largest alpha precision, in bits
        jobs (int): Worker processes
        max_unresolved_fraction (float): Abort threshold for skipped points

    Returns:
        PilotThresholds: The anchors and thresholds

    """
    if N < 10:
        raise DomainError(f"Expected Domain Error || the pilot needs N >= 10, got {N}")

    anchors = []
    for variant, literal, k, expected in PILOT_REFERENCES:
        spec = SequenceSpec(variant, [AlphaSpec(literal)], k=k, m=1, N=N, precision_cap=precision_cap)
        sequence = generate(spec, jobs=jobs)
        check_unresolved(sequence, max_unresolved_fraction)
        report = DistributionReport(sequence, label=variant)
        anchors.append(dict(variant=variant, alpha=literal, k=k, expected=expected,
                            star_discrepancy=report.star_discrepancy,
                            tenth_star_discrepancy=report.tenth_star_discrepancy))

    result = PilotThresholds(N, margin, anchors)
    logger.info('%r', result)

    return result
