""" Module with the certified floor of an AdaptiveReal """
import logging

from typing import Optional

from ..config import DEFAULTS
from ..exceptions import UnresolvableFloorError
from .adaptive_real import AdaptiveReal
from .interval import Interval
from .rational import rat_floor

logger = logging.getLogger(__name__)


class FloorResult(object):
    """ Outcome of a certified floor: the integer, or the enclosure that still straddles an integer """
    def __init__(self, value: Optional[int], enclosure: Interval, precision: float):
        self.value: Optional[int] = value
        self.enclosure: Interval = enclosure
        self.precision: float = precision

    def __repr__(self):
        if self.resolved:
            return f'FloorResult({self.value})'
        return f'FloorResult(unresolvable, {self.enclosure})'

    def __eq__(self, other):
        if isinstance(other, FloorResult):
            return self.value == other.value and self.enclosure == other.enclosure
        return self.resolved and self.value == other

    @property
    def resolved(self) -> bool:
        """ True when the floor was certified """
        return self.value is not None

    def unwrap(self) -> int:
        """
        The certified floor

        Returns:
            int: The floor value

        """
        if not self.resolved:
            raise UnresolvableFloorError(
                f"Expected Precision Error || enclosure {self.enclosure} still straddles an integer "
                f"at {self.precision} bits", self)

        return self.value


def real_floor(x: AdaptiveReal, precision_cap: int = DEFAULTS.precision_cap,
               precision_start: int = DEFAULTS.precision_start) -> FloorResult:
    """
    Certified floor of an AdaptiveReal. The working precision doubles from precision_start, or the cap when
    that is lower, until the enclosure no longer straddles an integer or the cap is passed.

    Args:
        x (AdaptiveReal): The value
        precision_cap (int): Largest precision, in bits, that may be requested
        precision_start (int): First precision tried

    Returns:
        FloorResult: The certified value, or the unresolvable marker with the last enclosure

    """
    if x.is_rational:
        return FloorResult(rat_floor(x.rational_value), x.enclosure(0), x.precision)

    precision = min(precision_start, precision_cap)
    enclosure = x.enclosure(precision)
    while True:
        value = enclosure.floor()
        if value is not None:
            return FloorResult(value, enclosure, precision)

        if precision * 2 > precision_cap:
            break

        precision *= 2
        logger.debug('refining %r to %d bits', x, precision)
        enclosure = x.enclosure(precision)

    logger.debug('floor of %r unresolvable at %d bits', x, precision)

    return FloorResult(None, enclosure, precision)
