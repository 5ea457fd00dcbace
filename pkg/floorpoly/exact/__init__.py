""" Exact rationals and adaptive-precision reals with certified floors. """
from .adaptive_real import AdaptiveReal
from .floor_result import FloorResult, real_floor
from .interval import Interval
from .rational import Rational, rat_floor, rat_frac, scaled_frac_identities
