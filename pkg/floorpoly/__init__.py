""" Nested floor identities, partition polynomials and uniform distribution experiments. """
__version__ = "0.1.0"

from .config import DEFAULTS, Settings
from .exceptions import (AlphaFormatError, DomainError, ExcessiveUnresolvedError, FloorPolyError, SizeGuardError,
                         UnresolvableFloorError, VerificationError)
