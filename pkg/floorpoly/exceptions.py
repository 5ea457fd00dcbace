""" Module defining the exceptions raised by floorpoly """
from typing import Any, Optional


class FloorPolyError(Exception):
    """ Base class for every error raised by the floorpoly package """


class SizeGuardError(FloorPolyError, ValueError):
    """ Raised when a size parameter exceeds the guard of an operation """


class DomainError(FloorPolyError, ValueError):
    """ Raised when an argument lies outside the domain of an operation """


class AlphaFormatError(FloorPolyError, ValueError):
    """ Raised when an alpha literal such as `root:2,3` cannot be parsed """


class UnresolvableFloorError(FloorPolyError, ArithmeticError):
    """ Raised when a certified floor cannot be decided at the precision cap """
    def __init__(self, message: str, result: Optional[Any] = None):
        super().__init__(message)
        self.result = result


class VerificationError(FloorPolyError, AssertionError):
    """ Raised when an exact identity check fails, carrying the counterexample """
    def __init__(self, message: str, counterexample: Optional[Any] = None):
        super().__init__(message)
        self.counterexample = counterexample


class ExcessiveUnresolvedError(FloorPolyError):
    """ Raised when a distribution run skips too many points """
    def __init__(self, message: str, unresolved_count: int = 0, total: int = 0):
        super().__init__(message)
        self.unresolved_count = unresolved_count
        self.total = total
