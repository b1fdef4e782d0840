#!/usr/bin/env python3
"""
Errors
Exception hierarchy shared by the engine modules and the CLI
"""

from typing import Optional, Tuple


class AlgebraError(Exception):
    """Base class for every engine error. exit_code is used by the CLI."""

    exit_code = 1


class DimensionMismatchError(AlgebraError):
    """Vectors or subspaces with different ambient dimensions were combined"""


class IndexRangeError(AlgebraError):
    exit_code = 2


class ArityError(AlgebraError):
    """Wrong number of bracket arguments or wrong arity for a theory"""


class AntisymmetryError(AlgebraError):
    exit_code = 2


class DuplicateDefinitionError(AlgebraError):
    exit_code = 2


class TracePreconditionError(AlgebraError):
    """The linear form does not vanish on every bracket value"""


class PreconditionError(AlgebraError):
    """
    An operation precondition failed

    Args:
        message: Human readable reason
        condition: Optional condition number of a lifting theorem
    """

    def __init__(self, message: str, condition: Optional[int] = None):
        super().__init__(message)
        self.condition = condition


class CocycleError(AlgebraError):
    """The cochain is not a cocycle; key is the first violated basis tuple"""

    def __init__(self, message: str, key: Optional[Tuple] = None):
        super().__init__(message)
        self.key = key


class DegreeError(AlgebraError):
    exit_code = 2


class CatalogError(AlgebraError):
    exit_code = 2


class DocumentParseError(AlgebraError):
    """Malformed algebra or cochain document"""

    exit_code = 2

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class ConfigurationError(AlgebraError):
    exit_code = 2
