#!/usr/bin/env python3
"""
Error Types for the Network Dictionary Toolkit
Every failure the library raises derives from NdlError
"""

from typing import Optional


class NdlError(Exception):
    """Base error; exit_code is what the CLI returns for it"""

    exit_code = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ParameterError(NdlError):
    """A parameter is outside its documented range"""


class StructureError(NdlError):
    """The network cannot support the requested operation"""


class ParseError(NdlError):
    """Malformed input file"""

    def __init__(self, message: str, line_number: Optional[int] = None,
                 path: Optional[str] = None):
        where = ""
        if path is not None:
            where += f"{path}:"
        if line_number is not None:
            where += f"{line_number}:"
        super().__init__(f"{where} {message}".strip() if where else message)
        self.line_number = line_number
        self.path = path


class ConsistencyError(NdlError):
    """Input contradicts itself, e.g. one pair listed with two weights"""


class DeadEndError(NdlError):
    """A chain reached a state with no valid move"""

    exit_code = 2


class MixingError(NdlError):
    """Injective sampling gave up after too many rejections"""

    def __init__(self, rejections: int, iteration: Optional[int] = None):
        message = f"no injective homomorphism after {rejections} rejections"
        if iteration is not None:
            message += f" (iteration {iteration})"
        super().__init__(message)
        self.rejections = rejections
        self.iteration = iteration


class CapacityError(NdlError):
    """An exhaustive computation would be too large"""


class ShapeError(NdlError):
    """Array dimensions do not match"""


class NumericError(NdlError):
    """Non-finite values reached a numeric routine"""

    exit_code = 2


class UndefinedMetricError(NdlError):
    """A metric's denominator is zero"""


class MetricError(NdlError):
    """A classification metric cannot be computed on this input"""


class MethodUnavailableError(NdlError):
    """A scoring method is not defined for this network"""


class UsageError(NdlError):
    """Bad command-line usage; names the offending flag when known"""

    def __init__(self, message: str, flag: Optional[str] = None):
        super().__init__(f"{flag}: {message}" if flag else message)
        self.flag = flag
