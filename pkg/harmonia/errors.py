"""Exceptions raised by the harmonia workbench.

Library code raises these and never exits the process; the command line
front end in `workbench` maps them to exit statuses.

"""


class HarmoniaError(Exception):
    """Base class for every error raised by harmonia."""

    exit_status = 1


class InputFormatError(HarmoniaError, ValueError):
    """A JSON or CSV artifact does not match its schema."""

    exit_status = 2


class PreconditionError(HarmoniaError, ValueError):
    """An operation was called outside its documented domain."""

    exit_status = 3


class DimensionMismatch(PreconditionError):
    """Dimensions, lengths or grids of the operands disagree."""


class FactorialOverflow(HarmoniaError, OverflowError):
    """An exact factorial left the declared integer range."""

    exit_status = 3


class CertificateError(HarmoniaError):
    """A hull certificate failed its own verification."""

    exit_status = 4


class ConvergenceError(HarmoniaError, ArithmeticError):
    """An iterative method hit its iteration cap."""

    exit_status = 5
