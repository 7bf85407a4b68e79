"""
Custom exception classes for the piecewise toolkit.
"""


class ToolkitError(Exception):
    """Base exception class for toolkit errors."""
    pass


class InputError(ToolkitError):
    """Exception raised for input-related errors."""
    pass


class MissingInputError(InputError):
    """Exception raised when an input file is not found."""
    pass


class EmptyFileError(InputError):
    """Exception raised when an input file is empty."""
    pass


class FormatError(InputError):
    """Exception raised for malformed documents, scalars or builder recipes."""
    pass


class CapExceededError(ToolkitError):
    """Exception raised when an enumeration exceeds the configured cap."""
    pass


class DimensionMismatchError(ToolkitError):
    """Exception raised for incompatible shapes, ambient dimensions or fields."""
    pass


class StructureError(ToolkitError):
    """Exception raised when supplied data violates an algebraic axiom."""
    pass


class NotAnIdealError(StructureError):
    """Exception raised when a subspace is not a two-sided ideal."""
    pass


class MorphismError(StructureError):
    """Exception raised when a matrix is not an algebra morphism of the required kind."""
    pass


class CoveringError(ToolkitError):
    """Exception raised when a family of surjections cannot be used as required."""
    pass


class NonDistributiveCoveringError(CoveringError):
    """Exception raised when an operation needs a distributive covering."""
    pass


class PreconditionError(CoveringError):
    """Exception raised when a covering-level precondition fails."""
    pass


class GluingError(ToolkitError):
    """Exception raised when local data cannot be glued."""
    pass


class IncompatibleDataError(GluingError):
    """Exception raised when local elements disagree on an overlap."""
    pass


class UnverifiedConnectionError(ToolkitError):
    """Exception raised when a construction needs a verified strong connection."""
    pass
