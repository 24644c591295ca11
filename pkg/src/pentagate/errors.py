"""Exception types shared across the package."""


class PentagateError(Exception):
    """Base class for all library errors."""


class DimensionError(PentagateError, ValueError):
    """Operands have incompatible or unexpected dimensions."""


class WireError(PentagateError, ValueError):
    """Wire indices are out of range, duplicated, or otherwise invalid."""


class NonUnitaryError(PentagateError, ValueError):
    """A matrix that must be unitary is not, within the requested tolerance."""


class InvalidGroupError(PentagateError, ValueError):
    """A multiplication table is not a valid finite group."""


class SchemaError(PentagateError, ValueError):
    """Circuit JSON does not conform to the schema."""


class UnknownGateError(SchemaError):
    """A gate name does not resolve to a known constructor."""


class UncertifiedGateError(PentagateError, ValueError):
    """A rewrite was requested with a gate that failed fusion certification."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class RewriteVerificationError(PentagateError, RuntimeError):
    """A rewrite changed the circuit unitary beyond tolerance."""

    def __init__(self, message, site=None):
        super().__init__(message)
        self.site = site


class GridError(PentagateError, ValueError):
    """A scan grid specification is empty or malformed."""
