"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: validation-style errors exit with 2,
resource caps exit with 3.
"""


class FomError(Exception):
    """Base class for all library errors."""


class ValidationError(FomError, ValueError):
    """Malformed or inadmissible input."""


class ContextError(ValidationError):
    """A field context cannot host a required constant."""

    def __init__(self, message, minimal_order=None):
        super().__init__(message)
        self.minimal_order = minimal_order


class SingularMatrixError(ValidationError):
    pass


class PreconditionError(ValidationError):
    pass


class NotInNormalizerError(ValidationError):
    pass


class ResourceError(FomError):
    """A configured cap was hit before the computation finished."""


class CapExceededError(ResourceError):
    def __init__(self, message, partial_count=None):
        super().__init__(message)
        self.partial_count = partial_count


class PrecisionError(ResourceError):
    """Interval evaluation could not separate two candidates within the cap."""


class NotSmooth(FomError):
    """Raised by smoothness certificates; carries the offending locus."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class InconsistencyError(FomError):
    """A construction that should be valid for admissible parameters failed its own check."""
