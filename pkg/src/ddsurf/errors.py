"""Exception types shared across the library."""


class DdsurfError(Exception):
    """Base class for all library errors."""


class ParseError(DdsurfError, ValueError):
    """Malformed expression text; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class FieldMismatch(DdsurfError, ValueError):
    """Operands live over different coefficient fields or variable sets."""


class NotMonic(DdsurfError, ValueError):
    """A polynomial required to be monic in some variable is not."""


class InvalidPresentation(DdsurfError, ValueError):
    """A surface or ring presentation violates its structural invariants."""


class IncompleteWitness(DdsurfError, ValueError):
    """An isomorphism witness is missing its membership certificates."""


class ResourceLimitExceeded(DdsurfError, RuntimeError):
    """A configured basis-size or degree cap was hit; the answer is unknown,
    never wrong."""
