"""Exception types shared across the library."""


class DomainError(ValueError):
    """Base class for every modeling error raised by this library."""


class MismatchError(DomainError):
    """Objects, carriers, or dimensions do not line up for an operation."""


class NonInjectiveInclusion(DomainError):
    """A system's inclusion map must be mono."""


class BehaviorEscapes(DomainError):
    """The universum map does not carry the source behavior into the target behavior."""


class NotEpi(DomainError):
    """The operation requires a surjective map."""


class InvalidHom(DomainError):
    """Atom images fail the boolean-lattice homomorphism conditions."""


class ParseError(DomainError):
    """Netlist or glue text could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GlueError(DomainError):
    """An identification list cannot be applied to the compiled circuits."""
