class InputError(ValueError):
    """Raised for malformed or out-of-contract inputs."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(InputError):
    """A documented precondition (e.g. class membership) does not hold."""


class InvariantError(RuntimeError):
    """An internal guarantee was violated; signals a bug, never bad input."""


class StructuralGuaranteeError(InvariantError):
    """A generator's own forbidden-subgraph self-check failed."""
