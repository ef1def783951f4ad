class EHGraphsError(Exception):
    pass


class InputError(EHGraphsError, ValueError):
    """Malformed value or out-of-range vertex."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(EHGraphsError, ValueError):
    """An operation's precondition does not hold."""


class BlockadeError(EHGraphsError):
    """A blockade provider failed to deliver a valid blockade for ``vertices``."""

    def __init__(self, message, vertices=()):
        self.vertices = tuple(vertices)
        super().__init__(f"{message} (|F|={len(self.vertices)})")


class CertificateError(EHGraphsError):
    """An extraction certificate failed independent re-verification."""
