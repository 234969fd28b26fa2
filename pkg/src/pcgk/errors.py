"""Exception hierarchy shared by every module."""


class DomainError(ValueError):
    """An input lies outside the domain of the requested operation."""


class GraphLoadError(DomainError):
    """A graph file could not be parsed."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class NotACentraliserError(DomainError):
    """The subgroup fails the centraliser criterion."""


class UnsupportedError(DomainError):
    """The operation is defined but no algorithm is provided for this case."""
