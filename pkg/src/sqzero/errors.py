"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class SqzeroError(Exception):
    """Base class for all library errors."""


class ParseError(SqzeroError, ValueError):
    """Text input does not follow the grammar."""


class MalformedArcError(ParseError):
    pass


class DuplicateEndpointError(ParseError):
    pass


class AsymmetryError(ParseError):
    pass


class DomainError(SqzeroError, ValueError):
    """Input parses but lies outside the domain of the operation."""


class PreconditionError(DomainError):
    pass


class SizeError(DomainError):
    pass


class WitnessError(DomainError):
    """A witness cannot be evaluated (for example a zero torus coefficient)."""
