"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: ParameterError -> 1 (usage),
ValidationError and subclasses -> 2 (data), GenerationError and
NumericalError -> 3 (numerical failure).
"""


class SignedJnmfError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(SignedJnmfError):
    """A configuration value is out of its valid range or infeasible."""


class ValidationError(SignedJnmfError):
    """Input data violates a structural invariant."""


class ShapeError(ValidationError):
    """Array dimensions do not agree."""


class ParseError(ValidationError):
    """A file could not be parsed; message carries the line number."""


class GenerationError(SignedJnmfError):
    """A benchmark graph could not be synthesized within bounded retries."""


class NumericalError(SignedJnmfError):
    """A numerical routine produced non-finite or unusable values."""
