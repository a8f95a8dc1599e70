"""Exception types shared across the package."""


class SocvalError(Exception):
    """Base class for all library errors."""


class ParameterError(SocvalError, ValueError):
    """Invalid argument or configuration value."""


class InconsistentInputError(SocvalError, ValueError):
    """Structurally impossible input, e.g. a nonzero delta-y on an isolated node."""


class SingularFitError(SocvalError):
    """Rank-deficient least-squares design matrix."""

    def __init__(self, message: str, columns=()):
        super().__init__(message)
        self.columns = tuple(columns)


class UnsupportedFamilyError(SocvalError, TypeError):
    """Operation not defined for this model family."""


class UndefinedStatisticError(SocvalError, ValueError):
    """Statistic undefined for the given input, e.g. GFP on an edgeless graph."""


class FileFormatError(SocvalError, ValueError):
    """Malformed or inconsistent data file."""
