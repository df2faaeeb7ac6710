"""Exception hierarchy.

Every library error carries a short ``kind`` string; the command-line tool
reports it verbatim in its ``{"error": kind, "detail": message}`` object.
"""


class AlgebraError(Exception):
    kind = "algebra"


class IndexRangeError(AlgebraError, IndexError):
    kind = "index-range"


class ShapeError(AlgebraError, ValueError):
    kind = "shape"


class DomainError(AlgebraError, ValueError):
    kind = "domain"


class StateError(DomainError):
    kind = "state"


class NotNormalizableError(DomainError):
    kind = "not-normalizable"


class HermitianError(AlgebraError, ValueError):
    kind = "hermitian"


class ConfigurationError(AlgebraError):
    kind = "configuration"


class ConsistencyError(AlgebraError):
    kind = "consistency"


class ConvergenceError(AlgebraError, ArithmeticError):
    """An iterative solver gave up; ``best`` holds its last iterate."""

    kind = "convergence"

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class FormatError(AlgebraError, ValueError):
    """A JSON document does not follow the game/vector/matrix file layout."""

    kind = "format"
