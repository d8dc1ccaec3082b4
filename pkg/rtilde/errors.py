"""
Exception hierarchy shared by the library and the command line.
"""


class RTildeError(Exception):
    """Base class for every error raised by rtilde."""


class InvalidWordError(RTildeError, ValueError):
    """A word contains a letter outside the generating set, or cannot be parsed."""


class InvalidPermutationError(RTildeError, ValueError):
    """A one-line permutation is malformed or has the wrong size."""


class CoxeterMatrixError(RTildeError, ValueError):
    """A Coxeter matrix or group shorthand is invalid."""


class NotADescentError(RTildeError, ValueError):
    """A braid plan was requested for a generator that is not a right descent."""


class NotInSpanError(RTildeError, ValueError):
    """A Laurent polynomial is not a combination of powers of (t - t^-1)."""


class NormalizationError(RTildeError, ValueError):
    """An R-polynomial does not have the shape required by the classical normalization."""


class SupportOverflowError(RTildeError, OverflowError):
    """A Hecke algebra computation exceeded the configured support cap."""


class PreconditionError(RTildeError, ValueError):
    """The input of a closed formula does not satisfy its hypotheses."""


class ConfigurationError(RTildeError, ValueError):
    """A point configuration has a point outside the cone or is not admissible."""


class MethodDisagreementError(RTildeError):
    """Two computation methods returned different polynomials."""

    def __init__(self, message: str, results: dict):
        super().__init__(message)
        self.results = results
