"""Exception hierarchy shared by every module of the package."""


class OrbitH2Error(Exception):
    """Base class for all errors raised by orbit_h2."""


class ParseError(OrbitH2Error, ValueError):
    """Malformed literal, partition, label or matrix file."""


class NonSquare(OrbitH2Error, ValueError):
    pass


class ZeroPolynomial(OrbitH2Error, ValueError):
    pass


class NonRealCoefficients(OrbitH2Error, ValueError):
    pass


class Unsplittable(OrbitH2Error):
    """The polynomial has a root outside Q(i).

    This marks a capability boundary, not a failure of the input.
    """


class UnsplittableSpectrum(Unsplittable):
    pass


class NotSemisimple(OrbitH2Error, ValueError):
    pass


class OddTotal(OrbitH2Error, ValueError):
    pass


class BadPartition(OrbitH2Error, ValueError):
    pass


class NotClassical(OrbitH2Error, ValueError):
    pass


class NotExceptional(OrbitH2Error, ValueError):
    pass


class UnknownLabel(OrbitH2Error, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class BadSpec(OrbitH2Error, ValueError):
    pass


class NotInAlgebra(OrbitH2Error, ValueError):
    pass


class NotClosed(OrbitH2Error, ValueError):
    pass


class NoFlipExists(OrbitH2Error):
    """No element of the declared flip generator set passed every check.

    ``searched`` holds the number of candidates that were examined.
    """

    def __init__(self, message, searched=0):
        super().__init__(message)
        self.searched = searched


class RouteMismatch(OrbitH2Error, AssertionError):
    """Two independent computations of the same quantity disagree."""
