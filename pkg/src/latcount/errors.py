"""Exception types shared across the package."""


class LatcountError(Exception):
    """Base class for all library errors."""


class RankDeficient(LatcountError):
    """Input matrix does not have the rank required by the operation."""


class Infeasible(LatcountError):
    """The system has no integer solution."""


class SingularMatrix(LatcountError):
    """A nonsingular square matrix was required."""


class NotUnimodular(LatcountError):
    """A matrix with determinant +-1 was required."""


class UnimodularInput(LatcountError):
    """No half vector exists for a unimodular matrix."""


class NotPointed(LatcountError):
    """The cone contains a line."""


class NotFullDim(LatcountError):
    """The cone or polyhedron is not full-dimensional."""


class PoleAt(LatcountError):
    """Evaluation point lies on a pole of the rational function."""


class NonPolytope(LatcountError):
    """The generating function does not specialize to a finite count."""


class NonInteger(LatcountError):
    """An exact-integer result came out fractional (internal inconsistency)."""


class Empty(LatcountError):
    """The polyhedron is empty."""


class Unbounded(LatcountError):
    """The polyhedron is unbounded where a polytope was required."""


class ParseError(LatcountError):
    """An instance file could not be parsed."""
