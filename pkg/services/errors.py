class StokesError(Exception):
    """Base class for every error raised by the services package."""


class DivisionByZero(StokesError):
    pass


class SubstitutionSingular(StokesError):
    pass


class PoleAtPoint(StokesError):
    pass


class SingularMatrix(StokesError):
    pass


class ShapeMismatch(StokesError):
    pass


class UnknownVariable(StokesError):
    pass


class OddExponent(StokesError):
    pass


class VertexRelationViolated(StokesError):
    def __init__(self, vertex, residual):
        super().__init__(f"vertex relation violated at {vertex}: {residual}")
        self.vertex = vertex
        self.residual = residual


class NotLogCanonical(StokesError):
    def __init__(self, pair, residual):
        super().__init__(f"coefficient on {pair[0]}^{pair[1]} is not constant in log coordinates: {residual}")
        self.pair = pair
        self.residual = residual


class DegenerateForm(StokesError):
    pass


class BadVertex(StokesError):
    pass


class NotADiagonal(StokesError):
    pass


class OrientationInvalid(StokesError):
    pass


class TriangularityViolated(StokesError):
    pass


class ResonantEigenvalues(StokesError):
    pass


class TriangulationFormatError(StokesError):
    pass
