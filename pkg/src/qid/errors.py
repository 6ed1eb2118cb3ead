"""Exception taxonomy shared by every module."""


class QidError(ArithmeticError):
    """Base class for all guard violations raised by the library."""


class CoincidentPointsError(QidError):
    """Two adjacent slots of a c-divided difference carry the same value."""


class CSingularPairError(QidError):
    """Adjacent slots satisfy x_i * x_{i+1} == c."""


class ZeroCoordinateError(QidError):
    """A zero coordinate was fed to an operator with c != 0."""


class DegenerateNodesError(QidError):
    """A node system violates admissibility."""


class DegenerateParametersError(QidError):
    """A denominator in an identity vanishes at the chosen parameters."""


class DegenerateQError(QidError):
    """q is a root of unity of small order, so (q;q)_k vanishes."""


class WrongPathError(QidError):
    """The c == 0 case must go through the classical Newton path."""


class ShapeError(QidError, ValueError):
    """Matrix shape does not fit the requested operation."""


class SamplerExhaustedError(QidError):
    """Rejection sampling gave up before finding an admissible draw."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}
