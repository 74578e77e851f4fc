"""Error hierarchy for curvature computations"""


class LieCurveError(Exception):
    """Base class for all liecurve errors"""


class InvalidDimension(LieCurveError, ValueError):
    """Complex dimension or vector space dimension out of range"""


class InvalidTheta(LieCurveError, ValueError):
    """Hypersurface parameter outside [0, pi/2]"""


class DimensionMismatch(LieCurveError, ValueError):
    """Vector length does not match the algebra it is used with"""


class DegeneratePlane(LieCurveError, ValueError):
    """Spanning pair is not orthonormal, or cannot be made so"""


class NonSymmetric(LieCurveError, ValueError):
    """Matrix handed to a symmetric eigensolver is not symmetric"""


class NotTangent(LieCurveError, ValueError):
    """Vector has a normal component on a hypersurface"""


class AlgebraFormatError(LieCurveError, ValueError):
    """Malformed algebra JSON document"""


class NotEinstein(LieCurveError):
    """Ricci operator is not a multiple of the identity"""


class NotSubalgebra(LieCurveError):
    """Bracket of tangent vectors leaves the hypersurface algebra"""
