"""Exception hierarchy. Everything raised by this package derives from MnhdError."""


class MnhdError(Exception):
    pass


class GraphInputError(MnhdError, ValueError):
    """Invalid graph construction: bad index, self-loop, duplicate edge, or n < 2."""


class FileFormatError(MnhdError, ValueError):
    """Malformed edge-list or design file."""


class DesignError(MnhdError, ValueError):
    pass


class NotUniformError(DesignError):
    """Block sizes differ."""


class ReplicationVariesError(DesignError):
    """Point replication counts differ."""


class NotBalancedError(DesignError):
    """Pair coverage counts differ."""


class DegenerateDesignError(DesignError):
    """Degenerate family: uncovered pairs (lambda = 0) or complete blocks (d = v)."""


class DegenerateParamsError(MnhdError, ValueError):
    """Symmetric design parameters with d <= lambda have no four-eigenvalue spectrum."""


class MixedRadicandsError(MnhdError, ArithmeticError):
    """Arithmetic attempted between values over different square roots."""


class NonSymmetricError(MnhdError, ValueError):
    pass


class NoConvergenceError(MnhdError, ArithmeticError):
    """Jacobi sweeps exhausted before reaching the requested tolerance."""


class AmbiguousGapError(MnhdError, ArithmeticError):
    """An eigenvalue gap falls between tol and 10*tol; tighten the tolerance."""


class RepeatedEigenvalueError(MnhdError, ValueError):
    pass


class NegativeTimeError(MnhdError, ValueError):
    pass


class SameVertexError(MnhdError, ValueError):
    pass


class UnknownSignatureError(MnhdError):
    """A vertex pair whose (L, L^2) signature matches no expected class."""


class NotFourEigenvaluesError(MnhdError):
    pass


class NonQuadraticEigenvaluesError(MnhdError):
    """Eigenvalues are not expressible as a + b*sqrt(m) over the rationals."""


class NoCaseMatchesError(MnhdError):
    """Spectrum fits none of the three classification cases."""
