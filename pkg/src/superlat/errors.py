"""Exception types shared across the package."""


class SuperlatError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(SuperlatError):
    """Operands have incompatible dimensions."""


class SingularMatrix(SuperlatError):
    """Matrix inverse or solve requested for a determinant-0 matrix."""


class ZeroFunctional(SuperlatError):
    """Kernel basis requested for the zero functional."""


class ZeroVector(SuperlatError):
    """A nonzero vector is required."""


class InvalidForm(SuperlatError):
    """Gram matrix fails a structural requirement (symmetry, nondegeneracy)."""


class NonIntegralForm(SuperlatError):
    """Operation requires an integer Gram matrix."""


class IsotropicAnchor(SuperlatError):
    """Anchor vector w has B(w, w) = 0, so V does not split as Kw + {w}^perp."""


class NotEven(SuperlatError):
    """Weight requested for an endomorphism outside the even component."""


class NegativeTarget(SuperlatError):
    """Norm-equation target must be nonnegative."""


class NotPositiveDefinite(SuperlatError):
    """Positive-definite form required (enumeration would not terminate)."""


class DegenerateProbe(SuperlatError):
    """Probe vector z0 lies in the line spanned by the anchor, so z = 0."""


class BadFamilyParams(SuperlatError):
    """Family parameters violate the required determinant relation."""


class InvalidProblem(SuperlatError):
    """Isometry problem data fails a structural requirement."""


class ParseError(SuperlatError):
    """Problem file or result document could not be parsed."""
