"""Exception hierarchy for projkit.

Every error raised on purpose by the library derives from ProjkitError, so
callers (and the CLI) can distinguish validation problems from genuine
numerical failures.
"""


class ProjkitError(Exception):
    """Base class for all library errors."""


class ValidationError(ProjkitError):
    """Input data fails a structural or range check."""


class IncidenceError(ProjkitError):
    """A point lies on a line where the operation requires transversality."""


class DegenerateError(ProjkitError):
    """Inputs coincide projectively (within tolerance but not exactly)."""


class GeneralPositionError(ProjkitError):
    """Three of the given points are collinear within tolerance."""


class ClassificationAmbiguous(ProjkitError):
    """Eigenvalue gaps straddle the clustering tolerance."""


class NonRealSpectrum(ProjkitError):
    """Matrix has complex eigenvalues beyond tolerance."""


class InconsistentLengths(ProjkitError):
    """Length parameters do not match the requested conjugacy class."""


class ConstructionFailure(ProjkitError):
    """An internal consistency residual exceeded its bound; this signals a
    convention bug in the library, not a user error."""


class TransversalityError(ProjkitError):
    """A flag configuration violates a required non-incidence."""


class GluingError(ProjkitError):
    """Peripheral eigenvalue matching failed across a curve."""


class EndTypeError(ProjkitError):
    """An end-type tag conflicts with the length data carried by the end."""


class UnknownCurve(ProjkitError):
    """A curve label does not name an interior curve of the marking."""


class ZeroLength(ProjkitError):
    """Both eigenvalue gaps vanish where a positive total length is needed."""


class DomainError(ProjkitError):
    """Argument lies outside the stated domain of a coordinate map."""


class NotInImage(ProjkitError):
    """A coordinate vector is not in the image of the forward map."""


class BadTarget(ProjkitError):
    """Unsupported degeneration target."""


class CompatibilityError(ProjkitError):
    """Pinched-curve data violates the across-curve compatibility rules."""


class ChartError(ProjkitError):
    """No sampled affine chart separates the flag data."""


class DegenerateCloud(ProjkitError):
    """Orbit cloud is too degenerate to bound a domain."""


class OutsideDomain(ProjkitError):
    """A point lies outside the convex polygon."""


class NotPeripheral(ProjkitError):
    """Group element is not peripheral in the given representation."""


class NotHyperbolic(ProjkitError):
    """Operation requires a hyperbolic element."""
