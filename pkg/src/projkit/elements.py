"""Classification and eigen-structure of single holonomy elements.

The three conjugacy normal forms in scope are

    parabolic          [[1,1,0],[0,1,1],[0,0,1]]
    quasi-hyperbolic   [[m1,0,0],[0,m2,1],[0,0,m2]]      m1 != m2 > 0
    hyperbolic         diag(m1,m2,m3)                    m1 > m2 > m3 > 0

all with positive unimodular eigenvalues.  Anything else (complex or
negative spectrum, diagonalizable repeated eigenvalues) is tagged Other.

Numerically, eigenvalues of a perturbed Jordan block split like the cube
root of the perturbation, so classification cannot rely on eigenvalue gaps
alone.  classify() therefore tests annihilating polynomials: a parabolic
candidate must kill (M - t/3)^3, a quasi-hyperbolic candidate must kill
(M - mu)^2 (M - s).  Eigenvalue gaps only decide the remaining generic
case.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import tolerances
from .errors import (
    ClassificationAmbiguous,
    EndTypeError,
    InconsistentLengths,
    NonRealSpectrum,
)
from .projective import Flag, ProjLine, ProjPoint, ProjTransform, line_through


class ElementClass(enum.Enum):
    HYPERBOLIC = "Hyperbolic"
    QUASI_HYPERBOLIC_ATTRACTING = "QuasiHyperbolicAttracting"
    QUASI_HYPERBOLIC_REPELLING = "QuasiHyperbolicRepelling"
    PARABOLIC = "Parabolic"
    OTHER = "Other"


class EndTypeTag(enum.Enum):
    PARABOLIC_END = "ParabolicEnd"
    QUASI_HYPERBOLIC_END = "QuasiHyperbolicEnd"
    BULGE_PLUS = "BulgePlus"
    BULGE_MINUS = "BulgeMinus"


QUASI_CLASSES = (
    ElementClass.QUASI_HYPERBOLIC_ATTRACTING,
    ElementClass.QUASI_HYPERBOLIC_REPELLING,
)

# Residuals this far above the acceptance threshold are treated as
# genuinely ambiguous rather than silently classified.
_AMBIGUITY_BAND = 10.0

# Relative singular-value cutoff separating a numerical Jordan block from a
# diagonalizable double eigenvalue.  Conjugators of condition <= 1e6 cannot
# shrink the nilpotent part below about 1e-6 of scale.
_JORDAN_RANK_CUT = 1e-7


def unimodular(m) -> np.ndarray:
    """Rescale to det = +1 (flipping sign if necessary)."""
    m = np.asarray(m, dtype=float)
    det = np.linalg.det(m)
    if det == 0 or not np.isfinite(det):
        raise ValueError("singular matrix")
    m = m / np.cbrt(abs(det))
    if det < 0:
        m = -m
    return m


def _null_vector(m: np.ndarray) -> np.ndarray:
    """Unit vector minimizing |m v|, via SVD."""
    _, _, vt = np.linalg.svd(m)
    return vt[-1]


def _row_space_vector(m: np.ndarray) -> np.ndarray:
    """Dominant right-singular vector: annihilating covector of ker(m)."""
    _, _, vt = np.linalg.svd(m)
    return vt[0]


def _split_pair_single(eigs: np.ndarray):
    """Partition three eigenvalues into the closest pair and the rest."""
    pairs = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
    i, j, k = min(pairs, key=lambda t: abs(eigs[t[0]] - eigs[t[1]]))
    return (eigs[i], eigs[j]), eigs[k]


@dataclass
class _Residuals:
    scale: float
    parabolic: float
    quasi: float
    mu: float
    single: float


def _structure_residuals(m: np.ndarray) -> _Residuals:
    eye = np.eye(3)
    scale = max(np.linalg.norm(m, 2), 1e-300)
    lam_bar = np.trace(m) / 3.0
    n = m - lam_bar * eye
    r3 = np.linalg.norm(n @ n @ n) / scale**3
    eigs = np.linalg.eigvals(m)
    (a, b), c = _split_pair_single(eigs)
    mu = float(np.real(a + b) / 2.0)
    single = float(np.real(c))
    q = m - mu * eye
    r21 = np.linalg.norm(q @ q @ (m - single * eye)) / scale**3
    return _Residuals(scale, r3, r21, mu, single)


def classify(M: ProjTransform, tol=None) -> ElementClass:
    """Tag M by its conjugacy normal form.

    The quasi-hyperbolic tags record which genuine (non-Jordan) fixed point
    the element has: Attracting when the simple eigenvalue is largest,
    Repelling when it is smallest.  Raises ClassificationAmbiguous when the
    structural residuals fall in the gray band around ``tol``.
    """
    tol = tolerances.eigen_cluster_tol(tol)
    m = unimodular(M.m)
    r = _structure_residuals(m)

    if r.parabolic <= tol:
        lam = np.trace(m) / 3.0
        if lam <= 0:
            return ElementClass.OTHER
        s = np.linalg.svd(m - lam * np.eye(3), compute_uv=False)
        if s[1] > _JORDAN_RANK_CUT * r.scale:  # rank 2: full Jordan block
            return ElementClass.PARABOLIC
        return ElementClass.OTHER
    if r.parabolic <= _AMBIGUITY_BAND * tol:
        raise ClassificationAmbiguous(
            "parabolic residual %.2e straddles tolerance %.1e" % (r.parabolic, tol)
        )

    if r.quasi <= tol:
        if r.mu <= 0 or r.single <= 0:
            return ElementClass.OTHER
        s = np.linalg.svd(m - r.mu * np.eye(3), compute_uv=False)
        if s[2] > _JORDAN_RANK_CUT * r.scale or s[1] <= _JORDAN_RANK_CUT * r.scale:
            return ElementClass.OTHER  # diagonalizable double eigenvalue
        if r.single > r.mu:
            return ElementClass.QUASI_HYPERBOLIC_ATTRACTING
        return ElementClass.QUASI_HYPERBOLIC_REPELLING
    if r.quasi <= _AMBIGUITY_BAND * tol:
        raise ClassificationAmbiguous(
            "quasi-hyperbolic residual %.2e straddles tolerance %.1e" % (r.quasi, tol)
        )

    eigs = np.linalg.eigvals(m)
    if np.max(np.abs(np.imag(eigs))) > 1e-6 * r.scale:
        return ElementClass.OTHER
    lams = np.sort(np.real(eigs))[::-1]
    if lams[2] <= 0:
        return ElementClass.OTHER
    return ElementClass.HYPERBOLIC


@dataclass(frozen=True)
class EigenData:
    """Ordered generalized eigenvalues and the fixed-point structure.

    lambdas are positive with product 1, sorted descending.  For hyperbolic
    elements fixed_points is (attracting, saddle, repelling); for
    quasi-hyperbolic elements (simple, jordan); for parabolic elements the
    unique fixed point.  invariant_lines carries the matching dual data.
    """

    cls: ElementClass
    lambdas: tuple
    fixed_points: tuple
    invariant_lines: tuple


def eigen_data(M: ProjTransform, tol=None) -> EigenData:
    """Generalized eigenvalues plus fixed points and invariant lines."""
    cls = classify(M, tol)
    if cls is ElementClass.OTHER:
        raise NonRealSpectrum("element is not in a supported conjugacy class")
    m = unimodular(M.m)
    eye = np.eye(3)
    if cls is ElementClass.HYPERBOLIC:
        lams = np.sort(np.real(np.linalg.eigvals(m)))[::-1]
        pts = tuple(ProjPoint(_null_vector(m - lam * eye)) for lam in lams)
        lines = (
            line_through(pts[0], pts[1]),  # attracting + saddle
            line_through(pts[0], pts[2]),  # attracting + repelling
            line_through(pts[2], pts[1]),  # repelling + saddle
        )
        return EigenData(cls, tuple(float(l) for l in lams), pts, lines)
    if cls in QUASI_CLASSES:
        r = _structure_residuals(m)
        mu, single = r.mu, r.single
        simple = ProjPoint(_null_vector(m - single * eye))
        jordan = ProjPoint(_null_vector(m - mu * eye))
        both = line_through(simple, jordan)
        q = m - mu * eye
        jordan_plane = ProjLine(_row_space_vector(q @ q))
        if cls is ElementClass.QUASI_HYPERBOLIC_ATTRACTING:
            lams_out = (single, mu, mu)
        else:
            lams_out = (mu, mu, single)
        return EigenData(cls, lams_out, (simple, jordan), (both, jordan_plane))
    lam = float(np.trace(m) / 3.0)
    n = m - lam * eye
    fixed = ProjPoint(_null_vector(n))
    line = ProjLine(_null_vector(n.T))
    return EigenData(cls, (lam, lam, lam), (fixed,), (line,))


def flag_of(M: ProjTransform, tol=None) -> Flag:
    """The repelling-type invariant flag of M.

    hyperbolic: (repelling point, line through repelling and saddle);
    quasi-hyperbolic with a genuine repelling point: (repelling point, line
    through both fixed points); quasi-hyperbolic with a genuine attracting
    point: (Jordan fixed point, Jordan plane, which avoids the attracting
    point); parabolic: (unique fixed point, unique invariant line).
    """
    data = eigen_data(M, tol)
    cls = data.cls
    if cls is ElementClass.HYPERBOLIC:
        attract, saddle, repel = data.fixed_points
        return Flag(repel, line_through(repel, saddle))
    if cls is ElementClass.QUASI_HYPERBOLIC_REPELLING:
        return Flag(data.fixed_points[0], data.invariant_lines[0])
    if cls is ElementClass.QUASI_HYPERBOLIC_ATTRACTING:
        return Flag(data.fixed_points[1], data.invariant_lines[1])
    return Flag(data.fixed_points[0], data.invariant_lines[0])


def attracting_flag(M: ProjTransform, tol=None) -> Flag:
    """flag_of(M^-1): the attracting-type invariant flag of M."""
    return flag_of(M.inverse(), tol)


def length_params(M: ProjTransform, tol=None):
    """(log(m1/m2), log(m2/m3)) from the ordered generalized eigenvalues.

    Clustered eigenvalues are snapped together, so boundary classes report
    exact zero lengths.
    """
    cls = classify(M, tol)
    if cls is ElementClass.OTHER:
        raise NonRealSpectrum("length parameters need a positive real spectrum")
    m = unimodular(M.m)
    if cls is ElementClass.PARABOLIC:
        return (0.0, 0.0)
    if cls in QUASI_CLASSES:
        r = _structure_residuals(m)
        if cls is ElementClass.QUASI_HYPERBOLIC_ATTRACTING:
            return (math.log(r.single / r.mu), 0.0)
        return (0.0, math.log(r.mu / r.single))
    lams = np.sort(np.real(np.linalg.eigvals(m)))[::-1]
    return (math.log(lams[0] / lams[1]), math.log(lams[1] / lams[2]))


def _lambdas_from_lengths(l1: float, l2: float):
    """Positive unimodular triple with log-ratios (l1, l2)."""
    a = math.exp((2.0 * l1 + l2) / 3.0)
    b = math.exp((l2 - l1) / 3.0)
    c = math.exp(-(l1 + 2.0 * l2) / 3.0)
    return a, b, c


def standard_form(cls: ElementClass, l1: float, l2: float) -> ProjTransform:
    """The normal-form matrix of the given class realizing (l1, l2)."""
    if l1 < 0 or l2 < 0:
        raise InconsistentLengths("length parameters must be nonnegative")
    if cls is ElementClass.PARABOLIC:
        if l1 != 0 or l2 != 0:
            raise InconsistentLengths("parabolic elements have zero lengths")
        return ProjTransform([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    if cls is ElementClass.HYPERBOLIC:
        if l1 <= 0 or l2 <= 0:
            raise InconsistentLengths("hyperbolic elements need positive lengths")
        return ProjTransform(np.diag(_lambdas_from_lengths(l1, l2)))
    if cls is ElementClass.QUASI_HYPERBOLIC_ATTRACTING:
        if l1 <= 0 or l2 != 0:
            raise InconsistentLengths("attracting quasi-hyperbolic needs l1 > 0 = l2")
        lam1 = math.exp(2.0 * l1 / 3.0)
        lam2 = math.exp(-l1 / 3.0)
    elif cls is ElementClass.QUASI_HYPERBOLIC_REPELLING:
        if l1 != 0 or l2 <= 0:
            raise InconsistentLengths("repelling quasi-hyperbolic needs l2 > 0 = l1")
        lam1 = math.exp(-2.0 * l2 / 3.0)
        lam2 = math.exp(l2 / 3.0)
    else:
        raise InconsistentLengths("no standard form for class %s" % cls)
    return ProjTransform([[lam1, 0, 0], [0, lam2, 1], [0, 0, lam2]])


def end_type_for_lengths(l1: float, l2: float) -> EndTypeTag | None:
    """The forced end type, or None when both lengths are positive."""
    if l1 == 0 and l2 == 0:
        return EndTypeTag.PARABOLIC_END
    if l1 == 0 or l2 == 0:
        return EndTypeTag.QUASI_HYPERBOLIC_END
    return None


def check_end_type(tag: EndTypeTag, l1: float, l2: float) -> None:
    """Raise unless the tag is legal for the given boundary lengths."""
    forced = end_type_for_lengths(l1, l2)
    if forced is None:
        if tag not in (EndTypeTag.BULGE_PLUS, EndTypeTag.BULGE_MINUS):
            raise EndTypeError("positive lengths force a bulge type, got %s" % tag.value)
    elif tag is not forced:
        raise EndTypeError(
            "lengths (%g, %g) force %s, got %s" % (l1, l2, forced.value, tag.value)
        )
