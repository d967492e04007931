"""Projective linear algebra in RP^2 with fixed normalization conventions.

Points and lines are projective classes of nonzero 3-vectors (lines are
covectors).  The canonical representative of a class has unit Euclidean
norm and positive first nonzero coordinate, which turns projective
equality into a plain vector comparison.  Transforms act on points by
``M @ v`` and on lines by ``l @ M^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import tolerances
from .errors import DegenerateError, GeneralPositionError, IncidenceError

# Entries of a unit vector below this are treated as zero when choosing the
# sign of the canonical representative.
_SIGN_CUTOFF = 1e-12

# Two canonical representatives closer than this are "projectively equal";
# between this and the degeneracy band the pair counts as near-coincident.
_EQUALITY_TOL = 1e-12


def canonical(v) -> np.ndarray:
    """Unit-norm representative with the first nonzero coordinate positive."""
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise ValueError("homogeneous coordinates must be a 3-vector")
    norm = np.linalg.norm(v)
    if not np.isfinite(norm) or norm == 0.0:
        raise ValueError("homogeneous coordinates must be finite and nonzero")
    u = v / norm
    for x in u:
        if abs(x) > _SIGN_CUTOFF:
            if x < 0:
                u = -u
            break
    return u


def proj_distance(u, v) -> float:
    """sin of the angle between the projective classes of u and v."""
    a = canonical(u)
    b = canonical(v)
    return float(np.linalg.norm(np.cross(a, b)))


def proj_equal(u, v, tol: float = _EQUALITY_TOL) -> bool:
    return proj_distance(u, v) <= tol


@dataclass(frozen=True, eq=False)
class ProjPoint:
    """Point of RP^2, stored as its canonical homogeneous representative."""

    v: np.ndarray = field()

    def __init__(self, v):
        object.__setattr__(self, "v", canonical(v))

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjPoint) and proj_equal(self.v, other.v)

    def __repr__(self) -> str:
        return "ProjPoint([%g, %g, %g])" % tuple(self.v)

    def chart(self, line_at_infinity=None) -> np.ndarray:
        """Affine coordinates in the chart z=1 (or a supplied chart map)."""
        if line_at_infinity is None:
            if abs(self.v[2]) < _SIGN_CUTOFF:
                raise DegenerateError("point at infinity in the z=1 chart")
            return self.v[:2] / self.v[2]
        raise NotImplementedError("custom charts live in projkit.domains")


@dataclass(frozen=True, eq=False)
class ProjLine:
    """Line of RP^2, stored as its canonical covector representative."""

    v: np.ndarray = field()

    def __init__(self, v):
        object.__setattr__(self, "v", canonical(v))

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjLine) and proj_equal(self.v, other.v)

    def __repr__(self) -> str:
        return "ProjLine([%g, %g, %g])" % tuple(self.v)

    def __call__(self, p: ProjPoint) -> float:
        """Pairing <line, point> of the canonical representatives."""
        return float(self.v @ p.v)


def incident(line: ProjLine, point: ProjPoint, tol=None) -> bool:
    return abs(line.v @ point.v) <= tolerances.incidence_tol(tol)


@dataclass(frozen=True, eq=False)
class Flag:
    """Incident (point, line) pair."""

    point: ProjPoint
    line: ProjLine

    def __post_init__(self):
        if not incident(self.line, self.point):
            raise IncidenceError(
                "flag violates incidence: <l,p> = %.3e" % float(self.line.v @ self.point.v)
            )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Flag)
            and self.point == other.point
            and self.line == other.line
        )


@dataclass(frozen=True, eq=False)
class ProjTransform:
    """Projective class of an invertible 3x3 matrix, stored with |det| = 1."""

    m: np.ndarray = field()

    def __init__(self, m):
        m = np.asarray(m, dtype=float)
        if m.shape != (3, 3):
            raise ValueError("expected a 3x3 matrix")
        det = np.linalg.det(m)
        if not np.isfinite(det) or det == 0.0:
            raise ValueError("matrix must be invertible")
        object.__setattr__(self, "m", m / np.cbrt(abs(det)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjTransform):
            return False
        return bool(
            np.allclose(self.m, other.m, atol=1e-9)
            or np.allclose(self.m, -other.m, atol=1e-9)
        )

    def __matmul__(self, other: "ProjTransform") -> "ProjTransform":
        return ProjTransform(self.m @ other.m)

    def inverse(self) -> "ProjTransform":
        return ProjTransform(np.linalg.inv(self.m))

    def apply_point(self, p: ProjPoint) -> ProjPoint:
        return ProjPoint(self.m @ p.v)

    def apply_line(self, l: ProjLine) -> ProjLine:
        return ProjLine(l.v @ np.linalg.inv(self.m))

    def apply_flag(self, f: Flag) -> Flag:
        return Flag(self.apply_point(f.point), self.apply_line(f.line))

    @staticmethod
    def identity() -> "ProjTransform":
        return ProjTransform(np.eye(3))


def _pairing_or_raise(line: ProjLine, point: ProjPoint, tol) -> float:
    value = float(line.v @ point.v)
    if abs(value) <= tolerances.incidence_tol(tol):
        raise IncidenceError("cross/triple ratio argument lies on a line")
    return value


def _coincidence_shortcut(u, v, what: str):
    """Exact coincidence returns True; near-coincidence raises.

    Near-coincident arguments are rejected instead of silently evaluating to
    1 because they signal conditioning failures upstream.
    """
    d = proj_distance(u, v)
    if d <= _EQUALITY_TOL:
        return True
    if d <= tolerances.incidence_tol(None):
        raise DegenerateError("nearly coincident %s in ratio" % what)
    return False


def cross_ratio(l1: ProjLine, p1: ProjPoint, p2: ProjPoint, l2: ProjLine, tol=None) -> float:
    """C(l1, p1, p2, l2) = l1(p2) l2(p1) / (l1(p1) l2(p2)).

    Positive iff p1 and p2 lie in the same component of the complement of
    l1 and l2.  Coinciding lines or points give exactly 1.
    """
    if _coincidence_shortcut(l1.v, l2.v, "lines") or _coincidence_shortcut(
        p1.v, p2.v, "points"
    ):
        return 1.0
    num = _pairing_or_raise(l1, p2, tol) * _pairing_or_raise(l2, p1, tol)
    den = _pairing_or_raise(l1, p1, tol) * _pairing_or_raise(l2, p2, tol)
    return num / den


def triple_ratio(
    l1: ProjLine,
    l2: ProjLine,
    l3: ProjLine,
    p1: ProjPoint,
    p2: ProjPoint,
    p3: ProjPoint,
    tol=None,
) -> float:
    """T(l1,l2,l3,p1,p2,p3) = l1(p2) l2(p3) l3(p1) / (l1(p3) l3(p2) l2(p1)).

    Cyclic in the paired arguments; swapping indices 1 and 2 inverts it.
    """
    num = (
        _pairing_or_raise(l1, p2, tol)
        * _pairing_or_raise(l2, p3, tol)
        * _pairing_or_raise(l3, p1, tol)
    )
    den = (
        _pairing_or_raise(l1, p3, tol)
        * _pairing_or_raise(l3, p2, tol)
        * _pairing_or_raise(l2, p1, tol)
    )
    return num / den


def same_component(l1: ProjLine, l2: ProjLine, p1: ProjPoint, p2: ProjPoint) -> bool:
    """True iff p1, p2 lie in one component of the complement of l1 and l2.

    The component of p is classified by sign(l1(p) l2(p)), which does not
    depend on the choice of representatives.
    """
    s1 = float(l1.v @ p1.v) * float(l2.v @ p1.v)
    s2 = float(l1.v @ p2.v) * float(l2.v @ p2.v)
    return s1 * s2 > 0


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The unique line through two distinct points."""
    if proj_equal(p.v, q.v, tolerances.incidence_tol(None)):
        raise DegenerateError("line_through needs distinct points")
    return ProjLine(np.cross(p.v, q.v))


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    """The unique intersection point of two distinct lines."""
    if proj_equal(l.v, m.v, tolerances.incidence_tol(None)):
        raise DegenerateError("meet needs distinct lines")
    return ProjPoint(np.cross(l.v, m.v))


def _check_general_position(vectors, tol) -> None:
    thresh = tolerances.general_position_tol(tol)
    n = len(vectors)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                det = np.linalg.det(np.column_stack([vectors[i], vectors[j], vectors[k]]))
                if abs(det) <= thresh:
                    raise GeneralPositionError(
                        "points %d,%d,%d are collinear (det %.3e)" % (i, j, k, det)
                    )


def normalize_quadruple(
    a: ProjPoint, b: ProjPoint, c: ProjPoint, d: ProjPoint, tol=None
) -> ProjTransform:
    """Transform sending (a,b,c,d) to ([1:0:0],[0:1:0],[0:0:1],[1:1:1]).

    The four points must be in general position.  The returned class is the
    unique one with this property.
    """
    vs = [a.v, b.v, c.v, d.v]
    _check_general_position(vs, tol)
    basis = np.column_stack(vs[:3])
    scales = np.linalg.solve(basis, vs[3])
    return ProjTransform(np.linalg.inv(basis * scales))


def frame_transform(points, targets) -> ProjTransform:
    """Transform sending four general-position points to four others."""
    to_std_src = normalize_quadruple(*points)
    to_std_dst = normalize_quadruple(*targets)
    return to_std_dst.inverse() @ to_std_src
