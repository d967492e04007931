"""Pair-of-pants coordinates: invariants, polytope, and matrix construction.

Conventions (fixed once, used everywhere):

* The three peripheral generators alpha, beta, gamma satisfy
  gamma @ beta @ alpha = id and each is oriented with the pants on its
  left.  A vertex label "a-" stands for the attracting boundary fixed
  point of alpha, and its flag is the attracting invariant flag of
  rho(alpha), i.e. attracting_flag(A).
* The base ideal triangle has vertices (a-, g-, b-) in counterclockwise
  order; the second triangle is (a-, alpha.g-, b-), sharing the edge
  {a-, b-}.  Neighboring lifts used by the edge invariants are
  alpha.g- (across {a-,b-}), beta.a- (across {b-,g-}) and
  alpha^-1.b- (across {g-,a-}).
* For an edge (x, y) with off-vertices z2 (between x and y) and z1
  (between y and x), the edge frame normalizes
  (p_x, p_y, L_x ^ L_y, p_z1) to ([1:0:0], [0:0:1], [0:1:0], [1:1:1]);
  then p_z2 = [a:1:d] with a, d < 0 and

      s_xy = 1/d,   s_yx = a,
      sigma_xy = -log(-d),   sigma_yx = log(-a).

* lam1 >= lam2 >= lam3 are the eigenvalues of a generator; l1 =
  log(lam1/lam2), l2 = log(lam2/lam3); the attracting point carries lam1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .elements import attracting_flag, length_params
from .errors import ConstructionFailure, TransversalityError, ValidationError
from .projective import (
    Flag,
    ProjLine,
    ProjPoint,
    ProjTransform,
    cross_ratio,
    line_through,
    meet,
    normalize_quadruple,
    triple_ratio,
)

_E1 = ProjPoint([1, 0, 0])
_E2 = ProjPoint([0, 1, 0])
_E3 = ProjPoint([0, 0, 1])
_E123 = ProjPoint([1, 1, 1])


@dataclass(frozen=True)
class PantsCoords:
    """Six boundary lengths plus the two internal parameters.

    lengths = (l1a, l2a, l1b, l2b, l1g, l2g), all >= 0; internal = (i1, i2)
    where i1 = sigma_{a-,b-} and i2 = tau_{a-,g-,b-}.
    """

    lengths: tuple
    internal: tuple

    def __post_init__(self):
        if len(self.lengths) != 6 or len(self.internal) != 2:
            raise ValidationError("PantsCoords needs 6 lengths and 2 internals")
        vals = [float(v) for v in self.lengths] + [float(v) for v in self.internal]
        if not all(math.isfinite(v) for v in vals):
            raise ValidationError("PantsCoords entries must be finite")
        if any(v < 0 for v in self.lengths):
            raise ValidationError("boundary lengths must be nonnegative")
        object.__setattr__(self, "lengths", tuple(float(v) for v in self.lengths))
        object.__setattr__(self, "internal", tuple(float(v) for v in self.internal))


@dataclass(frozen=True)
class BDInvariants:
    """The six edge invariants and two triangle invariants of a pants.

    sigma = (s_ab, s_ba, s_ag, s_ga, s_bg, s_gb) indexed by attracting
    vertices, tau = (tau1, tau2) for the base and the neighbor triangle.
    """

    sigma: tuple
    tau: tuple

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(float(v) for v in self.sigma))
        object.__setattr__(self, "tau", tuple(float(v) for v in self.tau))

    def closed_leaf_sums(self) -> tuple:
        """The six length expressions; all must be >= 0 on valid data."""
        s_ab, s_ba, s_ag, s_ga, s_bg, s_gb = self.sigma
        t1, t2 = self.tau
        return (
            s_ab + s_ag,
            s_ba + s_ga + t1 + t2,
            s_bg + s_ba,
            s_gb + s_ab + t1 + t2,
            s_ga + s_gb,
            s_ag + s_bg + t1 + t2,
        )


def coords_to_invariants(c: PantsCoords) -> BDInvariants:
    """Solve the six linear length relations for the remaining invariants.

    With i1 = s_ab and i2 = tau1 given, the system is triangular once
    tau2 = (l2a+l2b+l2g - l1a-l1b-l1g)/3 - tau1 is known, so the solution
    is closed form and exact.
    """
    l1a, l2a, l1b, l2b, l1g, l2g = c.lengths
    i1, i2 = c.internal
    tau2 = (l2a + l2b + l2g - l1a - l1b - l1g) / 3.0 - i2
    s_ab = i1
    s_ag = l1a - i1
    s_bg = l2g - l1a + i1 - i2 - tau2
    s_gb = l2b - i1 - i2 - tau2
    s_ga = l1g - s_gb
    s_ba = l1b - s_bg
    return BDInvariants((s_ab, s_ba, s_ag, s_ga, s_bg, s_gb), (i2, tau2))


def invariants_to_coords(inv: BDInvariants) -> PantsCoords:
    """Inverse of coords_to_invariants via the six length relations."""
    sums = inv.closed_leaf_sums()
    return PantsCoords(sums, (inv.sigma[0], inv.tau[0]))


def _edge_frame_generator(l1, l2, a, d, t1, t2) -> np.ndarray:
    """Generator matrix in the frame of its opposite edge.

    In the (x, y) edge frame the element with attracting vertex at x is
    upper triangular with diagonal (lam1, lam2, lam3); the off-diagonal
    entries are pinned by mapping the z1 flag ([1:1:1] with line
    (1, -(1+t1), t1)) to the z2 flag ([a:1:d] with line
    (1, -a(1+t2), t2 a/d)).
    """
    lam1 = math.exp((2.0 * l1 + l2) / 3.0)
    lam2 = math.exp((l2 - l1) / 3.0)
    lam3 = math.exp(-(l1 + 2.0 * l2) / 3.0)
    a23 = lam3 / d - lam2
    a12 = a * (1.0 + t2) * lam2 - (1.0 + t1) * lam1
    a13 = t1 * lam1 + a * (1.0 + t2) * a23 - t2 * a * lam3 / d
    return np.array([[lam1, a12, a13], [0.0, lam2, a23], [0.0, 0.0, lam3]])


@dataclass(frozen=True)
class PantsRep:
    """Images of (alpha, beta, gamma) with gamma.beta.alpha = id, plus the
    four flags used in the construction (at a-, b-, g-, alpha.g-)."""

    alpha: ProjTransform
    beta: ProjTransform
    gamma: ProjTransform
    flags: tuple

    def generators(self) -> tuple:
        return (self.alpha, self.beta, self.gamma)


def build_pants(c: PantsCoords, check: bool = True) -> PantsRep:
    """Construct the normalized pants representation for the given coords.

    The flag quadruple of the edge {a-, b-} is pinned to the standard
    frame: p_a = [1:0:0], p_b = [0:0:1], L_a ^ L_b = [0:1:0],
    p_g = [1:1:1].  alpha comes straight from the edge-frame template;
    beta from the same template in the {b-, g-} edge frame, conjugated
    back; gamma = alpha^-1 beta^-1.
    """
    inv = coords_to_invariants(c)
    s_ab, s_ba, s_ag, s_ga, s_bg, s_gb = inv.sigma
    t1 = math.exp(inv.tau[0])
    t2 = math.exp(inv.tau[1])
    l1a, l2a, l1b, l2b, l1g, l2g = c.lengths

    # alpha in the global frame (= the {a-, b-} edge frame)
    a_ab = -math.exp(s_ba)
    d_ab = -math.exp(-s_ab)
    alpha = _edge_frame_generator(l1a, l2a, a_ab, d_ab, t1, t2)

    # beta in the {b-, g-} edge frame, then moved to the global frame
    a_bg = -math.exp(s_gb)
    d_bg = -math.exp(-s_bg)
    beta_local = _edge_frame_generator(l1b, l2b, a_bg, d_bg, t1, t2)

    p_a, p_b, p_g = _E1, _E3, _E123
    line_b = ProjLine([1.0, 0.0, 0.0])
    line_g = ProjLine([1.0, -(1.0 + t1), t1])
    d_bg_point = meet(line_b, line_g)
    to_frame = normalize_quadruple(p_b, d_bg_point, p_g, p_a)
    g = to_frame.m
    beta = np.linalg.inv(g) @ beta_local @ g

    gamma = np.linalg.inv(alpha) @ np.linalg.inv(beta)
    A, B, C = ProjTransform(alpha), ProjTransform(beta), ProjTransform(gamma)

    line_a = ProjLine([0.0, 0.0, 1.0])
    flag_a = Flag(p_a, line_a)
    flag_b = Flag(p_b, line_b)
    flag_g = Flag(p_g, line_g)
    flag_q = A.apply_flag(flag_g)
    rep = PantsRep(A, B, C, (flag_a, flag_b, flag_g, flag_q))

    if check:
        got = np.array(length_params(C))
        want = np.array([l1g, l2g])
        if np.max(np.abs(got - want)) > 1e-7 * max(1.0, np.max(np.abs(want))):
            raise ConstructionFailure(
                "gamma length parameters %s do not match targets %s" % (got, want)
            )
    return rep


def _measured_flags(r: PantsRep):
    """Attracting flags of the generators, recomputed from the matrices."""
    return (
        attracting_flag(r.alpha),
        attracting_flag(r.beta),
        attracting_flag(r.gamma),
    )


def edge_sigmas(
    flag_x: Flag, flag_y: Flag, z1: ProjPoint, z2: ProjPoint
) -> tuple:
    """(sigma_xy, sigma_yx) for an edge (x, y) from its four marked points.

    z1 sits between y and x, z2 between x and y.  Raises on sign
    violations, which indicate a non-convex configuration.
    """
    axis = line_through(flag_x.point, flag_y.point)
    s_xy = cross_ratio(flag_x.line, z2, z1, axis)
    s_yx = cross_ratio(flag_y.line, z1, z2, axis)
    if s_xy >= 0 or s_yx >= 0:
        raise TransversalityError(
            "edge invariants must be negative, got (%g, %g)" % (s_xy, s_yx)
        )
    return (math.log(-s_xy), math.log(-s_yx))


def triangle_tau(fx: Flag, fy: Flag, fz: Flag) -> float:
    """log of the triple ratio of a positively ordered flag triple."""
    t = triple_ratio(fx.line, fy.line, fz.line, fx.point, fy.point, fz.point)
    if t <= 0:
        raise TransversalityError("triangle invariant must be positive, got %g" % t)
    return math.log(t)


def invariants_of(r: PantsRep) -> BDInvariants:
    """Measure all eight invariants back from the matrices.

    Flags are recomputed via attracting_flag, so this is an independent
    check of any construction that claims given invariants.
    """
    fa, fb, fg = _measured_flags(r)
    A = r.alpha
    B = r.beta
    q_point = A.apply_point(fg.point)  # alpha.g-
    q_flag = A.apply_flag(fg)
    ba_point = B.apply_point(fa.point)  # beta.a-
    iab_point = A.inverse().apply_point(fb.point)  # alpha^-1.b-

    s_ab, s_ba = edge_sigmas(fa, fb, fg.point, q_point)
    s_bg, s_gb = edge_sigmas(fb, fg, fa.point, ba_point)
    s_ga, s_ag = edge_sigmas(fg, fa, fb.point, iab_point)
    tau1 = triangle_tau(fa, fg, fb)
    tau2 = triangle_tau(fa, q_flag, fb)
    return BDInvariants((s_ab, s_ba, s_ag, s_ga, s_bg, s_gb), (tau1, tau2))


def pants_lengths(r: PantsRep) -> tuple:
    """(l1a, l2a, l1b, l2b, l1g, l2g) measured from the matrices."""
    la = length_params(r.alpha)
    lb = length_params(r.beta)
    lg = length_params(r.gamma)
    return (la[0], la[1], lb[0], lb[1], lg[0], lg[1])


def measure_coords(r: PantsRep) -> PantsCoords:
    """Coordinates (lengths, i1, i2) measured from the matrices."""
    inv = invariants_of(r)
    return PantsCoords(pants_lengths(r), (inv.sigma[0], inv.tau[0]))
