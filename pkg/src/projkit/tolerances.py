"""Default numerical tolerances, overridable per call or globally.

Setting the environment variable PROJKIT_TOL to a positive float rescales
every default tolerance by that factor (read at call time, so it can be
changed mid-process).  Most public functions also take an explicit ``tol``
argument that wins over the defaults.
"""

import os

INCIDENCE = 1e-10          # |<line, point>| / (|line||point|) for flag incidence
GENERAL_POSITION = 1e-10   # normalized 3x3 determinant threshold
EIGEN_CLUSTER = 1e-8       # relative eigenvalue clustering width
PRODUCT_RESIDUAL = 1e-9    # allowed residual on group relations
CONSTRUCTION = 1e-8        # allowed residual on rebuilt invariants
DEDUP = 1e-9               # bucket width for projective-point deduplication


def scale() -> float:
    """Global tolerance multiplier from PROJKIT_TOL (default 1.0)."""
    raw = os.environ.get("PROJKIT_TOL")
    if raw is None:
        return 1.0
    try:
        value = float(raw)
    except ValueError:
        return 1.0
    return value if value > 0 else 1.0


def incidence_tol(tol=None) -> float:
    return INCIDENCE * scale() if tol is None else tol


def general_position_tol(tol=None) -> float:
    return GENERAL_POSITION * scale() if tol is None else tol


def eigen_cluster_tol(tol=None) -> float:
    return EIGEN_CLUSTER * scale() if tol is None else tol
