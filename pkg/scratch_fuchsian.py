"""Dev scratch: derive pants conventions from an explicit Fuchsian pants."""
import numpy as np

def sym2(m):
    a, b = m[0]
    c, d = m[1]
    return np.array([
        [a*a, a*b, b*b],
        [2*a*c, a*d + b*c, 2*b*d],
        [c*c, c*d, d*d],
    ])

def sl2_pants(L1, L2, L3):
    t1, t2, t3 = (2*np.cosh(L/2) for L in (L1, L2, L3))
    X = np.array([[-t1, 1.0], [-1.0, 0.0]])
    zeta = (t3 + np.sqrt(t3*t3 - 4)) / 2
    Y = np.array([[0.0, zeta], [-1.0/zeta, -t2]])
    # gamma beta alpha = id with alpha=X, beta=Y -> gamma = (YX)^{-1}
    Z = np.linalg.inv(Y @ X)
    return X, Y, Z

def attract_fp(m):
    """Attracting fixed point of an SL2 hyperbolic element on R u {inf}."""
    w, v = np.linalg.eig(m)
    i = int(np.argmax(np.abs(w)))
    v1, v2 = v[0, i], v[1, i]
    return np.inf if abs(v2) < 1e-14 else float(np.real(v1 / v2))

def angle(z):
    """Cayley transform angle of a boundary point of H^2."""
    if z == np.inf:
        return float(np.angle(complex(1.0, 0.0)))
    w = complex(z, -1.0) / complex(z, 1.0)
    return float(np.angle(w))

X, Y, Z = sl2_pants(1.1, 1.4, 0.9)
print("tr checks:", np.trace(X), np.trace(Y), np.trace(Z))
print("ZYX == I:", np.allclose(Z @ Y @ X, np.eye(2)) or np.allclose(Z @ Y @ X, -np.eye(2)))

iX, iY = np.linalg.inv(X), np.linalg.inv(Y)
verts = {
    "a-": attract_fp(X),
    "ag-": attract_fp(X @ Z @ iX),
    "b-": attract_fp(Y),
    "ba-": attract_fp(Y @ X @ iY),
    "g-": attract_fp(Z),
    "iab-": attract_fp(iX @ Y @ X),
}
order = sorted(verts, key=lambda k: angle(verts[k]))
print("counterclockwise cyclic order:", order)
print({k: round(verts[k], 4) for k in verts})
