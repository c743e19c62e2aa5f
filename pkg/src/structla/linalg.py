"""Small dense linear algebra over F_p used inside the polynomial routines."""

import numpy as np

from .errors import SingularInput


def _echelon(C, F, extra=None):
    """Row-reduce C (and the same operations on extra); returns pivot columns."""
    p = F.p
    M = F.array(C).copy()
    X = None if extra is None else F.array(extra).copy()
    r, c = M.shape
    pivots = []
    row = 0
    for col in range(c):
        if row == r:
            break
        nz = np.flatnonzero(M[row:, col])
        if not nz.size:
            continue
        k = row + nz[0]
        if k != row:
            M[[row, k]] = M[[k, row]]
            if X is not None:
                X[[row, k]] = X[[k, row]]
        inv = pow(int(M[row, col]), -1, p)
        M[row] = M[row] * inv % p
        if X is not None:
            X[row] = X[row] * inv % p
        f = M[:, col].copy()
        f[row] = 0
        if f.any():
            M = (M - np.outer(f, M[row])) % p
            if X is not None:
                X = (X - np.outer(f, X[row])) % p
        pivots.append(col)
        row += 1
    return M, X, pivots


def rank(C, F):
    C = np.asarray(C)
    if C.size == 0:
        return 0
    return len(_echelon(C, F)[2])


def inverse(C, F):
    n = C.shape[0]
    eye = F.zeros((n, n))
    eye[np.arange(n), np.arange(n)] = 1
    M, X, piv = _echelon(C, F, eye)
    if len(piv) < n:
        raise SingularInput("constant matrix is singular")
    return X


def solve(C, b, F):
    """Some x with C x = b, or None."""
    C = F.array(C)
    b = F.array(b).reshape(C.shape[0], -1)
    M, X, piv = _echelon(C, F, b)
    r = len(piv)
    if X[r:].any():
        return None
    x = F.zeros((C.shape[1], X.shape[1]))
    for i, col in enumerate(piv):
        x[col] = X[i]
    return x


def nullspace(C, F):
    """Basis of {x : C x = 0} as the columns of a matrix."""
    C = F.array(C)
    r, c = C.shape
    M, _, piv = _echelon(C, F)
    free = [j for j in range(c) if j not in piv]
    out = F.zeros((c, len(free)))
    for k, j in enumerate(free):
        out[j, k] = 1
        for i, col in enumerate(piv):
            out[col, k] = (-M[i, j]) % F.p
    return out
