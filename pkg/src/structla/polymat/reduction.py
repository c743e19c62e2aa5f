"""Weak Popov reduction, Popov normalization and module membership."""

import numpy as np

from .. import _kernels as K
from .. import linalg
from ..errors import DimensionMismatch, NotSquare, SingularInput
from .matrix import _NEG, PolyMat, _cdeg_raw, _check_shift, _lm_raw, degree_array


def _col_info(A, j, s):
    """(shifted degree, pivot row, pivot coefficient) of column j."""
    D = degree_array(A[:, j:j + 1, :])[:, 0]
    if (D == _NEG).all():
        return None
    S = np.where(D == _NEG, _NEG, D + s)
    t = int(S.max())
    i = int(np.flatnonzero(S == t)[-1])
    return t, i, int(A[i, j, D[i]])


def _ensure_len(A, n, F):
    if A.shape[2] >= n:
        return A
    return K.pad3(A, n, F)


def weak_popov_raw(A, s, F, max_iter=None):
    """Mulders-Storjohann reduction of a square nonsingular coefficient array.

    Returns the reduced array with columns permuted so that pivots sit on the
    diagonal.
    """
    p = F.p
    A = A.copy()
    n = A.shape[1]
    s = np.asarray(s, dtype=np.int64)
    info = [None] * n
    owner = {}
    queue = list(range(n - 1, -1, -1))
    if max_iter is None:
        D = degree_array(A)
        span = int(D.max()) + int(s.max() - s.min()) + 2 if (D != _NEG).any() else 2
        max_iter = 4 * n * n * span + 16
    steps = 0
    while queue:
        j = queue.pop()
        info[j] = _col_info(A, j, s)
        if info[j] is None:
            raise SingularInput("matrix is singular (a column reduced to zero)")
        t, i, lc = info[j]
        k = owner.get(i)
        if k is None:
            owner[i] = j
            continue
        steps += 1
        if steps > max_iter:
            raise SingularInput("reduction failed to terminate")
        tk = info[k][0]
        if t >= tk:
            a, b = j, k
        else:
            a, b = k, j
            owner[i] = j
        ta, _, lca = info[a]
        tb, _, lcb = info[b]
        delta = ta - tb
        c = lca * pow(lcb, -1, p) % p
        Db = degree_array(A[:, b:b + 1, :])
        need = int(Db.max()) + delta + 1
        A = _ensure_len(A, need, F)
        Lb = need - delta
        A[:, a, delta:delta + Lb] = (A[:, a, delta:delta + Lb] - c * A[:, b, :Lb]) % p
        queue.append(a)
    order = [owner[i] for i in range(n)]
    return K.trim3(A[:, order, :])


def weak_popov_transform(B, s=None):
    """An s-weak-Popov matrix with the same column span as B."""
    n = B.nrows
    if B.ncols != n:
        raise NotSquare("weak Popov transform needs a square matrix")
    s = [0] * n if s is None else _check_shift(s, n)
    return PolyMat(weak_popov_raw(B.A, s, B.field), B.field)


def _popov_from_weak(W, s, F):
    """Normalize an s-weak-Popov array (pivots on the diagonal) to s-Popov form."""
    p = F.p
    n = W.shape[0]
    s = np.asarray(s, dtype=np.int64)
    D = degree_array(W)
    delta = [int(D[i, i]) for i in range(n)]
    W = W.copy()
    for j in range(n):
        inv = pow(int(W[j, j, delta[j]]), -1, p)
        W[:, j, :] = W[:, j, :] * inv % p
    pivots = [K.trim(W[i, i].copy()) for i in range(n)]
    out = W.copy()
    for j in range(n):
        v = out[:, j, :].copy()
        while True:
            Dv = degree_array(v[:, None, :])[:, 0]
            best = None
            for i in range(n):
                if i != j and Dv[i] >= delta[i]:
                    key = (int(Dv[i]) + int(s[i]), i)
                    if best is None or key > best:
                        best = key
            if best is None:
                break
            i = best[1]
            q, _ = K.divrem(K.trim(v[i]), pivots[i], F)
            parts = [K.conv(q, K.trim(W[k, i]), F) for k in range(n)]
            Lp = max(len(t) for t in parts)
            prod = np.stack([K.pad(t, Lp, F) for t in parts])
            L = max(v.shape[1], prod.shape[1])
            v = K.pad3(v[None], L, F)[0]
            prod = K.pad3(prod[None], L, F)[0]
            v = (v - prod) % p
        L = max(v.shape[1], out.shape[2])
        out = _ensure_len(out, L, F)
        out[:, j, :] = K.pad3(v[None], out.shape[2], F)[0]
    return K.trim3(out)


def popov_normalize(P, s=None):
    """The unique s-Popov matrix with the same column span as the s-weak-Popov P."""
    n = P.nrows
    if P.ncols != n:
        raise NotSquare("Popov normalization needs a square matrix")
    s = [0] * n if s is None else _check_shift(s, n)
    from .matrix import pivot_rows

    piv = pivot_rows(P.A, s)
    if sorted(piv.tolist()) != list(range(n)):
        raise SingularInput("input is not in weak Popov form")
    order = np.argsort(piv)
    return PolyMat(_popov_from_weak(P.A[:, order, :], s, P.field), P.field)


def membership_raw(A, w, s, F):
    """lambda with A lambda = w for an s-reduced square array A, or None."""
    p = F.p
    n = A.shape[0]
    s = np.asarray(s, dtype=np.int64)
    t = _cdeg_raw(A, s)
    lminv = linalg.inverse(_lm_raw(A, s, t), F)
    v = w.copy()
    lam = F.zeros((n, 1, 1))
    while v.any():
        tv = int(_cdeg_raw(v, s)[0])
        lv = F.zeros(n)
        for i in range(n):
            k = tv - int(s[i])
            if 0 <= k < v.shape[2]:
                lv[i] = v[i, 0, k]
        c = F.matmul(lminv, lv)
        for j in np.flatnonzero(c):
            e = tv - int(t[j])
            if e < 0:
                return None
            cj = int(c[j])
            Lj = A.shape[2]
            v = _ensure_len(v, e + Lj, F)
            v[:, 0, e:e + Lj] = (v[:, 0, e:e + Lj] - cj * A[:, j, :]) % p
            lam = _ensure_len(lam, e + 1, F)
            lam[j, 0, e] = (lam[j, 0, e] + cj) % p
        if int(_cdeg_raw(v, s)[0]) >= tv and v.any():
            return None
    return lam


def module_membership(P, w, s=None):
    """Column lambda with P lambda = w, or None when w is outside the column span."""
    n = P.nrows
    if P.ncols != n:
        raise NotSquare("membership test needs a square basis")
    if w.shape != (n, 1):
        raise DimensionMismatch("w must be a column of matching height")
    s = [0] * n if s is None else _check_shift(s, n)
    lam = membership_raw(P.A, w.A, s, P.field)
    return None if lam is None else PolyMat(lam, P.field)
