"""Approximant bases, kernel bases and modular inverse application."""

import numpy as np

from .. import _kernels as K
from .. import linalg
from ..errors import DegreeTooLarge, DimensionMismatch, NotCoprime, NotInvertibleMod, ShiftOutOfRange, SingularInput
from ..poly import Poly, poly_modinv
from .matrix import _NEG, PolyMat, _cdeg_raw, _check_shift, _lm_raw, degree_array, form_predicate
from .reduction import _popov_from_weak, weak_popov_raw

MBASIS_CUTOFF = 48


def mbasis(Fa, sigma, s, F):
    """Iterative s-reduced approximant basis of Fa at order sigma.

    One order and one row at a time: the column of smallest shifted degree with
    a nonzero residual becomes the pivot, clears the other residuals, and is
    multiplied by x.  Returns (basis array, its s-column degrees).
    """
    p = F.p
    rho, kappa = Fa.shape[0], Fa.shape[1]
    t = np.array(s, dtype=np.int64)
    cap = rho * sigma + 1
    P = F.zeros((kappa, kappa, cap))
    P[np.arange(kappa), np.arange(kappa), 0] = 1
    R = K.pad3(Fa, sigma, F)
    length = np.ones(kappa, dtype=np.int64)  # coefficient length of each column of P
    for k in range(sigma):
        for i in range(rho):
            r = R[i, :, k]
            nz = np.flatnonzero(r)
            if not nz.size:
                continue
            piv = nz[np.argmin(t[nz])]
            others = nz[nz != piv]
            lp = int(length[piv])
            if others.size:
                c = r[others] * pow(int(r[piv]), -1, p) % p
                P[:, others, :lp] = (P[:, others, :lp] - c[None, :, None] * P[:, piv, None, :lp]) % p
                R[:, others, k:] = (R[:, others, k:] - c[None, :, None] * R[:, piv, None, k:]) % p
                length[others] = np.maximum(length[others], lp)
            P[:, piv, 1:lp + 1] = P[:, piv, :lp].copy()
            P[:, piv, 0] = 0
            R[:, piv, k + 1:] = R[:, piv, k:-1].copy()
            R[:, piv, k] = 0
            t[piv] += 1
            length[piv] = lp + 1
    top = int(length.max())
    return K.trim3(P[:, :, :top]), t


def pmbasis(Fa, sigma, s, F):
    """Divide-and-conquer version of mbasis (same output contract)."""
    if sigma <= MBASIS_CUTOFF:
        return mbasis(Fa, sigma, s, F)
    h = sigma // 2
    P1, t1 = pmbasis(Fa[:, :, :h], h, s, F)
    res = K.matmul3(K.pad3(Fa, sigma, F), P1, F)
    res = K.pad3(res, sigma, F)[:, :, h:sigma]
    P2, t2 = pmbasis(res, sigma - h, t1, F)
    return K.trim3(K.matmul3(P1, P2, F)), t2


def reduced_approximant(Fa, sigma, s, F):
    Fa = K.pad3(Fa, max(sigma, 1), F)[:, :, :sigma] if sigma > 0 else F.zeros(Fa.shape[:2] + (0,))
    if sigma == 0:
        kappa = Fa.shape[1]
        P = F.zeros((kappa, kappa, 1))
        P[np.arange(kappa), np.arange(kappa), 0] = 1
        return P, np.array(s, dtype=np.int64)
    return pmbasis(Fa, sigma, s, F)


def _popov_approximant(Fa, sigma, s, F):
    """s-Popov approximant basis as a raw array."""
    kappa = Fa.shape[1]
    R1, _ = reduced_approximant(Fa, sigma, s, F)
    W = weak_popov_raw(R1, s, F)
    D = degree_array(W)
    delta = np.array([int(D[i, i]) for i in range(kappa)], dtype=np.int64)
    R2, t2 = reduced_approximant(Fa, sigma, -delta, F)
    lm = _lm_raw(R2, -delta, t2)
    P = K.trim3(K.matmul3(R2, linalg.inverse(lm, F)[:, :, None], F))
    if not form_predicate(PolyMat(P, F), s, "popov"):
        P = _popov_from_weak(W, s, F)
    return P


def approximant_basis(Fm, sigma, s=None):
    """The s-Popov basis of {p : Fm p = 0 mod x^sigma}."""
    kappa = Fm.ncols
    s = [0] * kappa if s is None else _check_shift(s, kappa)
    return PolyMat(_popov_approximant(Fm.A, sigma, s, Fm.field), Fm.field)


def kernel_raw(Fa, s, F):
    kappa = Fa.shape[1]
    sigma = int(sum(s)) + int(max(s, default=0)) + 1
    P, t = reduced_approximant(Fa, sigma, s, F)
    prod = K.matmul3(Fa, P, F)
    keep = [j for j in range(kappa) if not prod[:, j, :].any()]
    return K.trim3(P[:, keep, :]) if keep else F.zeros((kappa, 0, 1))


def kernel_basis(Fm, s=None):
    """Basis of {p : Fm p = 0} as the columns of a matrix."""
    kappa = Fm.ncols
    cd = _cdeg_raw(Fm.A, [0] * Fm.nrows)
    if s is None:
        s = [max(int(c), 0) for c in cd]
    s = _check_shift(s, kappa)
    if any(x < 0 for x in s) or any(int(c) > x for c, x in zip(cd, s)):
        raise ShiftOutOfRange("kernel shift must be nonnegative and bound the column degrees")
    return PolyMat(kernel_raw(Fm.A, s, Fm.field), Fm.field)


def _solve_column(Pa, delta, v, M, F):
    """P^{-1} v rem M via the kernel of [P | -v]."""
    alpha = Pa.shape[0]
    dv = int(degree_array(v[:, None, :]).max())
    aug = np.concatenate((K.pad3(Pa, max(Pa.shape[2], v.shape[1]), F),
                          K.pad3((-v[:, None, :]) % F.p, max(Pa.shape[2], v.shape[1]), F)), axis=1)
    s = [int(d) for d in delta] + [max(dv, 0)]
    ker = kernel_raw(aug, s, F)
    if ker.shape[1] != 1:
        raise NotInvertibleMod("matrix is singular")
    mu = Poly._raw(ker[alpha, 0].copy(), F)
    try:
        inv = poly_modinv(mu, M)
    except NotCoprime as exc:
        raise NotInvertibleMod("matrix is not invertible modulo M") from exc
    out = []
    for i in range(alpha):
        out.append((Poly._raw(ker[i, 0].copy(), F) * inv) % M)
    return out


def _series_solve(Pa, Va, e, F):
    """P^{-1} V rem x^e by Newton iteration on the matrix inverse."""
    p = F.p
    alpha = Pa.shape[0]
    try:
        X = linalg.inverse(Pa[:, :, 0], F)[:, :, None]
    except SingularInput as exc:
        raise NotInvertibleMod("matrix is not invertible modulo x^e") from exc
    k = 1
    while k < e:
        k = min(2 * k, e)
        E = K.pad3(K.matmul3(Pa[:, :, :k], X, F), k, F)[:, :, :k]
        E = (-E) % p
        E[np.arange(alpha), np.arange(alpha), 0] = (E[np.arange(alpha), np.arange(alpha), 0] + 2) % p
        X = K.pad3(K.matmul3(X, E, F), k, F)[:, :, :k]
    W = K.matmul3(X, Va[:, :, :e], F)
    return K.pad3(W, e, F)[:, :, :e]


def inv_apply_mod(P, V, M, check=True):
    """The unique W with deg W < deg M and P W = V mod M."""
    F = P.field
    alpha = P.nrows
    if P.ncols != alpha or V.nrows != alpha:
        raise DimensionMismatch("P must be square and match the rows of V")
    e = M.deg
    if e <= 0:
        return PolyMat.zeros(alpha, V.ncols, F)
    if V.deg != -np.inf and V.deg >= e:
        raise DegreeTooLarge("V must have degree below deg M")
    if M.is_monomial():
        return PolyMat(_series_solve(P.A, V.A, e, F), F)
    delta = _cdeg_raw(P.A, [0] * alpha)
    if (delta == _NEG).any():
        raise NotInvertibleMod("matrix has a zero column")
    if check:
        for i in range(alpha):
            unit = F.zeros((alpha, 1))
            unit[i, 0] = 1
            _solve_column(P.A, delta, unit, M, F)
    cols = []
    for j in range(V.ncols):
        cols.append(_solve_column(P.A, delta, V.A[:, j, :], M, F))
    L = max(e, 1)
    out = F.zeros((alpha, V.ncols, L))
    for j, col in enumerate(cols):
        for i, q in enumerate(col):
            out[i, j, : len(q.arr)] = q.arr
    return PolyMat(out, F)
