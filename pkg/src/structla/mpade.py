"""Vector and simultaneous M-Padé approximation."""

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .errors import DegreeTooLarge, DimensionMismatch, ShiftOutOfRange
from .poly import Poly
from .polymat import PolyMat
from .polymat.approximant import _popov_approximant, reduced_approximant
from .polymat.matrix import _cdeg_raw
from .polymat.reduction import weak_popov_raw


@dataclass
class VmpadeOut:
    P: PolyMat
    mu: Poly
    sol: PolyMat


@dataclass
class SolutionBasis:
    ell: int
    p: list
    t: list


@dataclass
class SmpadeOut:
    basis: SolutionBasis
    csol: Poly | None


def _polys(entries, field):
    if isinstance(entries, PolyMat):
        return [entries[i, j] for i in range(entries.nrows) for j in range(entries.ncols)]
    return [e if isinstance(e, Poly) else Poly(e, field) for e in entries]


def _stack_row(polys, field):
    L = max([len(q.arr) for q in polys] + [1])
    A = field.zeros((1, len(polys), L))
    for j, q in enumerate(polys):
        A[0, j, : len(q.arr)] = q.arr
    return A


def _homogeneous(polys, M, s, d, field):
    """s-Popov basis of {p : sum polys_i p_i = 0 mod M}, as a raw array."""
    alpha = len(polys)
    tau = max(s) - min(s) + 2 * d
    A = _stack_row(list(polys) + [M], field)
    Q = _popov_approximant(A, tau, list(s) + [min(s)], field)
    return K.trim3(Q[:alpha, :alpha, :])


def vector_mpade(d, alpha, M, F, s, v=None):
    """Solve F p = v q mod M: returns the s-Popov basis P, the generator mu and sol."""
    field = M.field
    polys = _polys(F, field)
    s = [int(x) for x in s]
    if len(polys) != alpha or len(s) != alpha or alpha < 1:
        raise DimensionMismatch("F and s must have alpha >= 1 entries")
    if M.deg != d:
        raise DimensionMismatch(f"modulus has degree {M.deg}, expected {d}")
    if any(q.deg >= d for q in polys):
        raise DegreeTooLarge("entries of F must have degree below d")
    v = Poly.zero(field) if v is None else v
    if v.deg >= d:
        raise DegreeTooLarge("v must have degree below d")
    if v.is_zero():
        P = _homogeneous(polys, M, s, d, field)
        return VmpadeOut(PolyMat(P, field), Poly.one(field), PolyMat.zeros(alpha, 1, field))
    Q = _homogeneous(polys + [-v], M, s + [max(s) + d], d, field)
    if Q[alpha, :alpha, :].any():
        raise AssertionError("augmented basis is not block triangular")
    P = PolyMat(Q[:alpha, :alpha, :].copy(), field)
    sol = PolyMat(Q[:alpha, alpha:, :].copy(), field)
    mu = Poly._raw(Q[alpha, alpha].copy(), field)
    return VmpadeOut(P, mu, sol)


def _normalize_cols(L, p):
    """Scale each column so its first nonzero row is monic."""
    for j in range(L.shape[1]):
        for i in range(L.shape[0]):
            nz = np.flatnonzero(L[i, j])
            if nz.size:
                L[:, j, :] = L[:, j, :] * pow(int(L[i, j, nz[-1]]), -1, p) % p
                break
    return L


def solution_basis(M, S, N, method="approximant"):
    """Generators of {(p, S p rem M) : row degrees below N}.

    Returns (k, L, dvec) where L holds the p-parts of k columns forming a
    (-N)-reduced generating set and dvec = -cdeg_{-N}.
    """
    field = M.field
    d = M.deg
    alpha, c = S.shape
    N = [int(x) for x in N]
    if len(N) != c + alpha:
        raise DimensionMismatch("N must have c + alpha entries")
    if any(x < 0 or x > d for x in N):
        raise ShiftOutOfRange("bounds must lie in [0, d]")
    if S.deg != -np.inf and S.deg >= d:
        raise DegreeTooLarge("entries of S must have degree below deg M")
    p = field.p
    eye = field.zeros((alpha, alpha, 1))
    eye[np.arange(alpha), np.arange(alpha), 0] = 1
    if method == "popov":
        L = max(S.A.shape[2], d + 1)
        G = field.zeros((c + alpha, c + alpha, L))
        G[np.arange(c), np.arange(c), 0] = 1
        G[c:, :c, : S.A.shape[2]] = S.A
        for i in range(alpha):
            G[c + i, c + i, : len(M.arr)] = M.arr
        shift = [-x for x in N]
        W = weak_popov_raw(G, shift, field)
        t = _cdeg_raw(W, shift)
        B = W
    elif M.is_monomial():
        A = np.concatenate((S.A, K.pad3((-eye) % p, S.A.shape[2], field)), axis=1)
        shift = [-x for x in N]
        B, t = reduced_approximant(A, d, shift, field)
    else:
        Mcol = field.zeros((alpha, alpha, len(M.arr)))
        for i in range(alpha):
            Mcol[i, i] = (-M.arr) % p
        Lm = max(S.A.shape[2], len(M.arr))
        A = np.concatenate((K.pad3(S.A, Lm, field), K.pad3((-eye) % p, Lm, field), K.pad3(Mcol, Lm, field)), axis=1)
        shift = [-x for x in N] + [-d] * alpha
        B, t = reduced_approximant(A, 2 * d, shift, field)
    keep = [j for j in range(B.shape[1]) if t[j] < 0]
    Lmat = PolyMat(_normalize_cols(B[:c, keep, :].copy(), p), field) if keep else PolyMat.zeros(c, 0, field)
    return len(keep), Lmat, [int(-t[j]) for j in keep]


def simultaneous_mpade(d, alpha, M, F, s, v=None, method="approximant"):
    """Solution basis for rdeg(F p rem M) < s, plus a particular solution of
    rdeg((F c - v) rem M) < s when one exists."""
    field = M.field
    polys = _polys(F, field)
    s = [int(x) for x in s]
    if len(polys) != alpha or len(s) != alpha or alpha < 1:
        raise DimensionMismatch("F and s must have alpha >= 1 entries")
    if M.deg != d:
        raise DimensionMismatch(f"modulus has degree {M.deg}, expected {d}")
    if any(x < 0 or x > d for x in s):
        raise ShiftOutOfRange("shift entries must lie in [0, d]")
    vs = [Poly.zero(field)] * alpha if v is None else _polys(v, field)
    if len(vs) != alpha:
        raise DimensionMismatch("v must have alpha entries")
    if any(q.deg >= d for q in polys) or any(q.deg >= d for q in vs):
        raise DegreeTooLarge("entries of F and v must have degree below d")
    S = PolyMat.from_entries([[f, -w] for f, w in zip(polys, vs)], field)
    k, L, dvec = solution_basis(M, S, [d, 1] + s, method=method)
    first = [L[0, j] for j in range(k)]
    second = [int(L[1, j][0]) for j in range(k)]
    if k == 0 or not any(second):
        return SmpadeOut(SolutionBasis(k, first, list(dvec)), None)
    p = field.p
    cand = [j for j in range(k) if second[j]]
    top = max(dvec[j] for j in cand)
    i = min(j for j in cand if dvec[j] == top)
    inv = pow(second[i], -1, p)
    csol = first[i] * inv
    out_p, out_t = [], []
    for j in range(k):
        if j == i:
            continue
        q = first[j] - csol * second[j] if second[j] else first[j]
        out_p.append(q.monic())
        out_t.append(dvec[j])
    if all(w.is_zero() for w in vs):
        # homogeneous instance: c = 0 is the canonical particular solution
        csol = Poly.zero(field)
    return SmpadeOut(SolutionBasis(k - 1, out_p, out_t), csol)
