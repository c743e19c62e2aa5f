"""Array-level polynomial kernels.

Polynomials are 1-d coefficient arrays (low degree first); polynomial
matrices are 3-d arrays of shape (rows, cols, length).  Nothing here trims
its output; callers normalize.
"""

from functools import lru_cache

import numpy as np

SCHOOL_CUTOFF = 32
NTT_CUTOFF = 64


def trim(a):
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if nz.size else a[:0]


def trim3(A):
    """Drop trailing all-zero coefficient planes, keeping at least one."""
    if A.shape[2] == 0:
        return A
    nz = np.flatnonzero(A.reshape(-1, A.shape[2]).any(axis=0))
    keep = nz[-1] + 1 if nz.size else 1
    return A[:, :, :keep]


def pad(a, n, F):
    if len(a) >= n:
        return a[:n].copy()
    out = F.zeros(n)
    out[: len(a)] = a
    return out


# ---------------------------------------------------------------- NTT


@lru_cache(maxsize=64)
def _ntt_plan(p, N, inverse):
    from .field import _root_of_unity

    w = _root_of_unity(p, N)
    if inverse:
        w = pow(w, -1, p)
    bits = N.bit_length() - 1
    rev = np.zeros(N, dtype=np.int64)
    for b in range(bits):
        rev |= ((np.arange(N) >> b) & 1) << (bits - 1 - b)
    stages = []
    length = 2
    while length <= N:
        wl = pow(w, N // length, p)
        half = length // 2
        tw = [1] * half
        for j in range(1, half):
            tw[j] = tw[j - 1] * wl % p
        stages.append(np.array(tw, dtype=np.int64))
        length *= 2
    ninv = pow(N, -1, p) if inverse else 1
    return rev, stages, ninv


def ntt(a, N, p, inverse=False):
    """Transform along the last axis (length must equal N, a power of two)."""
    rev, stages, ninv = _ntt_plan(p, N, inverse)
    lead = a.shape[:-1]
    a = a[..., rev]
    for tw in stages:
        half = tw.shape[0]
        a = a.reshape(lead + (N // (2 * half), 2 * half))
        u = a[..., :half]
        v = a[..., half:] * tw % p
        a = np.concatenate(((u + v) % p, (u - v) % p), axis=-1)
    a = a.reshape(lead + (N,))
    if inverse:
        a = a * ninv % p
    return a


def _ntt_size(F, n):
    N = 1
    while N < n:
        N *= 2
    if F.dtype is object or N > (1 << F.two_adicity):
        return None
    return N


# ---------------------------------------------------------------- products


def _school(a, b, F):
    p = F.p
    la, lb = len(a), len(b)
    if F.dtype is not object and min(la, lb) <= F.max_terms:
        return np.convolve(a, b) % p
    if la < lb:
        a, b, la, lb = b, a, lb, la
    out = F.zeros(la + lb - 1)
    for j in range(lb):
        if b[j]:
            out[j:j + la] = (out[j:j + la] + a * b[j]) % p
    return out


def _karatsuba(a, b, F):
    la, lb = len(a), len(b)
    if min(la, lb) <= SCHOOL_CUTOFF:
        return _school(a, b, F)
    if la < lb:
        a, b, la, lb = b, a, lb, la
    p = F.p
    if 2 * lb <= la:
        # unbalanced: cut the long operand into blocks of the short length
        out = F.zeros(la + lb - 1)
        for lo in range(0, la, lb):
            part = _karatsuba(a[lo:lo + lb], b, F)
            out[lo:lo + len(part)] = (out[lo:lo + len(part)] + part) % p
        return out
    h = la // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _karatsuba(a0, b0, F)
    z2 = _karatsuba(a1, b1, F) if len(b1) else F.zeros(0)
    sa = pad(a0, len(a1), F)
    sa = (sa + a1) % p
    sb = pad(b0, max(len(b0), len(b1)), F)
    sb[: len(b1)] = (sb[: len(b1)] + b1) % p
    z1 = _karatsuba(sa, sb, F)
    z1[: len(z0)] -= z0
    z1[: len(z2)] -= z2
    out = F.zeros(la + lb - 1)
    out[: len(z0)] += z0
    out[h:h + len(z1)] += z1
    if len(z2):
        out[2 * h:2 * h + len(z2)] += z2
    return out % p


def conv(a, b, F):
    """Full product of two coefficient arrays."""
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return F.zeros(0)
    if min(la, lb) <= SCHOOL_CUTOFF:
        return _school(a, b, F)
    n = la + lb - 1
    N = _ntt_size(F, n) if min(la, lb) >= NTT_CUTOFF else None
    if N is not None:
        fa = ntt(pad(a, N, F), N, F.p)
        fb = ntt(pad(b, N, F), N, F.p)
        return ntt(fa * fb % F.p, N, F.p, inverse=True)[:n]
    return _karatsuba(a, b, F)


def _tdot(A2, B3, F):
    """(r,k) constant matrix times (k,c,L) polynomial matrix."""
    k, c, L = B3.shape
    out = F.matmul(A2, B3.reshape(k, c * L))
    return out.reshape(A2.shape[0], c, L)


def matmul3(A, B, F):
    """Product of polynomial matrices given as 3-d coefficient arrays."""
    r, k, La = A.shape
    k2, c, Lb = B.shape
    if k != k2:
        raise ValueError("inner dimensions differ")
    if La == 0 or Lb == 0 or k == 0:
        return F.zeros((r, c, max(La + Lb - 1, 1)))
    n = La + Lb - 1
    p = F.p
    if min(La, Lb) <= SCHOOL_CUTOFF:
        out = F.zeros((r, c, n))
        if La <= Lb:
            for a in range(La):
                if A[:, :, a].any():
                    out[:, :, a:a + Lb] = (out[:, :, a:a + Lb] + _tdot(A[:, :, a], B, F)) % p
        else:
            At = A.transpose(2, 0, 1)
            for b in range(Lb):
                if B[:, :, b].any():
                    part = F.matmul(At, B[:, :, b]).transpose(1, 2, 0)
                    out[:, :, b:b + La] = (out[:, :, b:b + La] + part) % p
        return out
    N = _ntt_size(F, n)
    if N is not None:
        fa = ntt(pad3(A, N, F), N, p)
        fb = ntt(pad3(B, N, F), N, p)
        step = max(1, min(k, F.max_terms))
        fc = None
        for lo in range(0, k, step):
            part = np.einsum("ikt,kjt->ijt", fa[:, lo:lo + step], fb[lo:lo + step]) % p
            fc = part if fc is None else (fc + part) % p
        return ntt(fc, N, p, inverse=True)[:, :, :n]
    out = F.zeros((r, c, n))
    for i in range(r):
        for j in range(c):
            for t in range(k):
                out[i, j] = (out[i, j] + conv(A[i, t], B[t, j], F)) % p
    return out


def pad3(A, n, F):
    if A.shape[2] >= n:
        return A[:, :, :n].copy()
    out = F.zeros(A.shape[:2] + (n,))
    out[:, :, : A.shape[2]] = A
    return out


# ---------------------------------------------------------------- division


def series_inv(a, k, F):
    """Inverse of a power series modulo x^k (a[0] must be nonzero)."""
    p = F.p
    inv0 = pow(int(a[0]), -1, p)
    g = F.array([inv0])
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        e = conv(pad(a, prec, F), g, F)[:prec]
        e = (-e) % p
        e[0] = (e[0] + 2) % p
        g = conv(g, e, F)[:prec]
    return pad(g, k, F)


def divrem(a, b, F):
    """Quotient and remainder; b must be trimmed and nonzero."""
    p = F.p
    la, lb = len(a), len(b)
    if la < lb:
        return F.zeros(0), a.copy()
    lq = la - lb + 1
    if lb == 1:
        inv = pow(int(b[0]), -1, p)
        return a * inv % p, F.zeros(0)
    if lq <= 64 or lb <= 16:
        r = a.copy()
        q = F.zeros(lq)
        inv = pow(int(b[-1]), -1, p)
        bb = b[:-1]
        for i in range(lq - 1, -1, -1):
            c = int(r[i + lb - 1]) * inv % p
            if c:
                q[i] = c
                r[i:i + lb - 1] = (r[i:i + lb - 1] - bb * c) % p
        return q, r[: lb - 1]
    ra = a[::-1]
    rb = b[::-1]
    q = conv(ra[:lq], series_inv(rb, lq, F), F)[:lq][::-1].copy()
    r = (a[: lb - 1] - conv(q, b, F)[: lb - 1]) % p
    return q, r


def horner(a, pts, F):
    """Evaluate a coefficient array at every point of pts."""
    p = F.p
    out = F.zeros(len(pts))
    for c in a[::-1]:
        out = (out * pts + c) % p
    return out
