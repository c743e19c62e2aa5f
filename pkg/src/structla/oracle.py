"""Ground-truth dense linear algebra and brute-force approximation by coefficients.

Deliberately independent of the polynomial and polynomial-matrix code: only the
field context is shared, and polynomial inputs are read off as coefficient lists.
"""

from dataclasses import dataclass

import numpy as np

from .errors import SizeTooLarge

MAX_UNKNOWNS = 256


@dataclass
class DenseResult:
    rank: int
    solution: list | None
    nullspace: list


def _reduce(A, p, order):
    """Reduced row echelon form of A (in place); returns the pivot columns.

    order="partial" sweeps columns left to right and takes the first usable row;
    order="column" sweeps rows top to bottom and takes the first nonzero column.
    """
    r, c = A.shape
    pivots = []
    if order == "partial":
        row = 0
        for col in range(c):
            if row == r:
                break
            nz = np.flatnonzero(A[row:, col])
            if not nz.size:
                continue
            k = row + int(nz[0])
            A[[row, k]] = A[[k, row]]
            _eliminate(A, row, col, p)
            pivots.append((row, col))
            row += 1
    elif order == "column":
        used = set()
        for row in range(r):
            nz = [j for j in np.flatnonzero(A[row]) if j not in used]
            if not nz:
                continue
            col = int(nz[0])
            _eliminate(A, row, col, p)
            used.add(col)
            pivots.append((row, col))
    else:
        raise ValueError(f"unknown pivoting order {order!r}")
    return pivots


def _eliminate(A, row, col, p):
    A[row] = A[row] * pow(int(A[row, col]), -1, p) % p
    f = A[:, col].copy()
    f[row] = 0
    nz = np.flatnonzero(f)
    if nz.size:
        A[nz] = (A[nz] - f[nz, None] * A[row][None, :]) % p


def dense_rank_solve(A, v=None, field=None, order="partial"):
    """Rank, one solution of A z = v (None if inconsistent) and a nullspace basis."""
    F = field
    A = F.array(np.asarray(A, dtype=object))
    m, n = A.shape
    rhs = F.zeros(m) if v is None else F.array(np.asarray([int(t) for t in v], dtype=object))
    if len(rhs) != m:
        raise ValueError("right-hand side has the wrong length")
    aug = F.zeros((m, n + 1))
    aug[:, :n] = A
    aug[:, n] = rhs
    piv = _reduce(aug, F.p, order)
    coef = [(r, c) for r, c in piv if c < n]
    rank = len(coef)
    solution = None
    if len(piv) == rank:
        z = [0] * n
        for r, c in coef:
            z[c] = int(aug[r, n])
        solution = z
    pivcols = {c: r for r, c in coef}
    nullspace = []
    for f in range(n):
        if f in pivcols:
            continue
        z = [0] * n
        z[f] = 1
        for c, r in pivcols.items():
            z[c] = int(-aug[r, f]) % F.p
        nullspace.append(z)
    return DenseResult(rank, solution, nullspace)


def rank(A, field, order="partial"):
    A = field.array(np.asarray(A, dtype=object))
    if A.size == 0:
        return 0
    return len(_reduce(A.copy(), field.p, order))


# naive polynomial arithmetic on coefficient lists


def _coeffs(a):
    if hasattr(a, "coeffs"):
        return [int(c) for c in a.coeffs]
    if isinstance(a, (int, np.integer)):
        return [int(a)]
    return [int(c) for c in a]


def _rem(a, M, p):
    a = [c % p for c in a]
    d = len(M) - 1
    inv = pow(M[-1], -1, p)
    for k in range(len(a) - 1, d - 1, -1):
        c = a[k] * inv % p
        if c:
            for j in range(d + 1):
                a[k - d + j] = (a[k - d + j] - c * M[j]) % p
    return (a + [0] * d)[:d]


def _times_x_rem(r, M, p):
    """x * r rem M for r already reduced (length d)."""
    d = len(M) - 1
    if d == 0:
        return []
    top = r[-1]
    out = [0] + r[:-1]
    if top:
        c = top * pow(M[-1], -1, p) % p
        out = [(o - c * M[j]) % p for j, o in enumerate(out)]
    return out


def _powers_rem(a, M, count, p):
    """[x^k a rem M for k < count]."""
    r = _rem(a, M, p)
    out = []
    for _ in range(count):
        out.append(r)
        r = _times_x_rem(r, M, p)
    return out


def _linear_map_kernel(images, p, field):
    """Kernel basis of the map whose columns are the given image vectors."""
    if not images:
        return []
    A = field.array(np.array(images, dtype=object).T)
    if A.ndim == 1 or A.shape[0] == 0:
        n = len(images)
        return [[int(i == j) for i in range(n)] for j in range(n)]
    return dense_rank_solve(A, None, field).nullspace


@dataclass
class BruteSpace:
    """A K-basis of a solution space; each vector is a flat coefficient list."""

    kind: str
    blocks: list
    vectors: list

    @property
    def dim(self):
        return len(self.vectors)

    def split(self, vec):
        out, k = [], 0
        for b in self.blocks:
            out.append(vec[k:k + b])
            k += b
        return out

    def homogeneous_dim(self):
        """Simultaneous kind: dimension of the slice with c = 0."""
        has_c = any(vec[-1] for vec in self.vectors)
        return self.dim - (1 if has_c else 0)

    def has_particular(self):
        """Simultaneous kind: whether some solution has c = 1."""
        return any(vec[-1] for vec in self.vectors)


def brute_mpade(kind, M, F, s=None, v=None, D=None, field=None):
    """Coefficient-space basis of a vector or simultaneous M-Pade solution set.

    vector:       {(p_1..p_a, q) : deg < D, sum F_i p_i = v q mod M}
    simultaneous: {(p, c) : deg p < d, c in K, rdeg((F_i p - c v_i) rem M) < s_i}
    """
    K = field
    p = K.p
    Mc = _coeffs(M)
    while Mc and Mc[-1] % p == 0:
        Mc.pop()
    d = len(Mc) - 1
    Fs = [_coeffs(f) for f in F]
    a = len(Fs)
    if kind == "vector":
        D = d if D is None else D
        vv = _coeffs(v) if v is not None else []
        unknowns = (a + 1) * D
        if unknowns > MAX_UNKNOWNS:
            raise SizeTooLarge(f"{unknowns} unknowns exceed {MAX_UNKNOWNS}")
        images = []
        for f in Fs + [[(-c) % p for c in vv]]:
            images.extend(_powers_rem(f, Mc, D, p))
        vecs = _linear_map_kernel(images, p, K) if d > 0 else _identity(unknowns)
        return BruteSpace("vector", [D] * (a + 1), vecs)
    if kind == "simultaneous":
        s = [int(x) for x in s]
        vs = [_coeffs(w) for w in v] if v is not None else [[] for _ in range(a)]
        unknowns = d + 1
        if unknowns > MAX_UNKNOWNS:
            raise SizeTooLarge(f"{unknowns} unknowns exceed {MAX_UNKNOWNS}")
        pows = [_powers_rem(f, Mc, d, p) for f in Fs]
        images = []
        for k in range(d + 1):
            img = []
            for i in range(a):
                r = pows[i][k] if k < d else _rem([(-c) % p for c in vs[i]], Mc, p)
                img.extend(r[s[i]:d])
            images.append(img)
        vecs = _linear_map_kernel(images, p, K) if any(len(im) for im in images) else _identity(unknowns)
        return BruteSpace("simultaneous", [d, 1], vecs)
    raise ValueError(f"unknown kind {kind!r}")


def _identity(n):
    return [[int(i == j) for i in range(n)] for j in range(n)]
