"""Polynomial matrices and shifted-degree bookkeeping.

Columns are the primary axis: a basis of a module is stored as the columns of
a matrix, shifts index rows, and the pivot of a column is the bottom-most
entry attaining its shifted degree.
"""

import numpy as np

from .. import _kernels as K
from .. import linalg
from ..errors import DegreeTooLarge, DimensionMismatch, NotSquare
from ..poly import NEG_INF, Poly

_NEG = -(1 << 60)  # internal stand-in for the degree of zero


class PolyMat:
    """Dense matrix of polynomials stored as a (rows, cols, length) array."""

    __slots__ = ("field", "A")

    def __init__(self, coeffs, field):
        self.field = field
        A = np.asarray(coeffs)
        if A.dtype != field.dtype:
            A = field.array(A)
        if A.ndim != 3:
            raise ValueError("expected a 3-d coefficient array")
        if A.shape[2] == 0:
            A = field.zeros(A.shape[:2] + (1,))
        self.A = K.trim3(A)

    @classmethod
    def from_entries(cls, rows, field):
        """Build from a nested list whose entries are Poly, ints or coefficient lists."""
        polys = [[_as_poly(e, field) for e in row] for row in rows]
        r = len(polys)
        c = len(polys[0]) if r else 0
        L = max([len(q.arr) for row in polys for q in row] + [1])
        A = field.zeros((r, c, L))
        for i, row in enumerate(polys):
            if len(row) != c:
                raise DimensionMismatch("ragged rows")
            for j, q in enumerate(row):
                A[i, j, : len(q.arr)] = q.arr
        return cls(A, field)

    @classmethod
    def zeros(cls, r, c, field):
        return cls(field.zeros((r, c, 1)), field)

    @classmethod
    def identity(cls, n, field):
        A = field.zeros((n, n, 1))
        A[np.arange(n), np.arange(n), 0] = 1
        return cls(A, field)

    @classmethod
    def constant(cls, C, field):
        C = field.array(C)
        return cls(C.reshape(C.shape + (1,)), field)

    @classmethod
    def column(cls, polys, field):
        return cls.from_entries([[q] for q in polys], field)

    @classmethod
    def row(cls, polys, field):
        return cls.from_entries([list(polys)], field)

    # shape and access

    @property
    def shape(self):
        return self.A.shape[:2]

    @property
    def nrows(self):
        return self.A.shape[0]

    @property
    def ncols(self):
        return self.A.shape[1]

    def __getitem__(self, key):
        i, j = key
        if isinstance(i, (int, np.integer)) and isinstance(j, (int, np.integer)):
            return Poly._raw(self.A[i, j].copy(), self.field)
        if isinstance(i, (int, np.integer)):
            i = slice(i, i + 1)
        if isinstance(j, (int, np.integer)):
            j = slice(j, j + 1)
        return PolyMat(self.A[i, j].copy(), self.field)

    def entries(self):
        return [[self[i, j] for j in range(self.ncols)] for i in range(self.nrows)]

    def to_lists(self):
        """Nested lists of coefficient lists (low degree first)."""
        return [[self[i, j].coeffs for j in range(self.ncols)] for i in range(self.nrows)]

    def coeff(self, k):
        """Constant matrix of the coefficients of x^k."""
        if k >= self.A.shape[2] or k < 0:
            return self.field.zeros(self.shape)
        return self.A[:, :, k].copy()

    @property
    def T(self):
        return PolyMat(self.A.transpose(1, 0, 2).copy(), self.field)

    def is_zero(self):
        return not self.A.any()

    # arithmetic

    def __matmul__(self, other):
        return PolyMat(K.matmul3(self.A, other.A, self.field), self.field)

    def _aligned(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")
        L = max(self.A.shape[2], other.A.shape[2])
        return K.pad3(self.A, L, self.field), K.pad3(other.A, L, self.field)

    def __add__(self, other):
        a, b = self._aligned(other)
        return PolyMat((a + b) % self.field.p, self.field)

    def __sub__(self, other):
        a, b = self._aligned(other)
        return PolyMat((a - b) % self.field.p, self.field)

    def __neg__(self):
        return PolyMat((-self.A) % self.field.p, self.field)

    def scale(self, c):
        return PolyMat(self.A * (int(c) % self.field.p) % self.field.p, self.field)

    def __eq__(self, other):
        if not isinstance(other, PolyMat):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(*self._aligned(other))

    __hash__ = None

    def rem(self, M):
        """Entrywise remainder modulo the polynomial M."""
        if M.is_monomial():
            return self.trunc(M.deg)
        out = self.field.zeros(self.shape + (max(len(M.arr) - 1, 1),))
        for i in range(self.nrows):
            for j in range(self.ncols):
                r = K.divrem(K.trim(self.A[i, j]), M.arr, self.field)[1]
                out[i, j, : len(r)] = r
        return PolyMat(out, self.field)

    def trunc(self, k):
        if k <= 0:
            return PolyMat.zeros(self.nrows, self.ncols, self.field)
        return PolyMat(self.A[:, :, :k].copy(), self.field)

    def shift(self, k):
        """Multiply every entry by x^k (k >= 0)."""
        if k == 0 or self.is_zero():
            return self
        A = np.concatenate((self.field.zeros(self.shape + (k,)), self.A), axis=2)
        return PolyMat(A, self.field)

    def hstack(self, other):
        L = max(self.A.shape[2], other.A.shape[2])
        return PolyMat(np.concatenate((K.pad3(self.A, L, self.field), K.pad3(other.A, L, self.field)), axis=1), self.field)

    def vstack(self, other):
        return self.T.hstack(other.T).T

    def degrees(self):
        """Matrix of entry degrees, NEG_INF for zero entries (object array)."""
        D = degree_array(self.A).astype(object)
        D[D == _NEG] = NEG_INF
        return D

    @property
    def deg(self):
        d = int(degree_array(self.A).max()) if self.A.size else _NEG
        return NEG_INF if d == _NEG else d

    def det(self):
        """Determinant by fraction-free elimination."""
        if self.nrows != self.ncols:
            raise NotSquare("determinant of a non-square matrix")
        n = self.nrows
        F = self.field
        if n == 0:
            return Poly.one(F)
        M = self.entries()
        sign = 1
        prev = Poly.one(F)
        for k in range(n - 1):
            if M[k][k].is_zero():
                swap = next((i for i in range(k + 1, n) if not M[i][k].is_zero()), None)
                if swap is None:
                    return Poly.zero(F)
                M[k], M[swap] = M[swap], M[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            prev = M[k][k]
        return M[n - 1][n - 1] * sign

    def __repr__(self):
        rows = ["[" + ", ".join(repr_entry(self[i, j]) for j in range(self.ncols)) + "]" for i in range(self.nrows)]
        return f"PolyMat([{', '.join(rows)}], p={self.field.p})"


def repr_entry(q):
    return repr(q)[5:].rsplit(", p=", 1)[0]


def _as_poly(e, field):
    if isinstance(e, Poly):
        return e
    if isinstance(e, (list, tuple, np.ndarray)):
        return Poly(list(e), field)
    return Poly([int(e)], field)


# ---------------------------------------------------------------- degrees


def degree_array(A):
    """Entry degrees of a 3-d coefficient array, _NEG for zero entries."""
    L = A.shape[2]
    nz = A != 0
    last = L - 1 - np.argmax(nz[:, :, ::-1], axis=2)
    return np.where(nz.any(axis=2), last, _NEG).astype(np.int64)


def _cdeg_raw(A, s):
    D = degree_array(A)
    s = np.asarray(s, dtype=np.int64)
    if D.shape[0] == 0:
        return np.full(D.shape[1], _NEG, dtype=np.int64)
    S = np.where(D == _NEG, _NEG, D + s[:, None])
    return S.max(axis=0)


def _to_api(v):
    return [NEG_INF if x <= _NEG // 2 else int(x) for x in v]


def _check_shift(s, n):
    s = [int(x) for x in s]
    if len(s) != n:
        raise DimensionMismatch(f"shift has length {len(s)}, expected {n}")
    return s


def shifted_cdeg(P, s=None):
    """s-column degrees of P; NEG_INF marks zero columns."""
    s = [0] * P.nrows if s is None else _check_shift(s, P.nrows)
    return _to_api(_cdeg_raw(P.A, s))


def shifted_rdeg(P, s=None):
    """s-row degrees of P; the shift indexes columns."""
    return shifted_cdeg(P.T, s)


def _lm_raw(A, s, t):
    r, c, L = A.shape
    out = np.zeros((r, c), dtype=A.dtype)
    for j in range(c):
        if t[j] <= _NEG // 2:
            continue
        for i in range(r):
            k = t[j] - s[i]
            if 0 <= k < L:
                out[i, j] = A[i, j, k]
    return out


def leading_matrix(P, s=None, axis="col"):
    """Constant matrix of the coefficients sitting at the shifted degrees."""
    if axis == "row":
        return leading_matrix(P.T, s, "col").T
    s = [0] * P.nrows if s is None else _check_shift(s, P.nrows)
    return _lm_raw(P.A, s, _cdeg_raw(P.A, s))


def pivot_rows(A, s, t=None):
    """Bottom-most row attaining the shifted degree of each column (-1 if zero)."""
    D = degree_array(A)
    s = np.asarray(s, dtype=np.int64)
    S = np.where(D == _NEG, _NEG, D + s[:, None])
    if t is None:
        t = S.max(axis=0)
    hit = (S == t[None, :]) & (D != _NEG)
    r = A.shape[0]
    last = r - 1 - np.argmax(hit[::-1, :], axis=0)
    return np.where(hit.any(axis=0), last, -1)


def form_predicate(P, s=None, form="reduced", axis="col"):
    """Whether P is s-reduced, s-weak-Popov or s-Popov (column convention)."""
    if axis == "row":
        return form_predicate(P.T, s, form, "col")
    n = P.nrows
    if P.ncols != n:
        raise NotSquare("form predicates need a square matrix")
    s = [0] * n if s is None else _check_shift(s, n)
    t = _cdeg_raw(P.A, s)
    if (t <= _NEG // 2).any():
        return False
    lm = _lm_raw(P.A, s, t)
    if form == "reduced":
        return linalg.rank(lm, P.field) == n
    piv = pivot_rows(P.A, s, t)
    if not np.array_equal(piv, np.arange(n)):
        return False
    if form == "weak_popov":
        return True
    if form != "popov":
        raise ValueError(f"unknown form {form!r}")
    D = degree_array(P.A)
    for i in range(n):
        if P.A[i, i, D[i, i]] != 1:
            return False
        others = np.delete(D[i], i)
        if (others >= D[i, i]).any():
            return False
    return True


def col_reverse(P, delta):
    """Entry (i, j) becomes rev_{delta_j}(P_ij)."""
    delta = [int(d) for d in delta]
    if len(delta) != P.ncols:
        raise DimensionMismatch("one bound per column expected")
    D = degree_array(P.A)
    for j, dj in enumerate(delta):
        if (D[:, j] > dj).any():
            raise DegreeTooLarge(f"column {j} has degree above {dj}")
    L = max(delta + [0]) + 1
    out = P.field.zeros(P.shape + (L,))
    for j, dj in enumerate(delta):
        if dj < 0:
            continue  # only a zero column fits a negative bound
        out[:, j, : dj + 1] = K.pad3(P.A[:, j:j + 1, :], dj + 1, P.field)[:, 0, ::-1]
    return PolyMat(out, P.field)


def row_reverse(P, delta):
    """Entry (i, j) becomes rev_{delta_i}(P_ij)."""
    return col_reverse(P.T, delta).T
