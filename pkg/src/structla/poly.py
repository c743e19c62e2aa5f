"""Dense univariate polynomials over F_p."""

import math

import numpy as np

from . import _kernels as K
from .errors import DegreeTooLarge, DivideByZeroPoly, NotCoprime, RepeatedPoint

NEG_INF = -math.inf  # degree of the zero polynomial


class Poly:
    """Polynomial with coefficients stored low degree first, no trailing zeros."""

    __slots__ = ("field", "arr")

    def __init__(self, coeffs, field):
        self.field = field
        a = coeffs if isinstance(coeffs, np.ndarray) and coeffs.dtype == field.dtype else field.array(coeffs)
        self.arr = K.trim(np.ravel(a))

    @classmethod
    def _raw(cls, arr, field):
        # arr must already be a canonical array of the field's dtype
        out = cls.__new__(cls)
        out.field = field
        out.arr = K.trim(arr)
        return out

    @classmethod
    def zero(cls, field):
        return cls._raw(field.zeros(0), field)

    @classmethod
    def one(cls, field):
        return cls.monomial(0, field)

    @classmethod
    def monomial(cls, k, field, c=1):
        a = field.zeros(k + 1)
        a[k] = c % field.p
        return cls._raw(a, field)

    # basic queries

    @property
    def deg(self):
        return len(self.arr) - 1 if len(self.arr) else NEG_INF

    @property
    def coeffs(self):
        return [int(c) for c in self.arr]

    def __getitem__(self, i):
        return int(self.arr[i]) if 0 <= i < len(self.arr) else 0

    def is_zero(self):
        return len(self.arr) == 0

    def __bool__(self):
        return len(self.arr) > 0

    @property
    def lc(self):
        return int(self.arr[-1]) if len(self.arr) else 0

    def padded(self, n):
        """Coefficient array of length n (truncating if longer)."""
        return K.pad(self.arr, n, self.field)

    # arithmetic

    def _other(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other
        return Poly([int(other)], self.field)

    def __add__(self, other):
        o = self._other(other)
        n = max(len(self.arr), len(o.arr))
        return Poly._raw((self.padded(n) + o.padded(n)) % self.field.p, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw((-self.arr) % self.field.p, self.field)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            o = self._other(other)
            return Poly._raw(K.conv(self.arr, o.arr, self.field), self.field)
        c = int(other) % self.field.p
        return Poly._raw(self.arr * c % self.field.p, self.field)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return poly_divrem(self, self._other(other))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        o = self._other(other)
        if o.is_monomial():
            return self.trunc(o.deg)
        return divmod(self, o)[1]

    def __pow__(self, e):
        out = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and np.array_equal(self.arr, other.arr)
        if isinstance(other, (int, np.integer)):
            return self == Poly([int(other)], self.field)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, tuple(self.coeffs)))

    def __call__(self, point):
        p = self.field.p
        acc = 0
        x = int(point) % p
        for c in self.coeffs[::-1]:
            acc = (acc * x + c) % p
        return acc

    # structural helpers

    def is_monomial(self):
        """True for c * x^k with c = 1."""
        return len(self.arr) > 0 and self.lc == 1 and not self.arr[:-1].any()

    def trunc(self, k):
        """self rem x^k."""
        return Poly._raw(self.arr[: max(k, 0)], self.field)

    def shift(self, k):
        """self * x^k for k >= 0, or self quo x^(-k) for k < 0."""
        if k >= 0:
            if not len(self.arr):
                return self
            return Poly._raw(np.concatenate((self.field.zeros(k), self.arr)), self.field)
        return Poly._raw(self.arr[-k:], self.field)

    def reverse(self, d):
        return poly_reverse(d, self)

    def derivative(self):
        if len(self.arr) <= 1:
            return Poly.zero(self.field)
        k = self.field.array(np.arange(1, len(self.arr)))
        return Poly._raw(self.arr[1:] * k % self.field.p, self.field)

    def monic(self):
        if self.is_zero():
            return self
        return self * self.field.inv(self.lc)

    def __repr__(self):
        if self.is_zero():
            return f"Poly(0, p={self.field.p})"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else (f"{c}*" if c != 1 else "") + ("x" if i == 1 else f"x^{i}"))
        return f"Poly({' + '.join(terms)}, p={self.field.p})"


def poly_mul(a, b):
    return a * b


def poly_divrem(a, b):
    if b.is_zero():
        raise DivideByZeroPoly("division by the zero polynomial")
    q, r = K.divrem(a.arr, b.arr, a.field)
    return Poly._raw(q, a.field), Poly._raw(r, a.field)


def poly_modinv(a, M):
    """b with a*b = 1 mod M and deg b < deg M."""
    if M.is_zero():
        raise DivideByZeroPoly("modulus is zero")
    F = a.field
    if M.deg == 0:
        return Poly.zero(F)
    a = a % M
    if M.is_monomial():
        if a[0] == 0:
            raise NotCoprime("polynomial shares the factor x with the modulus")
        return Poly._raw(K.series_inv(a.arr, M.deg, F), F)
    r0, r1 = M, a
    s0, s1 = Poly.zero(F), Poly.one(F)
    while not r1.is_zero():
        q, r = poly_divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.deg != 0:
        raise NotCoprime("polynomial and modulus are not coprime")
    return (s0 * F.inv(r0.lc)) % M


def poly_reverse(d, a):
    """x^d * a(1/x)."""
    if a.deg > d:
        raise DegreeTooLarge(f"degree {a.deg} exceeds reversal bound {d}")
    if a.is_zero():
        return a
    return Poly._raw(K.pad(a.arr, d + 1, a.field)[::-1].copy(), a.field)


def check_distinct(points):
    vals = [int(v) for v in points]
    if len(set(vals)) != len(vals):
        raise RepeatedPoint("grid has repeated points")


def master_poly(grid, field):
    """prod (x - g) over the grid, via a product tree."""
    pts = field.array([int(g) for g in grid])
    if len(pts) == 0:
        return Poly.one(field)
    level = [field.array([(-int(g)) % field.p, 1]) for g in pts]
    while len(level) > 1:
        nxt = [K.conv(level[i], level[i + 1], field) for i in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return Poly._raw(level[0], field)


def eval_multi(a, grid):
    """Values of a at each grid point, as a field array."""
    F = a.field
    pts = F.array([int(g) for g in grid])
    return K.horner(a.arr, pts, F)


def interpolate(grid, values, field):
    """The unique polynomial of degree < len(grid) through the given values."""
    check_distinct(grid)
    pts = field.array([int(g) for g in grid])
    vals = field.array([int(v) for v in values])
    if len(pts) != len(vals):
        raise ValueError("grid and values differ in length")
    d = len(pts)
    if d == 0:
        return Poly.zero(field)
    p = field.p
    mu = master_poly(pts, field).arr
    w = field.batch_inv(K.horner(Poly._raw(mu, field).derivative().arr, pts, field))
    c = vals * w % p
    # synthetic division of mu by (x - x_i) for all i at once
    q = field.zeros(d)
    q[:] = 1
    out = field.zeros(d)
    out[d - 1] = field.matmul(c, q)
    for k in range(d - 1, 0, -1):
        q = (mu[k] + pts * q) % p
        out[k - 1] = field.matmul(c, q)
    return Poly._raw(out, field)


def truncated_product(g, u, m):
    """g * u rem x^m."""
    return (g * u).trunc(m)


def middle_product(hvec, u, ell):
    """(h * u quo x^(n-1)) rem x^ell with h the reversal of hvec."""
    F = u.field
    n = len(hvec)
    if u.deg >= n or ell > n:
        raise DegreeTooLarge("middle product needs deg u < n and ell <= n")
    h = Poly(list(hvec)[::-1], F)
    return (h * u).shift(-(n - 1)).trunc(ell)
