"""Prime field arithmetic.

Scalars are plain Python ints in ``[0, p)``; vectors and matrices are numpy
arrays.  The array dtype is ``int64`` when ``p < 2**31`` (so a single product
fits in a machine word) and ``object`` otherwise.
"""

from functools import lru_cache

import numpy as np

from .errors import ZeroInverse

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_INT64_MAX = 2**63 - 1


def is_prime(n):
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factor(n):
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


class FieldCtx:
    """The prime field F_p, 2 < p < 2**62."""

    __slots__ = ("p", "dtype", "max_terms", "two_adicity")

    def __init__(self, p):
        p = int(p)
        if not 2 < p < 2**62 or not is_prime(p):
            raise ValueError(f"modulus must be a prime in (2, 2^62), got {p}")
        self.p = p
        if p < 2**31:
            self.dtype = np.int64
            # number of products (< p^2) that can be summed without overflow
            self.max_terms = _INT64_MAX // ((p - 1) ** 2)
        else:
            self.dtype = object
            self.max_terms = 1 << 62
        k, q = 0, p - 1
        while q % 2 == 0:
            q //= 2
            k += 1
        self.two_adicity = k

    def __repr__(self):
        return f"FieldCtx({self.p})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and other.p == self.p

    def __hash__(self):
        return hash(("FieldCtx", self.p))

    def __reduce__(self):
        return (FieldCtx, (self.p,))

    def __call__(self, value):
        return FieldElement(value, self)

    # scalars

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroInverse("0 has no inverse")
        return pow(a, -1, self.p)

    # arrays

    def array(self, values):
        """Reduce an array-like of integers into a canonical array."""
        if self.dtype is object:
            a = np.array(values, dtype=object)
            return a % self.p if a.size else a
        a = np.asarray(values)
        if a.dtype == object or a.dtype.kind == "u":
            a = np.array(np.asarray(values, dtype=object) % self.p, dtype=np.int64)
            return a
        return np.asarray(a, dtype=np.int64) % self.p

    def zeros(self, shape):
        if self.dtype is object:
            a = np.empty(shape, dtype=object)
            a.fill(0)
            return a
        return np.zeros(shape, dtype=np.int64)

    def random(self, rng, shape, nonzero=False):
        """Uniform residues drawn from a numpy Generator."""
        lo = 1 if nonzero else 0
        if self.dtype is object:
            flat = [int(rng.integers(lo, self.p, dtype=np.uint64)) for _ in range(int(np.prod(shape)))]
            return np.array(flat, dtype=object).reshape(shape)
        return rng.integers(lo, self.p, size=shape, dtype=np.int64)

    def batch_inv(self, values):
        """Invert every entry of a 1-d array with a single field inversion."""
        vals = [int(v) for v in values]
        n = len(vals)
        if n == 0:
            return self.zeros(0)
        p = self.p
        prefix = [1] * (n + 1)
        for i, v in enumerate(vals):
            if v % p == 0:
                raise ZeroInverse("0 has no inverse")
            prefix[i + 1] = prefix[i] * v % p
        acc = pow(prefix[n], -1, p)
        out = [0] * n
        for i in range(n - 1, -1, -1):
            out[i] = acc * prefix[i] % p
            acc = acc * vals[i] % p
        return self.array(out)

    def matmul(self, A, B):
        """Exact product of two dense matrices (or matrix and vector)."""
        A = np.asarray(A)
        B = np.asarray(B)
        k = A.shape[-1]
        step = max(1, min(k, self.max_terms))
        if step >= k:
            return (A @ B) % self.p
        out = None
        for lo in range(0, k, step):
            part = (A[..., lo:lo + step] @ B[lo:lo + step]) % self.p
            out = part if out is None else (out + part) % self.p
        return out

    def root_of_unity(self, order):
        """A primitive root of unity of the given power-of-two order."""
        return _root_of_unity(self.p, order)


@lru_cache(maxsize=None)
def _generator(p):
    qs = _factor(p - 1)
    g = 2
    while any(pow(g, (p - 1) // q, p) == 1 for q in qs):
        g += 1
    return g


@lru_cache(maxsize=None)
def _root_of_unity(p, order):
    if (p - 1) % order:
        raise ValueError(f"no root of unity of order {order} modulo {p}")
    return pow(_generator(p), (p - 1) // order, p)


class FieldElement:
    """An element of F_p with operator overloading."""

    __slots__ = ("value", "field")

    def __init__(self, value, field):
        self.field = field
        self.value = int(value) % field.p

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other.value
        return int(other)

    def __add__(self, other):
        return FieldElement(self.value + self._coerce(other), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.value - self._coerce(other), self.field)

    def __rsub__(self, other):
        return FieldElement(self._coerce(other) - self.value, self.field)

    def __mul__(self, other):
        return FieldElement(self.value * self._coerce(other), self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.field)

    def inverse(self):
        return FieldElement(self.field.inv(self.value), self.field)

    def __truediv__(self, other):
        return self * FieldElement(self._coerce(other), self.field).inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(pow(self.value, e, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other) % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"


def fp_inv(a):
    """Inverse of a nonzero FieldElement."""
    return a.inverse()
