"""Displacement-structured matrices stored by their generators.

Operators, with Z the lower shift matrix:

    toeplitz      A - Z A Z^T       = G H^T
    vandermonde   A - D(x) A Z^T    = G H^T
    cauchy        D(x) A - A D(y)   = G H^T
"""

import numpy as np

from .errors import DimensionMismatch, FieldTooSmall, InvalidPoints
from .field import FieldCtx
from .poly import Poly, eval_multi, interpolate, master_poly, middle_product, poly_modinv, truncated_product

STRUCTURES = ("toeplitz", "vandermonde", "cauchy")
DEFAULT_PRIME = 65537


class Generators:
    """A structured m x n matrix given by an alpha-column generator pair (G, H)."""

    def __init__(self, structure, G, H, field, x=None, y=None):
        if structure not in STRUCTURES:
            raise ValueError(f"unknown structure {structure!r}")
        self.structure = structure
        self.field = field
        self.G = field.array(G)
        self.H = field.array(H)
        if self.G.ndim != 2 or self.H.ndim != 2:
            raise DimensionMismatch("G and H must be 2-d")
        m, a = self.G.shape
        n, b = self.H.shape
        if a != b:
            raise DimensionMismatch("G and H need the same number of columns")
        if not 1 <= a <= min(m, n):
            raise DimensionMismatch(f"alpha={a} must lie in [1, min(m, n)]")
        self.x = None if x is None else field.array([int(t) for t in x])
        self.y = None if y is None else field.array([int(t) for t in y])
        self._check_points()
        self._cache = {}

    def _check_points(self):
        m, n = self.m, self.n
        if self.structure == "toeplitz":
            return
        if self.x is None or len(self.x) != m:
            raise InvalidPoints("x must hold m points")
        if len(set(self.x.tolist())) != m:
            raise InvalidPoints("x has repeated points")
        if self.structure == "cauchy":
            if self.y is None or len(self.y) != n:
                raise InvalidPoints("y must hold n points")
            if len(set(self.y.tolist())) != n:
                raise InvalidPoints("y has repeated points")
            if set(self.x.tolist()) & set(self.y.tolist()):
                raise InvalidPoints("x and y must be disjoint")

    @property
    def m(self):
        return self.G.shape[0]

    @property
    def n(self):
        return self.H.shape[0]

    @property
    def alpha(self):
        return self.G.shape[1]

    def __eq__(self, other):
        if not isinstance(other, Generators):
            return NotImplemented

        def same(a, b):
            return (a is None and b is None) or (a is not None and b is not None and np.array_equal(a, b))

        return (self.structure == other.structure and self.field == other.field
                and np.array_equal(self.G, other.G) and np.array_equal(self.H, other.H)
                and same(self.x, other.x) and same(self.y, other.y))

    __hash__ = None

    def __repr__(self):
        return f"Generators({self.structure}, m={self.m}, n={self.n}, alpha={self.alpha}, p={self.field.p})"

    # cached polynomial data

    def cached(self, key, make):
        if key not in self._cache:
            self._cache[key] = make()
        return self._cache[key]

    def mu_x(self):
        return self.cached("mu_x", lambda: master_poly(self.x, self.field))

    def mu_y(self):
        return self.cached("mu_y", lambda: master_poly(self.y, self.field))

    def g_interp(self):
        return self.cached("g_interp", lambda: [interpolate(self.x, self.G[:, j], self.field) for j in range(self.alpha)])

    def h_interp(self):
        return self.cached("h_interp", lambda: [interpolate(self.y, self.H[:, j], self.field) for j in range(self.alpha)])

    def iota(self):
        """mu_y^{-1} rem mu_x."""
        return self.cached("iota", lambda: poly_modinv(self.mu_y(), self.mu_x()))


def _lower_toeplitz(c, rows, cols, F):
    i = np.arange(rows)[:, None] - np.arange(cols)[None, :]
    out = F.zeros((rows, cols))
    ok = (i >= 0) & (i < len(c))
    out[ok] = c[i[ok]]
    return out


def _upper_toeplitz(r, rows, cols, F):
    return _lower_toeplitz(r, cols, rows, F).T.copy()


def vandermonde_matrix(x, n, F):
    V = F.zeros((len(x), n))
    if n:
        V[:, 0] = 1
    for k in range(1, n):
        V[:, k] = V[:, k - 1] * x % F.p
    return V


def cauchy_matrix(x, y, F):
    diff = (np.asarray(x)[:, None] - np.asarray(y)[None, :]) % F.p
    return F.batch_inv(diff.ravel()).reshape(diff.shape)


def to_dense(g):
    """Reconstruct A from its generators by the displacement inversion sums."""
    F, m, n = g.field, g.m, g.n
    p = F.p
    A = F.zeros((m, n))
    if g.structure == "toeplitz":
        ell = min(m, n)
        for j in range(g.alpha):
            L = _lower_toeplitz(g.G[:, j], m, ell, F)
            U = _upper_toeplitz(g.H[:, j], ell, n, F)
            A = (A + F.matmul(L, U)) % p
    elif g.structure == "vandermonde":
        V = vandermonde_matrix(g.x, n, F)
        for j in range(g.alpha):
            U = _upper_toeplitz(g.H[:, j], n, n, F)
            A = (A + g.G[:, j][:, None] * F.matmul(V, U)) % p
    else:
        # sum_j D(g_j) C D(h_j) collapses to a Hadamard product with G H^T
        A = cauchy_matrix(g.x, g.y, F) * F.matmul(g.G, g.H.T) % p
    return A


def displacement_of_dense(structure, m, n, x, y, A, field):
    """The displacement of a dense matrix under the structure's operator."""
    F = field
    A = F.array(A)
    if A.shape != (m, n):
        raise DimensionMismatch(f"expected a {m}x{n} matrix, got {A.shape}")
    p = F.p
    # Z A Z^T shifts the matrix one step down and one step right
    down_right = F.zeros((m, n))
    down_right[1:, 1:] = A[:-1, :-1]
    if structure == "toeplitz":
        return (A - down_right) % p
    x = F.array([int(t) for t in x])
    if structure == "vandermonde":
        right = F.zeros((m, n))
        right[:, 1:] = A[:, :-1]
        return (A - x[:, None] * right) % p
    if structure == "cauchy":
        y = F.array([int(t) for t in y])
        return (x[:, None] * A - A * y[None, :]) % p
    raise ValueError(f"unknown structure {structure!r}")


def apply(g, u):
    """A u computed from the generators through polynomial arithmetic."""
    F, m, n = g.field, g.m, g.n
    u = F.array([int(t) for t in u])
    if len(u) != n:
        raise DimensionMismatch(f"vector has length {len(u)}, expected {n}")
    if g.structure == "toeplitz":
        upoly = Poly(u, F)
        ell = min(m, n)
        acc = Poly.zero(F)
        for j in range(g.alpha):
            c = middle_product(g.H[:, j], upoly, ell)
            acc = acc + truncated_product(Poly(g.G[:, j], F), c, m)
        return acc.padded(m)
    mux = g.mu_x()
    gs = g.g_interp()
    acc = Poly.zero(F)
    if g.structure == "vandermonde":
        upoly = Poly(u, F)
        for j in range(g.alpha):
            acc = acc + gs[j] * middle_product(g.H[:, j], upoly, n)
        acc = acc % mux
    else:
        muy = g.mu_y()
        dmuy = muy.derivative()
        ubar = interpolate(g.y, u, F)
        for j in range(g.alpha):
            r = (g.h_interp()[j] * ubar) % muy
            acc = acc + gs[j] * ((dmuy * r) % muy)
        acc = (g.iota() * (acc % mux)) % mux
    return eval_multi(acc, g.x)


def _distinct_points(rng, count, field):
    if field.p <= 1 << 24:
        return field.array(rng.choice(field.p, size=count, replace=False))
    seen, out = set(), []
    while len(out) < count:
        v = int(field.random(rng, (1,))[0])
        if v not in seen:
            seen.add(v)
            out.append(v)
    return field.array(out)


def random_instance(structure, m, n, alpha, seed, wide_nullspace=False, field=None,
                    rhs="random", kind="generic", rank=None, shift=1):
    """A seeded random instance (g, v).

    kind: "generic" draws G and H uniformly; "lowrank" builds generators of a
    product U W^T of the given rank (2*rank <= alpha columns, the rest zero);
    "shift" (toeplitz, square) gives A = Z^shift.
    rhs: "random", "zero", "consistent" (v = A u for a random u) or None.
    """
    F = field if field is not None else FieldCtx(DEFAULT_PRIME)
    if structure not in STRUCTURES:
        raise ValueError(f"unknown structure {structure!r}")
    if wide_nullspace and n <= m:
        n = m + max(1, m // 2)
    if structure != "toeplitz" and F.p <= m + n:
        raise FieldTooSmall(f"p={F.p} is too small for {m}+{n} distinct points")
    rng = np.random.default_rng(seed)
    x = _distinct_points(rng, m + n, F) if structure != "toeplitz" else None
    y = None
    if structure == "cauchy":
        x, y = x[:m], x[m:]
    elif x is not None:
        x = x[:m]
    p = F.p
    G = F.zeros((m, alpha))
    H = F.zeros((n, alpha))
    if kind == "generic":
        G = F.random(rng, (m, alpha))
        H = F.random(rng, (n, alpha))
    elif kind == "lowrank":
        r = rank if rank is not None else max(1, alpha // 2)
        if 2 * r > alpha:
            raise DimensionMismatch("low-rank generators need alpha >= 2 * rank")
        U = F.random(rng, (m, r))
        W = F.random(rng, (n, r))
        ZU = np.vstack([F.zeros((1, r)), U[:-1]])
        ZW = np.vstack([F.zeros((1, r)), W[:-1]])
        if structure == "toeplitz":
            G[:, :2 * r] = np.hstack([U, ZU])
            H[:, :2 * r] = np.hstack([W, (-ZW) % p])
        elif structure == "vandermonde":
            G[:, :2 * r] = np.hstack([U, x[:, None] * U % p])
            H[:, :2 * r] = np.hstack([W, (-ZW) % p])
        else:
            G[:, :2 * r] = np.hstack([x[:, None] * U % p, U])
            H[:, :2 * r] = np.hstack([W, (-(y[:, None] * W)) % p])
    elif kind == "shift":
        if structure != "toeplitz" or m != n or not 0 <= shift < n:
            raise DimensionMismatch("shift instances are square toeplitz with 0 <= shift < n")
        G[shift, 0] = 1
        H[0, 0] = 1
    else:
        raise ValueError(f"unknown instance kind {kind!r}")
    g = Generators(structure, G, H, F, x=x, y=y)
    if rhs is None:
        v = None
    elif rhs == "zero":
        v = F.zeros(m)
    elif rhs == "random":
        v = F.random(rng, (m,))
    elif rhs == "consistent":
        v = apply(g, F.random(rng, (n,)))
    else:
        raise ValueError(f"unknown rhs kind {rhs!r}")
    return g, v
