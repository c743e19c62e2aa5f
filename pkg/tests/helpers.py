"""Shared random generators and small independent checks for the tests."""

import numpy as np

from structla.poly import Poly
from structla.polymat import PolyMat


def rpoly(F, rng, deg):
    """Random polynomial of degree at most deg (zero when deg < 0)."""
    if deg < 0:
        return Poly.zero(F)
    return Poly(F.random(rng, (deg + 1,)), F)


def rmonic(F, rng, deg):
    return Poly(list(F.random(rng, (deg,))) + [1], F)


def rsplit(F, rng, deg):
    pts = rng.choice(F.p, size=deg, replace=False)
    out = Poly.one(F)
    for a in pts:
        out = out * Poly([(-int(a)) % F.p, 1], F)
    return out


def rmat(F, rng, r, c, deg):
    return PolyMat(F.random(rng, (r, c, deg + 1)), F)


def rmat_rowdeg(F, rng, bounds, c):
    """r x c matrix whose row i has degree below bounds[i]."""
    rows = [[rpoly(F, rng, b - 1) for _ in range(c)] for b in bounds]
    return PolyMat.from_entries(rows, F)


def rmat_coldeg(F, rng, r, bounds):
    """Matrix whose column j has degree at most bounds[j]."""
    return PolyMat.from_entries([[rpoly(F, rng, b) for b in bounds] for _ in range(r)], F)


def runimodular(F, rng, n, ops=6, deg=2):
    """Random unimodular matrix built from elementary column operations."""
    U = PolyMat.identity(n, F)
    for _ in range(ops):
        i, j = rng.choice(n, size=2, replace=False) if n > 1 else (0, 0)
        E = PolyMat.identity(n, F)
        if i == j:
            E = E.scale(int(F.random(rng, (1,), nonzero=True)[0]))
        else:
            ent = E.entries()
            ent[i][j] = rpoly(F, rng, deg)
            E = PolyMat.from_entries(ent, F)
        U = U @ E
    return U


def pgcd(a, b):
    while not b.is_zero():
        a, b = b, divmod(a, b)[1]
    return a.monic()


def column_content(P, j):
    g = Poly.zero(P.field)
    for i in range(P.nrows):
        g = pgcd(g, P[i, j]) if not g.is_zero() else P[i, j].monic()
    return g


def coeff_vector(polys, bounds):
    """Flatten polynomials into coefficient blocks of the given lengths."""
    out = []
    for q, b in zip(polys, bounds):
        out.extend(int(c) for c in q.padded(b))
    return out


def col_from_flat(vec, blocks, F):
    polys, k = [], 0
    for b in blocks:
        polys.append(Poly(vec[k:k + b], F))
        k += b
    return polys


def same_span_square(A, B):
    """Column spans of nonsingular square A and B agree (B in span A and det ratio constant)."""
    from structla.polymat import module_membership

    for j in range(B.ncols):
        if module_membership(A, B[:, j]) is None:
            return False
    da, db = A.det(), B.det()
    return not da.is_zero() and da.deg == db.deg


def rank_Kx(P, F, rng, tries=3):
    """Rank over K(x) by evaluation at random points (exact w.h.p. for large p)."""
    from structla import oracle

    best = 0
    for pt in rng.choice(F.p, size=tries, replace=False):
        C = np.array([[P[i, j](int(pt)) for j in range(P.ncols)] for i in range(P.nrows)], dtype=object)
        best = max(best, oracle.rank(C, F) if C.size else 0)
    return best


# contract checkers shared by the module tests and the acceptance suite


def _rowvec(polys, F):
    return PolyMat.row(polys, F)


def check_vector_mpade(out, d, M, Fs, s, v, F, rng, generation=True):
    """Assert every clause of the vector M-Pade output contract; returns the brute dimension."""
    from structla import linalg, oracle
    from structla.polymat import form_predicate, module_membership

    a = len(Fs)
    P, mu, sol = out.P, out.mu, out.sol
    row = _rowvec(Fs, F)
    assert form_predicate(P, s, "popov")
    delta = [int(P[i, i].deg) for i in range(a)]
    assert sum(delta) <= d
    det = P.det()
    assert not det.is_zero() and divmod(M, det)[1].is_zero()
    assert (row @ P).rem(M).is_zero()
    assert mu.lc == 1 and 0 <= mu.deg <= d
    vmu = (v * mu) % M if v is not None else Poly.zero(F)
    assert (row @ sol).rem(M)[0, 0] == vmu
    for i in range(a):
        assert sol[i, 0].deg < delta[i]
    # converse direction on random combinations
    lam = rmat(F, rng, a, 1, 3)
    nu = rpoly(F, rng, 2)
    comb = P @ lam + sol @ PolyMat.from_entries([[nu]], F)
    assert (row @ comb).rem(M)[0, 0] == (vmu * nu) % M
    if not generation:
        return None
    vv = v if v is not None else Poly.zero(F)
    space = oracle.brute_mpade("vector", M, Fs, v=vv, D=d, field=F)
    for vec in space.vectors:
        parts = col_from_flat(vec, space.blocks, F)
        ps, q = parts[:a], parts[a]
        quo, rem = divmod(q, mu)
        assert rem.is_zero()
        w = PolyMat.column(ps, F) - sol @ PolyMat.from_entries([[quo]], F)
        assert module_membership(P, w, s) is not None
    return space.dim


def check_simultaneous(out, d, M, Fs, s, vs, F, brute=True):
    """Assert the simultaneous M-Pade contract; returns (sum t, brute homogeneous dim)."""
    from structla import linalg, oracle
    from structla.polymat import leading_matrix, shifted_cdeg

    a = len(Fs)
    b = out.basis
    assert b.ell == len(b.p) == len(b.t)
    assert b.ell <= a + 1
    for q, t in zip(b.p, b.t):
        assert not q.is_zero() and q.deg < d
        assert 1 <= t <= d
    sbar = [d] + list(s)
    if b.ell:
        rows = [list(b.p)] + [[(f * q) % M for q in b.p] for f in Fs]
        Phat = PolyMat.from_entries(rows, F)
        neg = [-x for x in sbar]
        assert shifted_cdeg(Phat, neg) == [-t for t in b.t]
        assert linalg.rank(leading_matrix(Phat, neg), F) == b.ell
    # the sum t_i vectors p_i x^j are independent solutions
    vecs = []
    for q, t in zip(b.p, b.t):
        for j in range(t):
            pj = q.shift(j)
            assert pj.deg < d
            for f, si in zip(Fs, s):
                assert ((f * pj) % M).deg < si
            vecs.append([int(c) for c in pj.padded(d)])
    if vecs:
        assert oracle.rank(np.array(vecs, dtype=object), F) == len(vecs)
    vv = vs if vs is not None else [Poly.zero(F)] * a
    if out.csol is not None:
        c = out.csol
        assert c.deg < d
        for f, w, si in zip(Fs, vv, s):
            assert ((f * c - w) % M).deg < si
    if not brute:
        return sum(b.t), None
    space = oracle.brute_mpade("simultaneous", M, Fs, s=s, v=vv, field=F)
    assert space.homogeneous_dim() == sum(b.t)
    assert (out.csol is not None) == space.has_particular()
    return sum(b.t), space.homogeneous_dim()
