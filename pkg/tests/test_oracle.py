import numpy as np
import pytest

from structla import oracle
from structla.errors import SizeTooLarge
from structla.field import FieldCtx
from structla.poly import Poly


def test_dense_examples(F7):
    r = oracle.dense_rank_solve(np.eye(2, dtype=int), [3, 5], F7)
    assert (r.rank, r.solution, r.nullspace) == (2, [3, 5], [])
    assert oracle.rank([[1, 1], [1, 1]], F7) == 1
    r = oracle.dense_rank_solve([[1, 1]], [0], F7)
    assert r.nullspace == [[6, 1]]


def test_inconsistent(F7):
    r = oracle.dense_rank_solve([[1, 1], [1, 1]], [1, 2], F7)
    assert r.rank == 1 and r.solution is None


@pytest.mark.parametrize("p", [7, 65537, 2**61 - 1])
def test_random_systems(p):
    F = FieldCtx(p)
    rng = np.random.default_rng(40)
    for _ in range(40):
        m, n = (int(t) for t in rng.integers(1, 9, size=2))
        k = int(rng.integers(0, min(m, n) + 1))
        A = F.matmul(F.random(rng, (m, k)), F.random(rng, (k, n))) if k else F.zeros((m, n))
        v = F.random(rng, (m,)) if rng.integers(2) else F.matmul(A, F.random(rng, (n,)))
        r = oracle.dense_rank_solve(A, v, F)
        assert r.rank == oracle.rank(A, F, order="column")
        assert len(r.nullspace) == n - r.rank
        for z in r.nullspace:
            assert not F.matmul(A, F.array(z)).any()
        if r.solution is not None:
            assert np.array_equal(F.matmul(A, F.array(r.solution)), v)
        else:
            aug = np.hstack([A, v[:, None]])
            assert oracle.rank(aug, F) == r.rank + 1


def test_pivot_orders_agree(F):
    rng = np.random.default_rng(41)
    for _ in range(100):
        m, n = (int(t) for t in rng.integers(1, 12, size=2))
        k = int(rng.integers(0, min(m, n) + 1))
        A = F.matmul(F.random(rng, (m, k)), F.random(rng, (k, n))) if k else F.zeros((m, n))
        assert oracle.rank(A, F, "partial") == oracle.rank(A, F, "column")
        assert oracle.dense_rank_solve(A, None, F, order="column").rank == oracle.rank(A, F)
    with pytest.raises(ValueError):
        oracle.rank(np.eye(2, dtype=int), F, "rook")


def test_brute_examples(F7):
    x2 = Poly.monomial(2, F7)
    x = Poly.monomial(1, F7)
    sp = oracle.brute_mpade("vector", x2, [x], v=Poly.one(F7), D=2, field=F7)
    # (p, q) = (1, x) and (x, 0), blocks of two coefficients each
    span = np.array(sp.vectors, dtype=object)
    for target in ([1, 0, 0, 1], [0, 1, 0, 0]):
        assert oracle.rank(np.vstack([span, [target]]), F7) == sp.dim
    sp = oracle.brute_mpade("simultaneous", x2, [x], s=[1], field=F7)
    assert sp.homogeneous_dim() == 1
    hom = [vec for vec in sp.vectors if not vec[-1]]
    assert oracle.rank(np.array(hom + [[0, 1, 0]], dtype=object), F7) == 1
    sp = oracle.brute_mpade("vector", x2, [Poly.zero(F7)] * 2, v=Poly.zero(F7), D=2, field=F7)
    assert sp.dim == 3 * 2


def test_brute_size_limit(F):
    M = Poly.monomial(100, F)
    with pytest.raises(SizeTooLarge):
        oracle.brute_mpade("vector", M, [Poly.one(F)] * 3, v=Poly.one(F), D=100, field=F)
    with pytest.raises(SizeTooLarge):
        oracle.brute_mpade("simultaneous", Poly.monomial(300, F), [Poly.one(F)], s=[1], field=F)
    with pytest.raises(ValueError):
        oracle.brute_mpade("mixed", M, [Poly.one(F)], field=F)
