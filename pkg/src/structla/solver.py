"""Structured system solving and nullspace description.

Each solve runs three phases: a vector M-Padé problem built from the
generators, a change of unknowns through the inverse of its basis, and a
simultaneous M-Padé problem whose solutions are the system solutions.
"""

import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import oracle
from .mpade import simultaneous_mpade, vector_mpade
from .poly import NEG_INF, Poly, eval_multi, interpolate
from .polymat import PolyMat, col_reverse, inv_apply_mod
from .structured import apply, to_dense


@dataclass
class SolveOutput:
    structure: str
    n: int
    ell: int
    p: list
    d: list
    t: list
    u: np.ndarray | None
    timings: dict = dc_field(default_factory=dict)

    @property
    def nullity(self):
        return int(sum(self.t))

    @property
    def solved(self):
        return self.u is not None


def _phase_polys(g, v):
    """Modulus, row F, right-hand side and the polynomials feeding phase 2."""
    F, m, n = g.field, g.m, g.n
    a = g.alpha
    zero_v = v is None
    if g.structure == "toeplitz":
        M = Poly.monomial(m, F)
        gs = [Poly(g.G[:, j], F) for j in range(a)]
        vp = Poly.zero(F) if zero_v else Poly(v, F)
        hs = [Poly(g.H[:, j], F) for j in range(a)]
    elif g.structure == "vandermonde":
        M = g.mu_x()
        gs = g.g_interp()
        vp = Poly.zero(F) if zero_v else interpolate(g.x, v, F)
        hs = [Poly(g.H[:, j], F) for j in range(a)]
    else:
        M = g.mu_x()
        muy = g.mu_y()
        iota = g.iota()
        dmuy = muy.derivative()
        gs = [(iota * q) % M for q in g.g_interp()]
        vp = Poly.zero(F) if zero_v else interpolate(g.x, v, F)
        hs = [(dmuy * q) % muy for q in g.h_interp()]
    return M, gs, vp, hs


@dataclass
class Transformed:
    """Phase 1 and 2 data: the simultaneous instance a solve reduces to."""

    P: PolyMat
    mu: Poly
    sol: PolyMat
    delta: list
    feasible: bool
    modulus: Poly
    F: list
    w: list
    s: list


def _check_rhs(g, v):
    if v is None:
        return None
    v = g.field.array([int(t) for t in v])
    if len(v) != g.m:
        raise ValueError(f"right-hand side has length {len(v)}, expected {g.m}")
    return v


def transform(g, v=None, timings=None):
    """Run phases 1 and 2 and return the resulting simultaneous instance."""
    F, m, n, a = g.field, g.m, g.n, g.alpha
    v = _check_rhs(g, v)
    t0 = time.perf_counter()

    # phase 1: vector M-Pade approximation
    M, gs, vp, hs = _phase_polys(g, v)
    vm = vector_mpade(m, a, M, gs, [0] * a, vp)
    P, mu, sol = vm.P, vm.mu, vm.sol
    delta = [int(P[i, i].deg) for i in range(a)]
    sol_deg = sol.deg
    feasible = mu == Poly.one(F) and (sol_deg == NEG_INF or sol_deg < n)
    t1 = time.perf_counter()

    # phase 2: change of unknowns
    hcol = PolyMat.column(hs, F)
    if g.structure == "cauchy":
        Mn = g.mu_y()
        Fcol = inv_apply_mod(P, hcol, Mn, check=False)
        w = inv_apply_mod(P, sol.rem(Mn), Mn, check=False) if feasible else PolyMat.zeros(a, 1, F)
    else:
        Mn = Poly.monomial(n, F)
        Pbar = col_reverse(P, delta)
        Fcol = inv_apply_mod(Pbar, hcol, Mn, check=False)
        e = min(max(delta), n)
        if feasible and e > 0 and not sol.is_zero():
            rsol = col_reverse(sol, [e - 1])
            w = inv_apply_mod(Pbar, rsol, Poly.monomial(e, F), check=False).shift(n - e)
        else:
            w = PolyMat.zeros(a, 1, F)
    if timings is not None:
        timings["phase1"] = t1 - t0
        timings["phase2"] = time.perf_counter() - t1
    s = [max(0, n - dl) for dl in delta]
    return Transformed(P, mu, sol, delta, feasible, Mn, [Fcol[i, 0] for i in range(a)],
                       [w[i, 0] for i in range(a)], s)


def solve(g, v=None, method="approximant"):
    """Solve A u = v and describe the nullspace of A.

    Returns a SolveOutput with u = None when the system is inconsistent.  The
    nullspace is spanned by expand_nullspace(out, g).
    """
    n, a = g.n, g.alpha
    timings = {}
    t0 = time.perf_counter()
    tr = transform(g, v, timings)
    t2 = time.perf_counter()

    # phase 3: simultaneous M-Pade approximation
    sm = simultaneous_mpade(n, a, tr.modulus, tr.F, tr.s, tr.w, method=method)
    basis, csol = sm.basis, sm.csol
    if not tr.feasible or csol is None:
        u = None
    elif g.structure == "cauchy":
        u = eval_multi(csol, g.y)
    else:
        u = csol.padded(n)[::-1].copy()
    if g.structure == "cauchy":
        ps = list(basis.p)
        ds = [int(q.deg) for q in ps]
    else:
        ds = [int(q.deg) for q in basis.p]
        ps = [q.reverse(dd) for q, dd in zip(basis.p, ds)]
    timings["phase3"] = time.perf_counter() - t2
    timings["total"] = time.perf_counter() - t0
    return SolveOutput(g.structure, n, basis.ell, ps, ds, [int(x) for x in basis.t], u, timings)


def expand_nullspace(out, g):
    """The nullity-many vectors spanning the nullspace, one per (i, j < t_i)."""
    F, n = g.field, g.n
    vecs = []
    for q, dd, tt in zip(out.p, out.d, out.t):
        for j in range(tt):
            if g.structure == "cauchy":
                vecs.append(eval_multi(q.shift(j), g.y))
            else:
                vecs.append(q.shift(n - dd - tt + j).padded(n))
    return vecs


@dataclass
class VerifyReport:
    lines: list = dc_field(default_factory=list)

    def add(self, name, ok, detail=""):
        self.lines.append((name, bool(ok), detail))

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.lines)

    def failed(self):
        return [name for name, ok, _ in self.lines if not ok]

    def __str__(self):
        return "\n".join(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else "")
                         for name, ok, detail in self.lines)


def verify(g, v, out, dense_check=None, dense_limit=64):
    """Check a solver output against the generators (and a dense oracle when small)."""
    F, m, n = g.field, g.m, g.n
    rep = VerifyReport()
    rhs = F.zeros(m) if v is None else F.array([int(t) for t in v])
    if out.u is not None:
        u = F.array([int(t) for t in out.u])
        ok = len(u) == n and np.array_equal(apply(g, u), rhs)
        rep.add("residual", ok, "" if ok else "A u != v")
    else:
        rep.add("residual", True, "no solution returned")
    shapes_ok = len(out.p) == len(out.d) == len(out.t) == out.ell
    ledger = shapes_ok and all(
        int(tt) >= 1 and (q.deg == NEG_INF or q.deg <= dd) and dd <= n - tt < n and dd >= 0
        for q, dd, tt in zip(out.p, out.d, out.t)
    )
    rep.add("degree_ledger", ledger, "" if ledger else f"d={list(out.d)} t={list(out.t)} n={n}")
    if not ledger:
        return rep
    vecs = expand_nullspace(out, g)
    bad = [i for i, z in enumerate(vecs) if np.asarray(apply(g, z)).any()]
    rep.add("nullspace_annihilated", not bad, "" if not bad else f"vectors {bad} not in the nullspace")
    if dense_check is None:
        dense_check = max(m, n) <= dense_limit
    if dense_check:
        A = to_dense(g)
        res = oracle.dense_rank_solve(A, rhs, F)
        nullity = n - res.rank
        rep.add("nullity", nullity == out.nullity, f"oracle {nullity}, output {out.nullity}")
        agree = (res.solution is None) == (out.u is None)
        rep.add("solvability", agree,
                f"oracle {'consistent' if res.solution is not None else 'inconsistent'}, "
                f"output {'solved' if out.u is not None else 'inconsistent'}")
        r = oracle.rank(np.array(vecs, dtype=object), F) if vecs else 0
        rep.add("nullspace_independent", r == len(vecs), f"rank {r} of {len(vecs)} vectors")
    return rep
