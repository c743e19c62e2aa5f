"""
Vandermonde-like and Cauchy-like systems
========================================

"""

import numpy as np

from structla import FieldCtx
from structla.solver import solve, verify
from structla.structured import random_instance

F = FieldCtx(65537)

for structure in ("vandermonde", "cauchy"):
    for m, n in ((20, 20), (12, 25), (25, 12)):
        g, v = random_instance(structure, m, n, 4, seed=m + n, field=F, rhs="random")
        out = solve(g, v)
        rep = verify(g, v, out)
        print(f"{structure:12s} {m}x{n}: solved={out.solved!s:5s} nullity={out.nullity:2d} checks={'ok' if rep.ok else rep.failed()}")

# low-rank matrices are exactly singular
g, _ = random_instance("cauchy", 15, 15, 4, seed=3, field=F, kind="lowrank", rank=2, rhs=None)
print("rank-2 cauchy-like: nullity", solve(g).nullity)
