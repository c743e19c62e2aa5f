"""
Solving a Toeplitz-like system
==============================

"""

import numpy as np

from structla import FieldCtx
from structla.solver import expand_nullspace, solve, verify
from structla.structured import apply, random_instance, to_dense

F = FieldCtx(65537)

# a wide instance: 30 equations, 45 unknowns, displacement rank 3
g, v = random_instance("toeplitz", 30, 45, 3, seed=1, field=F, rhs="consistent")
out = solve(g, v)
print("solved:", out.solved, " nullity:", out.nullity)
print("residual zero:", np.array_equal(apply(g, out.u), v))

# the nullspace comes back as a few polynomials; expand to explicit vectors
Z = expand_nullspace(out, g)
print(len(Z), "kernel vectors, all annihilated:", not F.matmul(to_dense(g), np.array(Z).T).any())
print(verify(g, v, out))

# A = Z^3 in size 6 has a three-dimensional nullspace
g, v = random_instance("toeplitz", 6, 6, 1, seed=0, field=F, kind="shift", shift=3, rhs="random")
out = solve(g, v)
print("shift instance: nullity", out.nullity, " consistent:", out.solved)
