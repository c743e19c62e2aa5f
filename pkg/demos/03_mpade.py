"""
Vector and simultaneous M-Pade approximation
============================================

"""

import numpy as np

from structla import FieldCtx, Poly
from structla.mpade import simultaneous_mpade, vector_mpade

F = FieldCtx(65537)
rng = np.random.default_rng(0)
d, alpha = 8, 3
M = Poly(list(F.random(rng, (d,))) + [1], F)
Fs = [Poly(F.random(rng, (d,)), F) for _ in range(alpha)]
v = Poly(F.random(rng, (d,)), F)

# F p = v q mod M: a Popov basis of the homogeneous part, a generator mu and a particular sol
out = vector_mpade(d, alpha, M, Fs, [0] * alpha, v)
print("pivot degrees:", [out.P[i, i].deg for i in range(alpha)])
print("mu:", out.mu)

# every F_i p rem M of degree below s_i; the sum of t counts the solutions
s = [5, 6, 7]
sm = simultaneous_mpade(d, alpha, M, Fs, s)
print("ell =", sm.basis.ell, " t =", sm.basis.t, " dimension =", sum(sm.basis.t))
