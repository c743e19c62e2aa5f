"""
Scaling with the matrix size
============================

"""

import statistics

from structla import FieldCtx
from structla.solver import solve
from structla.structured import random_instance

F = FieldCtx(65537)
sizes = [128, 256, 512, 1024]

for structure in ("toeplitz", "vandermonde", "cauchy"):
    prev = None
    for n in sizes:
        g, v = random_instance(structure, n, n, 4, seed=0, field=F)
        t = statistics.median(solve(g, v).timings["total"] for _ in range(3))
        ratio = f"x{t / prev:.2f}" if prev else ""
        print(f"{structure:12s} n={n:5d} {t * 1000:8.1f} ms {ratio}")
        prev = t
