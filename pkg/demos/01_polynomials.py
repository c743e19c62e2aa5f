"""
Polynomials over a prime field
==============================

"""

from structla import FieldCtx, Poly, eval_multi, interpolate, master_poly, middle_product, truncated_product

F = FieldCtx(7)
a = Poly([2, 1], F)
b = Poly([3, 4], F)
print("(2+x)(3+4x) =", a * b)

# division with remainder, and back
q, r = divmod(Poly([0, 0, 1], F), Poly([6, 1], F))
print("x^2 = (", q, ") (x+6) +", r)

# evaluation and interpolation are inverse maps on polynomials of degree < 2
grid = [1, 2]
vals = eval_multi(Poly([1, 2], F), grid)
print("values", [int(t) for t in vals], "->", interpolate(grid, vals, F))
print("master polynomial of", grid, "is", master_poly(grid, F))

# the two Toeplitz-type products
u = Poly([1, 1, 1], F)
print("(1+x) u rem x^3 =", truncated_product(Poly([1, 1], F), u, 3))
print("middle product  =", middle_product([1, 2], Poly([3, 4], F), 2))

# big operands switch to NTT multiplication when the prime allows it
G = FieldCtx(65537)
big = Poly(list(range(1, 4001)), G)
print("deg of a 4000-term square:", (big * big).deg)
