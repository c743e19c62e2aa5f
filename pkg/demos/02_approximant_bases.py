"""
Approximant and kernel bases
============================

"""

from structla import FieldCtx, Poly
from structla.polymat import (
    PolyMat,
    approximant_basis,
    form_predicate,
    inv_apply_mod,
    kernel_basis,
    module_membership,
    shifted_cdeg,
)

F = FieldCtx(7)

# all (p1, p2) with p1 + x p2 = 0 mod x^2
row = PolyMat.from_entries([[1, [0, 1]]], F)
P = approximant_basis(row, 2, [0, 0])
print(P)
print("Popov:", form_predicate(P, [0, 0], "popov"), " column degrees:", shifted_cdeg(P))

# membership by leading-term cancellation
w = PolyMat.from_entries([[[0, 0, 1]], [[0, 6]]], F)
print("w = P", module_membership(P, w))

# a kernel basis of [x, x^2]
print("kernel:", kernel_basis(PolyMat.from_entries([[[0, 1], [0, 0, 1]]], F)))

# P^{-1} v mod x^2
Q = PolyMat.from_entries([[[1, 1], 0], [0, 1]], F)
print("inverse applied:", inv_apply_mod(Q, PolyMat.from_entries([[1], [0]], F), Poly.monomial(2, F)))
