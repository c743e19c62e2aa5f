"""Exact structured linear algebra over prime fields."""

from .errors import *  # noqa: F401,F403
from .field import FieldCtx, FieldElement, fp_inv, is_prime
from .poly import (
    NEG_INF,
    Poly,
    eval_multi,
    interpolate,
    master_poly,
    middle_product,
    poly_divrem,
    poly_modinv,
    poly_mul,
    poly_reverse,
    truncated_product,
)

__version__ = "0.1.0"
