"""
Exact algebra: Laurent polynomials and matrices over them.
"""

from lens_alexander.algebra.laurent import LaurentPoly, Monomial, Ring, VarId, gcd
from lens_alexander.algebra.linalg import RingMatrix

__all__ = ["LaurentPoly", "Monomial", "Ring", "RingMatrix", "VarId", "gcd"]
