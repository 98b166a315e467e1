"""Exact E-polynomials, Hodge diamonds and semismall-map bookkeeping."""

from epoly.hodge import HodgeDiamond, SignConvention
from epoly.poly import BivariatePoly, L

__all__ = ["BivariatePoly", "HodgeDiamond", "L", "SignConvention"]
