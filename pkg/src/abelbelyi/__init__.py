"""Exact computations with Abel pairs and Abel-Belyi pairs of genus 1.

Modules: arith (Q and F_p), upoly (polynomials, resultants, squarefree
decomposition), numtheory, chebyshev (R_n and T_n), dessins (toric dessins as
cyclic compositions), counts (closed-form counts, cusps of kappa_n, genus of
X_1(n)), abelforms (normal forms and critical values), family6 (the explicit
degree-6 family), pade (Abel functions from Pade approximants), cli.
"""

from .arith import GF, QQ, Field, PrimeFieldElem
from .upoly import RatFunc, UniPoly

__version__ = "0.1.0"

__all__ = ["GF", "QQ", "Field", "PrimeFieldElem", "RatFunc", "UniPoly", "__version__"]
