"""Chebyshev polynomials T_n, the power-sum family R_n, and the lift of kappa.

R_m is minus the m-th power sum of the roots u, v of z^2 + z + x (so u + v = -1,
uv = x), giving the integer recurrence R_m = -R_{m-1} - x R_{m-2} with
R_0 = -2, R_1 = 1.
"""

from __future__ import annotations

from functools import lru_cache

from .arith import QQ, Field
from .upoly import RatFunc, UniPoly


@lru_cache(maxsize=None)
def _t_table(n: int) -> tuple:
    if n == 0:
        return (1,)
    if n == 1:
        return (0, 1)
    a, b = _t_table(n - 2), _t_table(n - 1)
    out = [0] * (n + 1)
    for i, c in enumerate(b):
        out[i + 1] += 2 * c
    for i, c in enumerate(a):
        out[i] -= c
    return tuple(out)


@lru_cache(maxsize=None)
def _r_table(n: int) -> tuple:
    if n == 0:
        return (-2,)
    if n == 1:
        return (1,)
    a, b = _r_table(n - 2), _r_table(n - 1)
    out = [0] * (n // 2 + 1)
    for i, c in enumerate(b):
        out[i] -= c
    for i, c in enumerate(a):
        out[i + 1] -= c
    return tuple(out)


def chebyshev_T(n: int, field: Field = QQ) -> UniPoly:
    """T_n with T_n(cos t) = cos(n t)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return UniPoly(_t_table(n), field)


def R_poly(n: int, field: Field = QQ) -> UniPoly:
    if n < 0:
        raise ValueError("n must be >= 0")
    return UniPoly(_r_table(n), field)


def kappa_lift(kappa: RatFunc | UniPoly, m: int) -> RatFunc:
    """(1 - T_m(1 - 2 kappa)) / 2: the Belyi function on an m-th power component.

    With kappa = (2 - r - 1/r)/4 this returns (2 - r^m - r^-m)/4.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if isinstance(kappa, UniPoly):
        kappa = RatFunc(kappa)
    F = kappa.field
    y = 1 - kappa * 2
    return (1 - chebyshev_T(m, F)(y)) / 2
