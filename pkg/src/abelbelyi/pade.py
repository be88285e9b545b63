"""Abel functions on y^2 = 1 + a x + b x^2 + c x^3 from Pade approximants of sqrt(f).

A = (0, 1), B is the point at infinity.  With p/q the [n//2, (n-3)//2] Pade
approximant of sqrt(f) normalized by p(0) = q(0) = 1, the function p - q y has
divisor (n-1)A + C - nB for some point C, read off from its norm
p^2 - q^2 f = x^{n-1} (c_{n-1} + c_n x).  It is an Abel function exactly when
C = A, i.e. c_{n-1} = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import QQ, Field
from .upoly import UniPoly, resultant, solve_linear


class DegeneratePade(ArithmeticError):
    """The linear system defining the Pade table entry is singular."""


@dataclass(frozen=True)
class CubicCurve:
    a: object
    b: object
    c: object
    field: Field = QQ

    def __post_init__(self):
        F = self.field
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, F(getattr(self, name)))
        if not self.c:
            raise ValueError("c must be nonzero (f must be cubic)")
        f = self.f
        if not resultant(f, f.derivative()):
            raise ValueError("f has a repeated root: the affine model is singular")

    @property
    def f(self) -> UniPoly:
        return UniPoly((1, self.a, self.b, self.c), self.field)


def series_sqrt(f: UniPoly, m: int) -> UniPoly:
    """s with s(0) = 1 and s^2 = f mod x^{m+1}, by Newton's iteration."""
    if f.coeff(0) != 1:
        raise ValueError("series_sqrt needs f(0) = 1")
    F = f.field
    s = UniPoly.constant(1, F)
    prec = 1
    target = m + 1
    half = F.one / 2
    while prec < target:
        prec = min(2 * prec, target)
        inv = series_inverse(s, prec)
        s = ((s + (f.truncate(prec) * inv).truncate(prec)) * half).truncate(prec)
    return s.truncate(target)


def series_inverse(s: UniPoly, prec: int) -> UniPoly:
    """1/s mod x^prec for s(0) != 0."""
    F = s.field
    s0 = s.coeff(0)
    if not s0:
        raise ZeroDivisionError("series not invertible")
    inv0 = F.one / s0
    out = [inv0]
    for k in range(1, prec):
        acc = F.zero
        for j in range(1, min(k, s.degree) + 1):
            acc = acc + s.coeff(j) * out[k - j]
        out.append(-acc * inv0)
    return UniPoly(out, F)


def pade_approx(series: UniPoly, M: int, N: int) -> tuple:
    """(p, q) with deg p <= M, deg q <= N, q(0) = 1 and p = series*q mod x^{M+N+1}.

    ``series`` must be known to precision >= M + N (coefficients past its
    degree are taken as zero).
    """
    F = series.field
    c = series.coeff
    if N > 0:
        A = [[c(i - j) if i - j >= 0 else F.zero for j in range(1, N + 1)] for i in range(M + 1, M + N + 1)]
        rhs = [-c(i) for i in range(M + 1, M + N + 1)]
        try:
            qs = solve_linear(A, rhs, F)
        except ArithmeticError as exc:
            raise DegeneratePade("degenerate Pade table entry") from exc
    else:
        qs = []
    q = UniPoly([1] + list(qs), F)
    p = (series * q).truncate(M + 1)
    return p, q


@dataclass(frozen=True)
class PadeAbel:
    """p - q y with its norm; ``x_c`` is None when C is the point at infinity."""

    n: int
    p: UniPoly
    q: UniPoly
    norm: UniPoly
    x_c: object

    @property
    def is_abel(self) -> bool:
        return self.x_c is not None and not self.x_c

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p.to_dict(),
            "q": self.q.to_dict(),
            "norm": self.norm.to_dict(),
            "x_C": "infinity" if self.x_c is None else str(self.x_c),
            "is_abel": self.is_abel,
        }


def _check_n(n: int, F: Field) -> None:
    if n < 3:
        raise ValueError("the Pade construction needs n >= 3")
    F.check_degree(n)


def abel_candidate(curve: CubicCurve, n: int) -> PadeAbel:
    F = curve.field
    _check_n(n, F)
    M, N = n // 2, (n - 3) // 2
    s = series_sqrt(curve.f, M + N)
    p, q = pade_approx(s, M, N)
    norm = p * p - q * q * curve.f
    if norm.is_zero():
        raise DegeneratePade("norm vanishes identically")
    if norm.valuation() < n - 1 or norm.degree > n:
        raise AssertionError(f"norm {norm} violates the divisor shape at n={n}")
    cn, cn1 = norm.coeff(n), norm.coeff(n - 1)
    x_c = -cn1 / cn if cn else None
    return PadeAbel(n, p, q, norm, x_c)


def is_abel(curve: CubicCurve, n: int) -> bool:
    return abel_candidate(curve, n).is_abel


@dataclass(frozen=True)
class TorsionResult:
    order: int | None
    indeterminate: tuple = field(default=())


def torsion_order(curve: CubicCurve, n_max: int) -> TorsionResult:
    """Least n in [3, n_max] with p - q y an Abel function, i.e. the order of A - B."""
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    skipped = []
    for n in range(3, n_max + 1):
        if curve.field.characteristic and n % curve.field.characteristic == 0:
            skipped.append(n)
            continue
        try:
            if is_abel(curve, n):
                return TorsionResult(n, tuple(skipped))
        except DegeneratePade:
            skipped.append(n)
    return TorsionResult(None, tuple(skipped))
