"""Abel normal forms a^k + a^{k-1} P_{k-1}(x) + ... + a P_1(x) + x^n = 0.

The hyperelliptic case F(a, x) = a^2 + a P(x) + x^n carries most of the
machinery: admissibility for genus 1, smoothness at the zero A, the two finite
critical values and the Belyi invariant kappa built from them, and recognition
of the rational (cuspidal) members.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import QQ, Field
from .chebyshev import R_poly
from .upoly import UniPoly, resultant_over_polys, squarefree_decomposition


@dataclass(frozen=True)
class AbelNormalForm:
    """``polys[i]`` is the coefficient of a**i, i = 0..k."""

    n: int
    polys: tuple

    @property
    def k(self) -> int:
        return len(self.polys) - 1


def validate_normal_form(form: AbelNormalForm) -> bool:
    if form.k < 1 or form.n < 1:
        return False
    field = form.polys[0].field
    if form.polys[0] != UniPoly.monomial(form.n, 1, field):
        return False
    if form.polys[-1] != UniPoly.constant(1, field):
        return False
    return all(p.degree <= form.n for p in form.polys)


@dataclass(frozen=True)
class HyperellipticAbel:
    """a^2 + a P(x) + x^n = 0."""

    n: int
    P: UniPoly

    @property
    def field(self) -> Field:
        return self.P.field

    def normal_form(self) -> AbelNormalForm:
        F = self.field
        return AbelNormalForm(self.n, (UniPoly.monomial(self.n, 1, F), self.P, UniPoly.constant(1, F)))

    def discriminant_poly(self) -> UniPoly:
        """P^2 - 4 x^n: the curve is (2a + P)^2 = P^2 - 4x^n."""
        return self.P * self.P - UniPoly.monomial(self.n, 4, self.field)


def genus1_admissible(h: HyperellipticAbel) -> bool:
    if 2 * h.P.degree > h.n:
        return False
    if h.n % 2 == 0:
        return h.P.coeff(h.n // 2) == 2
    return True


def smooth_at_A(h: HyperellipticAbel) -> bool:
    return bool(h.P.coeff(0))


def critical_x_poly(h: HyperellipticAbel) -> UniPoly:
    """n^2 x^{n-1} - n P P' + x P'^2, whose roots are x-coordinates of critical points."""
    h.field.check_degree(h.n)
    n, P, F = h.n, h.P, h.field
    dP = P.derivative()
    return UniPoly.monomial(n - 1, n * n, F) - P * dP * n + UniPoly.x(F) * dP * dP


@dataclass(frozen=True)
class CriticalValues:
    """Finite nonzero critical values k1, k2 as roots of a^2 + s1 a + s0."""

    s1: object
    s0: object

    @property
    def kappa(self):
        return 1 - self.s1 * self.s1 / (4 * self.s0)

    @property
    def is_belyi(self) -> bool:
        return self.s1 * self.s1 == 4 * self.s0


@dataclass(frozen=True)
class Degenerate:
    reason: str


def _alpha_coeffs_of_F(h: HyperellipticAbel) -> list:
    """x-coefficients of F as polynomials in a (ascending in x)."""
    F, n = h.field, h.n
    out = []
    for i in range(n + 1):
        c = UniPoly((0, h.P.coeff(i)), F)
        if i == 0:
            c = c + UniPoly.monomial(2, 1, F)
        if i == n:
            c = c + 1
        out.append(c)
    return out


def alpha_discriminant(h: HyperellipticAbel) -> UniPoly:
    """D(a) = Res_x(F, dF/dx) as a polynomial in a."""
    cs = _alpha_coeffs_of_F(h)
    dcs = [c * i for i, c in enumerate(cs)][1:]
    return resultant_over_polys(cs, dcs)


def node_polynomial(h: HyperellipticAbel) -> UniPoly:
    """Monic polynomial in a vanishing at the a-values of the affine nodes.

    Singular points have 2a + P(x) = 0 with x a repeated root of P^2 - 4x^n;
    Q collects those repeated roots and Res_x(Q, 2a + P) eliminates x.
    """
    F = h.field
    g = h.discriminant_poly()
    one = UniPoly.constant(1, F)
    if g.is_zero():
        raise ValueError("reducible curve: P^2 - 4x^n vanishes identically")
    Q = one
    for mult, z in squarefree_decomposition(g):
        Q = Q * z ** (mult // 2)
    if Q.degree <= 0:
        return one
    other = [UniPoly((h.P.coeff(i),), F) for i in range(max(h.P.degree, 0) + 1)]
    other[0] = other[0] + UniPoly((0, 2), F)
    # Res_x(Q, 2a + P(x)); Q has constant (in a) coefficients
    return resultant_over_polys([UniPoly((c,), F) for c in Q.coeffs], other).monic()


def critical_values(h: HyperellipticAbel) -> CriticalValues | Degenerate:
    """Extract the two extra critical values from the discriminant in a.

    D(a) = c * a^j * S(a)^2 * (a^2 + s1 a + s0), S from :func:`node_polynomial`.
    Anything else is reported as Degenerate rather than raised.
    """
    if not genus1_admissible(h):
        raise ValueError("form is not genus-1 admissible")
    if is_reducible(h):
        return Degenerate("reducible curve: P^2 - 4x^n is a square")
    if not smooth_at_A(h):
        raise ValueError("A is not a smooth point (P(0) = 0)")
    h.field.check_degree(h.n)
    D = alpha_discriminant(h)
    if D.is_zero():
        return Degenerate("discriminant vanishes identically")
    D = D.shift_down(D.valuation())
    try:
        S = node_polynomial(h)
    except ValueError as exc:
        return Degenerate(str(exc))
    if S.degree > 0:
        q, r = divmod(D, S * S)
        if r:
            return Degenerate("node factor does not divide the discriminant twice")
        D = q
    if D.degree != 2:
        return Degenerate(f"residual discriminant has degree {D.degree}, expected 2")
    D = D.monic()
    s1, s0 = D.coeff(1), D.coeff(0)
    if not s0:
        return Degenerate("critical value 0")
    return CriticalValues(s1, s0)


def kappa_value(h: HyperellipticAbel):
    """kappa at the member h, or a Degenerate outcome.

    Where the discriminant degenerates because the member is a rational curve
    of the R_n shape (P(0) != 0), the two critical points have merged into the
    node of a type-(i) cusp and kappa has its simple zero there.
    """
    cv = critical_values(h)
    if isinstance(cv, CriticalValues):
        return cv.kappa
    rt = rationality_test(h)
    if rt.rational and rt.k == 0 and not rt.reducible:
        return h.field.zero
    return cv


@dataclass(frozen=True)
class RationalityResult:
    """``rational`` iff P = sign * C^{2k-n} x^k R_{n-2k}(C^2 x) for some C."""

    rational: bool
    k: int | None = None
    c_squared: object = None
    sign: int = 1
    reducible: bool = False


def is_reducible(h: HyperellipticAbel) -> bool:
    """a^2 + aP + x^n splits iff P^2 - 4x^n is a square in K[x].

    With deg P <= n/2 a splitting (a + u x^i)(a + x^{n-i}/u) forces n even and
    P = lam x^{n/2}, so it is enough to test lam^2 - 4 for squareness.
    """
    n, P, F = h.n, h.P, h.field
    if n % 2 or P.is_zero():
        return False
    if P != UniPoly.monomial(n // 2, P.lc, F) or P.degree != n // 2:
        return False
    return F.is_square(P.lc * P.lc - 4)


def _match_pattern(P1: UniPoly, m: int):
    """Find C^2 with P1 = C^-m R_m(C^2 x); returns C^2 or None."""
    F = P1.field
    R = R_poly(m, F)
    if P1.degree != R.degree:
        return None
    if R.degree == 0:
        if m == 0:
            return F.one if P1 == R else None
        c0 = P1.coeff(0)
        return F.one / (c0 * c0)
    r0, r1 = R.coeff(0), R.coeff(1)
    c0 = P1.coeff(0) / r0  # this is C^-m
    csq = P1.coeff(1) * r0 / (P1.coeff(0) * r1)
    if not csq:
        return None
    if m % 2 == 0:
        if c0 != csq ** (-(m // 2)):
            return None
    elif c0 * c0 != csq ** (-m):
        return None
    for j in range(R.degree + 1):
        if P1.coeff(j) != c0 * R.coeff(j) * csq**j:
            return None
    return csq


def rationality_test(h: HyperellipticAbel) -> RationalityResult:
    h.field.check_degree(h.n)
    reducible = is_reducible(h)
    P, n = h.P, h.n
    if P.is_zero():
        return RationalityResult(False, reducible=reducible)
    k = P.valuation()
    m = n - 2 * k
    if m < 0:
        return RationalityResult(False, reducible=reducible)
    P1 = P.shift_down(k)
    for sign in (1, -1):
        csq = _match_pattern(P1 * sign, m)
        if csq is not None:
            return RationalityResult(True, k, csq, sign, reducible)
    return RationalityResult(False, k, reducible=reducible)


def rational_form(n: int, k: int, c_squared, field: Field = QQ, C=None) -> UniPoly:
    """C^{2k-n} x^k R_{n-2k}(C^2 x); C defaults to a square root only when n is even."""
    m = n - 2 * k
    csq = field(c_squared)
    if m % 2 == 0:
        scale = csq ** (-(m // 2))
    else:
        if C is None:
            raise ValueError("odd n - 2k needs C itself, not only C^2")
        scale = field(C) ** (-m)
    R = R_poly(m, field)
    inner = R.compose(UniPoly((0, csq), field))
    return UniPoly.monomial(k, 1, field) * inner * scale


def cusp_param_check(n: int, k: int, field: Field = QQ) -> bool:
    """With x = t(-1-t), a = t^{n-k}(-1-t)^k: a^2 + a x^k R_{n-2k}(x) + x^n == 0 in K[t]."""
    if not 0 <= 2 * k <= n:
        raise ValueError("need 0 <= k <= n/2")
    t = UniPoly.x(field)
    u = UniPoly((-1, -1), field)
    x = t * u
    alpha = t ** (n - k) * u**k
    expr = alpha * alpha + alpha * x**k * R_poly(n - 2 * k, field).compose(x) + x**n
    return expr.is_zero()


def alpha_at_critical_x(h: HyperellipticAbel, x0):
    """a0 = -n x0^{n-1} / P'(x0), the value of a at a critical point over x0."""
    dP = h.P.derivative()
    return -h.n * x0 ** (h.n - 1) / dP(x0)


__all__ = [
    "AbelNormalForm",
    "CriticalValues",
    "Degenerate",
    "HyperellipticAbel",
    "RationalityResult",
    "alpha_at_critical_x",
    "alpha_discriminant",
    "critical_values",
    "critical_x_poly",
    "cusp_param_check",
    "genus1_admissible",
    "is_reducible",
    "kappa_value",
    "node_polynomial",
    "rational_form",
    "rationality_test",
    "smooth_at_A",
    "validate_normal_form",
]
