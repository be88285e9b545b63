"""The explicit rational family of primitive genus-1 Abel pairs of degree 6.

Members are a^2 + P_t(x) a + x^6 = 0 with
P_t = -t(t-1)^2 - (3t+1)(t-1) x - 4x^2 + 2x^3; the base t-line is X_1(6).
kappa_6 is available in closed form and, independently, pointwise from the
discriminant of each member.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import counts
from .abelforms import (
    Degenerate,
    HyperellipticAbel,
    kappa_value,
    rationality_test,
)
from .arith import QQ, Field
from .pade import CubicCurve
from .upoly import (
    MultiplicityProfile,
    RatFunc,
    UniPoly,
    interpolate_ratfunc,
    roots_in_field,
    squarefree_decomposition,
)

N = 6
KAPPA6_CONSTANT = Fraction(-1, 2**14 * 3**12)


def _check_field(field: Field) -> None:
    field.check_degree(N)


@dataclass(frozen=True)
class Family6Member:
    t: object
    field: Field
    P: UniPoly

    @property
    def curve(self) -> HyperellipticAbel:
        return HyperellipticAbel(N, self.P)

    @property
    def cuspidal(self) -> bool:
        return not self.t or self.t == 1


def member(t, field: Field = QQ) -> Family6Member:
    """Build P_t; t in {0, 1} gives a cuspidal (still constructible) member."""
    _check_field(field)
    t = field(t)
    P = UniPoly((-t * (t - 1) ** 2, -(3 * t + 1) * (t - 1), -4, 2), field)
    return Family6Member(t, field, P)


def _kappa6_over_q() -> RatFunc:
    t = UniPoly.x(QQ)
    cubic = UniPoly((-25, 99, -27, 81))
    num = (9 * t - 1) * cubic**3 * (9 * t - 25) ** 2 * KAPPA6_CONSTANT
    den = t**5 * (t - 1) ** 4
    return RatFunc(num, den)


def kappa6_closed(field: Field = QQ) -> RatFunc:
    """kappa_6 as a rational function of t; in char p, the reduction of the char-0 one."""
    _check_field(field)
    k = _kappa6_over_q()
    if field.characteristic:
        return k.reduce(field.characteristic)
    return k


def kappa6_via_resultant(t, field: Field = QQ):
    """kappa_6 at t from the critical values of the member (or Degenerate)."""
    m = member(t, field)
    if m.cuspidal:
        raise ValueError("t in {0, 1} is a cusp with P(0) = 0")
    return kappa_value(m.curve)


def kappa6_interpolated(samples: int = 25, start: int = 2) -> RatFunc:
    """Rebuild kappa_6 over Q from resultant samples at t = start, start+1, ...

    Degrees 12/9 are the bounds from the cusp data; at least 23 samples are
    needed, the surplus is used to check the interpolant.
    """
    pts = []
    t = start
    while len(pts) < samples:
        v = kappa6_via_resultant(t)
        if not isinstance(v, Degenerate):
            pts.append((t, v))
        t += 1
    return interpolate_ratfunc(pts, 12, 9, QQ)


@dataclass(frozen=True)
class Kappa6Report:
    characteristic: int
    kappa: RatFunc
    zero_profile: MultiplicityProfile
    cusp_zeros: tuple
    cusp_behavior: dict
    m_hex_primitive: int
    m_box_primitive: int
    unexplained: tuple = field(default=())

    @property
    def census(self) -> tuple:
        return (self.m_hex_primitive, self.m_box_primitive)

    def to_dict(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "field": "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}",
            "kappa": self.kappa.to_dict(),
            "kappa_text": self.kappa.pretty("t"),
            "zero_profile": self.zero_profile.as_list(),
            "cusp_zeros": [str(z) for z in self.cusp_zeros],
            "cusp_behavior": self.cusp_behavior,
            "m_hex_primitive": self.m_hex_primitive,
            "m_box_primitive": self.m_box_primitive,
            "unexplained": list(self.unexplained),
        }


def _behavior(kappa: RatFunc, t) -> str:
    order = kappa.order_at(t)
    if order < 0:
        return f"pole of order {-order}"
    return f"value {kappa(t)}" if order == 0 else f"zero of order {order}"


def cusp_behavior(kappa: RatFunc) -> dict:
    F = kappa.field
    out = {str(t): _behavior(kappa, F(t)) for t in (0, 1)}
    inf = kappa.order_at_infinity()
    if inf < 0:
        out["infinity"] = f"pole of order {-inf}"
    elif inf > 0:
        out["infinity"] = f"zero of order {inf}"
    else:
        out["infinity"] = f"value {kappa.num.lc / kappa.den.lc}"
    return out


def kappa6_census(field: Field = QQ) -> Kappa6Report:
    """Primitive Abel-Belyi census of degree 6 read off the zeros of kappa_6.

    Simple zeros are matched against type-(i) cusps by testing whether the
    fibre over them is a rational curve of R_6 shape; what remains is split
    by multiplicity (3: hex, 2: box), counting geometric points.
    """
    kappa = kappa6_closed(field)
    parts = squarefree_decomposition(kappa.num)
    F = kappa.field
    cusp_zeros = []
    remaining = []
    for mult, z in parts:
        if mult == 1:
            for r in roots_in_field(z):
                if r == 0 or r == 1:
                    continue
                rt = rationality_test(member(r, F).curve)
                if rt.rational and rt.k == 0:
                    cusp_zeros.append(r)
                    z = z.exact_div(UniPoly((-r, 1), F))
        if z.degree > 0:
            remaining.append((mult, z))
    profile = MultiplicityProfile(tuple(sorted(((m, z.degree) for m, z in remaining), reverse=True)))
    hexes = profile.degree_with_multiplicity(3)
    boxes = profile.degree_with_multiplicity(2)
    unexplained = tuple(f"multiplicity {m}: degree {d}" for m, d in profile.entries if m not in (2, 3))
    return Kappa6Report(
        field.characteristic,
        kappa,
        profile,
        tuple(cusp_zeros),
        cusp_behavior(kappa),
        hexes,
        boxes,
        unexplained,
    )


def census_totals(report: Kappa6Report) -> tuple:
    """(m_hex, m_box) of degree 6: primitive census plus the imprimitive layers."""
    p = report.characteristic
    return (
        report.m_hex_primitive + counts.imprimitive_hex_layer(N, p),
        report.m_box_primitive + counts.imprimitive_box_layer(N, p),
    )


def to_cubic_chart(m: Family6Member) -> CubicCurve | None:
    """The member as y^2 = 1 + a x + b x^2 + c x^3 with A = (0, +-1), B at infinity.

    (2a + P)^2 = P^2 - 4x^6 = f Q^2 with Q linear for a smooth genus-1 member;
    returns None when that shape fails (cusps, extra nodes).
    """
    if m.cuspidal:
        return None
    g = m.curve.discriminant_poly()
    sq = UniPoly.constant(1, m.field)
    f = UniPoly.constant(1, m.field)
    for mult, z in squarefree_decomposition(g):
        sq = sq * z ** (mult // 2)
        if mult % 2:
            f = f * z
    f = f * g.lc
    if sq.degree != 1 or f.degree != 3 or not f.coeff(0):
        return None
    f = f * (m.field.one / f.coeff(0))
    try:
        return CubicCurve(f.coeff(1), f.coeff(2), f.coeff(3), m.field)
    except ValueError:
        return None
