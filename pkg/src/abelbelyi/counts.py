"""Closed-form counts of toric Abel-Belyi pairs over C and over F_p-bar.

Also: the cusp catalog of kappa_n on X_1(n), deg kappa_n, the genus of
X_1(n), and the characteristic-p correction sums.  Characteristic is passed
as a plain int (0 or a prime > 3).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import is_prime
from .numtheory import dedekind_psi, divisors, euler_phi, moebius, ordp, sigma0

CUSP_TYPES = ("i", "ii", "iii", "iv")


def check_char(char: int, n: int | None = None) -> None:
    if char in (2, 3):
        raise ValueError("characteristic 2,3 excluded")
    if char < 0 or (char and not is_prime(char)):
        raise ValueError(f"characteristic must be 0 or a prime > 3, got {char}")
    if char and n is not None and n % char == 0:
        raise ValueError(f"characteristic {char} divides n={n}")


@dataclass(frozen=True)
class CuspPoint:
    """A family of cusps of X_1(n) sharing (type, k).

    ``count`` is the number of such cusps (a weight 1/2 appears only for the
    irregular type-iii cusp at n = 4); ``kind`` says what kappa_n does there.
    """

    cusp_type: str
    k: int
    count: Fraction
    kind: str  # "zero" | "pole" | "value-one"
    multiplicity: int
    n: int

    @property
    def representative(self) -> str:
        n, k = self.n, min(self.k, self.n - self.k)
        if self.cusp_type == "iii":
            return f"a^2 + 2*a*x^{n // 2} + x^{n}"
        if k == 0:
            return f"a^2 + a*R_{n}(x) + x^{n}"
        return f"a^2 + a*x^{k}*R_{n - 2 * k}(x) + x^{n}"

    def to_dict(self) -> dict:
        return {
            "type": self.cusp_type,
            "k": self.k,
            "count": str(self.count),
            "kind": self.kind,
            "multiplicity": self.multiplicity,
            "representative": self.representative,
        }


def _exact_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return int(value)


def cusp_catalog(n: int, char: int = 0) -> list:
    """All cusps of X_1(n) by type, with the behaviour of kappa_n there."""
    if n < 3:
        raise ValueError("cusp catalog needs n >= 3")
    check_char(char, n)
    p = char
    out = [CuspPoint("i", 0, Fraction(euler_phi(n), 2), "zero", 1, n)]
    for k in range(1, (n + 1) // 2):
        if 2 * k == n:
            continue
        g = gcd(n, k)
        if p and (k % p == 0 or (n - k) % p == 0):
            kk = k if k % p == 0 else n - k
            if kk % p == 0 and (n - kk) % p == 0:
                raise ArithmeticError("k and n-k both divisible by p (impossible when p does not divide n)")
            mult = Fraction(kk * (n - kk), p ** ordp(kk, p) * g)
            out.append(
                CuspPoint(
                    "iv",
                    kk,
                    Fraction(euler_phi(g)),
                    "value-one" if kk % 2 else "zero",
                    _exact_int(mult, "type-iv multiplicity"),
                    n,
                )
            )
        else:
            out.append(CuspPoint("ii", k, Fraction(euler_phi(g)), "pole", k * (n - k) // g, n))
    if n % 2 == 0:
        out.append(CuspPoint("iii", n // 2, Fraction(euler_phi(n // 2), 2), "pole", n // 2, n))
    for c in out:
        if c.count <= 0:
            raise ArithmeticError(f"nonpositive cusp count in {c}")
    return out


def _deg_kappa_formula(n: int) -> Fraction:
    return Fraction(n * euler_phi(n) * dedekind_psi(n), 12)


def deg_kappa(n: int) -> Fraction:
    """deg kappa_n = n phi(n) psi(n) / 12 (char 0)."""
    if n < 4:
        raise ValueError("deg kappa_n is stated for n >= 4")
    return _deg_kappa_formula(n)


def deg_kappa_from_catalog(n: int, char: int = 0) -> Fraction:
    """Sum of pole multiplicities times counts over the cusp catalog."""
    return sum(
        (c.count * c.multiplicity for c in cusp_catalog(n, char) if c.kind == "pole"),
        Fraction(0),
    )


def genus_X1(n: int) -> int:
    """phi(n) psi(n)/24 - phi(n) sigma0(n)/4 + 1, taken literally.

    The expression agrees with the true genus of X_1(n) only for squarefree n
    (it uses phi(n) sigma0(n) in place of sum_{d|n} phi(d) phi(n/d)); a
    non-integer value raises.
    """
    if n < 5:
        raise ValueError("genus formula needs n >= 5")
    phi = euler_phi(n)
    g = Fraction(phi * dedekind_psi(n), 24) - Fraction(phi * sigma0(n), 4) + 1
    return _exact_int(g, f"genus formula at n={n}")


def genus_X1_standard(n: int) -> int:
    """Genus of X_1(n), n >= 5, from index and cusp count of Gamma_1(n)."""
    if n < 5:
        raise ValueError("genus formula needs n >= 5")
    cusps = Fraction(sum(euler_phi(d) * euler_phi(n // d) for d in divisors(n)), 2)
    g = 1 + Fraction(euler_phi(n) * dedekind_psi(n), 24) - cusps / 2
    return _exact_int(g, f"standard genus at n={n}")


def _m_hex0(n: int) -> Fraction:
    return Fraction((n - 1) * (n - 2), 6) if n >= 3 else Fraction(0)


def _m_box0(n: int) -> Fraction:
    return Fraction((n - 1) * (n - 2) * (n - 3), 24) if n >= 4 else Fraction(0)


def hex_charp_difference(n: int, p: int) -> Fraction:
    """m_hex(n, C) - m_hex(n, F_p-bar)."""
    return Fraction(sum(n - k * p for k in range(1, n // p + 1) if k * p < n))


def box_charp_difference(n: int, p: int) -> Fraction:
    """m_box(n, C) - m_box(n, F_p-bar)."""
    s = sum((Fraction(k * p - 3, 2) * (n - k * p) for k in range(1, n // p + 1)), Fraction(0))
    s += sum((Fraction(k, p ** ordp(k, p)) * (n - 2 * k * p) for k in range(1, n // (2 * p) + 1)), Fraction(0))
    return s


def m_hex(n: int, char: int = 0) -> Fraction:
    """Weighted count of hex pairs of degree n; small n handled for divisor sums."""
    if char and n > 3:
        return _m_hex0(n) - hex_charp_difference(n, char)
    return _m_hex0(n)


def m_box(n: int, char: int = 0) -> Fraction:
    if char and n > 3:
        return _m_box0(n) - box_charp_difference(n, char)
    return _m_box0(n)


def charp_degree_drop(n: int, p: int) -> Fraction:
    """deg kappa_n(C) - deg kappa_n(F_p-bar)."""
    check_char(p, n)
    if p == 0:
        raise ValueError("p must be a prime > 3")
    return sum(
        (Fraction(euler_phi(gcd(k, n)), gcd(k, n)) * k * p * (n - k * p) for k in range(1, n // p + 1)),
        Fraction(0),
    )


def charp_zero_drop(n: int, p: int) -> Fraction:
    """The value of 2 dm_box + 3 dm_hex predicted from the zeros of kappa_n."""
    check_char(p, n)
    if p == 0:
        raise ValueError("p must be a prime > 3")
    s = sum((Fraction(k * p * (n - k * p)) for k in range(1, n // p + 1)), Fraction(0))
    s += sum((Fraction(2 * k, p ** ordp(k, p)) * (n - 2 * k * p) for k in range(1, n // (2 * p) + 1)), Fraction(0))
    return s


def deg_kappa_charp(n: int, char: int) -> Fraction:
    d = _deg_kappa_formula(n)
    if char:
        d -= sum(
            (Fraction(euler_phi(gcd(k, n)), gcd(k, n)) * k * char * (n - k * char) for k in range(1, n // char + 1)),
            Fraction(0),
        )
    return d


def _value_one_weight(d: int, char: int) -> Fraction:
    """Total multiplicity of kappa_d = 1 at type-iv cusps (char p only)."""
    if not char or d < 3:
        return Fraction(0)
    return sum(
        (c.count * c.multiplicity for c in cusp_catalog(d, char) if c.kind == "value-one"),
        Fraction(0),
    )


def lift_box_contribution(d: int, m: int, char: int = 0) -> Fraction:
    """Box pairs of degree d*m on the X_1(d) component that are not primitive.

    kappa_{d,dm} = (1 - T_m(1 - 2 kappa_d))/2 has double zeros over the
    (m-1)//2 interior roots of T_m = 1, and, for even m, over kappa_d = 1;
    each generic fibre carries deg kappa_d points.
    """
    if m == 1:
        return Fraction(0)
    dk = deg_kappa_charp(d, char)
    if m % 2:
        return Fraction(m - 1, 2) * dk
    return Fraction(m - 2, 2) * dk + (dk - _value_one_weight(d, char)) / 2


def imprimitive_hex_layer(n: int, char: int = 0) -> Fraction:
    return sum((m_hex_primitive(d, char) for d in divisors(n) if 1 < d < n), Fraction(0))


def imprimitive_box_layer(n: int, char: int = 0) -> Fraction:
    total = Fraction(0)
    for d in divisors(n):
        if d == 1:
            continue
        if d < n:
            total += m_box_primitive(d, char)
        total += lift_box_contribution(d, n // d, char)
    return total


@lru_cache(maxsize=None)
def m_hex_primitive(n: int, char: int = 0) -> Fraction:
    """Moebius inversion of m_hex over the divisors of n."""
    return sum((moebius(n // d) * m_hex(d, char) for d in divisors(n)), Fraction(0))


@lru_cache(maxsize=None)
def m_box_primitive(n: int, char: int = 0) -> Fraction:
    if n < 4:
        return Fraction(0)
    return m_box(n, char) - imprimitive_box_layer(n, char)


def m_hex_primitive_closed(n: int) -> Fraction:
    phi, psi = euler_phi(n), dedekind_psi(n)
    return Fraction(phi * psi, 6) - Fraction(phi, 2)


def m_box_primitive_closed(n: int) -> Fraction:
    phi, psi = euler_phi(n), dedekind_psi(n)
    return Fraction((n - 6) * phi * psi, 24) + Fraction(phi, 2)


@dataclass(frozen=True)
class CountReport:
    n: int
    characteristic: int
    m_hex: Fraction
    m_box: Fraction
    m_hex_primitive: Fraction
    m_box_primitive: Fraction
    deg_kappa: Fraction
    genus: int
    notes: tuple = field(default=())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "characteristic": self.characteristic,
            "field": "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}",
            "m_hex": str(self.m_hex),
            "m_box": str(self.m_box),
            "m_hex_primitive": str(self.m_hex_primitive),
            "m_box_primitive": str(self.m_box_primitive),
            "deg_kappa": str(self.deg_kappa),
            "genus": self.genus,
            "notes": list(self.notes),
        }


def count_closed(n: int, char: int = 0) -> CountReport:
    if n <= 3:
        raise ValueError("closed-form counts need n > 3")
    check_char(char, n)
    mh, mb = m_hex(n, char), m_box(n, char)
    mhp, mbp = m_hex_primitive(n, char), m_box_primitive(n, char)
    notes = []
    if char == 0:
        if mhp != m_hex_primitive_closed(n) or mbp != m_box_primitive_closed(n):
            raise ArithmeticError(f"Moebius inversion disagrees with the closed forms at n={n}")
    else:
        if char > n:
            notes.append("p > n: counts coincide with characteristic 0")
        if mbp.denominator != 1:
            notes.append("primitive box count is not an integer (inherited from the char-p box formula)")
    for name, v in (("m_hex", mh), ("m_box", mb), ("m_hex_primitive", mhp), ("m_box_primitive", mbp)):
        if v < 0:
            raise ArithmeticError(f"negative count {name}={v} at n={n}, char={char}")
    genus = genus_X1_standard(n) if n >= 5 else 0
    return CountReport(n, char, mh, mb, mhp, mbp, deg_kappa_charp(n, char), genus, tuple(notes))
