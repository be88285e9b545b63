"""Dense univariate polynomials and rational functions over an exact field.

Coefficients are stored ascending (``coeffs[i]`` multiplies ``x**i``) with no
trailing zeros, so the zero polynomial is the empty tuple and has degree -1.

Resultant convention used throughout::

    Res(f, g) = lc(f)**deg(g) * prod(g(a) for a in roots of f)

which is the determinant of the Sylvester matrix with the ``deg g`` shifted
rows of ``f`` on top.  So ``Res(x - a, x - b) = a - b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .arith import QQ, Field, PrimeFieldElem, project_mod_p


class UniPoly:
    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Sequence = (), field: Field = QQ):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field

    @classmethod
    def _raw(cls, coeffs, field):
        # coeffs already field elements; only trailing zeros stripped
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(cs)
        p.field = field
        return p

    @classmethod
    def x(cls, field: Field = QQ) -> "UniPoly":
        return cls((0, 1), field)

    @classmethod
    def constant(cls, c, field: Field = QQ) -> "UniPoly":
        return cls((c,), field)

    @classmethod
    def monomial(cls, k: int, c=1, field: Field = QQ) -> "UniPoly":
        return cls([0] * k + [c], field)

    @classmethod
    def from_roots(cls, roots, field: Field = QQ) -> "UniPoly":
        out = cls.constant(1, field)
        for r in roots:
            out = out * cls((-field(r), 1), field)
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _lift(self, other):
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction, PrimeFieldElem)):
            return UniPoly._raw((self.field(other),), self.field)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly._raw(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PrimeFieldElem)):
            c = self.field(other)
            return UniPoly._raw([a * c for a in self.coeffs], self.field)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return UniPoly._raw((), self.field)
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return UniPoly._raw(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.constant(1, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        inv = self.field.one / o.lc
        quot = [self.field.zero] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] * inv
            quot[k] = c
            if c:
                for j, oc in enumerate(o.coeffs):
                    rem[k + j] = rem[k + j] - c * oc
        return UniPoly._raw(quot, self.field), UniPoly._raw(rem[:dq] if dq > 0 else (), self.field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, PrimeFieldElem)):
            c = self.field.one / self.field(other)
            return self * c
        return RatFunc(self, self._lift(other))

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, PrimeFieldElem)):
            return self.coeffs == UniPoly((other,), self.field).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field))

    def __call__(self, value):
        """Horner evaluation; works for scalars, UniPoly (composition) and RatFunc."""
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        if not self.coeffs:
            return self
        return self(inner) + UniPoly._raw((), self.field)

    def derivative(self) -> "UniPoly":
        return UniPoly._raw([c * i for i, c in enumerate(self.coeffs)][1:], self.field)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self * (self.field.one / self.lc)

    def valuation(self) -> int:
        """Largest k with x**k dividing self (raises for zero)."""
        if not self.coeffs:
            raise ValueError("valuation of the zero polynomial")
        k = 0
        while not self.coeffs[k]:
            k += 1
        return k

    def shift_down(self, k: int) -> "UniPoly":
        """self / x**k, assuming exactness."""
        return UniPoly._raw(self.coeffs[k:], self.field)

    def truncate(self, n: int) -> "UniPoly":
        """self mod x**n."""
        return UniPoly._raw(self.coeffs[:n], self.field)

    def reduce(self, p: int) -> "UniPoly":
        """Coefficient-wise image in F_p of a polynomial over Q."""
        if self.field.characteristic != 0:
            raise ValueError("reduce() expects a polynomial over Q")
        from .arith import GF

        F = GF(p)
        return UniPoly._raw([project_mod_p(c, p) for c in self.coeffs], F)

    def to_dict(self) -> dict:
        return {f"degree {i}": str(c) for i, c in enumerate(self.coeffs) if c}

    @classmethod
    def from_dict(cls, d: dict, field: Field = QQ) -> "UniPoly":
        items = {int(k.split()[1]): v for k, v in d.items()}
        top = max(items, default=-1)
        cs = [0] * (top + 1)
        for i, v in items.items():
            cs[i] = Fraction(v) if field.characteristic == 0 else int(v)
        return cls(cs, field)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]}, {self.field.tag})"

    def __str__(self):
        return self.pretty()

    def pretty(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = str(c)
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and cs == "1":
                body = mono
            elif mono and cs == "-1":
                body = "-" + mono
            elif mono:
                body = f"({cs})*{mono}" if "/" in cs or cs.startswith("-") else f"{cs}*{mono}"
            else:
                body = f"({cs})" if "/" in cs and terms else cs
            terms.append(body)
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials")
    a, b = f, g
    while b:
        a, b = b, a % b
    return a.monic()


def bareiss_det(matrix: list, div: Callable, zero, one):
    """Fraction-free determinant over an integral domain.

    ``div(a, b)`` must perform the exact division a / b in the ring.
    """
    n = len(matrix)
    if n == 0:
        return one
    M = [list(row) for row in matrix]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, n):
                row_i[j] = div(row_i[j] * pivot - mik * row_k[j], prev)
            row_i[k] = zero
        prev = pivot
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def sylvester_matrix(f_coeffs: Sequence, g_coeffs: Sequence, zero) -> list:
    """Sylvester matrix from ascending coefficient lists (leading entries nonzero)."""
    m = len(f_coeffs) - 1
    n = len(g_coeffs) - 1
    size = m + n
    rows = []
    fd = list(reversed(f_coeffs))
    gd = list(reversed(g_coeffs))
    for i in range(n):
        rows.append([zero] * i + fd + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gd + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: UniPoly, g: UniPoly):
    """Res(f, g) as a field scalar (see module docstring for the convention)."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    F = f.field
    S = sylvester_matrix(f.coeffs, g.coeffs, F.zero)
    return bareiss_det(S, lambda a, b: a / b, F.zero, F.one)


def resultant_over_polys(f_coeffs: Sequence[UniPoly], g_coeffs: Sequence[UniPoly]) -> UniPoly:
    """Resultant in x of two polynomials whose x-coefficients lie in K[a].

    Coefficient lists are ascending in x; entries are UniPoly in the second
    variable.  The leading entries must be nonzero polynomials.
    """
    field = next(c.field for c in list(f_coeffs) + list(g_coeffs))
    zero = UniPoly._raw((), field)
    one = UniPoly.constant(1, field)
    S = sylvester_matrix(list(f_coeffs), list(g_coeffs), zero)
    return bareiss_det(S, lambda a, b: a.exact_div(b), zero, one)


@dataclass(frozen=True)
class MultiplicityProfile:
    """(multiplicity, degree of squarefree part) entries, multiplicity descending."""

    entries: tuple

    @property
    def total_degree(self) -> int:
        return sum(m * d for m, d in self.entries)

    def degree_with_multiplicity(self, m: int) -> int:
        return next((d for mm, d in self.entries if mm == m), 0)

    def as_list(self) -> list:
        return [list(e) for e in self.entries]


def squarefree_decomposition(f: UniPoly) -> list:
    """Yun/Musser decomposition: [(multiplicity, monic squarefree factor), ...].

    Over F_p the result is only trusted when every multiplicity is < p; any
    other input raises ``ValueError("inseparable profile ...")``.
    """
    if f.is_zero():
        raise ValueError("squarefree decomposition of zero")
    out = []
    if f.degree == 0:
        return out
    p = f.field.characteristic
    c = poly_gcd(f, f.derivative()) if f.derivative() else f.monic()
    w = f.exact_div(c).monic()
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = w.exact_div(y)
        if z.degree > 0:
            out.append((i, z.monic()))
        w = y
        c = c.exact_div(y)
        i += 1
    if c.degree > 0 or (p and any(m >= p for m, _ in out)):
        raise ValueError(f"inseparable profile: a root multiplicity reaches the characteristic {p}")
    return out


def multiplicity_profile(f: UniPoly) -> MultiplicityProfile:
    parts = squarefree_decomposition(f)
    return MultiplicityProfile(tuple(sorted(((m, z.degree) for m, z in parts), reverse=True)))


class RatFunc:
    """num/den in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly | None = None):
        if den is None:
            den = UniPoly.constant(1, num.field)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.field != den.field:
            raise ValueError("field mismatch")
        if num.is_zero():
            self.num, self.den = num, UniPoly.constant(1, num.field)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        self.num = num * (num.field.one / lc)
        self.den = den.monic()

    @property
    def field(self) -> Field:
        return self.num.field

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, UniPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction, PrimeFieldElem)):
            return RatFunc(UniPoly.constant(other, self.field))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return RatFunc(self.den, self.num) ** (-e)
        return RatFunc(self.num**e, self.den**e)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, value):
        d = self.den(value)
        if not d:
            raise ZeroDivisionError(f"pole at {value}")
        return self.num(value) / d

    def order_at(self, point) -> int:
        """Order of vanishing at a finite point (negative for poles)."""
        lin = UniPoly((-self.field(point), 1), self.field)

        def ordp(poly):
            k = 0
            while poly and not poly % lin:
                poly = poly.exact_div(lin)
                k += 1
            return k

        return ordp(self.num) - ordp(self.den)

    def order_at_infinity(self) -> int:
        return self.den.degree - self.num.degree

    def reduce(self, p: int) -> "RatFunc":
        return RatFunc(self.num.reduce(p), self.den.reduce(p))

    def to_dict(self) -> dict:
        return {"field": self.field.tag, "num": self.num.to_dict(), "den": self.den.to_dict()}

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def pretty(self, var: str = "x") -> str:
        if self.den.degree == 0:
            return self.num.pretty(var)
        return f"({self.num.pretty(var)}) / ({self.den.pretty(var)})"

    __str__ = pretty

    def factored(self, var: str = "x") -> str:
        """Leading constant times squarefree factors with multiplicities."""
        if self.num.is_zero():
            return "0"

        def parts(f: UniPoly) -> list:
            out = []
            for mult, z in squarefree_decomposition(f):
                body = z.pretty(var)
                if z.degree > 1 or len(z.to_dict()) > 1:
                    body = f"({body})"
                out.append(body if mult == 1 else f"{body}^{mult}")
            return out

        lc = self.num.lc
        top = parts(self.num) if self.num.degree > 0 else []
        bottom = parts(self.den) if self.den.degree > 0 else []
        head = "*".join(top)
        if str(lc) == "-1" and head:
            head = "-" + head
        elif str(lc) != "1" or not head:
            head = f"{lc}*{head}" if head else str(lc)
        if not bottom:
            return head
        den = bottom[0] if len(bottom) == 1 else f"({'*'.join(bottom)})"
        return f"{head} / {den}"


def ratfunc_make(num: UniPoly, den: UniPoly) -> RatFunc:
    return RatFunc(num, den)


def solve_linear(A: list, b: list, field: Field) -> list:
    """Solve the square system A x = b exactly; raises on singular A."""
    n = len(A)
    M = [[field(v) for v in row] + [field(bi)] for row, bi in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            raise ArithmeticError("singular linear system")
        M[col], M[piv] = M[piv], M[col]
        inv = field.one / M[col][col]
        M[col] = [v * inv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [vr - f * vc for vr, vc in zip(M[r], M[col])]
    return [M[i][n] for i in range(n)]


def roots_in_field(f: UniPoly) -> list:
    """Distinct roots of f lying in its ground field.

    Over F_p by exhaustion; over Q by the rational root test on the
    integer-scaled polynomial (fine for the small coefficients used here).
    """
    from math import lcm

    if f.is_zero():
        raise ValueError("roots of zero")
    F = f.field
    if F.characteristic:
        return [e for e in F.elements() if not f(e)]
    roots = []
    g = f
    if g.degree > 0 and not g.coeff(0):
        roots.append(Fraction(0))
        g = g.shift_down(g.valuation())
    if g.degree <= 0:
        return roots
    scale = lcm(*(c.denominator for c in g.coeffs))
    ints = [int(c * scale) for c in g.coeffs]
    a0, an = abs(ints[0]), abs(ints[-1])
    from .numtheory import divisors

    cands = {Fraction(s * u, v) for u in divisors(a0) for v in divisors(an) for s in (1, -1)}
    roots.extend(sorted(r for r in cands if not g(r)))
    return roots


def interpolate_ratfunc(points: Sequence, num_deg: int, den_deg: int, field: Field = QQ) -> RatFunc:
    """Rational function N/D, deg N <= num_deg, D monic of degree den_deg, through points.

    Uses the first num_deg + den_deg + 1 samples to solve and the rest to
    verify; raises ArithmeticError if the remaining samples disagree.
    """
    need = num_deg + den_deg + 1
    if len(points) < need:
        raise ValueError(f"need at least {need} samples, got {len(points)}")
    A, rhs = [], []
    for t, v in points[:need]:
        t, v = field(t), field(v)
        row = [t**i for i in range(num_deg + 1)] + [-v * t**j for j in range(den_deg)]
        A.append(row)
        rhs.append(v * t**den_deg)
    sol = solve_linear(A, rhs, field)
    N = UniPoly(sol[: num_deg + 1], field)
    D = UniPoly(list(sol[num_deg + 1 :]) + [1], field)
    r = RatFunc(N, D)
    for t, v in points[need:]:
        if r(field(t)) != field(v):
            raise ArithmeticError(f"interpolant disagrees with sample at t={t}")
    return r
