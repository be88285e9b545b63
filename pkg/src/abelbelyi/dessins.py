"""Toric Abel-Belyi dessins as cyclic compositions, and weighted counts.

A dessin with valencies (n | n | 3,1,...,1) is a cyclic class <a,b,c> of
positive integers summing to n (shape "hex"); one with (n | n | 2,2,1,...,1)
is a cyclic class <a,b,c,d> (shape "box").  Each class is stored by its
lexicographically least rotation and counted with weight 1/|Aut|, where Aut
is the rotation stabilizer of the tuple.

Why primitivity only needs m | n: an m-th power hex has m | a, b, c hence
m | n; an m-th power box has a = -b = c = -d mod m, so n = a+b+c+d = 0 mod m.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd

from .numtheory import divisors

SHAPES = {"hex": 3, "box": 4}


@dataclass(frozen=True, order=True)
class DessinClass:
    parts: tuple

    def __post_init__(self):
        if len(self.parts) not in (3, 4) or any(p < 1 for p in self.parts):
            raise ValueError(f"invalid dessin parts {self.parts}")
        if self.parts != min(_rotations(self.parts)):
            raise ValueError(f"{self.parts} is not the least rotation")

    @classmethod
    def of(cls, parts) -> "DessinClass":
        """Canonicalize any rotation."""
        return cls(min(_rotations(tuple(parts))))

    @property
    def shape(self) -> str:
        return "hex" if len(self.parts) == 3 else "box"

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self):
        sym = "H" if self.shape == "hex" else "B"
        return f"{sym}<{','.join(map(str, self.parts))}>"


def _rotations(t: tuple) -> list:
    return [t[i:] + t[:i] for i in range(len(t))]


def _compositions(n: int, k: int):
    for cuts in itertools.combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(k))


def _enumerate(n: int, k: int) -> list:
    out = []
    for c in _compositions(n, k):
        # keep c iff it is its own least rotation
        if all(c <= c[i:] + c[:i] for i in range(1, k)):
            out.append(DessinClass(c))
    return out


def enumerate_hex(n: int) -> list:
    if n < 3:
        raise ValueError("hex dessins need n >= 3")
    return _enumerate(n, 3)


def enumerate_box(n: int) -> list:
    if n < 4:
        raise ValueError("box dessins need n >= 4")
    return _enumerate(n, 4)


def enumerate_shape(n: int, shape: str) -> list:
    if shape not in SHAPES:
        raise ValueError(f"unknown shape {shape!r}")
    return enumerate_hex(n) if shape == "hex" else enumerate_box(n)


def aut_order(cls: DessinClass) -> int:
    t = cls.parts
    return sum(1 for r in _rotations(t) if r == t)


def is_power(cls: DessinClass, m: int) -> bool:
    """Whether the Belyi function of this dessin is an m-th power."""
    if m < 2:
        raise ValueError("m must be >= 2")
    if cls.shape == "hex":
        a, b, c = cls.parts
        return gcd(a, b, c) % m == 0
    a, b, c, d = cls.parts
    return (a + b) % m == 0 and (a - c) % m == 0 and (a + d) % m == 0


def power_orders(cls: DessinClass) -> list:
    return [m for m in divisors(cls.n) if m > 1 and is_power(cls, m)]


def is_primitive(cls: DessinClass) -> bool:
    return not power_orders(cls)


def _weighted(classes) -> Fraction:
    return sum((Fraction(1, aut_order(c)) for c in classes), Fraction(0))


def _primitive_classes(classes) -> list:
    out = []
    for c in classes:
        if is_primitive(c):
            if c.n > 3 and aut_order(c) != 1:
                raise AssertionError(f"primitive class {c} has nontrivial automorphisms")
            out.append(c)
    return out


def count_hex(n: int) -> Fraction:
    return _weighted(enumerate_hex(n))


def count_box(n: int) -> Fraction:
    return _weighted(enumerate_box(n))


def count_hex_primitive(n: int) -> Fraction:
    return _weighted(_primitive_classes(enumerate_hex(n)))


def count_box_primitive(n: int) -> Fraction:
    return _weighted(_primitive_classes(enumerate_box(n)))


def count_shape(n: int, shape: str, primitive: bool = False) -> Fraction:
    classes = enumerate_shape(n, shape)
    if primitive:
        classes = _primitive_classes(classes)
    return _weighted(classes)


def total_abel_belyi(n: int) -> Fraction:
    """Weighted number of Abel-Belyi pairs of degree n over all genera: (n-1)!/n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(factorial(n - 1), n)


ORACLE_MAX_N = 8


def total_abel_belyi_oracle(n: int) -> Fraction:
    """Orbit census of bijections between two cyclically ordered n-sets.

    The group Z_n x Z_n rotates the semi-edges at the zero and at the pole
    independently: (a, b) . s = r^a o s o r^-b.  Each orbit contributes
    1/|stabilizer|, the stabilizer being counted element by element.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > ORACLE_MAX_N:
        raise ValueError(f"oracle refuses n > {ORACLE_MAX_N} (factorial blowup)")
    seen = set()
    total = Fraction(0)
    group = [(a, b) for a in range(n) for b in range(n)]
    for s in itertools.permutations(range(n)):
        if s in seen:
            continue
        orbit = set()
        stab = 0
        for a, b in group:
            img = tuple((s[(i - b) % n] + a) % n for i in range(n))
            orbit.add(img)
            if img == s:
                stab += 1
        if stab * len(orbit) != n * n:
            raise AssertionError("orbit-stabilizer violated")
        seen |= orbit
        total += Fraction(1, stab)
    return total


def compositions_count(n: int, k: int) -> int:
    return comb(n - 1, k - 1)
