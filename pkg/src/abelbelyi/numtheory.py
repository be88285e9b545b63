"""Arithmetic functions by trial division (desk-scale n)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def _check(n: int) -> None:
    if n < 1:
        raise ValueError(f"arithmetic function needs n >= 1, got {n}")


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple:
    """Prime factorization as ((p, e), ...) with p ascending."""
    _check(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    r = n
    for p, _ in factorize(n):
        r = r // p * (p - 1)
    return r


def dedekind_psi(n: int) -> int:
    r = n
    for p, _ in factorize(n):
        r = r // p * (p + 1)
    return r


def sigma0(n: int) -> int:
    r = 1
    for _, e in factorize(n):
        r *= e + 1
    return r


def moebius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


@lru_cache(maxsize=4096)
def _divisors(n: int) -> tuple:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> list:
    return list(_divisors(n))


def ordp(n: int, p: int) -> int:
    """Exponent of the prime p in n."""
    _check(n)
    if p < 2:
        raise ValueError("ordp needs a prime")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


@dataclass(frozen=True)
class ArithValue:
    n: int
    phi: int
    psi: int
    sigma0: int
    mu: int
    divisors: tuple


def arith_value(n: int) -> ArithValue:
    return ArithValue(n, euler_phi(n), dedekind_psi(n), sigma0(n), moebius(n), _divisors(n))
