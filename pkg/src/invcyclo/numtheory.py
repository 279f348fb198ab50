"""Arithmetic functions on positive integers.

Factorization is trial division with a 2, 3, 5 wheel.  That is comfortably
fast for n up to about 10**12; the package itself only needs n <= 10**6.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Tuple


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


# gaps between consecutive integers coprime to 30, starting from 7
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        assert primes == sorted(set(primes)), "primes must be strictly increasing"
        assert all(e >= 1 for _, e in self.factors)
        assert self.value() == self.n

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p ** e
        return out

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def require_positive(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"expected a positive integer, got {n!r}")
    if n < 1:
        raise DomainError(f"expected a positive integer, got {n}")
    return n


@functools.lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    m = require_positive(n)
    factors = []

    def strip(p):
        nonlocal m
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            factors.append((p, e))

    for p in (2, 3, 5):
        strip(p)
    p, i = 7, 0
    while p * p <= m:
        strip(p)
        p += _WHEEL[i]
        i = (i + 1) % len(_WHEEL)
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


@functools.lru_cache(maxsize=None)
def divisors(n: int) -> Tuple[int, ...]:
    """All positive divisors of n in increasing order."""
    out = [1]
    for p, e in factorize(n).factors:
        # mixed-radix step: every divisor so far times p**0 .. p**e
        out = [d * p ** k for d in out for k in range(e + 1)]
    return tuple(sorted(out))


def mobius(n: int) -> int:
    factors = factorize(n).factors
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def totient(n: int) -> int:
    out = n
    for p, _ in factorize(n).factors:
        out = out // p * (p - 1)
    return out


def radical(n: int) -> int:
    out = 1
    for p in factorize(n).primes:
        out *= p
    return out
