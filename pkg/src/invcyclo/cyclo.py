"""Cyclotomic and inverse cyclotomic polynomials.

``phi`` offers three independent algorithms:

* ``cascade``: (X^n - 1) divided by the product of Phi_d over proper divisors.
  Quadratic, but a direct reading of X^n - 1 = prod_{d|n} Phi_d.
* ``mobius``: prod_{d|n} (X^{n/d} - 1)^{mu(d)}, all multiplications first and
  then the exact binomial divisions, each linear in the degree.
* ``radical``: Phi_n(X) = Phi_{rad n}(X^{n / rad n}) with the squarefree core by
  ``mobius``.

``auto`` picks ``radical`` when n is not squarefree and ``mobius`` otherwise,
and is the only mode that reads or fills a cache.
"""
from __future__ import annotations

import functools
import os
import tempfile
import threading
from dataclasses import dataclass, field
from pathlib import Path

from . import polyring as pr
from .numtheory import DomainError, divisors, mobius, radical, totient, require_positive
from .polyring import MINUS_INFINITY, IntPoly

ALGORITHMS = ("auto", "cascade", "mobius", "radical")
CACHE_FILENAME = "phi.txt"


class CacheFormatError(ValueError):
    pass


class CycloCache:
    """Phi_n keyed by n, optionally backed by a text file.

    File format: one ``n:c0,c1,...`` line per entry, coefficients from degree 0
    upward in ASCII decimal, lines sorted by n.  Reads are lock-free; writes
    and saves are serialized on an internal lock.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else None
        self.entries: dict[int, IntPoly] = {}
        self._lock = threading.Lock()
        self._dirty = False
        if self.path is not None and self.path.exists():
            self.load()

    def __contains__(self, n):
        return n in self.entries

    def __len__(self):
        return len(self.entries)

    def get(self, n: int) -> IntPoly | None:
        return self.entries.get(n)

    def put(self, n: int, f: IntPoly) -> None:
        self.validate(n, f)
        with self._lock:
            if self.entries.get(n) != f:
                self.entries[n] = f
                self._dirty = True

    def validate(self, n: int, f: IntPoly) -> None:
        if f.degree != totient(n) or f.lead != 1:
            raise CacheFormatError(f"entry {n} is not monic of degree phi({n})")
        # constant terms multiply to -1 over all d | n (constant term of X^n - 1);
        # only checkable once every proper divisor is present
        proper = divisors(n)[:-1]
        if all(d in self.entries for d in proper):
            c = f[0]
            for d in proper:
                c *= self.entries[d][0]
            if c != -1:
                raise CacheFormatError(f"entry {n} violates the product identity at X = 0")

    def load(self) -> None:
        text = self.path.read_text(encoding="ascii")
        loaded = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            head, sep, body = line.partition(":")
            try:
                if not sep:
                    raise ValueError
                n = int(head)
                coeffs = [int(tok) for tok in body.split(",")] if body else []
            except ValueError:
                raise CacheFormatError(f"{self.path}:{lineno}: malformed record") from None
            loaded[n] = IntPoly(coeffs)
        with self._lock:
            for n in sorted(loaded):
                self.entries[n] = loaded[n]
            self._dirty = False
        for n in sorted(loaded):
            self.validate(n, loaded[n])

    def dumps(self) -> str:
        return "".join(
            f"{n}:{','.join(str(c) for c in self.entries[n].coeffs)}\n" for n in sorted(self.entries)
        )

    def save(self, path: str | os.PathLike | None = None) -> None:
        target = Path(path) if path is not None else self.path
        if target is None:
            raise ValueError("no cache path configured")
        with self._lock:
            data = self.dumps()
            target.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=".phi-", suffix=".tmp")
            with os.fdopen(fd, "w", encoding="ascii") as fh:
                fh.write(data)
            os.replace(tmp, target)
            self._dirty = False

    @property
    def dirty(self) -> bool:
        return self._dirty


_default_cache = CycloCache()


def default_cache() -> CycloCache:
    return _default_cache


def set_default_cache(cache: CycloCache) -> None:
    global _default_cache
    _default_cache = cache


# -- algorithms --------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _phi_cascade(n: int) -> IntPoly:
    denom = IntPoly([1])
    for d in divisors(n)[:-1]:
        denom = pr.mul(denom, _phi_cascade(d))
    return pr.div_exact(pr.binomial(n, -1), denom)


def _phi_mobius(n: int) -> IntPoly:
    f = IntPoly([1])
    divs = divisors(n)
    up = [d for d in divs if mobius(d) == 1]
    down = [d for d in divs if mobius(d) == -1]
    for d in up:
        f = pr.mul_binomial(f, n // d, -1)
    for d in down:
        f = pr.div_binomial(f, n // d, -1)
    return f


def expand(f: IntPoly, k: int) -> IntPoly:
    """f(X**k)."""
    if k == 1 or f.is_zero():
        return f
    out = [0] * (k * f.degree + 1)
    out[::k] = f.coeffs
    return IntPoly(out)


def _phi_radical(n: int) -> IntPoly:
    r = radical(n)
    return expand(_phi_mobius(r), n // r)


def phi(n: int, algorithm: str = "auto", cache: CycloCache | None = None) -> IntPoly:
    """The n-th cyclotomic polynomial."""
    require_positive(n)
    if algorithm == "cascade":
        return _phi_cascade(n)
    if algorithm == "mobius":
        return _phi_mobius(n)
    if algorithm == "radical":
        return _phi_radical(n)
    if algorithm != "auto":
        raise DomainError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")
    cache = _default_cache if cache is None else cache
    hit = cache.get(n)
    if hit is not None:
        return hit
    f = _phi_radical(n) if radical(n) != n else _phi_mobius(n)
    cache.put(n, f)
    return f


def psi(n: int, cache: CycloCache | None = None) -> IntPoly:
    """The n-th inverse cyclotomic polynomial (X^n - 1) / Phi_n."""
    return pr.div_exact(pr.binomial(require_positive(n), -1), phi(n, cache=cache))


def geometric(n: int, d: int) -> IntPoly:
    """1 + X^d + ... + X^{n-d}."""
    out = [0] * (n - d + 1)
    out[::d] = [1] * (n // d)
    return IntPoly(out)


def psi_nd(n: int, d: int, cache: CycloCache | None = None) -> IntPoly:
    """(X^n - 1) / Phi_d for d | n, computed two ways and cross-checked."""
    require_positive(n)
    require_positive(d)
    if n % d:
        raise DomainError(f"{d} does not divide {n}")
    quotient = pr.div_exact(pr.binomial(n, -1), phi(d, cache=cache))
    product = pr.mul(geometric(n, d), psi(d, cache=cache))
    if quotient != product:
        raise ArithmeticError(f"psi_nd({n}, {d}): quotient and product forms disagree")
    return quotient


# -- statistics --------------------------------------------------------------

@dataclass(frozen=True)
class CoeffStats:
    n: int | None
    degree: object
    height: int
    nonzero_terms: int
    coeffs: tuple = field(repr=False)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "degree": "zero" if self.degree is MINUS_INFINITY else self.degree,
            "height": str(self.height),
            "nonzero_terms": self.nonzero_terms,
            "coefficients": [str(c) for c in self.coeffs],
        }


def stats(f: IntPoly, n: int | None = None) -> CoeffStats:
    return CoeffStats(
        n=n,
        degree=f.degree,
        height=max((abs(c) for c in f.coeffs), default=0),
        nonzero_terms=sum(1 for c in f.coeffs if c),
        coeffs=f.coeffs,
    )
