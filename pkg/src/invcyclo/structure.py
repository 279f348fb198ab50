"""The decomposition Q[X]/(X^n - 1) = sum over d | n of Q[X]/Phi_d, made concrete.

Inside Q[X]/(X^n - 1) the d-component is spanned by the shifts
X^l * Psi_{n,d}, 0 <= l < phi(d).  Everything here is ordered the same way:
divisors ascending, then shift ascending.

The orthogonality check pairs ``X^l1 Psi_{n,d1}`` with ``X^l2 Psi_{n,d2}``
under the coefficient inner product.  That value only depends on
``l1 - l2``, so each divisor pair is handled with one correlation per lag
instead of one inner product per shift pair; ``method="direct"`` does the
literal per-pair products instead.
"""
from __future__ import annotations

import functools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from operator import mul as _mul
from typing import Callable, NamedTuple

from . import __version__, cyclo, linalg
from . import polyring as pr
from .numtheory import DomainError, divisors, require_positive, totient
from .polyring import IntPoly, RatPoly

# Test-only: replaces cyclo.psi_nd as the source of Psi_{n,d} when set.
_psi_nd_hook: Callable[[int, int], IntPoly] | None = None


def _psi_nd(n: int, d: int) -> IntPoly:
    if _psi_nd_hook is not None:
        return _psi_nd_hook(n, d)
    return cyclo.psi_nd(n, d)


def _require_divisor(n: int, d: int) -> None:
    require_positive(n)
    require_positive(d)
    if n % d:
        raise DomainError(f"{d} does not divide {n}")


def _row(f, n: int) -> list:
    return list(f.coeffs) + [0] * (n - len(f))


def ordering(n: int) -> list[tuple[int, int]]:
    return [(d, l) for d in divisors(n) for l in range(totient(d))]


def expected_checks(n: int) -> int:
    """Number of (d1 < d2, l1, l2) pairings: (n^2 - sum phi(d)^2) / 2."""
    return (n * n - sum(totient(d) ** 2 for d in divisors(n))) // 2


# -- component bases ---------------------------------------------------------

@dataclass(frozen=True)
class ComponentBasis:
    n: int
    d: int
    basis: tuple

    def rows(self) -> list[list]:
        return [_row(b, self.n) for b in self.basis]

    def contains(self, f) -> bool:
        """Whether f (degree < n) lies in the rational span of the basis."""
        rows = self.rows()
        return linalg.rank(rows + [_row(f, self.n)]) == len(rows)


def component_basis(n: int, d: int, check: bool = True) -> ComponentBasis:
    _require_divisor(n, d)
    base = _psi_nd(n, d)
    cb = ComponentBasis(n, d, tuple(pr.shift(base, l) for l in range(totient(d))))
    if check:
        if linalg.rank(cb.rows()) != len(cb.basis):
            raise ArithmeticError(f"component basis ({n}, {d}) is linearly dependent")
        if not cb.contains(pr.cyclic_reduce(pr.shift(cb.basis[-1], 1), n)):
            raise ArithmeticError(f"component ({n}, {d}) is not stable under X")
    return cb


# -- Gram matrix and theorem verification -------------------------------------

class Violation(NamedTuple):
    d1: int
    l1: int
    d2: int
    l2: int
    value: int

    def as_dict(self) -> dict:
        return {"d1": self.d1, "l1": self.l1, "d2": self.d2, "l2": self.l2, "value": str(self.value)}


def _lag_table(f: IntPoly, g: IntPoly, max_pos: int, max_neg: int) -> dict[int, int]:
    """corr[s] = <X^(l1) f, X^(l2) g> for every s = l1 - l2 in [-max_neg, max_pos]."""
    a, b = f.coeffs, g.coeffs
    out = {}
    for s in range(-max_neg, max_pos + 1):
        out[s] = sum(map(_mul, a, b[s:])) if s >= 0 else sum(map(_mul, a[-s:], b))
    return out


def _pair_values(n: int, d1: int, d2: int, f: IntPoly, g: IntPoly, method: str):
    """Yield (l1, l2, value) over the full shift rectangle of (d1, d2)."""
    p1, p2 = totient(d1), totient(d2)
    if method == "direct":
        for l1 in range(p1):
            s1 = pr.shift(f, l1)
            for l2 in range(p2):
                yield l1, l2, pr.inner_product(s1, pr.shift(g, l2))
    elif method == "lag":
        table = _lag_table(f, g, p1 - 1, p2 - 1)
        for l1 in range(p1):
            for l2 in range(p2):
                yield l1, l2, table[l1 - l2]
    else:
        raise DomainError(f"unknown method {method!r}")


@dataclass(frozen=True)
class GramReport:
    n: int
    ordering: list
    matrix: list
    violations: list

    @property
    def block_diagonal(self) -> bool:
        return not self.violations

    def is_symmetric(self) -> bool:
        m = self.matrix
        return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "ordering": [list(p) for p in self.ordering],
            "matrix": [[str(x) for x in row] for row in self.matrix],
            "block_diagonal": self.block_diagonal,
            "violations": [v.as_dict() for v in self.violations],
        }


def gram_matrix(n: int, method: str = "lag") -> GramReport:
    require_positive(n)
    divs = divisors(n)
    order = ordering(n)
    index = {p: i for i, p in enumerate(order)}
    base = {d: _psi_nd(n, d) for d in divs}
    m = [[0] * len(order) for _ in order]
    violations = []
    for i, d1 in enumerate(divs):
        for d2 in divs[i:]:
            for l1, l2, v in _pair_values(n, d1, d2, base[d1], base[d2], method):
                a, b = index[d1, l1], index[d2, l2]
                m[a][b] = m[b][a] = v
                if d1 != d2 and v:
                    violations.append(Violation(d1, l1, d2, l2, v))
    return GramReport(n, order, m, violations)


@dataclass(frozen=True)
class VerificationCertificate:
    n: int
    checks_performed: int
    passed: bool
    violations: list
    lemma_checked: bool = False
    version: str = __version__
    timestamp: str | None = field(default=None, compare=False)

    def as_dict(self, with_timestamp: bool = False) -> dict:
        result = {
            "checks_performed": self.checks_performed,
            "pass": self.passed,
            "violations": [v.as_dict() for v in self.violations],
            "lemma_checked": self.lemma_checked,
        }
        if with_timestamp:
            result["timestamp"] = self.timestamp
        return {
            "command": "verify",
            "parameters": {"n": self.n},
            "result": result,
            "version": self.version,
        }


def verify_theorem(n: int, lemma: bool = False, method: str = "lag") -> VerificationCertificate:
    """Check every pairing over distinct divisors d1 < d2; no early exit."""
    require_positive(n)
    divs = divisors(n)
    base = {d: _psi_nd(n, d) for d in divs}
    checks = 0
    violations = []
    for i, d1 in enumerate(divs):
        for d2 in divs[i + 1 :]:
            for l1, l2, v in _pair_values(n, d1, d2, base[d1], base[d2], method):
                checks += 1
                if v:
                    violations.append(Violation(d1, l1, d2, l2, v))
    if checks != expected_checks(n):
        raise ArithmeticError(f"enumerated {checks} pairings for n={n}, expected {expected_checks(n)}")
    passed = not violations
    if lemma:
        passed = all(verify_lemma(n, a, b) for i, a in enumerate(divs) for b in divs[i + 1 :]) and passed
    stamp = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    return VerificationCertificate(n, checks, passed, violations, lemma, __version__, stamp)


def theorem_holds(n: int) -> bool:
    """Fast scan: stops at the first nonzero pairing."""
    divs = divisors(n)
    base = {d: _psi_nd(n, d) for d in divs}
    for i, d1 in enumerate(divs):
        for d2 in divs[i + 1 :]:
            table = _lag_table(base[d1], base[d2], totient(d1) - 1, totient(d2) - 1)
            if any(table.values()):
                return False
    return True


def _verify_job(args):
    n, lemma, method = args
    return verify_theorem(n, lemma=lemma, method=method)


def verify_range(start: int, stop: int, jobs: int = 1, lemma: bool = False, method: str = "lag"):
    """Certificates for start <= n <= stop, ascending by n."""
    if not 1 <= start <= stop:
        raise DomainError(f"invalid range {start}..{stop}")
    work = [(n, lemma, method) for n in range(start, stop + 1)]
    if jobs <= 1 or len(work) == 1:
        return [_verify_job(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_job, work, chunksize=max(1, len(work) // (4 * jobs))))


def repetition_check(n: int, d: int) -> bool:
    _require_divisor(n, d)
    big, small = _psi_nd(n, d), cyclo.psi(d)
    return all(big[j * d + r] == small[r] for j in range(n // d) for r in range(d))


def diagonal_norm(n: int, d: int) -> int:
    """(n/d) * sum of squared coefficients of Psi_d."""
    _require_divisor(n, d)
    return n // d * sum(c * c for c in cyclo.psi(d).coeffs)


def full_basis_matrix(n: int) -> tuple[list[list], bool]:
    """Rows X^l Psi_{n,d} in the standard ordering, and whether they are a basis."""
    require_positive(n)
    rows = [_row(pr.shift(_psi_nd(n, d), l), n) for d, l in ordering(n)]
    return rows, linalg.determinant(rows) != 0


# -- idempotents and decomposition --------------------------------------------

@functools.lru_cache(maxsize=None)
def idempotent(n: int, d: int) -> RatPoly:
    """The element that is 1 modulo Phi_d and 0 modulo every other Phi_d'."""
    _require_divisor(n, d)
    cof = _psi_nd(n, d).to_rational()
    g, _, s = pr.extended_gcd(cyclo.phi(d).to_rational(), cof)
    if g != RatPoly([1]):
        raise ArithmeticError(f"Phi_{d} and Psi_({n},{d}) are not coprime")
    return pr.cyclic_reduce(pr.mul(cof, s), n)


def decompose(n: int, f: RatPoly) -> dict[int, RatPoly]:
    require_positive(n)
    if not isinstance(f, RatPoly):
        raise TypeError("decompose expects a RatPoly; promote with to_rational()")
    f = pr.cyclic_reduce(f, n)
    return {d: pr.cyclic_reduce(pr.mul(f, idempotent(n, d)), n) for d in divisors(n)}


# -- the alternating pairing on Q[G] (x) V ------------------------------------

@dataclass(frozen=True)
class TensorElement:
    """p1 (x) v1 + p2 (x) v2 with both coefficients reduced modulo X^n - 1."""

    p1: object
    p2: object
    n: int

    def __post_init__(self):
        require_positive(self.n)
        self.p1._same(self.p2)
        object.__setattr__(self, "p1", pr.cyclic_reduce(self.p1, self.n))
        object.__setattr__(self, "p2", pr.cyclic_reduce(self.p2, self.n))

    @classmethod
    def v1(cls, f, n):
        return cls(f, type(f)(), n)

    @classmethod
    def v2(cls, f, n):
        return cls(type(f)(), f, n)

    def __add__(self, other):
        _same_order(self, other)
        return TensorElement(self.p1 + other.p1, self.p2 + other.p2, self.n)

    def __rmul__(self, c):
        return TensorElement(self.p1 * c, self.p2 * c, self.n)

    def act(self, k: int = 1):
        """The generator acting k times: multiply both coefficients by X^k."""
        return TensorElement(pr.shift(self.p1, k), pr.shift(self.p2, k), self.n)

    def vector(self) -> list:
        return _row(self.p1, self.n) + _row(self.p2, self.n)


def _same_order(a, b):
    if a.n != b.n:
        raise DomainError(f"tensor elements live over different orders {a.n} and {b.n}")


def tensor_pair(a: TensorElement, b: TensorElement):
    _same_order(a, b)
    return pr.inner_product(a.p1, b.p2) - pr.inner_product(a.p2, b.p1)


def standard_tensor_basis(n: int) -> list[TensorElement]:
    """X^k (x) v1 for k < n, then X^k (x) v2 for k < n."""
    return [TensorElement.v1(pr.monomial(k), n) for k in range(n)] + [
        TensorElement.v2(pr.monomial(k), n) for k in range(n)
    ]


def pairing_matrix(n: int) -> list[list]:
    basis = standard_tensor_basis(n)
    return [[tensor_pair(a, b) for b in basis] for a in basis]


def component_tensor_basis(n: int, d: int) -> list[TensorElement]:
    cb = component_basis(n, d, check=False).basis
    return [TensorElement.v1(u, n) for u in cb] + [TensorElement.v2(u, n) for u in cb]


def verify_lemma(n: int, d1: int, d2: int) -> bool:
    """Whether the d1- and d2-components of Q[G] (x) V pair to zero."""
    _require_divisor(n, d1)
    _require_divisor(n, d2)
    if d1 == d2:
        raise DomainError("verify_lemma needs distinct divisors")
    left = component_tensor_basis(n, d1)
    right = component_tensor_basis(n, d2)
    return all(tensor_pair(a, b) == 0 for a in left for b in right)


@dataclass(frozen=True)
class ComplementReport:
    n: int
    d: int
    dimension: int
    expected: int
    matches_other_components: bool

    @property
    def ok(self) -> bool:
        return self.dimension == self.expected and self.matches_other_components


def orthogonal_complement(n: int, d: int) -> ComplementReport:
    """Exact kernel of the pairing against the d-component, compared with the other components."""
    _require_divisor(n, d)
    j = pairing_matrix(n)
    rows = [e.vector() for e in component_tensor_basis(n, d)]
    # y is orthogonal to every row x iff (x^T J) y = 0
    constraints = [[sum(x[i] * j[i][k] for i in range(2 * n)) for k in range(2 * n)] for x in rows]
    kernel = linalg.nullspace(constraints, 2 * n)
    others = [e.vector() for d2 in divisors(n) if d2 != d for e in component_tensor_basis(n, d2)]
    inside = all(not any(linalg.matvec(constraints, v)) for v in others)
    same_span = inside and linalg.rank(others) == len(kernel) if others else not kernel
    return ComplementReport(n, d, len(kernel), 2 * n - 2 * totient(d), same_span)
