"""Independent series oracle for I_n, J_n, lacunary tails, and identities.

Everything the approximants are measured against comes from this module: a
from-scratch ascending power series in binary64 with compensated summation,
never a platform Bessel routine.  Library implementations may appear in the
test suite as an additional cross-check, but the oracle is this one.

Validity is capped at |z| <= 30 and n <= 64: within that range the series
converges quickly and round-off dominates long before cancellation does.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

ORACLE_TOL_ENV = "BESSELHYP_ORACLE_TOL"

Z_MAX = 30.0
N_MAX = 64

#: Tags of the supported node-sum identities, checked as (lhs - rhs):
#:   N2   cosh z                       = I_0 + 2 (I_2 + I_4 + ...)
#:   N4   cosh(z/2)**2                 = I_0 + 2 (I_4 + I_8 + ...)
#:   N8   (1 + cosh z + 2 cosh(z/sqrt 2))/4 = I_0 + 2 (I_8 + I_16 + ...)
#:   N4P  node-averaged cosh sum at parameter p = I_0 + 2 sum_k I_{4pk}
#:   J4P  circular variant of N4P     = J_0 + 2 sum_k J_{4pk}
IDENTITY_TAGS = ("N2", "N4", "N8", "N4P", "J4P")


def _default_tol() -> float:
    raw = os.environ.get(ORACLE_TOL_ENV)
    if raw is None:
        return 1e-15
    tol = float(raw)
    if not (math.isfinite(tol) and tol > 0):
        raise ValueError(f"{ORACLE_TOL_ENV} must be a positive float, got {raw!r}")
    return tol


@dataclass(frozen=True)
class SeriesPolicy:
    """Truncation control: stop when a term falls below tol * partial sum,
    or after max_terms at the latest.  The default tolerance honours the
    BESSELHYP_ORACLE_TOL environment variable (default 1e-15)."""

    tol: float = field(default_factory=_default_tol)
    max_terms: int = 200

    def __post_init__(self) -> None:
        if not (math.isfinite(self.tol) and self.tol > 0):
            raise ValueError(f"tol must be positive, got {self.tol!r}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")


class _CompensatedSum:
    """Neumaier-compensated accumulator."""

    __slots__ = ("total", "carry")

    def __init__(self) -> None:
        self.total = 0.0
        self.carry = 0.0

    def add(self, x: float) -> None:
        t = self.total + x
        if abs(self.total) >= abs(x):
            self.carry += (self.total - t) + x
        else:
            self.carry += (x - t) + self.total
        self.total = t

    def value(self) -> float:
        return self.total + self.carry


def _validate(n: int, z: float) -> None:
    if not 0 <= n <= N_MAX:
        raise ValueError(f"oracle order must satisfy 0 <= n <= {N_MAX}, got {n}")
    if not (math.isfinite(z) and abs(z) <= Z_MAX):
        raise ValueError(f"oracle argument must satisfy |z| <= {Z_MAX}, got {z!r}")


def _leading_term(n: int, z: float) -> float:
    # (z/2)**n / n! via a running product; never a bare factorial.
    half = 0.5 * z
    term = 1.0
    for i in range(1, n + 1):
        term *= half / i
    return term


def ref_I(n: int, z: float, policy: SeriesPolicy | None = None) -> float:
    """Ascending series for I_n: sum_k (z/2)**(n+2k) / (k! (n+k)!)."""
    policy = policy or SeriesPolicy()
    _validate(n, z)
    term = _leading_term(n, z)
    acc = _CompensatedSum()
    acc.add(term)
    ratio = 0.25 * z * z
    for k in range(1, policy.max_terms):
        term *= ratio / (k * (n + k))
        acc.add(term)
        if abs(term) <= policy.tol * abs(acc.value()):
            break
    return acc.value()


def ref_J(n: int, z: float, policy: SeriesPolicy | None = None) -> float:
    """Alternating series for J_n, with a two-term lookahead stop.

    The lookahead guards against stopping on an accidentally small term of
    an alternating sum before its neighbour has been folded in.
    """
    policy = policy or SeriesPolicy()
    _validate(n, z)
    term = _leading_term(n, z)
    acc = _CompensatedSum()
    acc.add(term)
    ratio = -0.25 * z * z
    for k in range(1, policy.max_terms):
        term *= ratio / (k * (n + k))
        acc.add(term)
        bound = policy.tol * abs(acc.value())
        lookahead = abs(term * ratio) / ((k + 1) * (n + k + 1))
        if abs(term) <= bound and lookahead <= bound:
            break
    return acc.value()


def _lacunary_I(step: int, z: float, policy: SeriesPolicy) -> float:
    """sum_{k>=1} I_{step*k}(z), truncated at the policy tolerance."""
    acc = 0.0
    k = 1
    while step * k <= N_MAX:
        term = ref_I(step * k, z, policy)
        acc += term
        if term <= policy.tol * max(abs(acc), 1.0):
            break
        k += 1
    return acc


def _lacunary_J(step: int, z: float, policy: SeriesPolicy) -> float:
    """sum_{k>=1} J_{step*k}(z), truncated at the policy tolerance."""
    acc = 0.0
    k = 1
    while step * k <= N_MAX:
        term = ref_J(step * k, z, policy)
        acc += term
        if abs(term) <= policy.tol * max(abs(acc), 1.0):
            break
        k += 1
    return acc


def tail_I0(p: int, z: float, policy: SeriesPolicy | None = None) -> float:
    """The lacunary remainder 2 sum_{k>=1} I_{4pk}(z).

    This is exactly what separates the order-0 approximant at parameter p
    from I_0; it is positive for z > 0 and strictly decreasing in p.
    """
    policy = policy or SeriesPolicy()
    if p < 1:
        raise ValueError(f"accuracy parameter p must be >= 1, got {p}")
    _validate(0, z)
    return 2.0 * _lacunary_I(4 * p, z, policy)


def _averaged_cosh(p: int, z: float) -> float:
    # Node-averaged form built from elementary functions exactly as written:
    # (1 + cosh z + 2 sum_k cosh(z cos(k pi / 2p))) / (2p).
    total = 1.0 + math.cosh(z)
    for k in range(1, p):
        total += 2.0 * math.cosh(z * math.cos(k * math.pi / (2 * p)))
    return total / (2 * p)


def _averaged_cos(p: int, z: float) -> float:
    total = 1.0 + math.cos(z)
    for k in range(1, p):
        total += 2.0 * math.cos(z * math.cos(k * math.pi / (2 * p)))
    return total / (2 * p)


def identity_residual(
    which: str,
    z: float,
    p: int | None = None,
    policy: SeriesPolicy | None = None,
) -> float:
    """Signed residual (left side) - (right side) of a node-sum identity.

    The right side's infinite lacunary sum is truncated at the policy
    tolerance; each identity is exact, so residuals sit at round-off level.
    ``p`` is required for the N4P and J4P families and ignored otherwise.
    """
    policy = policy or SeriesPolicy()
    _validate(0, z)
    if which == "N2":
        return math.cosh(z) - (ref_I(0, z, policy) + 2.0 * _lacunary_I(2, z, policy))
    if which == "N4":
        lhs = math.cosh(0.5 * z) ** 2
        return lhs - (ref_I(0, z, policy) + 2.0 * _lacunary_I(4, z, policy))
    if which == "N8":
        lhs = 0.25 * (1.0 + math.cosh(z) + 2.0 * math.cosh(z / math.sqrt(2.0)))
        return lhs - (ref_I(0, z, policy) + 2.0 * _lacunary_I(8, z, policy))
    if which == "N4P":
        if p is None or p < 1:
            raise ValueError("identity N4P needs an accuracy parameter p >= 1")
        rhs = ref_I(0, z, policy) + 2.0 * _lacunary_I(4 * p, z, policy)
        return _averaged_cosh(p, z) - rhs
    if which == "J4P":
        if p is None or p < 1:
            raise ValueError("identity J4P needs an accuracy parameter p >= 1")
        rhs = ref_J(0, z, policy) + 2.0 * _lacunary_J(4 * p, z, policy)
        return _averaged_cos(p, z) - rhs
    raise ValueError(f"unknown identity tag {which!r}; expected one of {IDENTITY_TAGS}")
