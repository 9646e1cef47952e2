"""Exact integer coefficients of the iterated (1/z d/dz) kernel expansions.

Applying the operator (1/z)(d/dz) n times to the index-0 cosh kernel
produces a signed-integer combination of kernels with indices q = 1..n
attached to the powers z**(q - 2n).  Those integers are derived three
independent ways:

* symbolically, by rewriting the term list under the exact derivative
  rules (`derive_expansion`, the authoritative route),
* from the boundary closed forms plus the interior two-term recurrence
  (`recurrence_table`),
* from standalone per-column closed forms (`closed_form_coefficient`).

All arithmetic uses Python's arbitrary-precision integers, so the routes
can be compared entry-for-entry with no overflow concerns; the magnitudes
grow like the double factorial of 2n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .kernels import KernelKind

#: Scope of the exhaustive cross-check properties.  Derivation itself is
#: exact and has no hard ceiling.
DEFAULT_N_MAX = 20


def double_factorial(m: int) -> int:
    """m!! = m (m-2) (m-4) ... 1 for odd m >= -1, with (-1)!! == 1.

    The empty-product convention at m = -1 is what makes the leading-column
    closed form hold down to n = 2.
    """
    if m < -1 or m % 2 == 0:
        raise ValueError(f"double factorial needs an odd integer >= -1, got {m}")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


@dataclass(frozen=True)
class Term:
    """One summand: coeff * z**zexp * kernel(q), sinh- or cosh-kind."""

    coeff: int
    zexp: int
    q: int
    kind: KernelKind


@dataclass(frozen=True)
class TermExpansion:
    """Expansion of the order-n operator image, terms ordered by q.

    For order n >= 1 there are exactly n terms, q = 1..n, with
    zexp = q - 2n, odd q sinh-kind, even q cosh-kind, and the q = n
    coefficient equal to 1.
    """

    order: int
    terms: tuple[Term, ...]

    def coefficients(self) -> tuple[int, ...]:
        return tuple(t.coeff for t in self.terms)


@lru_cache(maxsize=None)
def derive_expansion(n: int) -> TermExpansion:
    """Symbolic n-fold application of (1/z)(d/dz) to the index-0 cosh kernel.

    Rewrite rules, exact on the term list:

        d/dz [c z^m (cosh q)] = c m z^(m-1) (cosh q) + c z^m (sinh q+1)
        d/dz [c z^m (sinh q)] = c m z^(m-1) (sinh q) + c z^m (cosh q+1)

    followed by a uniform z-exponent shift of -1 for the 1/z factor.  Like
    terms merge on the key (q, zexp); merged-to-zero coefficients drop.
    """
    if n < 1:
        raise ValueError(f"expansion order must be >= 1, got {n}")
    cur: dict[tuple[int, int], int] = {(0, 0): 1}
    for _ in range(n):
        nxt: dict[tuple[int, int], int] = {}
        for (q, m), c in cur.items():
            if m != 0:
                key = (q, m - 2)  # power-rule term, then the 1/z shift
                nxt[key] = nxt.get(key, 0) + c * m
            key = (q + 1, m - 1)  # index-raising term, then the 1/z shift
            nxt[key] = nxt.get(key, 0) + c
        cur = {k: v for k, v in nxt.items() if v != 0}

    terms = tuple(
        Term(coeff=cur[(q, m)], zexp=m, q=q, kind=KernelKind.for_index(q))
        for (q, m) in sorted(cur)
    )
    # Structural guarantees of the rewrite; cheap to keep as hard checks.
    assert len(terms) == n
    assert all(t.q == i + 1 and t.zexp == t.q - 2 * n for i, t in enumerate(terms))
    assert terms[-1].coeff == 1
    return TermExpansion(order=n, terms=terms)


def expansion_coefficient(n: int, q: int) -> int:
    """Coefficient of z**(q-2n) * kernel(q) in the order-n expansion."""
    if not 1 <= q <= n:
        raise ValueError(f"need 1 <= q <= n, got q={q}, n={n}")
    return derive_expansion(n).terms[q - 1].coeff


@dataclass(frozen=True)
class CoefficientTable:
    """Triangular table (n, q) -> coefficient, 1 <= q <= n <= n_max.

    Treated as read-only after construction; safe for concurrent lookup.
    """

    n_max: int
    entries: dict[tuple[int, int], int]

    def __post_init__(self) -> None:
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")

    def value(self, n: int, q: int) -> int:
        if not 1 <= q <= n <= self.n_max:
            raise ValueError(f"(n={n}, q={q}) outside table with n_max={self.n_max}")
        return self.entries[(n, q)]

    def row(self, n: int) -> tuple[int, ...]:
        return tuple(self.value(n, q) for q in range(1, n + 1))


def recurrence_table(n_max: int) -> CoefficientTable:
    """Build the coefficient triangle without symbolic differentiation.

    Boundary columns come from closed forms (q in {1, 2, n-1, n}); interior
    entries from the two-term recurrence

        a(n, q) = a(n-1, q-1) - (2n - q - 2) * a(n-1, q),   3 <= q <= n-2.

    Independent of `derive_expansion`; the two must agree exactly, which the
    test suite asserts entry-for-entry.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    entries: dict[tuple[int, int], int] = {(1, 1): 1}
    for n in range(2, n_max + 1):
        lead = (-1) ** (n + 1) * double_factorial(2 * n - 3)
        entries[(n, 1)] = lead
        if n >= 3:
            entries[(n, 2)] = -lead
        for q in range(3, n - 1):
            entries[(n, q)] = entries[(n - 1, q - 1)] - (2 * n - q - 2) * entries[(n - 1, q)]
        entries[(n, n - 1)] = -(n * (n - 1)) // 2
        entries[(n, n)] = 1
    return CoefficientTable(n_max=n_max, entries=entries)


def closed_form_coefficient(n: int, q: int) -> int:
    """Standalone closed forms for q in {1, 2, 3, 4, n-1, n}.

    The q = 4 value is the factorial-weighted sum of double factorials
    2**(n-4-j) (n-3)!/j! (2j+1)!! over j = 0..n-4, with overall sign
    (-1)**n.  Its general-n validity is asserted against the symbolic route
    for n <= DEFAULT_N_MAX only, not assumed beyond.
    """
    if not 1 <= q <= n:
        raise ValueError(f"need 1 <= q <= n, got q={q}, n={n}")
    if q == n:
        return 1
    if q == n - 1:
        return -(n * (n - 1)) // 2
    if q == 1:
        return (-1) ** (n + 1) * double_factorial(2 * n - 3)
    if q == 2:
        return (-1) ** n * double_factorial(2 * n - 3)
    if q == 3:
        return (-1) ** (n + 1) * (n - 2) * double_factorial(2 * n - 5)
    if q == 4:
        base = factorial(n - 3)
        total = 0
        for j in range(n - 3):
            total += 2 ** (n - 4 - j) * (base // factorial(j)) * double_factorial(2 * j + 1)
        return (-1) ** n * total
    raise ValueError(f"no closed form for q={q} at n={n}; use the symbolic route")
