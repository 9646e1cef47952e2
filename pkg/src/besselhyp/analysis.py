"""Series-space diagnostics and arbitrary-precision twins of the evaluators.

The production evaluators run in binary64.  Several properties of the
construction live far below binary64 resolution: the leading error term
scales like z**(4p-n), which already at p = 3 and z = 0.1 sits around
1e-20, orders of magnitude under the rounding noise of the assembled
kernels.  This module therefore re-evaluates the same formulas two other
ways:

* exact Maclaurin coefficients of the approximant over rational node
  squares (available for p <= 3, which covers the tested pairs), and
* mpmath arbitrary-precision evaluation of both the assembly and the
  reference series, for error measurements and log-log slope fits.

Neither path touches any library Bessel implementation; the reference
stays the same ascending series, just in wider arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import factorial

import mpmath as mp
import numpy as np

from .approximation import _j_term_sign
from .coefficients import derive_expansion
from .kernels import KernelKind

# Squared interior nodes are rational for p <= 3: cos^2(k pi / 2p) equals
# (1 + cos(k pi / p)) / 2 and the inner cosine is rational at these p.
_EXACT_NODE_SQUARES: dict[int, tuple[Fraction, ...]] = {
    1: (),
    2: (Fraction(1, 2),),
    3: (Fraction(3, 4), Fraction(1, 4)),
}


def node_power_sum(p: int, m: int) -> Fraction:
    """Exact P(m) = 1 + 2 sum_k c_k**m for even m, p <= 3."""
    if p not in _EXACT_NODE_SQUARES:
        raise ValueError(f"exact node powers are tabulated for p <= 3, got p={p}")
    if m < 0 or m % 2:
        raise ValueError(f"node power sums are exact for even m >= 0, got m={m}")
    total = Fraction(1)
    for square in _EXACT_NODE_SQUARES[p]:
        total += 2 * square ** (m // 2)
    return total


def bessel_i_series_coeff(n: int, t: int) -> Fraction:
    """Exact z**t Maclaurin coefficient of I_n."""
    if n < 0 or t < 0:
        raise ValueError("need n >= 0 and t >= 0")
    if t < n or (t - n) % 2:
        return Fraction(0)
    k = (t - n) // 2
    return Fraction(1, 2**t * factorial(k) * factorial(n + k))


def approximant_series_coeff(n: int, p: int, t: int) -> Fraction:
    """Exact z**t Maclaurin coefficient of the order-n, parameter-p approximant.

    Expands every kernel as its power series with exact node powers:
    the z**j kernel coefficient is P(q + j)/j!, so the approximant's z**t
    coefficient collects P(t + n)/(t + n - q)! over the expansion terms.
    """
    if n < 0 or t < 0:
        raise ValueError("need n >= 0 and t >= 0")
    if (t - n) % 2:
        return Fraction(0)
    if n == 0:
        coeff = Fraction(1, 2 * p) * node_power_sum(p, t) / factorial(t)
        if t == 0:
            coeff += Fraction(1, 2 * p)  # the explicit constant of the averaged form
        return coeff
    weight = node_power_sum(p, t + n)
    acc = Fraction(0)
    for term in derive_expansion(n).terms:
        j = t + n - term.q
        if j >= 0:
            acc += Fraction(term.coeff, factorial(j))
    return Fraction(1, 2 * p) * weight * acc


def first_mismatch_order(n: int, p: int, search_limit: int | None = None) -> int:
    """Lowest order whose approximant coefficient differs from the I_n series.

    The construction predicts exactly 4p - n; the scan stops with an error
    slightly beyond that, so a structurally broken build cannot loop.
    """
    limit = (4 * p - n) + 4 if search_limit is None else search_limit
    for t in range(limit + 1):
        if approximant_series_coeff(n, p, t) != bessel_i_series_coeff(n, t):
            return t
    raise RuntimeError(f"no mismatch found up to order {limit} for (n={n}, p={p})")


def _hp_nodes(p: int) -> list[mp.mpf]:
    return [mp.cos(mp.pi * k / (2 * p)) for k in range(1, p)]


def _hp_kernel(fn, q: int, nodes: list[mp.mpf], z: mp.mpf) -> mp.mpf:
    total = fn(z)
    for c in nodes:
        total += 2 * c**q * fn(c * z)
    return total


def hp_approx(kind: str, n: int, p: int, z, dps: int = 50) -> mp.mpf:
    """Arbitrary-precision evaluation of the kernel assembly (no fallback).

    Wide arithmetic absorbs the small-z cancellation, so the assembly is
    evaluated directly at any z != 0; exact integer coefficients and mpmath
    nodes make this a faithful image of the mathematical construction.
    """
    if kind not in ("I", "J"):
        raise ValueError(f"kind must be 'I' or 'J', got {kind!r}")
    if n >= 4 * p:
        raise ValueError(f"order n={n} needs n < 4p = {4 * p}")
    with mp.workdps(dps):
        zz = mp.mpf(z)
        nodes = _hp_nodes(p)
        sinh_like = mp.sin if kind == "J" else mp.sinh
        cosh_like = mp.cos if kind == "J" else mp.cosh
        if n == 0:
            return (1 + _hp_kernel(cosh_like, 0, nodes, zz)) / (2 * p)
        if zz == 0:
            return mp.mpf(0)
        acc = mp.mpf(0)
        first = True
        for term in derive_expansion(n).terms:
            fn = sinh_like if term.kind is KernelKind.SINH else cosh_like
            value = _hp_kernel(fn, term.q, nodes, zz)
            coeff = term.coeff * _j_term_sign(term.q) if kind == "J" else term.coeff
            acc = coeff * value if first else acc / zz + coeff * value
            first = False
        if kind == "J" and n % 2:
            acc = -acc
        return acc / (2 * p)


def hp_ref(kind: str, n: int, z, dps: int = 50) -> mp.mpf:
    """Ascending series for I_n or J_n in mpmath arithmetic."""
    if kind not in ("I", "J"):
        raise ValueError(f"kind must be 'I' or 'J', got {kind!r}")
    if n < 0:
        raise ValueError(f"order must be >= 0, got {n}")
    with mp.workdps(dps):
        zz = mp.mpf(z)
        half = zz / 2
        term = mp.mpf(1)
        for i in range(1, n + 1):
            term *= half / i
        ratio = half * half
        if kind == "J":
            ratio = -ratio
        total = term
        cutoff = mp.mpf(10) ** (-(dps + 10))
        for k in range(1, 1000):
            term *= ratio / (k * (n + k))
            total += term
            if abs(term) <= cutoff * max(abs(total), mp.mpf(1)):
                break
        return total


def hp_error(kind: str, n: int, p: int, z, dps: int = 50) -> mp.mpf:
    """Signed construction error approx - reference, in wide arithmetic."""
    with mp.workdps(dps):
        return hp_approx(kind, n, p, z, dps=dps) - hp_ref(kind, n, z, dps=dps)


def fit_error_slope(
    kind: str,
    n: int,
    p: int,
    z_lo: float = 0.1,
    z_hi: float = 0.5,
    samples: int = 16,
    dps: int = 50,
) -> float:
    """Least-squares slope of log|error| against log z on a geometric grid.

    The construction predicts a slope of 4p - n from the leading error term.
    """
    if not (0.0 < z_lo < z_hi):
        raise ValueError(f"need 0 < z_lo < z_hi, got [{z_lo}, {z_hi}]")
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    zs = np.geomspace(z_lo, z_hi, samples)
    log_z = []
    log_err = []
    with mp.workdps(dps):
        for z in zs:
            err = abs(hp_error(kind, n, p, float(z), dps=dps))
            if err == 0:
                raise RuntimeError(f"zero error at z={z}; increase dps")
            log_z.append(math.log(float(z)))
            log_err.append(float(mp.log(err)))
    slope, _ = np.polyfit(np.asarray(log_z), np.asarray(log_err), 1)
    return float(slope)
