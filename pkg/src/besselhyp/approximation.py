"""Elementary-function approximants for I_n and J_n.

The order-n approximant at accuracy parameter p assembles the order-n
kernel expansion over the p-node set and divides by 2p:

    approx_I = (1/2p) * sum_q  a(n, q) * z**(q-n) * kernel_q(z)

with the index-0 case (1/2p) * (1 + cosh-kernel_0(z)), the constant added
explicitly because the kernel itself carries none.  The circular (J)
variant swaps in sin/cos kernels with the sign pattern induced by rotating
the argument onto the imaginary axis.

The construction reproduces the target power series exactly for all orders
strictly below 4p - n, so it needs n < 4p; the leading error term scales
like z**(4p-n).  Below a configurable |z| threshold the evaluator switches
to the truncated series itself, because the assembled form cancels
catastrophically between its negative z powers as z -> 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable

from .coefficients import Term, derive_expansion
from .kernels import (
    KernelKind,
    kernel_cos,
    kernel_cosh,
    kernel_sin,
    kernel_sinh,
    make_nodes,
    node_power,
)


class DomainError(ValueError):
    """The (n, p) pair lies outside the approximant's matched-series domain."""


def default_small_z_threshold(n: int) -> float:
    """Default |z| below which the truncated-series fallback is used.

    Grows with n because the assembled form loses roughly as many digits as
    the n-dependent cancellation between its negative powers of z.
    """
    return 0.25 * (n + 1)


@dataclass(frozen=True)
class ApproxRequest:
    """One evaluation request: function kind, order, accuracy, argument.

    ``eps`` is the small-|z| policy threshold; ``None`` selects the default
    0.25 * (n + 1).  Requests are validated on construction; in particular
    n < 4p is required for the approximant to have any matched series terms.
    """

    kind: str
    n: int
    p: int
    z: float
    eps: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("I", "J"):
            raise ValueError(f"kind must be 'I' or 'J', got {self.kind!r}")
        if self.n < 0:
            raise ValueError(f"order n must be >= 0, got {self.n}")
        if self.p < 1:
            raise ValueError(f"accuracy parameter p must be >= 1, got {self.p}")
        object.__setattr__(self, "z", float(self.z))
        if not math.isfinite(self.z):
            raise ValueError(f"argument must be finite, got {self.z!r}")
        if self.n >= 4 * self.p:
            raise DomainError(
                f"order n={self.n} needs n < 4p = {4 * self.p}; "
                "no series terms are matched beyond that"
            )
        if self.eps is None:
            object.__setattr__(self, "eps", default_small_z_threshold(self.n))
        elif not (math.isfinite(self.eps) and self.eps > 0):
            raise ValueError(f"eps must be positive and finite, got {self.eps!r}")


def _j_term_sign(q: int) -> int:
    # Sign picked up by the index-q term when the argument rotates onto the
    # imaginary axis; period four in q.  Locked in by the complex-path
    # consistency tests.
    return -1 if q % 4 in (1, 2) else 1


def _maclaurin_series(n: int, z: float, num_terms: int, alternating: bool) -> float:
    """First ``num_terms`` nonzero series terms of I_n (or J_n if alternating).

    This is the small-|z| policy value: with num_terms = 2p - n it agrees
    with the assembled approximant through every matched order.  Returns 0.0
    when no terms are requested (n >= 2p).
    """
    if num_terms <= 0:
        return 0.0
    half = 0.5 * z
    term = 1.0
    for i in range(1, n + 1):
        term *= half / i
    ratio = half * half
    if alternating:
        ratio = -ratio
    total = term
    for k in range(1, num_terms):
        term *= ratio / (k * (n + k))
        total += term
    return total


def _horner_terms(terms: Iterable[Term], nodes, z: float, *, trig: bool) -> float:
    # Ascending q with one division by z per step keeps every intermediate
    # a plain kernel combination: acc <- acc/z + coeff * kernel_q.
    sinh_like = kernel_sin if trig else kernel_sinh
    cosh_like = kernel_cos if trig else kernel_cosh
    acc = 0.0
    first = True
    for term in terms:
        if term.kind is KernelKind.SINH:
            value = sinh_like(term.q, nodes, z)
        else:
            value = cosh_like(term.q, nodes, z)
        coeff = term.coeff * _j_term_sign(term.q) if trig else term.coeff
        acc = coeff * value if first else acc / z + coeff * value
        first = False
    return acc


def _assemble(n: int, p: int, z: float, *, trig: bool) -> float:
    nodes = make_nodes(p)
    if n == 0:
        cosh_like = kernel_cos if trig else kernel_cosh
        return (1.0 + cosh_like(0, nodes, z)) / (2 * p)
    acc = _horner_terms(derive_expansion(n).terms, nodes, z, trig=trig)
    if trig and n % 2:
        acc = -acc
    return acc / (2 * p)


def approx_I(req: ApproxRequest) -> float:
    """Evaluate the hyperbolic-kernel approximant of I_n.

    Uses the kernel assembly for |z| >= eps and the truncated series with
    2p - n nonzero terms below it.
    """
    if req.kind != "I":
        raise ValueError(f"approx_I needs kind='I', got {req.kind!r}")
    if abs(req.z) < req.eps:
        return _maclaurin_series(req.n, req.z, 2 * req.p - req.n, alternating=False)
    return _assemble(req.n, req.p, req.z, trig=False)


def approx_J(req: ApproxRequest) -> float:
    """Evaluate the circular-kernel approximant of J_n.

    Same assembly as approx_I with sin/cos kernels; each index-q term picks
    up the rotation sign and the whole sum the factor (-1)**n.
    """
    if req.kind != "J":
        raise ValueError(f"approx_J needs kind='J', got {req.kind!r}")
    if abs(req.z) < req.eps:
        return _maclaurin_series(req.n, req.z, 2 * req.p - req.n, alternating=True)
    return _assemble(req.n, req.p, req.z, trig=True)


def evaluate(req: ApproxRequest) -> float:
    """Dispatch on the request kind."""
    return approx_I(req) if req.kind == "I" else approx_J(req)


# Printed two-node closed forms, hard-coded rather than derived, so they can
# lock the derivation down.  The order-3 form counts its cosh combination
# once (coefficient -3); the assembled expansion admits exactly one such
# term.
_P2_PRINTED: dict[int, tuple[Term, ...]] = {
    1: (Term(1, -1, 1, KernelKind.SINH),),
    2: (
        Term(-1, -3, 1, KernelKind.SINH),
        Term(1, -2, 2, KernelKind.COSH),
    ),
    3: (
        Term(3, -5, 1, KernelKind.SINH),
        Term(-3, -4, 2, KernelKind.COSH),
        Term(1, -3, 3, KernelKind.SINH),
    ),
}


def closed_form_p2(n: int, z: float) -> float:
    """Literal two-node (p=2) closed forms for orders 0..3.

    Exists purely as an independent fixture for testing approx_I: the term
    coefficients are hard-coded literals, while evaluation shares the kernel
    arithmetic so agreement is exact whenever the coefficients agree.
    """
    if n not in (0, 1, 2, 3):
        raise ValueError(f"closed forms cover orders 0..3, got n={n}")
    if not math.isfinite(z):
        raise ValueError(f"argument must be finite, got {z!r}")
    if n >= 2 and z == 0.0:
        raise ValueError("closed forms for n >= 2 divide by z; need z != 0")
    nodes = make_nodes(2)
    if n == 0:
        return (1.0 + kernel_cosh(0, nodes, z)) / 4.0
    return _horner_terms(_P2_PRINTED[n], nodes, z, trig=False) / 4.0


def _approx_J_complex(n: int, p: int, z: float) -> complex:
    """J approximant via the hyperbolic assembly at the rotated argument.

    Internal continuation check: evaluates i**n * (hyperbolic assembly at
    -i z) in complex arithmetic.  The result must be real up to rounding and
    must match approx_J; this is what pins the per-term sign pattern.
    """
    if not math.isfinite(z):
        raise ValueError(f"argument must be finite, got {z!r}")
    w = complex(0.0, -z)
    nodes = make_nodes(p)
    if n == 0:
        total = cmath.cosh(w)
        for c in nodes.nodes:
            total += 2.0 * cmath.cosh(c * w)
        return (1.0 + total) / (2 * p)
    acc = complex(0.0, 0.0)
    first = True
    for term in derive_expansion(n).terms:
        fn = cmath.sinh if term.kind is KernelKind.SINH else cmath.cosh
        value = fn(w)
        for c in nodes.nodes:
            value += 2.0 * node_power(c, term.q) * fn(c * w)
        acc = term.coeff * value if first else acc / w + term.coeff * value
        first = False
    return (1j ** n) * acc / (2 * p)
