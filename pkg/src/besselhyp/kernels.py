"""Cosine node sets and the sinh/cosh (and sin/cos) kernel sums built on them.

A node set for accuracy parameter ``p`` holds the interior cosines
cos(k*pi/(2p)) for k = 1..p-1.  A kernel of index ``q`` is the plain
hyperbolic (or circular) function at ``z`` plus the node contributions,
each weighted by 2*c**q:

    kernel_sinh(q, nodes, z) = sinh(z) + sum_k 2 c_k**q sinh(c_k z)

and likewise for cosh/sin/cos.  Differentiating a kernel in z raises its
index by one and toggles the sinh/cosh family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable


class KernelKind(Enum):
    """Parity family of a kernel index: odd is sinh-like, even cosh-like."""

    SINH = "sinh"
    COSH = "cosh"

    @classmethod
    def for_index(cls, q: int) -> "KernelKind":
        return cls.SINH if q % 2 else cls.COSH


@dataclass(frozen=True)
class NodeSet:
    """Interior cosine nodes for accuracy parameter ``p`` (empty for p=1).

    Values are strictly decreasing and lie in the open interval (0, 1).
    Instances are immutable and safe to share across threads.
    """

    p: int
    nodes: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError(f"accuracy parameter p must be >= 1, got {self.p}")


@lru_cache(maxsize=None)
def make_nodes(p: int) -> NodeSet:
    """Node set {cos(k*pi/(2p))} for k = 1..p-1, cached per p."""
    if p < 1:
        raise ValueError(f"accuracy parameter p must be >= 1, got {p}")
    return NodeSet(p=p, nodes=tuple(math.cos(k * math.pi / (2 * p)) for k in range(1, p)))


def node_power(c: float, q: int) -> float:
    # Repeated multiplication; q never exceeds the expansion order, so
    # there is no accuracy concern.
    w = 1.0
    for _ in range(q):
        w *= c
    return w


def _require_finite(z: float) -> None:
    if not math.isfinite(z):
        raise ValueError(f"argument must be finite, got {z!r}")


def _weighted_sum(fn: Callable[[float], float], q: int, nodes: NodeSet, z: float) -> float:
    total = fn(z)
    for c in nodes.nodes:
        total += 2.0 * node_power(c, q) * fn(c * z)
    return total


def kernel_sinh(q: int, nodes: NodeSet, z: float) -> float:
    """sinh(z) + sum_k 2 c_k**q sinh(c_k z), defined for q >= 1."""
    if q < 1:
        raise ValueError(f"sinh kernel index must be >= 1, got {q}")
    _require_finite(z)
    return _weighted_sum(math.sinh, q, nodes, z)


def kernel_cosh(q: int, nodes: NodeSet, z: float) -> float:
    """cosh(z) + sum_k 2 c_k**q cosh(c_k z), defined for q >= 0.

    Note the index-0 kernel carries no constant term; callers that need the
    averaged identity form add the 1 themselves.
    """
    if q < 0:
        raise ValueError(f"cosh kernel index must be >= 0, got {q}")
    _require_finite(z)
    return _weighted_sum(math.cosh, q, nodes, z)


def kernel_sin(q: int, nodes: NodeSet, z: float) -> float:
    """Circular counterpart of kernel_sinh: sin(z) + sum_k 2 c_k**q sin(c_k z)."""
    if q < 1:
        raise ValueError(f"sin kernel index must be >= 1, got {q}")
    _require_finite(z)
    return _weighted_sum(math.sin, q, nodes, z)


def kernel_cos(q: int, nodes: NodeSet, z: float) -> float:
    """Circular counterpart of kernel_cosh: cos(z) + sum_k 2 c_k**q cos(c_k z)."""
    if q < 0:
        raise ValueError(f"cos kernel index must be >= 0, got {q}")
    _require_finite(z)
    return _weighted_sum(math.cos, q, nodes, z)
