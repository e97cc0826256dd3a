"""Distributed autoassociative fuzzy morphological memories trained by adjunction.

A max-C memory recalls ``W o x`` and a min-D memory recalls ``M . x``.  The
weights come from the residual operators of the family::

    w_ij = min_xi I(a_j^xi, a_i^xi)        m_ij = max_xi J(a_j^xi, a_i^xi)

These are the smallest ``M`` and largest ``W`` for which every stored pattern
is a fixed point, so both memories store any number of patterns exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .connectives import ConnectiveFamily, builtin_family
from .errors import ConfigError
from .lattice import as_fuzzy_vector, as_memory_set, max_c_product, min_d_product, tally

KINDS = ("max_c", "min_d")

__all__ = ["DistributedMemory", "NegatedMemory", "train_fla", "recall", "negation_of", "KINDS"]


def _resolve_family(family) -> ConnectiveFamily:
    return builtin_family(family) if isinstance(family, str) else family


@dataclass(frozen=True, eq=False)
class DistributedMemory:
    kind: str
    weights: np.ndarray
    family: ConnectiveFamily

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"unknown distributed memory kind {self.kind!r}")
        w = np.array(self.weights, dtype=np.float64)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ConfigError(f"weight matrix must be square, got {w.shape}")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    def recall(self, x) -> np.ndarray:
        x = as_fuzzy_vector(x, self.n)
        n = self.n
        if self.kind == "max_c":
            y = max_c_product(self.weights, x, self.family.C)
        else:
            y = min_d_product(self.weights, x, self.family.D)
        # every evaluation against an input component is charged one comparison
        tally(comparisons=n * n)
        return y

    __call__ = recall


def train_fla(memories, family, kind: str = "min_d") -> DistributedMemory:
    """Store ``memories`` (k x n, or a list of vectors) by fuzzy learning by adjunction."""
    family = _resolve_family(family)
    A = as_memory_set(memories)
    k, n = A.shape
    if kind == "max_c":
        if family.c_identity is None:
            raise ConfigError(
                f"family {family.name!r}: conjunction has no left identity, adjunction learning is not supported"
            )
        W = np.ones((n, n))
        for a in A:
            np.minimum(W, family.I(a[None, :], a[:, None]), out=W)
    elif kind == "min_d":
        if not family.has_disjunctive_side:
            raise ConfigError(f"family {family.name!r} has no disjunction/co-implication pair")
        W = np.zeros((n, n))
        for a in A:
            np.maximum(W, family.J(a[None, :], a[:, None]), out=W)
    else:
        raise ConfigError(f"unknown distributed memory kind {kind!r}")
    tally(evals=k * n * n, comparisons=(2 * k - 1) * n * n)
    return DistributedMemory(kind, W, family)


def recall(mem: DistributedMemory, x) -> np.ndarray:
    return mem.recall(x)


@dataclass(frozen=True, eq=False)
class NegatedMemory:
    """``x -> eta(inner(eta(x)))`` for a distributed memory."""

    inner: object

    @property
    def n(self) -> int:
        return self.inner.n

    @property
    def family(self) -> ConnectiveFamily:
        return self.inner.family

    def recall(self, x) -> np.ndarray:
        eta = self.family.negation
        x = as_fuzzy_vector(x, self.n)
        return np.asarray(eta(self.inner.recall(eta(x))), dtype=np.float64)

    __call__ = recall

    def equivalent(self) -> DistributedMemory:
        """The opposite-kind memory (same dual family) computing the same map."""
        inner = self.inner
        if isinstance(inner, NegatedMemory):
            return inner.inner
        eta = inner.family.negation
        kind = "min_d" if inner.kind == "max_c" else "max_c"
        return DistributedMemory(kind, eta(inner.weights), inner.family)


def negation_of(mem) -> NegatedMemory:
    family = mem.family
    if not (family.negation_dual and family.has_disjunctive_side):
        raise ConfigError(f"family {family.name!r} has no negation-dual partner")
    return NegatedMemory(mem)
