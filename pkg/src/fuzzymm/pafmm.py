"""Projection autoassociative fuzzy morphological memories.

A max-C projection memory maps ``x`` to the largest max-C combination of the
stored patterns lying below ``x``; the min-D memory maps it to the smallest
min-D combination above ``x``.  Both are computed in closed form::

    lambda_xi = min_j I(a_j^xi, x_j)     V(x) = max_xi C(lambda_xi, a^xi)
    theta_xi  = max_j J(a_j^xi, x_j)     S(x) = min_xi D(theta_xi, a^xi)

The Zadeh kinds are the Gaines-connective special case, where every
coefficient is a crisp inclusion test and recall only compares numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .connectives import ConnectiveFamily, builtin_family, standard_negation
from .errors import ConfigError
from .lattice import as_fuzzy_vector, as_memory_set, max_c_combination, min_d_combination, tally

KINDS = ("max_c", "min_d", "zadeh_max", "zadeh_min")
ZADEH_KINDS = ("zadeh_max", "zadeh_min")

__all__ = [
    "KINDS",
    "ProjectionMemory",
    "RecallTrace",
    "NegatedProjection",
    "recall_max_c",
    "recall_min_d",
    "recall_zadeh_max",
    "recall_zadeh_min",
    "negation_dual",
]


@dataclass(frozen=True)
class RecallTrace:
    coefficients: np.ndarray
    index_set: Optional[frozenset] = None  # Zadeh kinds only, 0-based indices


@dataclass(frozen=True, eq=False)
class ProjectionMemory:
    """Stores the fundamental memories by value (rows of ``memories``).

    ``epsilon`` relaxes the Zadeh inclusion test to ``a_j <= x_j + epsilon``
    (and ``a_j >= x_j - epsilon`` for ``zadeh_min``); it is 0 by default.
    """

    kind: str
    memories: np.ndarray
    family: Optional[ConnectiveFamily] = None
    epsilon: float = 0.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"unknown projection memory kind {self.kind!r}")
        A = np.array(as_memory_set(self.memories))
        A.setflags(write=False)
        object.__setattr__(self, "memories", A)
        fam = self.family
        if isinstance(fam, str):
            fam = builtin_family(fam)
            object.__setattr__(self, "family", fam)
        if self.kind in ZADEH_KINDS:
            if fam is not None and fam.name != "gaines":
                raise ConfigError("Zadeh memories use Gaines connectives; do not pass another family")
        elif fam is None:
            raise ConfigError(f"kind {self.kind!r} needs a connective family")
        elif self.kind == "min_d" and not fam.has_disjunctive_side:
            raise ConfigError(f"family {fam.name!r} has no disjunction/co-implication pair")
        if self.epsilon < 0:
            raise ConfigError("epsilon must be >= 0")

    @property
    def k(self) -> int:
        return self.memories.shape[0]

    @property
    def n(self) -> int:
        return self.memories.shape[1]

    @property
    def negation(self):
        return self.family.negation if self.family is not None else standard_negation

    def recall_with_trace(self, x):
        return _DISPATCH[self.kind](self, x)

    def recall(self, x) -> np.ndarray:
        return self.recall_with_trace(x)[0]

    __call__ = recall


def _check_kind(mem, kind):
    if mem.kind != kind:
        raise ConfigError(f"memory kind is {mem.kind!r}, expected {kind!r}")


def recall_max_c(mem: ProjectionMemory, x):
    _check_kind(mem, "max_c")
    x = as_fuzzy_vector(x, mem.n)
    A = mem.memories
    k, n = A.shape
    lam = np.min(mem.family.I(A, x[None, :]), axis=1)
    # n*k implication evaluations; each carries one comparison against x
    tally(evals=n * k, comparisons=(n - 1) * k + n * k)
    # V(x) <= x holds exactly; the clamp only removes rounding overshoot
    y = np.minimum(max_c_combination(lam, A, mem.family.C), x)
    return y, RecallTrace(np.asarray(lam, dtype=np.float64))


def recall_min_d(mem: ProjectionMemory, x):
    _check_kind(mem, "min_d")
    x = as_fuzzy_vector(x, mem.n)
    A = mem.memories
    k, n = A.shape
    theta = np.max(mem.family.J(A, x[None, :]), axis=1)
    tally(evals=n * k, comparisons=(n - 1) * k + n * k)
    y = np.maximum(min_d_combination(theta, A, mem.family.D), x)
    return y, RecallTrace(np.asarray(theta, dtype=np.float64))


def _zadeh(mem, x, below: bool):
    x = as_fuzzy_vector(x, mem.n)
    A = mem.memories
    k, n = A.shape
    eps = mem.epsilon
    if eps:
        tally(arithmetic=n)
    contained = np.all(A <= x + eps, axis=1) if below else np.all(A >= x - eps, axis=1)
    idx = np.flatnonzero(contained)
    tally(comparisons=n * k + max(len(idx) - 1, 0) * n)
    if idx.size == 0:
        y = np.zeros(n) if below else np.ones(n)
    else:
        y = A[idx].max(axis=0) if below else A[idx].min(axis=0)
    trace = RecallTrace(contained.astype(np.float64), frozenset(int(i) for i in idx))
    return y, trace


def recall_zadeh_max(mem: ProjectionMemory, x):
    """Join of the stored patterns contained in ``x`` (zero vector if none)."""
    _check_kind(mem, "zadeh_max")
    return _zadeh(mem, x, below=True)


def recall_zadeh_min(mem: ProjectionMemory, x):
    """Meet of the stored patterns containing ``x`` (ones vector if none)."""
    _check_kind(mem, "zadeh_min")
    return _zadeh(mem, x, below=False)


_DISPATCH = {
    "max_c": recall_max_c,
    "min_d": recall_min_d,
    "zadeh_max": recall_zadeh_max,
    "zadeh_min": recall_zadeh_min,
}

_OPPOSITE = {"max_c": "min_d", "min_d": "max_c", "zadeh_max": "zadeh_min", "zadeh_min": "zadeh_max"}


@dataclass(frozen=True, eq=False)
class NegatedProjection:
    """``x -> eta(inner(eta(x)))``.

    This is the opposite-kind projection memory storing the negated patterns,
    not a memory of the original patterns.
    """

    inner: object
    eta: object = standard_negation

    @property
    def n(self) -> int:
        return self.inner.n

    def recall(self, x) -> np.ndarray:
        x = as_fuzzy_vector(x, self.n)
        return np.asarray(self.eta(self.inner.recall(self.eta(x))), dtype=np.float64)

    __call__ = recall

    def equivalent(self) -> ProjectionMemory:
        inner = self.inner
        if isinstance(inner, NegatedProjection):
            if isinstance(inner.inner, ProjectionMemory):
                return inner.inner
            return NegatedProjection(inner.inner.equivalent(), self.eta).equivalent()
        return ProjectionMemory(
            _OPPOSITE[inner.kind], self.eta(inner.memories), inner.family, inner.epsilon
        )


def negation_dual(mem, eta=None) -> NegatedProjection:
    base = mem
    while isinstance(base, NegatedProjection):
        base = base.inner
    fam = base.family
    if fam is not None and not (fam.negation_dual and fam.has_disjunctive_side):
        raise ConfigError(f"family {fam.name!r} has no negation-dual partner")
    if eta is None:
        eta = fam.negation if fam is not None else standard_negation
    return NegatedProjection(mem, eta)
