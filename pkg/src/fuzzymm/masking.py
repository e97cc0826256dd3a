"""Similarity measures and noise masking.

Masking turns mixed noise into one-sided noise before recall: the input is
joined (dilative polarity) or met (erosive polarity) with the stored pattern
most similar to it.  A memory whose output lies below its input (max-C
projection, Zadeh max, min-D distributed) copes with dilative noise, so it is
paired with the dilative mask; the other kinds take the erosive mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .afmm import DistributedMemory
from .errors import ConfigError, DimensionError, NotFoundError
from .lattice import as_fuzzy_vector, as_memory_set, tally
from .pafmm import ProjectionMemory

__all__ = [
    "SimilarityMeasure",
    "MaskedMemory",
    "hamming_similarity",
    "get_similarity",
    "select_mask_index",
    "masked_recall",
    "natural_polarity",
]


def hamming_similarity(a, b) -> float:
    """``1 - mean(|a_i - b_i|)``."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")
    n = a.size
    # n subtractions, n absolute values folded into n-1 additions, one division, one subtraction
    tally(arithmetic=2 * n + 1)
    return 1.0 - float(np.abs(a - b).sum()) / n


@dataclass(frozen=True)
class SimilarityMeasure:
    name: str
    fn: Callable

    def __call__(self, a, b) -> float:
        return self.fn(a, b)


_SIMILARITIES = {"hamming": SimilarityMeasure("hamming", hamming_similarity)}


def get_similarity(similarity) -> SimilarityMeasure:
    if isinstance(similarity, SimilarityMeasure):
        return similarity
    if callable(similarity):
        return SimilarityMeasure(getattr(similarity, "__name__", "custom"), similarity)
    try:
        return _SIMILARITIES[similarity]
    except KeyError:
        raise NotFoundError(f"unknown similarity measure {similarity!r}") from None


def select_mask_index(x, memories, similarity="hamming") -> int:
    """0-based index of the first stored pattern most similar to ``x``."""
    sigma = get_similarity(similarity)
    A = as_memory_set(memories)
    x = as_fuzzy_vector(x, A.shape[1])
    scores = [sigma(x, a) for a in A]
    tally(comparisons=len(scores) - 1)
    return int(np.argmax(scores))  # argmax returns the first maximiser


def _nmse_or_inf(u, ref):
    den = float(np.dot(ref, ref))
    num = float(np.dot(u - ref, u - ref))
    if den == 0.0:
        return 0.0 if num == 0.0 else np.inf
    return num / den


def _select_by_nmse(x, A, dilative: bool) -> int:
    # compare each candidate mask with both the input and the stored pattern
    best, best_score = 0, np.inf
    for i, a in enumerate(A):
        d = np.maximum(x, a) if dilative else np.minimum(x, a)
        score = _nmse_or_inf(d, x) + _nmse_or_inf(d, a)
        if score < best_score:
            best, best_score = i, score
    return best


def natural_polarity(inner) -> str:
    if isinstance(inner, ProjectionMemory):
        return "dilative" if inner.kind in ("max_c", "zadeh_max") else "erosive"
    if isinstance(inner, DistributedMemory):
        return "dilative" if inner.kind == "min_d" else "erosive"
    raise ConfigError(f"cannot mask a {type(inner).__name__}")


@dataclass(frozen=True, eq=False)
class MaskedMemory:
    """A memory whose input is masked by its most similar stored pattern.

    ``memories`` defaults to the patterns of a projection memory; distributed
    memories do not keep their patterns, so they must be passed explicitly.
    ``strategy`` is ``"similarity"`` (argmax of ``similarity``) or
    ``"nmse-compare"`` (the mask closest to both input and pattern in NMSE).
    """

    inner: object
    memories: Optional[np.ndarray] = None
    similarity: object = "hamming"
    polarity: Optional[str] = None
    strategy: str = "similarity"

    def __post_init__(self):
        mem = self.memories
        if mem is None:
            if not isinstance(self.inner, ProjectionMemory):
                raise ConfigError("a distributed memory needs its fundamental memories for masking")
            mem = self.inner.memories
        mem = as_memory_set(mem)
        if mem.shape[1] != self.inner.n:
            raise DimensionError("mask patterns and memory have different lengths")
        object.__setattr__(self, "memories", mem)
        object.__setattr__(self, "similarity", get_similarity(self.similarity))
        natural = natural_polarity(self.inner)
        if self.polarity is None:
            object.__setattr__(self, "polarity", natural)
        elif self.polarity != natural:
            raise ConfigError(
                f"{self.polarity} masking does not suit this memory; it needs {natural} masking"
            )
        if self.strategy not in ("similarity", "nmse-compare"):
            raise ConfigError(f"unknown mask strategy {self.strategy!r}")

    @property
    def n(self) -> int:
        return self.inner.n

    def mask_index(self, x) -> int:
        if self.strategy == "similarity":
            return select_mask_index(x, self.memories, self.similarity)
        return _select_by_nmse(as_fuzzy_vector(x, self.n), self.memories, self.polarity == "dilative")

    def masked_input(self, x) -> np.ndarray:
        x = as_fuzzy_vector(x, self.n)
        a = self.memories[self.mask_index(x)]
        tally(comparisons=x.size)
        return np.maximum(x, a) if self.polarity == "dilative" else np.minimum(x, a)

    def recall(self, x) -> np.ndarray:
        return self.inner.recall(self.masked_input(x))

    __call__ = recall


def masked_recall(mem: MaskedMemory, x) -> np.ndarray:
    return mem.recall(x)
