"""Memory-bank classifier: one autoassociative memory per class.

An input is assigned to the first class whose memory recalls the vector most
similar to the input.  Scores are always computed against the recalled
vectors, never against raw training patterns.
"""

from __future__ import annotations

import csv
import io
import json
import time
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np

from .afmm import train_fla
from .connectives import builtin_family
from .errors import ConfigError, DimensionError, NotFoundError
from .lattice import as_fuzzy_vector, as_memory_set
from .masking import MaskedMemory, get_similarity
from .metrics import nmse
from .pafmm import ProjectionMemory, ZADEH_KINDS

__all__ = [
    "MODEL_KINDS",
    "ModelConfig",
    "MemoryBank",
    "EvalReport",
    "build_model",
    "build_bank",
    "classify",
    "evaluate",
    "nmse",
]

MODEL_KINDS = ("zadeh_max", "zadeh_min", "max_c", "min_d", "afmm_max_c", "afmm_min_d")


@dataclass(frozen=True)
class ModelConfig:
    kind: str = "zadeh_max"
    family: Optional[str] = None
    mask: bool = True
    mask_strategy: str = "similarity"
    similarity: str = "hamming"
    epsilon: float = 0.0

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise ConfigError(f"unknown model kind {self.kind!r}; choose one of {', '.join(MODEL_KINDS)}")
        if self.kind in ZADEH_KINDS:
            if self.family not in (None, "gaines"):
                raise ConfigError("Zadeh memories take no connective family")
        elif self.family is None:
            raise ConfigError(f"kind {self.kind!r} needs --family")
        else:
            fam = builtin_family(self.family)
            if self.kind in ("min_d", "afmm_min_d") and not fam.has_disjunctive_side:
                raise ConfigError(f"family {fam.name!r} has no disjunctive side for kind {self.kind!r}")
            if self.kind.startswith("afmm") and fam.c_identity is None:
                raise ConfigError(f"family {fam.name!r} is not supported by distributed memories")


def build_model(memories, config: ModelConfig = ModelConfig()):
    A = as_memory_set(memories)
    if config.kind.startswith("afmm_"):
        model = train_fla(A, config.family, config.kind[len("afmm_"):])
    else:
        model = ProjectionMemory(config.kind, A, config.family, config.epsilon)
    if config.mask:
        model = MaskedMemory(model, A, config.similarity, strategy=config.mask_strategy)
    return model


@dataclass(frozen=True, eq=False)
class MemoryBank:
    labels: tuple
    models: tuple
    similarity: object = "hamming"
    config: Optional[ModelConfig] = None

    def __post_init__(self):
        if len(self.labels) != len(self.models) or not self.labels:
            raise ConfigError("a bank needs one model per label and at least one class")
        if len(set(self.labels)) != len(self.labels):
            raise ConfigError("class labels must be unique")
        if len({m.n for m in self.models}) != 1:
            raise DimensionError("all class memories must share the vector length")
        object.__setattr__(self, "similarity", get_similarity(self.similarity))

    @property
    def n(self) -> int:
        return self.models[0].n

    def scores(self, x) -> np.ndarray:
        x = as_fuzzy_vector(x, self.n)
        return np.array([self.similarity(x, m.recall(x)) for m in self.models])

    def classify(self, x):
        s = self.scores(x)
        return self.labels[int(np.argmax(s))], s


def _group(data, labels) -> "OrderedDict":
    if labels is None:
        if not isinstance(data, Mapping):
            raise ConfigError("pass labels or a mapping label -> vectors")
        return OrderedDict((lab, list(vs)) for lab, vs in data.items())
    X = np.asarray(data, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] != len(labels):
        raise DimensionError(f"{len(labels)} labels for data of shape {X.shape}")
    groups: OrderedDict = OrderedDict()
    for lab, x in zip(labels, X):
        groups.setdefault(lab, []).append(x)
    return groups


def build_bank(data, labels: Optional[Sequence] = None, config: ModelConfig = ModelConfig()) -> MemoryBank:
    """Train one memory per class.

    ``data`` is either an ``(N, n)`` array with ``labels`` or a mapping
    ``label -> vectors``.  Class order is the order of first appearance.
    """
    groups = _group(data, labels)
    if not groups:
        raise ConfigError("no training data")
    lengths = set()
    for lab, vs in groups.items():
        if len(vs) == 0:
            raise ConfigError(f"class {lab!r} has no training vectors")
        lengths.update(np.asarray(v).shape for v in vs)
    if len(lengths) != 1:
        raise DimensionError(f"training vectors have mixed lengths {sorted(lengths)}")
    models = tuple(build_model(np.vstack(vs), config) for vs in groups.values())
    return MemoryBank(tuple(groups), models, config.similarity, config)


def classify(bank: MemoryBank, x):
    return bank.classify(x)


@dataclass
class EvalReport:
    labels: tuple
    per_class_rr: dict
    overall_rr: float
    confusion: np.ndarray
    elapsed: float
    predictions: list = field(default_factory=list)

    @property
    def total(self) -> int:
        return int(self.confusion.sum())

    def to_csv(self, fh=None) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["label", "n_test", "correct", "rr"])
        for i, lab in enumerate(self.labels):
            row = self.confusion[i]
            rr = self.per_class_rr[lab]
            w.writerow([lab, int(row.sum()), int(row[i]), "" if rr is None else format(rr, ".17g")])
        w.writerow(["__overall__", self.total, int(np.trace(self.confusion)), format(self.overall_rr, ".17g")])
        text = buf.getvalue()
        if fh is not None:
            fh.write(text)
        return text

    def to_dict(self) -> dict:
        return {
            "labels": [str(lab) for lab in self.labels],
            "per_class_rr": {str(k): v for k, v in self.per_class_rr.items()},
            "overall_rr": self.overall_rr,
            "confusion": self.confusion.tolist(),
            "elapsed_seconds": self.elapsed,
            "n_test": self.total,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def evaluate(bank: MemoryBank, vectors, labels: Sequence) -> EvalReport:
    X = np.asarray(vectors, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] == 0:
        raise DimensionError("the test set must be a non-empty (N, n) array")
    if X.shape[0] != len(labels):
        raise DimensionError(f"{len(labels)} labels for {X.shape[0]} test vectors")
    index = {lab: i for i, lab in enumerate(bank.labels)}
    c = len(bank.labels)
    confusion = np.zeros((c, c), dtype=np.int64)
    predictions = []
    start = time.perf_counter()
    for x, lab in zip(X, labels):
        if lab not in index:
            raise NotFoundError(f"test label {lab!r} is not a class of the bank")
        pred, _ = bank.classify(x)
        predictions.append(pred)
        confusion[index[lab], index[pred]] += 1
    elapsed = time.perf_counter() - start
    per_class = {}
    for lab, i in index.items():
        tot = confusion[i].sum()
        per_class[lab] = float(confusion[i, i] / tot) if tot else None
    overall = float(np.trace(confusion) / confusion.sum())
    return EvalReport(bank.labels, per_class, overall, confusion, elapsed, predictions)
