"""JSON documents for trained memories and banks.

Every document is an envelope ``{"format": "fuzzymm", "version": 1, "model": ...}``.
Real numbers are written as decimal strings with 17 significant digits, which
round-trip float64 values exactly.
"""

from __future__ import annotations

import json
from dataclasses import asdict

import numpy as np

from .afmm import DistributedMemory
from .classifier import MemoryBank, ModelConfig
from .connectives import builtin_family
from .errors import ConfigError, FileError, FormatError
from .masking import MaskedMemory
from .pafmm import ProjectionMemory

__all__ = ["to_dict", "from_dict", "dumps", "loads", "save", "load"]

FORMAT = "fuzzymm"
VERSION = 1


def _enc(a) -> list:
    return [format(float(v), ".17g") for v in np.asarray(a, dtype=np.float64).ravel()]


def _dec(values, shape) -> np.ndarray:
    return np.array([float(v) for v in values], dtype=np.float64).reshape(shape)


def _family_name(fam):
    if fam is None:
        return None
    if not fam.builtin:
        raise ConfigError(f"custom connective family {fam.name!r} cannot be serialized")
    return fam.name


def _model(obj) -> dict:
    if isinstance(obj, DistributedMemory):
        return {"type": "distributed", "kind": obj.kind, "family": _family_name(obj.family),
                "n": obj.n, "weights": _enc(obj.weights)}
    if isinstance(obj, ProjectionMemory):
        return {"type": "projection", "kind": obj.kind, "family": _family_name(obj.family),
                "k": obj.k, "n": obj.n, "epsilon": format(obj.epsilon, ".17g"),
                "memories": _enc(obj.memories)}
    if isinstance(obj, MaskedMemory):
        k, n = obj.memories.shape
        return {"type": "masked", "polarity": obj.polarity, "strategy": obj.strategy,
                "similarity": obj.similarity.name, "k": k, "n": n,
                "memories": _enc(obj.memories), "inner": _model(obj.inner)}
    if isinstance(obj, MemoryBank):
        return {"type": "bank", "similarity": obj.similarity.name, "labels": list(obj.labels),
                "config": None if obj.config is None else asdict(obj.config),
                "models": [_model(m) for m in obj.models]}
    raise ConfigError(f"cannot serialize {type(obj).__name__}")


def _build(d: dict):
    try:
        t = d["type"]
        if t == "distributed":
            n = int(d["n"])
            fam = builtin_family(d["family"])
            return DistributedMemory(d["kind"], _dec(d["weights"], (n, n)), fam)
        if t == "projection":
            k, n = int(d["k"]), int(d["n"])
            return ProjectionMemory(d["kind"], _dec(d["memories"], (k, n)),
                                    d.get("family"), float(d.get("epsilon", "0")))
        if t == "masked":
            k, n = int(d["k"]), int(d["n"])
            return MaskedMemory(_build(d["inner"]), _dec(d["memories"], (k, n)),
                                d.get("similarity", "hamming"), d["polarity"], d.get("strategy", "similarity"))
        if t == "bank":
            cfg = d.get("config")
            return MemoryBank(tuple(d["labels"]), tuple(_build(m) for m in d["models"]),
                              d.get("similarity", "hamming"), None if cfg is None else ModelConfig(**cfg))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise FormatError(f"malformed model document: {exc}") from exc
    raise FormatError(f"unknown model type {d.get('type')!r}")


def to_dict(obj) -> dict:
    return {"format": FORMAT, "version": VERSION, "model": _model(obj)}


def from_dict(doc: dict):
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise FormatError("not a fuzzymm model document")
    if doc.get("version") != VERSION:
        raise FormatError(f"unsupported document version {doc.get('version')!r}")
    return _build(doc["model"])


def dumps(obj) -> str:
    return json.dumps(to_dict(obj))


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return from_dict(doc)


def save(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FileError(f"cannot read model file {path}: {exc.strerror or exc}") from exc
    return loads(text)
