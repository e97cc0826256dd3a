"""Seeded corruption models: salt-and-pepper, additive Gaussian, horizontal motion blur.

Randomness comes from a Philox counter-based generator, so a given
``(input, spec)`` produces the same output on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .errors import ConfigError, DimensionError

__all__ = ["NOISE_KINDS", "NoiseSpec", "parse_noise", "corrupt", "corrupt_batch", "derive_seed", "default_levels"]

NOISE_KINDS = ("salt_pepper", "gaussian", "motion")
_RANGES = {"salt_pepper": (0.0, 0.5), "gaussian": (0.0, 0.5), "motion": (1, 20)}
_ALIASES = {"motion_blur": "motion", "sp": "salt_pepper", "salt-pepper": "salt_pepper"}


@dataclass(frozen=True)
class NoiseSpec:
    """``level`` is the probability rho, the variance, or the blur length in pixels."""

    kind: str
    level: float
    seed: int = 0

    def __post_init__(self):
        kind = _ALIASES.get(self.kind, self.kind)
        if kind not in NOISE_KINDS:
            raise ConfigError(f"unknown noise kind {self.kind!r}; choose one of {', '.join(NOISE_KINDS)}")
        object.__setattr__(self, "kind", kind)
        lo, hi = _RANGES[kind]
        level = self.level
        if kind == "motion":
            if float(level) != int(level):
                raise ConfigError("motion blur length must be an integer number of pixels")
            level = int(level)
        if not lo <= level <= hi:
            raise ConfigError(f"{kind} level {level} outside [{lo}, {hi}]")
        object.__setattr__(self, "level", level)

    def with_seed(self, seed: int) -> "NoiseSpec":
        return NoiseSpec(self.kind, self.level, seed)


def parse_noise(text: str, seed: int = 0) -> NoiseSpec:
    """Parse ``"salt_pepper:0.05"``, ``"gaussian:0.01"`` or ``"motion:9"``."""
    try:
        kind, level = text.split(":", 1)
        return NoiseSpec(kind.strip(), float(level), seed)
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"cannot parse noise spec {text!r}; expected KIND:LEVEL") from None


def default_levels(kind: str):
    """The sweep grids used for robustness curves."""
    kind = _ALIASES.get(kind, kind)
    if kind == "motion":
        return list(range(1, 21))
    if kind in ("salt_pepper", "gaussian"):
        return [round(0.05 * i, 2) for i in range(11)]
    raise ConfigError(f"unknown noise kind {kind!r}")


def derive_seed(seed: int, index: int) -> int:
    """Per-image seed: the run seed XOR the image index."""
    return (int(seed) ^ int(index)) & 0xFFFFFFFFFFFFFFFF


def _rng(seed):
    return np.random.Generator(np.random.Philox(int(seed) & 0xFFFFFFFFFFFFFFFF))


def corrupt(x, spec: NoiseSpec, shape: Optional[Tuple[int, int]] = None) -> np.ndarray:
    """Return a corrupted copy of ``x`` (flattened image, values in [0, 1]).

    ``shape`` is ``(height, width)`` and is required for motion blur.
    """
    x = np.asarray(x, dtype=np.float64)
    flat = x.ravel()
    if spec.kind == "salt_pepper":
        rng = _rng(spec.seed)
        hit = rng.random(flat.size) < spec.level
        salt = rng.random(flat.size) < 0.5
        out = np.where(hit, np.where(salt, 1.0, 0.0), flat)
    elif spec.kind == "gaussian":
        rng = _rng(spec.seed)
        out = np.clip(flat + rng.normal(0.0, np.sqrt(spec.level), flat.size), 0.0, 1.0)
        if spec.level == 0:
            out = flat.copy()
    else:
        if shape is None:
            if x.ndim != 2:
                raise ConfigError("motion blur needs the image geometry (height, width)")
            shape = x.shape
        h, w = shape
        if h * w != flat.size:
            raise DimensionError(f"geometry {h}x{w} does not match {flat.size} components")
        from scipy.ndimage import uniform_filter1d

        img = flat.reshape(h, w)
        out = np.clip(uniform_filter1d(img, size=spec.level, axis=1, mode="nearest"), 0.0, 1.0).ravel()
    return out.reshape(x.shape)


def corrupt_batch(X, spec: NoiseSpec, shape=None) -> np.ndarray:
    """Corrupt each row of ``X`` with seed ``derive_seed(spec.seed, row index)``."""
    X = np.asarray(X, dtype=np.float64)
    return np.vstack([corrupt(x, spec.with_seed(derive_seed(spec.seed, i)), shape) for i, x in enumerate(X)])
