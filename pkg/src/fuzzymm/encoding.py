"""Encoding raw inputs into fuzzy vectors.

Two encoders are provided: grayscale images resized and flattened row-major,
and precomputed embedding vectors squashed into (0, 1) by a logistic of their
per-component z-score.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ConfigError, DimensionError, FileError, FormatError

__all__ = [
    "LUMA_WEIGHTS",
    "EmbeddingStats",
    "to_grayscale",
    "resize_bilinear",
    "image_to_vector",
    "read_image",
    "fit_embedding_stats",
    "standardize_logistic",
]

LUMA_WEIGHTS = (0.299, 0.587, 0.114)
SD_FLOOR = 1e-8


def to_grayscale(img) -> np.ndarray:
    """Return a 2-D float image; colour images are reduced with luma weights."""
    a = np.asarray(img, dtype=np.float64)
    if a.size == 0:
        raise FormatError("empty image")
    if a.ndim == 3:
        if a.shape[2] in (3, 4):
            a = a[..., :3] @ np.asarray(LUMA_WEIGHTS)
        elif a.shape[2] in (1, 2):
            a = a[..., 0]
        else:
            raise FormatError(f"unsupported channel count {a.shape[2]}")
    if a.ndim != 2:
        raise FormatError(f"expected a 2-D or 3-D image, got shape {a.shape}")
    return a


def resize_bilinear(img, width: int, height: int) -> np.ndarray:
    """Bilinear resize with pixel-centre alignment and edge clamping.

    Output pixel ``(r, c)`` samples the source at
    ``((r + 0.5) * H / height - 0.5, (c + 0.5) * W / width - 0.5)``; there is
    no antialiasing prefilter.
    """
    a = np.asarray(img, dtype=np.float64)
    if width < 1 or height < 1:
        raise ConfigError("target dimensions must be >= 1")
    H, W = a.shape
    if (H, W) == (height, width):
        return a.copy()

    def coords(n_out, n_in):
        s = (np.arange(n_out) + 0.5) * (n_in / n_out) - 0.5
        s = np.clip(s, 0.0, n_in - 1)
        i0 = np.floor(s).astype(int)
        i1 = np.minimum(i0 + 1, n_in - 1)
        return i0, i1, s - i0

    r0, r1, fr = coords(height, H)
    c0, c1, fc = coords(width, W)
    top = a[r0][:, c0] * (1 - fc) + a[r0][:, c1] * fc
    bot = a[r1][:, c0] * (1 - fc) + a[r1][:, c1] * fc
    return top * (1 - fr)[:, None] + bot * fr[:, None]


def image_to_vector(img, target_w: int, target_h: int) -> np.ndarray:
    """Grayscale, resize to ``target_w x target_h`` and flatten row-major into [0,1]^n."""
    g = to_grayscale(img)
    return np.clip(resize_bilinear(g, target_w, target_h), 0.0, 1.0).ravel()


def read_image(path) -> np.ndarray:
    """Read a PGM/PNG (or any Pillow-readable) image as floats in [0, 1]."""
    from PIL import Image, UnidentifiedImageError

    p = Path(path)
    if not p.is_file():
        raise FileError(f"no such image file: {p}")
    try:
        with Image.open(p) as im:
            im.load()
            if im.mode == "P":
                im = im.convert("RGBA" if "transparency" in im.info else "RGB")
            arr = np.asarray(im)
            mode = im.mode
    except (UnidentifiedImageError, OSError) as exc:
        raise FormatError(f"cannot decode image {p}: {exc}") from exc
    if arr.size == 0:
        raise FormatError(f"empty image {p}")
    if mode == "1":
        scale = 1.0
    elif arr.dtype == np.uint8:
        scale = 255.0
    elif mode.startswith("I;16") or arr.dtype == np.uint16 or (mode == "I" and arr.max() > 255):
        scale = 65535.0
    elif mode == "F":
        scale = 1.0
    else:
        scale = 255.0
    return to_grayscale(arr.astype(np.float64) / scale)


@dataclass(frozen=True)
class EmbeddingStats:
    mu: np.ndarray
    sd: np.ndarray

    @property
    def dimension(self) -> int:
        return self.mu.size


def fit_embedding_stats(training_vectors) -> EmbeddingStats:
    """Componentwise mean and population standard deviation (floored at 1e-8)."""
    V = np.asarray(training_vectors, dtype=np.float64)
    if V.ndim != 2:
        raise DimensionError(f"expected an (N, d) array, got shape {V.shape}")
    if V.shape[0] < 2:
        raise ConfigError("at least two training vectors are needed to fit statistics")
    mu = V.mean(axis=0)
    sd = np.maximum(V.std(axis=0, ddof=0), SD_FLOOR)
    return EmbeddingStats(mu, sd)


def standardize_logistic(v, stats: EmbeddingStats) -> np.ndarray:
    """``1 / (1 + exp(-(v - mu) / sd))`` componentwise; accepts one vector or a batch."""
    from scipy.special import expit

    v = np.asarray(v, dtype=np.float64)
    if v.shape[-1] != stats.dimension:
        raise DimensionError(f"expected dimension {stats.dimension}, got {v.shape[-1]}")
    # keep the open interval even where expit saturates in float64
    return np.clip(expit((v - stats.mu) / stats.sd), np.finfo(np.float64).tiny, 1.0 - 2.0**-53)
