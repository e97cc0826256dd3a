"""Reading and writing labelled vector datasets.

Encoded datasets are UTF-8 CSV files with a mandatory header
``label,x0,x1,...``; one row per item, components written with 17
significant digits.  Image datasets are folders holding one sub-folder per
class; files are ordered naturally (``2.pgm`` before ``10.pgm``).
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

import numpy as np

from .encoding import image_to_vector, read_image
from .errors import ConfigError, FileError, FormatError

IMAGE_SUFFIXES = {".pgm", ".png", ".jpg", ".jpeg", ".bmp", ".tif", ".tiff", ".ppm"}


@dataclass
class Dataset:
    vectors: np.ndarray
    labels: list
    shape: Optional[Tuple[int, int]] = None  # (height, width) for image data

    def __len__(self):
        return len(self.labels)

    def first_n_split(self, n_train: int):
        """First ``n_train`` items of every class for training, the rest for testing."""
        if n_train < 1:
            raise ConfigError("the training split needs at least one item per class")
        seen: dict = {}
        train_idx, test_idx = [], []
        for i, lab in enumerate(self.labels):
            c = seen.get(lab, 0)
            (train_idx if c < n_train else test_idx).append(i)
            seen[lab] = c + 1
        short = [lab for lab, c in seen.items() if c <= n_train]
        if len(short) == len(seen):
            raise ConfigError(f"no class has more than {n_train} items; nothing left to test")
        return self.subset(train_idx), self.subset(test_idx)

    def subset(self, idx) -> "Dataset":
        idx = list(idx)
        return Dataset(self.vectors[idx], [self.labels[i] for i in idx], self.shape)


def _natural_key(s: str):
    return [int(t) if t.isdigit() else t.lower() for t in re.split(r"(\d+)", s)]


def write_vectors_csv(path, vectors, labels) -> None:
    V = np.asarray(vectors, dtype=np.float64)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["label"] + [f"x{i}" for i in range(V.shape[1])])
        for lab, v in zip(labels, V):
            w.writerow([lab] + [format(float(c), ".17g") for c in v])


def _read_rows(path):
    p = Path(path)
    if not p.is_file():
        raise FileError(f"no such file: {p}")
    with open(p, newline="", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if r]
    if not rows:
        raise FormatError(f"{p} is empty")
    return p, rows


def read_vectors_csv(path, header: Optional[bool] = None) -> Dataset:
    """Read ``label,c1,...,cn`` rows.  ``header=None`` detects a header row."""
    p, rows = _read_rows(path)
    if header is None:
        try:
            [float(c) for c in rows[0][1:]]
            header = False
        except ValueError:
            header = True
    body = rows[1:] if header else rows
    if not body:
        raise FormatError(f"{p} has no data rows")
    widths = {len(r) for r in body}
    if len(widths) != 1:
        raise FormatError(f"{p}: rows have different numbers of columns")
    try:
        V = np.array([[float(c) for c in r[1:]] for r in body], dtype=np.float64)
    except ValueError as exc:
        raise FormatError(f"{p}: non-numeric component ({exc})") from exc
    return Dataset(V, [r[0] for r in body])


def load_image_folder(root, size: Tuple[int, int]) -> Dataset:
    """Encode every image below ``root/<label>/`` at ``size = (width, height)``."""
    root = Path(root)
    if not root.is_dir():
        raise FileError(f"no such image directory: {root}")
    width, height = size
    vectors, labels = [], []
    for cls in sorted((d for d in root.iterdir() if d.is_dir()), key=lambda d: _natural_key(d.name)):
        files = sorted((f for f in cls.iterdir() if f.suffix.lower() in IMAGE_SUFFIXES),
                       key=lambda f: _natural_key(f.name))
        for f in files:
            vectors.append(image_to_vector(read_image(f), width, height))
            labels.append(cls.name)
    if not vectors:
        raise FileError(f"no images found below {root}")
    return Dataset(np.vstack(vectors), labels, (height, width))


def parse_size(text: str) -> Tuple[int, int]:
    """``"23x28"`` -> ``(23, 28)`` as (width, height)."""
    m = re.fullmatch(r"\s*(\d+)\s*[xX]\s*(\d+)\s*", text)
    if not m or int(m.group(1)) < 1 or int(m.group(2)) < 1:
        raise ConfigError(f"bad size {text!r}; expected WIDTHxHEIGHT")
    return int(m.group(1)), int(m.group(2))
