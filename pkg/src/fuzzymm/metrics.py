"""Error measures between fuzzy vectors."""

import numpy as np

from .errors import DimensionError


def nmse(x, a) -> float:
    """Normalized mean squared error ``||x - a||^2 / ||a||^2`` of ``x`` w.r.t. target ``a``."""
    x = np.asarray(x, dtype=np.float64)
    a = np.asarray(a, dtype=np.float64)
    if x.shape != a.shape:
        raise DimensionError(f"shape mismatch {x.shape} vs {a.shape}")
    den = float(np.dot(a, a))
    if den == 0.0:
        raise ZeroDivisionError("NMSE is undefined for a zero target vector")
    d = x - a
    return float(np.dot(d, d)) / den
