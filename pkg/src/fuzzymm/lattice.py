"""Max-C / min-D matrix algebra on [0,1] with optional operation counting.

Counting is off by default.  Inside ``with counting() as c:`` every product,
combination and reduction adds its cost to ``c``:

* ``fuzzy_op_evals`` - evaluations of C, I, D or J;
* ``comparisons``    - pairwise max/min inside reductions (``m`` operands cost
  ``m - 1``), plus whatever the calling recall routine charges explicitly;
* ``arithmetic``     - plain floating-point operations (similarity measures).

Costs are computed from operand shapes, so the counters never touch the
numerical hot path.
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError

__all__ = [
    "OpCounter",
    "counting",
    "tally",
    "as_fuzzy_vector",
    "as_fuzzy_matrix",
    "as_memory_set",
    "max_c_product",
    "min_d_product",
    "max_c_combination",
    "min_d_combination",
]


@dataclass
class OpCounter:
    fuzzy_op_evals: int = 0
    comparisons: int = 0
    arithmetic: int = 0

    def reset(self):
        self.fuzzy_op_evals = self.comparisons = self.arithmetic = 0

    def merge(self, other: "OpCounter") -> "OpCounter":
        return OpCounter(
            self.fuzzy_op_evals + other.fuzzy_op_evals,
            self.comparisons + other.comparisons,
            self.arithmetic + other.arithmetic,
        )

    @property
    def total(self) -> int:
        return self.fuzzy_op_evals + self.comparisons + self.arithmetic


_active: contextvars.ContextVar = contextvars.ContextVar("fuzzymm_counter", default=None)


@contextlib.contextmanager
def counting(counter: OpCounter | None = None):
    """Activate ``counter`` (a fresh one by default) for the enclosed block."""
    counter = OpCounter() if counter is None else counter
    token = _active.set(counter)
    try:
        yield counter
    finally:
        _active.reset(token)


def tally(evals: int = 0, comparisons: int = 0, arithmetic: int = 0) -> None:
    c = _active.get()
    if c is not None:
        c.fuzzy_op_evals += int(evals)
        c.comparisons += int(comparisons)
        c.arithmetic += int(arithmetic)


def _check_range(arr, what):
    if arr.size and (np.isnan(arr).any() or arr.min() < 0.0 or arr.max() > 1.0):
        raise DomainError(f"{what} has entries outside [0, 1]")


def as_fuzzy_vector(x, n: int | None = None) -> np.ndarray:
    """Validate and return ``x`` as a 1-D float64 array in [0,1]^n."""
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1 or v.size == 0:
        raise DimensionError(f"expected a non-empty vector, got shape {v.shape}")
    if n is not None and v.size != n:
        raise DimensionError(f"expected length {n}, got {v.size}")
    _check_range(v, "vector")
    return v


def as_fuzzy_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.float64)
    if m.ndim != 2 or m.size == 0:
        raise DimensionError(f"expected a non-empty matrix, got shape {m.shape}")
    _check_range(m, "matrix")
    return m


def as_memory_set(memories) -> np.ndarray:
    """Stack a fundamental memory set into a ``(k, n)`` array (row ``xi`` = ``a^xi``)."""
    if isinstance(memories, np.ndarray):
        arr = np.asarray(memories, dtype=np.float64)
        if arr.ndim == 1:
            arr = arr[None, :]
    else:
        rows = [np.asarray(m, dtype=np.float64) for m in memories]
        if not rows:
            raise DimensionError("the fundamental memory set is empty")
        lengths = {r.shape for r in rows}
        if len(lengths) != 1 or rows[0].ndim != 1:
            raise DimensionError(f"memories must be vectors of equal length, got {sorted(lengths)}")
        arr = np.vstack(rows)
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise DimensionError(f"bad memory set shape {arr.shape}")
    _check_range(arr, "memory set")
    return arr


def _as_2d(b):
    b = np.asarray(b, dtype=np.float64)
    return (b[:, None], True) if b.ndim == 1 else (b, False)


def max_c_product(A, B, C) -> np.ndarray:
    """``G = A o B`` with ``g_ij = max_xi C(a_i,xi, b_xi,j)``.

    ``B`` may be a vector, in which case a vector is returned.
    """
    A = np.asarray(A, dtype=np.float64)
    B, vec = _as_2d(B)
    if A.ndim != 2 or A.shape[1] != B.shape[0]:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    m, k = A.shape
    n = B.shape[1]
    if n == 1:
        G = np.max(C(A, B[:, 0][None, :]), axis=1, keepdims=True)
    else:
        G = np.full((m, n), 0.0)
        # accumulate over the inner index to keep memory at O(mn)
        for xi in range(k):
            np.maximum(G, C(A[:, xi][:, None], B[xi][None, :]), out=G)
    tally(evals=m * k * n, comparisons=m * (k - 1) * n)
    return G[:, 0] if vec else G


def min_d_product(A, B, D) -> np.ndarray:
    """``H = A . B`` with ``h_ij = min_xi D(a_i,xi, b_xi,j)``."""
    A = np.asarray(A, dtype=np.float64)
    B, vec = _as_2d(B)
    if A.ndim != 2 or A.shape[1] != B.shape[0]:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    m, k = A.shape
    n = B.shape[1]
    if n == 1:
        H = np.min(D(A, B[:, 0][None, :]), axis=1, keepdims=True)
    else:
        H = np.full((m, n), 1.0)
        for xi in range(k):
            np.minimum(H, D(A[:, xi][:, None], B[xi][None, :]), out=H)
    tally(evals=m * k * n, comparisons=m * (k - 1) * n)
    return H[:, 0] if vec else H


def _combination_args(coeffs, memories):
    lam = np.asarray(coeffs, dtype=np.float64)
    A = as_memory_set(memories)
    if lam.ndim != 1 or lam.size != A.shape[0]:
        raise DimensionError(f"{lam.size} coefficients for {A.shape[0]} memories")
    _check_range(lam, "coefficients")
    return lam, A


def max_c_combination(coeffs, memories, C) -> np.ndarray:
    """``z_i = max_xi C(lambda_xi, a_i^xi)``."""
    lam, A = _combination_args(coeffs, memories)
    k, n = A.shape
    z = np.max(C(lam[:, None], A), axis=0)
    tally(evals=k * n, comparisons=(k - 1) * n)
    return np.asarray(z, dtype=np.float64)


def min_d_combination(coeffs, memories, D) -> np.ndarray:
    """``y_i = min_xi D(theta_xi, a_i^xi)``."""
    theta, A = _combination_args(coeffs, memories)
    k, n = A.shape
    y = np.min(D(theta[:, None], A), axis=0)
    tally(evals=k * n, comparisons=(k - 1) * n)
    return np.asarray(y, dtype=np.float64)
