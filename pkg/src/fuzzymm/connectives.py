"""Scalar fuzzy connectives on the unit interval.

Every operator accepts scalars or numpy arrays (broadcast elementwise) and
returns ``float64`` values.  Branch conditions such as ``x <= y`` use exact
floating-point comparison.

Builtin families
----------------
``godel``            minimum / Gödel implication, maximum / Gödel co-implication
``goguen``           product / Goguen implication, probabilistic sum / Goguen co-implication
``lukasiewicz``      Łukasiewicz conjunction, implication, disjunction, co-implication
``gaines``           Gaines conjunction, implication, disjunction, co-implication
``compensatory_and`` the compensatory "and" and its residual implication only
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, NotFoundError

BinaryOp = Callable[[np.ndarray, np.ndarray], np.ndarray]
UnaryOp = Callable[[np.ndarray], np.ndarray]

__all__ = [
    "ConnectiveFamily",
    "AdjunctionReport",
    "FAMILY_NAMES",
    "builtin_family",
    "residual_implication",
    "residual_coimplication",
    "check_adjunction",
    "check_negation_duality",
    "standard_negation",
    "unit_scalar",
    "clamp_unit",
]


def unit_scalar(value) -> float:
    """Return ``value`` as a float, rejecting anything outside [0, 1]."""
    v = float(value)
    if not 0.0 <= v <= 1.0:
        raise DomainError(f"{value!r} is not in [0, 1]")
    return v


def clamp_unit(value) -> float:
    """Return ``value`` clipped into [0, 1]."""
    v = float(value)
    if np.isnan(v):
        raise DomainError("NaN cannot be clamped into [0, 1]")
    return min(1.0, max(0.0, v))


def _f(x):
    return np.asarray(x, dtype=np.float64)


def _out(r):
    r = np.asarray(r, dtype=np.float64)
    return r[()] if r.ndim == 0 else r


def standard_negation(x):
    return _out(1.0 - _f(x))


# Gödel -------------------------------------------------------------------

def conj_min(x, y):
    return _out(np.minimum(_f(x), _f(y)))


def impl_godel(x, y):
    x, y = _f(x), _f(y)
    return _out(np.where(x <= y, 1.0, y))


def disj_max(x, y):
    return _out(np.maximum(_f(x), _f(y)))


def coimpl_godel(x, y):
    x, y = _f(x), _f(y)
    return _out(np.where(x >= y, 0.0, y))


# Goguen ------------------------------------------------------------------

def conj_product(x, y):
    return _out(_f(x) * _f(y))


def impl_goguen(x, y):
    x, y = _f(x), _f(y)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        return _out(np.where(x <= y, 1.0, y / x))


def disj_probsum(x, y):
    x, y = _f(x), _f(y)
    return _out(x + y - x * y)


def coimpl_goguen(x, y):
    # residual of the probabilistic sum: (y - x) / (1 - x) when x < y
    x, y = _f(x), _f(y)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        return _out(np.where(x >= y, 0.0, (y - x) / (1.0 - x)))


# Łukasiewicz -------------------------------------------------------------

def conj_lukasiewicz(x, y):
    x, y = _f(x), _f(y)
    # x == 1 branch keeps C(1, y) == y bit-exact
    return _out(np.where(x == 1.0, y, np.maximum(0.0, x + y - 1.0)))


def impl_lukasiewicz(x, y):
    x, y = _f(x), _f(y)
    return _out(np.where(x <= y, 1.0, 1.0 - x + y))


def disj_lukasiewicz(x, y):
    return _out(np.minimum(1.0, _f(x) + _f(y)))


def coimpl_lukasiewicz(x, y):
    return _out(np.maximum(0.0, _f(y) - _f(x)))


# Gaines ------------------------------------------------------------------

def conj_gaines(x, y):
    x, y = _f(x), _f(y)
    return _out(np.where(x == 0.0, 0.0, y))


def impl_gaines(x, y):
    x, y = _f(x), _f(y)
    return _out(np.where(x <= y, 1.0, 0.0))


def disj_gaines(x, y):
    x, y = _f(x), _f(y)
    return _out(np.where(x == 1.0, 1.0, y))


def coimpl_gaines(x, y):
    x, y = _f(x), _f(y)
    return _out(np.where(x >= y, 0.0, 1.0))


# compensatory and ---------------------------------------------------------

def conj_compensatory(x, y):
    x, y = _f(x), _f(y)
    p = x * y
    return _out(np.sqrt(np.maximum(0.0, p * (x + y - p))))


def impl_compensatory(x, y):
    """Residual of the compensatory "and".

    For 0 < x < 1 this is the positive root of
    ``x(1-x) t**2 + x**2 t - y**2 = 0`` capped at 1.
    """
    x, y = _f(x), _f(y)
    x, y = np.broadcast_arrays(x, y)
    q = x * (1.0 - x)
    disc = np.maximum(0.0, x**4 + 4.0 * q * y * y)
    with np.errstate(divide="ignore", invalid="ignore"):
        interior = np.minimum(1.0, (-x * x + np.sqrt(disc)) / (2.0 * q))
    r = np.where(x == 0.0, 1.0, np.where(x == 1.0, y * y, interior))
    return _out(r)


@dataclass(frozen=True)
class ConnectiveFamily:
    """A conjunction/implication pair, optionally with its dual disjunction side.

    ``c_identity`` and ``d_identity`` are left identities of ``C`` and ``D``
    (``None`` when the operator has none).  ``negation_dual`` declares that
    ``D`` and ``J`` are obtained from ``C`` and ``I`` through ``negation``.
    """

    name: str
    C: BinaryOp
    I: BinaryOp
    D: Optional[BinaryOp] = None
    J: Optional[BinaryOp] = None
    negation: UnaryOp = standard_negation
    c_identity: Optional[float] = None
    d_identity: Optional[float] = None
    negation_dual: bool = False

    @property
    def has_disjunctive_side(self) -> bool:
        return self.D is not None and self.J is not None

    @property
    def builtin(self) -> bool:
        return _FAMILIES.get(self.name) is self


_FAMILIES = {
    "godel": ConnectiveFamily(
        "godel", conj_min, impl_godel, disj_max, coimpl_godel,
        c_identity=1.0, d_identity=0.0, negation_dual=True,
    ),
    "goguen": ConnectiveFamily(
        "goguen", conj_product, impl_goguen, disj_probsum, coimpl_goguen,
        c_identity=1.0, d_identity=0.0, negation_dual=True,
    ),
    "lukasiewicz": ConnectiveFamily(
        "lukasiewicz", conj_lukasiewicz, impl_lukasiewicz, disj_lukasiewicz,
        coimpl_lukasiewicz, c_identity=1.0, d_identity=0.0, negation_dual=True,
    ),
    # any e != 0 (resp. e != 1) is a left identity of C_G (resp. D_G)
    "gaines": ConnectiveFamily(
        "gaines", conj_gaines, impl_gaines, disj_gaines, coimpl_gaines,
        c_identity=1.0, d_identity=0.0, negation_dual=True,
    ),
    "compensatory_and": ConnectiveFamily(
        "compensatory_and", conj_compensatory, impl_compensatory,
    ),
}

FAMILY_NAMES = tuple(_FAMILIES)

_CLOSED_FORM_I = {f.C: f.I for f in _FAMILIES.values()}
_CLOSED_FORM_J = {f.D: f.J for f in _FAMILIES.values() if f.D is not None}


def builtin_family(name: str) -> ConnectiveFamily:
    try:
        return _FAMILIES[name]
    except KeyError:
        raise NotFoundError(
            f"unknown connective family {name!r}; choose one of {', '.join(FAMILY_NAMES)}"
        ) from None


def residual_implication(C: BinaryOp, x, y, iterations: int = 60) -> float:
    """``sup{t in [0,1] : C(t, x) <= y}``.

    Builtin conjunctions use their closed-form implication; any other ``C``
    (assumed nondecreasing in its first argument) is inverted by bisection.
    """
    x, y = unit_scalar(x), unit_scalar(y)
    closed = _CLOSED_FORM_I.get(C)
    if closed is not None:
        return float(closed(x, y))
    if float(C(1.0, x)) <= y:
        return 1.0
    lo, hi = 0.0, 1.0
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if float(C(mid, x)) <= y:
            lo = mid
        else:
            hi = mid
    return lo


def residual_coimplication(D: BinaryOp, x, y, iterations: int = 60) -> float:
    """``inf{t in [0,1] : D(t, x) >= y}``; bisection fallback as above."""
    x, y = unit_scalar(x), unit_scalar(y)
    closed = _CLOSED_FORM_J.get(D)
    if closed is not None:
        return float(closed(x, y))
    if float(D(0.0, x)) >= y:
        return 0.0
    lo, hi = 0.0, 1.0
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if float(D(mid, x)) >= y:
            hi = mid
        else:
            lo = mid
    return hi


@dataclass(frozen=True)
class AdjunctionReport:
    passed: bool
    checked: int
    side: Optional[str] = None  # "IC" or "DJ" for the failing equivalence
    counterexample: Optional[tuple] = None  # (a, x, y)

    def __bool__(self):
        return self.passed


def _grid(g):
    if g < 2:
        raise ValueError("grid_resolution must be >= 2")
    return np.linspace(0.0, 1.0, g)


def check_adjunction(family: ConnectiveFamily, grid_resolution: int = 21,
                     atol: float = 1e-9) -> AdjunctionReport:
    """Exhaustively test ``I(a,x) >= y <=> x >= C(y,a)`` (and the D/J dual) on a grid.

    ``atol`` only absorbs rounding in closed forms such as ``1 - x + y``.
    """
    t = _grid(grid_resolution)
    a, x, y = np.meshgrid(t, t, t, indexing="ij")
    checked = 0
    lhs = family.I(a, x) >= y - atol
    rhs = x >= family.C(y, a) - atol
    bad = np.argwhere(lhs != rhs)
    checked += a.size
    if bad.size:
        i = tuple(bad[0])
        return AdjunctionReport(False, checked, "IC", (a[i], x[i], y[i]))
    if family.has_disjunctive_side:
        lhs = family.J(a, x) <= y + atol
        rhs = x <= family.D(y, a) + atol
        bad = np.argwhere(lhs != rhs)
        checked += a.size
        if bad.size:
            i = tuple(bad[0])
            return AdjunctionReport(False, checked, "DJ", (a[i], x[i], y[i]))
    return AdjunctionReport(True, checked)


def check_negation_duality(family: ConnectiveFamily, grid_resolution: int = 21,
                           atol: float = 1e-12) -> bool:
    """True when D and J are the negation duals of C and I on the grid."""
    if not family.has_disjunctive_side:
        return False
    t = _grid(grid_resolution)
    x, y = np.meshgrid(t, t, indexing="ij")
    eta = family.negation
    d_ok = np.allclose(family.D(x, y), eta(family.C(eta(x), eta(y))), rtol=0, atol=atol)
    with np.errstate(divide="ignore", invalid="ignore"):
        j_ok = np.allclose(family.J(x, y), eta(family.I(eta(x), eta(y))), rtol=0, atol=atol)
    return bool(d_ok and j_ok)
