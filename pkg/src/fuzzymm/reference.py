"""Published worked-example values and a self-contained checker for them.

The fixture is a four-dimensional memory set of three patterns and one
dilated copy of the first pattern.  ``run_reference_checks`` recomputes every
published quantity with this package and compares it with the printed value
(two decimals, so the tolerance is 0.005 unless noted).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .afmm import train_fla
from .metrics import nmse
from .pafmm import ProjectionMemory

__all__ = ["ReferenceFixture", "CheckResult", "FIXTURE", "run_reference_checks"]

PRINT_TOL = 0.005


def _ro(a):
    a = np.array(a, dtype=np.float64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class ReferenceFixture:
    memories: np.ndarray = field(default_factory=lambda: _ro([
        [0.4, 0.3, 0.7, 0.2],
        [0.1, 0.7, 0.5, 0.8],
        [0.8, 0.5, 0.4, 0.2],
    ]))
    probe: np.ndarray = field(default_factory=lambda: _ro([0.4, 0.3, 0.8, 0.7]))
    godel_min_d_weights: np.ndarray = field(default_factory=lambda: _ro([
        [0.00, 0.80, 0.80, 0.80],
        [0.70, 0.00, 0.70, 0.50],
        [0.70, 0.70, 0.00, 0.70],
        [0.80, 0.80, 0.80, 0.00],
    ]))
    afmm_min_d: dict = field(default_factory=lambda: {
        "godel": (0.40, 0.30, 0.70, 0.70),
        "goguen": (0.40, 0.30, 0.70, 0.53),
        "lukasiewicz": (0.40, 0.30, 0.70, 0.40),
        "gaines": (0.40, 0.30, 0.80, 0.70),
    })
    godel_coefficients: tuple = (1.0, 0.3, 0.3)
    pafmm_max_c: dict = field(default_factory=lambda: {
        "godel": (0.40, 0.30, 0.70, 0.30),
        "goguen": (0.40, 0.30, 0.70, 0.34),
        "lukasiewicz": (0.40, 0.30, 0.70, 0.40),
    })
    compensatory_coefficients: tuple = (0.39, 0.06, 0.23)
    compensatory_outputs: tuple = (
        (0.40, 0.27, 0.47, 0.20),
        (0.10, 0.39, 0.30, 0.44),
        (0.52, 0.37, 0.40, 0.20),
    )
    zadeh_index_set: frozenset = frozenset({0})
    # NMSE w.r.t. the first pattern, in this column order
    nmse_row: tuple = (
        ("probe", 0.33),
        ("afmm_min_d_godel", 0.32),
        ("afmm_min_d_goguen", 0.14),
        ("afmm_min_d_lukasiewicz", 0.05),
        ("afmm_min_d_gaines", 0.33),
        ("pafmm_max_c_godel", 0.01),
        ("pafmm_max_c_goguen", 0.02),
        ("pafmm_max_c_lukasiewicz", 0.05),
        ("zadeh_max", 0.00),
    )


FIXTURE = ReferenceFixture()


@dataclass(frozen=True)
class CheckResult:
    name: str
    description: str
    passed: bool
    max_error: float
    tolerance: float
    computed: tuple
    expected: tuple
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "passed": self.passed,
            "max_error": self.max_error,
            "tolerance": self.tolerance,
            "computed": [format(v, ".17g") for v in self.computed],
            "expected": list(self.expected),
            "note": self.note,
        }


def _truncation_note(computed, expected):
    c = np.asarray(computed, dtype=np.float64)
    e = np.asarray(expected, dtype=np.float64)
    bad = np.abs(c - e) > PRINT_TOL
    trunc = np.floor(c * 100 + 1e-9) / 100
    if bad.any() and np.allclose(trunc[bad], e[bad], atol=1e-12):
        return "printed value equals the computed value truncated (not rounded) to 2 decimals"
    return ""


def _check(name, description, computed, expected, tol=PRINT_TOL):
    c = tuple(float(v) for v in np.ravel(computed))
    e = tuple(float(v) for v in np.ravel(expected))
    err = float(np.max(np.abs(np.subtract(c, e)))) if len(c) == len(e) else float("inf")
    passed = err <= tol
    note = "" if passed else _truncation_note(c, e)
    return CheckResult(name, description, passed, err, tol, c, e, note)


def run_reference_checks(fixture: ReferenceFixture = FIXTURE) -> list:
    A, x = np.asarray(fixture.memories), np.asarray(fixture.probe)
    a1 = A[0]
    results = []
    recalled = {"probe": x}

    W = train_fla(A, "godel", "min_d").weights
    results.append(_check("fla_weights_godel",
                          "adjunction-learned min-D weight matrix, Gödel co-implication",
                          W, fixture.godel_min_d_weights, tol=1e-12))

    for fam, expected in fixture.afmm_min_d.items():
        y = train_fla(A, fam, "min_d").recall(x)
        recalled[f"afmm_min_d_{fam}"] = y
        results.append(_check(f"afmm_min_d_{fam}", f"distributed min-D recall of the probe, {fam}", y, expected))

    for fam, expected in fixture.pafmm_max_c.items():
        y, trace = ProjectionMemory("max_c", A, fam).recall_with_trace(x)
        recalled[f"pafmm_max_c_{fam}"] = y
        if fam == "godel":
            results.append(_check("pafmm_coefficients_godel", "projection coefficients of the probe, Gödel",
                                  trace.coefficients, fixture.godel_coefficients))
        results.append(_check(f"pafmm_max_c_{fam}", f"max-C projection recall of the probe, {fam}", y, expected))

    comp = ProjectionMemory("max_c", A, "compensatory_and")
    for i, expected in enumerate(fixture.compensatory_outputs):
        y, trace = comp.recall_with_trace(A[i])
        if i == 0:
            results.append(_check("compensatory_coefficients",
                                  "compensatory-and coefficients for the first pattern",
                                  trace.coefficients, fixture.compensatory_coefficients))
        results.append(_check(f"compensatory_recall_{i + 1}",
                              f"compensatory-and recall of pattern {i + 1} (not a fixed point)", y, expected))

    y, trace = ProjectionMemory("zadeh_max", A).recall_with_trace(x)
    recalled["zadeh_max"] = y
    ok = trace.index_set == fixture.zadeh_index_set and np.array_equal(y, a1)
    results.append(CheckResult("zadeh_max_recall", "Zadeh max recall returns the first pattern exactly",
                               bool(ok), float(np.max(np.abs(y - a1))), 0.0, tuple(map(float, y)),
                               tuple(map(float, a1))))

    for col, expected in fixture.nmse_row:
        results.append(_check(f"nmse_{col}", f"NMSE of {col} against the first pattern",
                              [nmse(recalled[col], a1)], [expected]))
    return results
