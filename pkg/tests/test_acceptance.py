"""End-to-end acceptance checks, one test per criterion.

Each test collects every failing sub-check before asserting, and records a
verdict that the terminal summary prints as a PASS/FAIL line.
"""

import itertools
import json
import subprocess
import sys
import time

import numpy as np

from fuzzymm import (
    ModelConfig,
    ProjectionMemory,
    build_bank,
    counting,
    evaluate,
    negation_dual,
    nmse,
    train_fla,
)
from fuzzymm.cli import main

import oracles
from conftest import MEMORIES, PROBE, record_criterion

PRINTED = 0.005  # published values carry two decimals
EXACT_TOL = 1e-12
LEFT_IDENTITY = ("godel", "goguen", "lukasiewicz", "gaines")
# families whose operators keep quarter-step values on the quarter grid
GRID_CLOSED = ("godel", "lukasiewicz", "gaines")


def compare(failures, name, computed, expected, tol):
    err = float(np.max(np.abs(np.subtract(computed, expected))))
    if not err <= tol:
        failures.append(f"{name} off by {err:.4g} (tol {tol:g})")
    return err


def finish(number, title, failures, detail=""):
    record_criterion(number, title, failures, detail)
    assert not failures, "; ".join(failures)


def test_worked_example_distributed_memory():
    failures = []
    weights = [
        [0.0, 0.8, 0.8, 0.8],
        [0.7, 0.0, 0.7, 0.5],
        [0.7, 0.7, 0.0, 0.7],
        [0.8, 0.8, 0.8, 0.0],
    ]
    outputs = {
        "godel": [0.40, 0.30, 0.70, 0.70],
        "goguen": [0.40, 0.30, 0.70, 0.53],
        "lukasiewicz": [0.40, 0.30, 0.70, 0.40],
        "gaines": [0.40, 0.30, 0.80, 0.70],
    }
    start = time.perf_counter()
    compare(failures, "Gödel weight matrix", train_fla(MEMORIES, "godel", "min_d").weights, weights, EXACT_TOL)
    for fam, expected in outputs.items():
        compare(failures, f"{fam} recall", train_fla(MEMORIES, fam, "min_d").recall(PROBE), expected, PRINTED)
    elapsed = time.perf_counter() - start
    if elapsed > 0.1:
        failures.append(f"took {elapsed:.3f} s")
    finish(1, "distributed memory worked example", failures, f"{elapsed * 1e3:.1f} ms")


def test_worked_example_projection_memory():
    failures = []
    y, trace = ProjectionMemory("max_c", MEMORIES, "godel").recall_with_trace(PROBE)
    compare(failures, "Gödel coefficients", trace.coefficients, [1.0, 0.3, 0.3], PRINTED)
    outputs = {
        "godel": [0.40, 0.30, 0.70, 0.30],
        "goguen": [0.40, 0.30, 0.70, 0.34],
        "lukasiewicz": [0.40, 0.30, 0.70, 0.40],
    }
    for fam, expected in outputs.items():
        compare(failures, f"{fam} recall", ProjectionMemory("max_c", MEMORIES, fam).recall(PROBE), expected, PRINTED)
    finish(2, "projection memory worked example", failures)


def test_compensatory_and_has_no_perfect_recall():
    failures = []
    mem = ProjectionMemory("max_c", MEMORIES, "compensatory_and")
    outputs = [
        [0.40, 0.27, 0.47, 0.20],
        [0.10, 0.39, 0.30, 0.44],
        [0.52, 0.37, 0.40, 0.20],
    ]
    for i, expected in enumerate(outputs):
        y, trace = mem.recall_with_trace(MEMORIES[i])
        if i == 0:
            compare(failures, "coefficients", trace.coefficients, [0.39, 0.06, 0.23], PRINTED)
        compare(failures, f"recall of pattern {i + 1}", y, expected, PRINTED)
        if np.array_equal(y, MEMORIES[i]):
            failures.append(f"pattern {i + 1} was recalled perfectly")
    finish(3, "compensatory-and example, no perfect recall", failures)


def test_zadeh_recall_and_nmse_table():
    failures = []
    a1 = MEMORIES[0]
    y, trace = ProjectionMemory("zadeh_max", MEMORIES).recall_with_trace(PROBE)
    if not np.array_equal(y, a1) or trace.index_set != {0}:
        failures.append(f"Zadeh recall {y.tolist()} with index set {sorted(trace.index_set)}")
    recalled = [PROBE]
    recalled += [train_fla(MEMORIES, fam, "min_d").recall(PROBE) for fam in LEFT_IDENTITY]
    recalled += [ProjectionMemory("max_c", MEMORIES, fam).recall(PROBE) for fam in ("godel", "goguen", "lukasiewicz")]
    recalled.append(y)
    columns = ["input", "M_M", "M_P", "M_L", "M_G", "V_M", "V_P", "V_L", "V_Z"]
    row = [0.33, 0.32, 0.14, 0.05, 0.33, 0.01, 0.02, 0.05, 0.00]
    for col, v, expected in zip(columns, recalled, row):
        compare(failures, f"NMSE {col}", nmse(v, a1), expected, PRINTED)
    finish(4, "Zadeh example and NMSE row", failures)


# property suite -------------------------------------------------------------

INSTANCES = 1000


def random_memories(rng):
    n, k = int(rng.integers(1, 17)), int(rng.integers(1, 9))
    A = rng.random((k, n))
    if rng.random() < 0.3:
        # quarter-grid patterns exercise ties and the bounds 0 and 1
        A = np.round(A * 4) / 4
    return A


def test_recall_properties_on_random_instances():
    rng = np.random.default_rng(20240611)
    failures = []
    counts = dict.fromkeys(("perfect recall", "sandwich", "negation dual", "unique containment"), 0)

    for _ in range(INSTANCES):
        A = random_memories(rng)
        fam = LEFT_IDENTITY[rng.integers(len(LEFT_IDENTITY))]
        for kind in ("max_c", "min_d"):
            mem = ProjectionMemory(kind, A, fam)
            for xi, a in enumerate(A):
                if not np.array_equal(mem.recall(a), a):
                    failures.append(f"{kind}/{fam} lost pattern {xi}")
        counts["perfect recall"] += 1

    for _ in range(INSTANCES):
        A = random_memories(rng)
        x = rng.random(A.shape[1])
        fam = (*LEFT_IDENTITY, "compensatory_and")[rng.integers(5)]
        mems = [ProjectionMemory("max_c", A, fam), ProjectionMemory("zadeh_max", A), ProjectionMemory("zadeh_min", A)]
        if fam != "compensatory_and":
            mems.append(ProjectionMemory("min_d", A, fam))
        for mem in mems:
            y = mem.recall(x)
            below = mem.kind in ("max_c", "zadeh_max")
            if not (np.all(y <= x) if below else np.all(y >= x)):
                failures.append(f"{mem.kind}/{fam} broke the sandwich bound")
            if np.max(np.abs(mem.recall(y) - y)) > EXACT_TOL:
                failures.append(f"{mem.kind}/{fam} is not idempotent")
        counts["sandwich"] += 1

    worst = 0.0
    for _ in range(INSTANCES):
        A = random_memories(rng)
        x = rng.random(A.shape[1])
        fam = LEFT_IDENTITY[rng.integers(len(LEFT_IDENTITY))]
        for mem in (ProjectionMemory("max_c", A, fam), ProjectionMemory("min_d", A, fam),
                    ProjectionMemory("zadeh_max", A), ProjectionMemory("zadeh_min", A)):
            dual = negation_dual(mem)
            worst = max(worst, float(np.max(np.abs(dual.recall(x) - dual.equivalent().recall(x)))))
        counts["negation dual"] += 1
    if worst > EXACT_TOL:
        failures.append(f"negation dual differs by {worst:.3g}")

    attempts = 0
    while counts["unique containment"] < INSTANCES:
        attempts += 1
        A = random_memories(rng)
        n = A.shape[1]
        g = int(rng.integers(A.shape[0]))
        noise = rng.random(n) * rng.random() * (rng.random(n) < 0.7)
        up, down = np.minimum(A[g] + noise, 1.0), np.maximum(A[g] - noise, 0.0)
        if np.sum(np.all(A <= up, axis=1)) != 1 or np.sum(np.all(A >= down, axis=1)) != 1:
            continue
        if not np.array_equal(ProjectionMemory("zadeh_max", A).recall(up), A[g]):
            failures.append("zadeh_max missed the unique contained pattern")
        if not np.array_equal(ProjectionMemory("zadeh_min", A).recall(down), A[g]):
            failures.append("zadeh_min missed the unique containing pattern")
        counts["unique containment"] += 1

    detail = ", ".join(f"{k} x{v}" for k, v in counts.items()) + f", dual max err {worst:.1g}, {attempts} containment draws"
    finish(5, "recall properties on random instances", sorted(set(failures)), detail)


# brute force on the quarter grid -----------------------------------------

MAX_SETS = 400


def memory_sets(n, k, rng):
    vectors = oracles.all_vectors(n)
    sets = list(itertools.combinations_with_replacement(range(len(vectors)), k))
    if len(sets) > MAX_SETS:
        sets = [sets[i] for i in rng.choice(len(sets), MAX_SETS, replace=False)]
    return [np.array([vectors[i] for i in s]) for s in sets]


def oracle_distributed(fam, kind, A, X):
    """Scalar FLA weights and recall for every row of X."""
    rows = A.tolist()
    n = len(rows[0])
    if kind == "min_d":
        M = oracles.fla_min_d_weights(fam, rows)
        return np.array([oracles.min_d_product(fam, M, x) for x in X.tolist()])
    W = [[min(oracles.I(fam, a[j], a[i]) for a in rows) for j in range(n)] for i in range(n)]
    return np.array([[max(oracles.C(fam, W[i][j], x[j]) for j in range(n)) for i in range(n)] for x in X.tolist()])


def projection_bound(fixed, X, below):
    """Join of the fixed points under each input, or meet of those above it."""
    if below:
        inside = np.all(fixed[None, :, :] <= X[:, None, :], axis=2)
        return np.max(np.where(inside[:, :, None], fixed[None], 0.0), axis=1)
    inside = np.all(fixed[None, :, :] >= X[:, None, :], axis=2)
    return np.min(np.where(inside[:, :, None], fixed[None], 1.0), axis=1)


def all_combinations(fam, A, kind):
    op = oracles.C if kind == "max_c" else oracles.D
    agg = max if kind == "max_c" else min
    k, n = A.shape
    return np.array([[agg(op(fam, lam[x], A[x, i]) for x in range(k)) for i in range(n)]
                     for lam in itertools.product(oracles.GRID, repeat=k)])


def test_brute_force_on_quarter_grid():
    rng = np.random.default_rng(7)
    failures = []
    start = time.perf_counter()
    cases = 0
    for n, k in itertools.product((1, 2, 3), (1, 2)):
        X = np.array(oracles.all_vectors(n))
        for A in memory_sets(n, k, rng):
            for fam in GRID_CLOSED:
                for kind in ("min_d", "max_c"):
                    # fixed points of a distributed memory: recall is the projection onto them
                    mem = train_fla(A, fam, kind)
                    Y = np.array([mem.recall(x) for x in X])
                    if not np.array_equal(Y, oracle_distributed(fam, kind, A, X)):
                        failures.append(f"{kind}/{fam} distributed recall disagrees with the scalar oracle")
                    fixed = X[np.all(Y == X, axis=1)]
                    if not np.array_equal(Y, projection_bound(fixed, X, below=kind == "min_d")):
                        failures.append(f"{kind}/{fam} distributed recall is not the fixed-point projection")

                    # projection memories pick the best combination of the stored patterns
                    proj = ProjectionMemory(kind, A, fam)
                    Y = np.array([proj.recall(x) for x in X])
                    best = projection_bound(all_combinations(fam, A, kind), X, below=kind == "max_c")
                    if not np.array_equal(Y, best):
                        failures.append(f"{kind}/{fam} projection recall is not the optimal combination")
                    cases += len(X)
    # the scalar oracle and the vectorized bound agree on a sample
    A = np.array([[0.25, 0.75, 0.5], [1.0, 0.0, 0.25]])
    for x in oracles.all_vectors(3):
        expected = oracles.best_max_c_combination_below("lukasiewicz", x, A.tolist())
        if ProjectionMemory("max_c", A, "lukasiewicz").recall(x).tolist() != expected:
            failures.append("scalar optimal-combination oracle disagrees")
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        failures.append(f"took {elapsed:.1f} s")
    finish(6, "brute-force fixed points and optimal combinations", sorted(set(failures)),
           f"{cases} recalls checked in {elapsed:.1f} s")


# operation counts ------------------------------------------------------------

def counted(fn, x):
    with counting() as c:
        fn(x)
    return c


def test_operation_counts_match_closed_forms():
    rng = np.random.default_rng(3)
    failures = []
    ratios = []
    for n, k in ((8, 3), (64, 10)):
        A, x = rng.random((k, n)), rng.random(n)
        for kind in ("min_d", "max_c"):
            c = counted(train_fla(A, "goguen", kind).recall, x)
            if (c.fuzzy_op_evals, c.comparisons) != (n * n, (2 * n - 1) * n):
                failures.append(f"distributed {kind} ({n},{k}): {c.fuzzy_op_evals} evals, {c.comparisons} comparisons")
            p = counted(ProjectionMemory(kind, A, "goguen").recall, x)
            if (p.fuzzy_op_evals, p.comparisons) != (2 * n * k, (2 * n - 1) * k + (k - 1) * n):
                failures.append(f"projection {kind} ({n},{k}): {p.fuzzy_op_evals} evals, {p.comparisons} comparisons")
        for kind in ("zadeh_max", "zadeh_min"):
            z = counted(ProjectionMemory(kind, A).recall, x)
            if z.fuzzy_op_evals or z.arithmetic:
                failures.append(f"{kind} ({n},{k}) used {z.fuzzy_op_evals} evals")
        ratio = c.total / p.total
        ratios.append(ratio)
        if not 0.5 <= ratio / (n / k) <= 0.75:
            failures.append(f"ratio {ratio:.3g} is not proportional to n/k = {n / k:.3g}")
    if not ratios[1] > ratios[0]:
        failures.append("ratio did not grow with n/k")
    finish(7, "operation counts", failures, "distributed/projection ratios " + ", ".join(f"{r:.2f}" for r in ratios))


# synthetic classification benchmark -----------------------------------------

CLASSES, PER_CLASS, DIM, REPS = 10, 5, 100, 30


def synthetic_prototypes(seed):
    rng = np.random.Generator(np.random.Philox(seed))
    centres = rng.uniform(0.2, 0.8, (CLASSES, DIM))
    protos = np.clip(centres[:, None, :] + rng.uniform(-0.05, 0.05, (CLASSES, PER_CLASS, DIM)), 0, 1)
    flat = protos.reshape(-1, DIM)
    gaps = np.max(np.abs(flat[:, None] - flat[None]), axis=2)
    cls = np.repeat(np.arange(CLASSES), PER_CLASS)
    separation = float(gaps[cls[:, None] != cls[None]].min())
    return protos, separation


def synthetic_rr(protos, noise):
    bank = build_bank({f"c{i}": protos[i] for i in range(CLASSES)}, config=ModelConfig())
    X = np.clip(protos.reshape(-1, DIM) + noise, 0, 1)
    labels = [f"c{i}" for i in range(CLASSES) for _ in range(PER_CLASS)]
    return evaluate(bank, X, labels).overall_rr, X


def test_synthetic_bank_and_face_pipeline(tmp_path):
    failures = []
    dilative, mixed = [], []
    for rep in range(REPS):
        protos, sep = synthetic_prototypes(1000 + rep)
        if sep <= 0.3:
            failures.append(f"rep {rep}: separation {sep:.3f}")
        rng = np.random.Generator(np.random.Philox(5000 + rep))

        rr, X = synthetic_rr(protos, rng.uniform(0, 0.1, (CLASSES * PER_CLASS, DIM)))
        own = protos.reshape(-1, DIM)
        for i, x in enumerate(X):
            inside = np.all(protos[i // PER_CLASS] <= x, axis=1)
            if inside.sum() != 1 or not inside[i % PER_CLASS]:
                failures.append(f"rep {rep}: input {i} is not uniquely contained")
        if not np.all(X >= own):
            failures.append(f"rep {rep}: dilative noise went negative")
        dilative.append(rr)

        bound = sep / 2
        noise = rng.uniform(-bound, bound, (CLASSES * PER_CLASS, DIM))
        mixed.append(synthetic_rr(protos, noise)[0])
    if min(dilative) != 1.0:
        failures.append(f"dilative RR fell to {min(dilative)}")
    if min(mixed) < 0.95:
        failures.append(f"mixed-noise RR fell to {min(mixed)}")

    # the AT&T layout: forty subjects, ten 112x92 images each
    rng = np.random.default_rng(11)
    root = tmp_path / "att"
    for s in range(1, 41):
        base = rng.integers(30, 226, (112, 92))
        d = root / f"s{s}"
        d.mkdir(parents=True)
        for i in range(1, 11):
            img = np.clip(base + rng.integers(-10, 11, base.shape), 0, 255).astype(np.uint8)
            (d / f"{i}.pgm").write_bytes(b"P5\n92 112\n255\n" + img.tobytes())
    out = tmp_path / "report.json"
    code = main(["eval", "--images", str(root), "--size", "23x28", "--first", "5", "--out", str(out)])
    if code != 0:
        failures.append(f"eval on the AT&T layout exited {code}")
    else:
        report = json.loads(out.read_text())
        if report["n_test"] != 200 or len(report["labels"]) != 40:
            failures.append(f"eval used {report['n_test']} test images over {len(report['labels'])} subjects")

    detail = f"dilative RR min {min(dilative)}, mixed RR min {min(mixed):.3f} over {REPS} reps"
    finish(8, "synthetic benchmark and face pipeline", sorted(set(failures)), detail)


def test_verify_paper_command():
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "fuzzymm.cli", "verify-paper"], capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    failures = []
    if proc.returncode != 0:
        failed = [line.split()[1] for line in proc.stdout.splitlines() if line.startswith("FAIL")]
        failures.append(f"exit {proc.returncode}, failing checks: {', '.join(failed) or proc.stderr.strip()}")
    if elapsed >= 1.0:
        failures.append(f"took {elapsed:.2f} s")
    finish(9, "verify-paper command", failures, f"{elapsed:.2f} s")
