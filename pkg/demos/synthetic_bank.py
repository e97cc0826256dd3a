"""A ten-class memory bank on synthetic prototypes.

Each class stores five noisy copies of a random centre in [0,1]^100.  The
bank recalls the input with every class memory and picks the class whose
recall is most similar to the input.  Operation counts show why the
projection models scale with n*k while distributed ones scale with n^2.
"""

import numpy as np

from fuzzymm import ModelConfig, OpCounter, build_bank, counting, evaluate

rng = np.random.Generator(np.random.Philox(42))
centres = rng.uniform(0.2, 0.8, (10, 100))
protos = np.clip(centres[:, None] + rng.uniform(-0.05, 0.05, (10, 5, 100)), 0, 1)
labels = [f"class{i}" for i in range(10) for _ in range(5)]
X = protos.reshape(-1, 100)
noisy = np.clip(X + rng.uniform(-0.15, 0.15, X.shape), 0, 1)

for kind, family in (("zadeh_max", None), ("max_c", "godel"), ("afmm_min_d", "lukasiewicz")):
    bank = build_bank(dict(zip(labels[::5], protos)), config=ModelConfig(kind=kind, family=family))
    c = OpCounter()
    with counting(c):
        report = evaluate(bank, noisy, labels)
    print(f"{kind:<11} RR {report.overall_rr:.2f}   fuzzy ops {c.fuzzy_op_evals:>9}   comparisons {c.comparisons:>9}")
