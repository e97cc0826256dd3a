"""Walk through the four-dimensional worked example.

Three patterns are stored; the probe is a corrupted copy of the first one.
Each memory model is run on the probe and its NMSE against the first
pattern is printed, so the models can be compared side by side.
"""

import numpy as np

from fuzzymm import ProjectionMemory, nmse, train_fla

A = np.array([
    [0.4, 0.3, 0.7, 0.2],
    [0.1, 0.7, 0.5, 0.8],
    [0.8, 0.5, 0.4, 0.2],
])
x = np.array([0.4, 0.3, 0.8, 0.7])


def show(name, y):
    print(f"{name:<31} {np.array2string(y, precision=3)}   NMSE {nmse(y, A[0]):.4f}")


print("Distributed memory, Gödel co-implication weights:")
print(train_fla(A, "godel", "min_d").weights, "\n")

show("probe", x)
for fam in ("godel", "goguen", "lukasiewicz", "gaines"):
    show(f"distributed min-D, {fam}", train_fla(A, fam, "min_d").recall(x))

for fam in ("godel", "goguen", "lukasiewicz"):
    y, trace = ProjectionMemory("max_c", A, fam).recall_with_trace(x)
    show(f"projection max-C, {fam}", y)
    print(f"{'':31} coefficients {np.array2string(trace.coefficients, precision=3)}")

y, trace = ProjectionMemory("zadeh_max", A).recall_with_trace(x)
show("Zadeh max", y)
print(f"{'':31} patterns below the probe: {sorted(trace.index_set)}")

# compensatory-and lacks a left identity, so stored patterns are not fixed points
comp = ProjectionMemory("max_c", A, "compensatory_and")
print("\nCompensatory-and recall of the stored patterns:")
for a in A:
    print(" ", a, "->", np.round(comp.recall(a), 4))
