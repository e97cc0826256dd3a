"""Dilative noise, erosive noise and masking.

Zadeh's max model recovers a pattern exactly whenever it is the only stored
pattern lying below the input, which makes it immune to purely dilative
noise.  Mixed noise breaks that premise.  Masking the input with its most
similar stored pattern (x OR a) restores it.
"""

import numpy as np

from fuzzymm import MaskedMemory, ProjectionMemory

rng = np.random.default_rng(1)
A = rng.random((6, 40))
a = A[2]
zadeh = ProjectionMemory("zadeh_max", A)
masked = MaskedMemory(zadeh)

dilated = np.minimum(a + rng.uniform(0, 0.15, a.size), 1)
print("dilative noise, plain Zadeh:  exact =", np.array_equal(zadeh(dilated), a))

mixed = np.clip(a + rng.uniform(-0.15, 0.15, a.size), 0, 1)
print("mixed noise, plain Zadeh:     exact =", np.array_equal(zadeh(mixed), a),
      " (output is the zero vector:", not zadeh(mixed).any(), ")")
print("mixed noise, masked Zadeh:    exact =", np.array_equal(masked(mixed), a),
      " mask index", masked.mask_index(mixed))

# the dual model handles erosive noise
eroded = np.maximum(a - rng.uniform(0, 0.15, a.size), 0)
print("erosive noise, Zadeh min:     exact =", np.array_equal(ProjectionMemory("zadeh_min", A)(eroded), a))
