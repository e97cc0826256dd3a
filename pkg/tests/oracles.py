"""Pure-Python reference implementations used as test oracles.

Nothing here imports the package under test or numpy: every routine is a
direct transcription of a textbook definition, written for clarity rather
than speed, so the library can be checked against it.
"""

import itertools
import math

GRID_STEP = 0.25
GRID = tuple(i * GRID_STEP for i in range(5))  # {0, .25, .5, .75, 1}


# scalar connectives, transcribed from their closed forms --------------------

def C(family, x, y):
    if family == "godel":
        return min(x, y)
    if family == "goguen":
        return x * y
    if family == "lukasiewicz":
        return max(0.0, x + y - 1.0)
    if family == "gaines":
        return 0.0 if x == 0 else y
    raise KeyError(family)


def I(family, x, y):
    if family == "godel":
        return 1.0 if x <= y else y
    if family == "goguen":
        return 1.0 if x <= y else y / x
    if family == "lukasiewicz":
        return min(1.0, 1.0 - x + y)
    if family == "gaines":
        return 1.0 if x <= y else 0.0
    raise KeyError(family)


def D(family, x, y):
    return 1.0 - C(family, 1.0 - x, 1.0 - y)


def J(family, x, y):
    return 1.0 - I(family, 1.0 - x, 1.0 - y)


# brute-force recall --------------------------------------------------------

def leq(u, v):
    return all(a <= b for a, b in zip(u, v))


def join(vectors, n):
    out = [0.0] * n
    for v in vectors:
        out = [max(a, b) for a, b in zip(out, v)]
    return out


def meet(vectors, n):
    out = [1.0] * n
    for v in vectors:
        out = [min(a, b) for a, b in zip(out, v)]
    return out


def max_c_combination(family, lam, memories):
    n = len(memories[0])
    return [max(C(family, l, a[i]) for l, a in zip(lam, memories)) for i in range(n)]


def best_max_c_combination_below(family, x, memories, grid=GRID):
    """Join of every max-C combination (grid coefficients) lying below x."""
    n = len(x)
    below = [z for lam in itertools.product(grid, repeat=len(memories))
             if leq(z := max_c_combination(family, lam, memories), x)]
    return join(below, n)


def fla_min_d_weights(family, memories):
    n = len(memories[0])
    return [[max(J(family, a[j], a[i]) for a in memories) for j in range(n)] for i in range(n)]


def min_d_product(family, M, x):
    n = len(x)
    return [min(D(family, M[i][j], x[j]) for j in range(n)) for i in range(n)]


def all_vectors(n, grid=GRID):
    return [list(v) for v in itertools.product(grid, repeat=n)]


def hamming_similarity(a, b):
    return 1.0 - sum(abs(p - q) for p, q in zip(a, b)) / len(a)


def nmse(x, a):
    return sum((p - q) ** 2 for p, q in zip(x, a)) / sum(q * q for q in a)


def logistic(z):
    return 1.0 / (1.0 + math.exp(-z))


def bilinear(img, width, height):
    """Scalar bilinear resize, pixel-centre aligned, clamped at the borders."""
    H, W = len(img), len(img[0])
    out = []
    for r in range(height):
        sy = min(max((r + 0.5) * H / height - 0.5, 0.0), H - 1)
        y0 = int(math.floor(sy))
        y1 = min(y0 + 1, H - 1)
        fy = sy - y0
        row = []
        for c in range(width):
            sx = min(max((c + 0.5) * W / width - 0.5, 0.0), W - 1)
            x0 = int(math.floor(sx))
            x1 = min(x0 + 1, W - 1)
            fx = sx - x0
            top = img[y0][x0] * (1 - fx) + img[y0][x1] * fx
            bot = img[y1][x0] * (1 - fx) + img[y1][x1] * fx
            row.append(top * (1 - fy) + bot * fy)
        out.append(row)
    return out
