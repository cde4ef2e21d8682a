"""Independent exact-arithmetic reference implementations used by the tests.

Nothing here imports the engine's minor, elimination or ordering code:
wedge products are expanded factor by factor over the integers, the
revlex order is the set-theoretic definition, and elimination runs over
``fractions.Fraction``.
"""

from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
import random


def revlex_cmp(a, b):
    """a, b: frozensets of equal size. Least element of the symmetric difference decides."""
    if a == b:
        return 0
    m = min(a ^ b)
    return -1 if m in a else 1


def lex_cmp(a, b):
    if a == b:
        return 0
    m = max(a ^ b)
    return 1 if m in a else -1


def wedge_expand(columns, matrix):
    """Coefficients of (sum_i a_{i,c1} e_i) ^ ... ^ (sum_i a_{i,cd} e_i) keyed by frozenset."""
    n = len(matrix)
    acc = {(): 1}
    for c in columns:
        nxt = {}
        for word, coef in acc.items():
            for i in range(1, n + 1):
                a = matrix[i - 1][c - 1]
                if a == 0 or i in word:
                    continue
                # sign of moving e_i past the larger letters already in word
                sign = -1 if sum(1 for w in word if w > i) % 2 else 1
                key = tuple(sorted(word + (i,)))
                nxt[key] = nxt.get(key, 0) + sign * coef * a
        acc = {k: v for k, v in nxt.items() if v}
    return {frozenset(k): v for k, v in acc.items()}


def fraction_pivots(rows, ncols):
    m = [[Fraction(x) for x in r] for r in rows]
    pivots, top = [], 0
    for c in range(ncols):
        piv = next((i for i in range(top, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[top], m[piv] = m[piv], m[top]
        for i in range(top + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / m[top][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[top])]
        pivots.append(c)
        top += 1
    return pivots


def generic_integer_matrix(n, seed=20240611, bound=10**6):
    rng = random.Random(seed)
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]


def rational_initial_faces(n, faces, matrix, cmp=revlex_cmp):
    """Faces (as frozensets) of the complex whose ideal is in(matrix(J))."""
    out = {frozenset()}
    for d in range(1, n + 1):
        subsets = [frozenset(c) for c in combinations(range(1, n + 1), d)]
        cols = sorted(subsets, key=cmp_to_key(cmp), reverse=True)
        nonfaces = [s for s in subsets if s not in faces]
        rows = []
        for t in nonfaces:
            img = wedge_expand(sorted(t), matrix)
            rows.append([img.get(r, 0) for r in cols])
        initial = {cols[j] for j in fraction_pivots(rows, len(cols))} if rows else set()
        out.update(s for s in subsets if s not in initial)
    return out


def rational_shift(n, faces, seed=20240611, cmp=revlex_cmp):
    return rational_initial_faces(n, faces, generic_integer_matrix(n, seed), cmp)


def leibniz_det(rows):
    from itertools import permutations

    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total
