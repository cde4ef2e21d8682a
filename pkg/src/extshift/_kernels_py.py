"""Pure-Python kernels: modular row reduction and compound-matrix minors.

Interface shared with the compiled ``_kernels`` extension:

* ``echelon_pivots(rows, ncols, p)`` takes a list of integer rows (entries
  already reduced mod ``p``) and returns the ascending pivot column list.
* ``compound_levels(phi, dmax, p)`` takes an n x n matrix as a list of rows
  and returns ``levels`` where ``levels[k][i][j]`` is the k x k minor of
  ``phi`` on row subset ``i`` and column subset ``j``; subsets of size k are
  indexed by their colex rank (increasing integer order of 0-based masks).
"""

from math import comb


def echelon_pivots(rows, ncols, p):
    work = [list(r) for r in rows]
    pivots = []
    top = 0
    nrows = len(work)
    for c in range(ncols):
        if top == nrows:
            break
        for i in range(top, nrows):
            if work[i][c]:
                break
        else:
            continue
        work[top], work[i] = work[i], work[top]
        prow = work[top]
        inv = pow(prow[c], p - 2, p)
        if inv != 1:
            prow = [(x * inv) % p for x in prow]
            work[top] = prow
        for i in range(top + 1, nrows):
            row = work[i]
            f = row[c]
            if f:
                work[i] = [(x - f * y) % p for x, y in zip(row, prow)]
        pivots.append(c)
        top += 1
    return pivots


def masks_of_size(n, k):
    """All k-subsets of range(n) as bitmasks, increasing (colex rank order)."""
    if k == 0:
        return [0]
    out = []
    m = (1 << k) - 1
    limit = 1 << n
    while m < limit:
        out.append(m)
        low = m & -m
        ripple = m + low
        m = (((ripple ^ m) >> 2) // low) | ripple
    return out


def colex_rank(mask):
    r = 0
    i = 0
    while mask:
        b = (mask & -mask).bit_length() - 1
        i += 1
        r += comb(b, i)
        mask &= mask - 1
    return r


def compound_levels(phi, dmax, p):
    n = len(phi)
    levels = [[[1]]]
    prev_masks = [0]
    for k in range(1, dmax + 1):
        masks = masks_of_size(n, k)
        prev = levels[-1]
        prev_index = {m: i for i, m in enumerate(prev_masks)}
        cur = []
        for rmask in masks:
            rbits = [b for b in range(n) if rmask >> b & 1]
            sub = [prev_index[rmask & ~(1 << b)] for b in rbits]
            row_out = []
            for cmask in masks:
                last = cmask.bit_length() - 1
                ci = prev_index[cmask & ~(1 << last)]
                acc = 0
                # Laplace expansion along the last selected column
                for pos, b in enumerate(rbits):
                    a = phi[b][last]
                    if a:
                        term = a * prev[sub[pos]][ci]
                        acc += term if (pos + k - 1) % 2 == 0 else -term
                row_out.append(acc % p)
            cur.append(row_out)
        levels.append(cur)
        prev_masks = masks
    return levels
