"""Pure-Python/numpy kernels for the hot full-ring scans.

Same interface as the compiled module; used when the extension is absent.
"""

import numpy as np

BACKEND = "python"


def all_vectors(m, k):
    """All m^k coefficient vectors in code order (index 0 least significant)."""
    n = m ** k
    codes = np.arange(n, dtype=np.int64)
    out = np.empty((n, k), dtype=np.int64)
    for i in range(k):
        out[:, i] = codes % m
        codes //= m
    return out


def _left_matrices(vectors, table, m):
    """For each row x: matrix A_x with (x*y) = A_x @ y (mod m)."""
    n, k = vectors.shape
    mats = np.zeros((n, k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            mats[:, table[i][j], j] += vectors[:, i]
    return mats % m


def convolve(x, y, table, m):
    k = len(x)
    out = np.zeros(k, dtype=np.int64)
    for i in range(k):
        if x[i] == 0:
            continue
        for j in range(k):
            out[table[i][j]] += x[i] * y[j]
    return out % m


def scan_circle_zero(table, m):
    """Full-square circle scan: for every ring code x, the least partner
    y with x o y = 0 (right quasi regular) and the least z with z o x = 0
    read off the same pass (left quasi regular); -1 when none exists."""
    k = len(table)
    n = m ** k
    vecs = all_vectors(m, k)
    mats = _left_matrices(vecs, table, m)
    rqr = np.full(n, -1, dtype=np.int64)
    lqr = np.full(n, -1, dtype=np.int64)
    y_all = vecs
    for x in range(n):
        # x o y = x + y - x*y for all y at once
        prod = (mats[x] @ y_all.T).T
        circ = (vecs[x][None, :] + y_all - prod) % m
        zero = ~circ.any(axis=1)
        idx = np.nonzero(zero)[0]
        if idx.size:
            rqr[x] = idx[0]
        for y in idx:
            if lqr[y] == -1 or x < lqr[y]:
                # first x in code order wins; x ascends, so only set once
                if lqr[y] == -1:
                    lqr[y] = x
    return rqr, lqr


def square_codes(table, m):
    """x*x for every ring code, returned as codes."""
    k = len(table)
    n = m ** k
    vecs = all_vectors(m, k)
    weights = m ** np.arange(k, dtype=np.int64)
    out = np.empty(n, dtype=np.int64)
    for x in range(n):
        sq = convolve(vecs[x], vecs[x], table, m)
        out[x] = int(sq @ weights)
    return out


def jordan_counterexample(table, m):
    """First (a, b) in code order with a²(ab) != a(a²b), else None."""
    k = len(table)
    n = m ** k
    vecs = all_vectors(m, k)
    mats = _left_matrices(vecs, table, m)
    y_all = vecs
    for a in range(n):
        av = vecs[a]
        a2 = convolve(av, av, table, m)
        a2_mat = np.zeros((k, k), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                a2_mat[table[i][j], j] += a2[i]
        a2_mat %= m
        ab = (mats[a] @ y_all.T).T % m          # a*b for all b
        lhs = (a2_mat @ ab.T).T % m             # a²(ab)
        a2b = (a2_mat @ y_all.T).T % m          # a²b
        rhs = (mats[a] @ a2b.T).T % m           # a(a²b)
        diff = (lhs - rhs) % m
        bad = diff.any(axis=1)
        idx = np.nonzero(bad)[0]
        if idx.size:
            return (a, int(idx[0]))
    return None
