"""Small exact linear algebra over any exact scalar type.

Works uniformly for Fraction and CyclotomicNumber entries: scalars must
support +, -, *, /, bool (nonzero test) and ==.  Matrices are lists of rows;
nothing here mutates its arguments.
"""

from __future__ import annotations


def mat_vec(matrix, vec):
    out = []
    for row in matrix:
        acc = None
        for a, x in zip(row, vec):
            if a and x:
                term = a * x
                acc = term if acc is None else acc + term
        if acc is None:
            acc = row[0] * 0 if row else vec[0] * 0
        out.append(acc)
    return out


def mat_mul(a, b):
    cols = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in cols:
            acc = None
            for x, y in zip(row, col):
                if x and y:
                    term = x * y
                    acc = term if acc is None else acc + term
            if acc is None:
                acc = row[0] * 0
            out_row.append(acc)
        out.append(out_row)
    return out


def identity_like(n, one):
    zero = one * 0
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def rref(matrix):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix):
    _, pivots = rref(matrix)
    return len(pivots)


def kernel_basis(matrix, zero, one):
    """Basis of the right kernel {v : M v = 0}."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(v)
    return basis


def solve(matrix, rhs):
    """One solution of M x = rhs, or None when inconsistent."""
    if not matrix:
        return None
    ncols = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    for row in rows:
        if row[-1] and not any(row[:-1]):
            return None
    zero = rhs[0] * 0
    x = [zero] * ncols
    for r, p in enumerate(pivots):
        if p == ncols:
            return None
        x[p] = rows[r][-1]
    return x


def invert(matrix):
    """Exact inverse; raises ValueError on singular input."""
    n = len(matrix)
    one = None
    for row in matrix:
        for x in row:
            if x:
                one = x / x
                break
        if one is not None:
            break
    if one is None:
        raise ValueError("singular matrix")
    aug = [list(row) + ident_row for row, ident_row in zip(matrix, identity_like(n, one))]
    rows, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in rows]


def in_span(rref_rows, pivots, vec):
    """Membership of vec in the row space given by a precomputed rref."""
    v = list(vec)
    for row, p in zip(rref_rows, pivots):
        if v[p]:
            f = v[p]
            v = [x - f * y for x, y in zip(v, row)]
    return not any(v)
