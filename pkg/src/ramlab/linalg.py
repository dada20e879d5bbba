"""Small exact linear algebra: Hermite forms over Euclidean rings, Gaussian
elimination over fields, Cramer solves over integral domains.

Everything here works on lists of lists of ring elements; matrices are tiny
(degrees <= 16), so clarity beats asymptotics.
"""

from __future__ import annotations

from .arith import _det_bareiss
from .errors import ComputationError


def det_bareiss(rows, ring):
    return _det_bareiss(rows, ring)


def hnf_rows(rows, ring, rightmost_pivots=False):
    """Row-style Hermite normal form over a Euclidean ring.

    Returns (hnf_rows, pivot_cols): nonzero rows with unit-normalized pivots
    (positive / monic) and off-pivot entries reduced modulo the pivot.  With
    rightmost_pivots=True, pivots are the rightmost nonzero entries (the
    triangular-in-powers convention used for order bases); output rows are
    sorted by pivot column ascending.
    """
    if not rows:
        return [], []
    ncols = len(rows[0])
    pool = [list(r) for r in rows]
    col_order = range(ncols - 1, -1, -1) if rightmost_pivots else range(ncols)
    pivots = {}  # col -> row
    for c in col_order:
        live = [r for r in pool if not ring.is_zero(r[c])]
        while len(live) > 1:
            live.sort(key=lambda r: ring.euc_norm(r[c]))
            b = live[0]
            for a in live[1:]:
                q, _ = ring.euc_divmod(a[c], b[c])
                for j in range(ncols):
                    a[j] = a[j] - q * b[j]
            live = [r for r in live if not ring.is_zero(r[c])]
        if live:
            row = live[0]
            pool.remove(row)
            _, unit = ring.normalize_unit(row[c])
            if unit != ring.one():
                row = [ring.div(x, unit) for x in row]
            pivots[c] = row
    # reduce entries sitting in other pivot columns; process reducers in the
    # elimination order so earlier reductions are not disturbed
    cols = sorted(pivots)
    reducer_order = sorted(pivots, reverse=rightmost_pivots)
    for c in cols:
        row = pivots[c]
        for c2 in reducer_order:
            if c2 == c or ring.is_zero(row[c2]):
                continue
            q, _ = ring.euc_divmod(row[c2], pivots[c2][c2])
            if ring.is_zero(q):
                continue
            for j in range(len(row)):
                row[j] = row[j] - q * pivots[c2][j]
    out_cols = sorted(pivots)
    return [pivots[c] for c in out_cols], out_cols


def solve_cramer(mat, rhs, ring):
    """Solve M x = rhs over the fraction field of an integral domain.

    Returns (numerators, denominator) with x_i = num_i / den, den = det(M).
    Raises ComputationError when M is singular."""
    n = len(mat)
    den = det_bareiss(mat, ring)
    if ring.is_zero(den):
        raise ComputationError("singular matrix in solve_cramer")
    nums = []
    for i in range(n):
        cols = [[mat[r][c] if c != i else rhs[r] for c in range(n)] for r in range(n)]
        nums.append(det_bareiss(cols, ring))
    return nums, den


# -- field linear algebra ----------------------------------------------------


def rref(rows, field):
    """Reduced row echelon form; returns (rref_rows, pivot_cols)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if not m[i][c].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.one() / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and not m[i][c].is_zero():
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def kernel_basis(rows, field, ncols=None):
    """Basis of {x : M x = 0} for the matrix with the given rows."""
    if not rows:
        return []
    ncols = ncols or len(rows[0])
    red, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero()] * ncols
        vec[fc] = field.one()
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def rank(rows, field):
    return len(rref(rows, field)[1])


def span_rows(rows, field):
    """Row-space basis in echelon form (drops zero rows)."""
    red, pivots = rref(rows, field)
    return red[: len(pivots)]


def in_span(vec, echelon_rows, pivots, field):
    """Whether vec lies in the row space given by rref output."""
    v = list(vec)
    for r, c in enumerate(pivots):
        if not v[c].is_zero():
            factor = v[c]
            v = [a - factor * b for a, b in zip(v, echelon_rows[r])]
    return all(x.is_zero() for x in v)


def solve_field(rows, rhs, field):
    """One solution x of M x = rhs over a field, or None if inconsistent."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [field.zero()] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][ncols]
    return x
