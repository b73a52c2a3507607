"""Exact dense/sparse linear algebra over Scalar rows.

Rows are lists of Scalars (dense) or dicts {column: Scalar} (sparse).  All
eliminations happen over the fraction field, with pivots chosen to prefer
symbol-free entries so that polynomial divisions stay rare.
"""

from __future__ import annotations

from .scalar import Scalar


def _pivot_cost(s):
    if s.is_constant():
        return 0
    n, d = s.re, s.im
    return 1 + (len(n.numer) if hasattr(n, "numer") else 0)


def rref(rows):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_columns); zero rows are dropped.  The input
    rows are not modified.
    """
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    pivots = []
    reduced = []
    col = 0
    while work and col < ncols:
        best = None
        for idx, r in enumerate(work):
            if r[col]:
                c = _pivot_cost(r[col])
                if best is None or c < best[0]:
                    best = (c, idx)
                    if c == 0:
                        break
        if best is None:
            col += 1
            continue
        row = work.pop(best[1])
        inv = row[col].inverse()
        row = [x * inv for x in row]
        for r in work:
            if r[col]:
                f = r[col]
                for j in range(col, ncols):
                    if row[j]:
                        r[j] = r[j] - f * row[j]
        for r in reduced:
            if r[col]:
                f = r[col]
                for j in range(col, ncols):
                    if row[j]:
                        r[j] = r[j] - f * row[j]
        reduced.append(row)
        pivots.append(col)
        work = [r for r in work if any(r)]
        col += 1
    order = sorted(range(len(pivots)), key=lambda k: pivots[k])
    return [reduced[k] for k in order], [pivots[k] for k in order]


def rank(rows):
    return len(rref(rows)[0])


def reduce_against(row, basis, pivots):
    """Reduce a row against an rref basis; returns the residual row."""
    r = list(row)
    for b, p in zip(basis, pivots):
        if r[p]:
            f = r[p]
            for j in range(len(r)):
                if b[j]:
                    r[j] = r[j] - f * b[j]
    return r


def in_span(row, basis, pivots):
    return not any(reduce_against(row, basis, pivots))


def row_space_equal(rows1, rows2):
    """Decide whether two lists of row vectors span the same subspace.

    Returns (True, None) or (False, witness) where the witness lies in
    exactly one of the two spans.
    """
    if rows1 and rows2 and len(rows1[0]) != len(rows2[0]):
        raise ValueError("row length mismatch: %d vs %d" % (len(rows1[0]), len(rows2[0])))
    b1, p1 = rref(rows1)
    b2, p2 = rref(rows2)
    for r in rows2:
        if not in_span(r, b1, p1):
            return False, list(r)
    for r in rows1:
        if not in_span(r, b2, p2):
            return False, list(r)
    return True, None


def solve(a_rows, b_cols):
    """Solve A x = b exactly.

    a_rows: m x n matrix (lists of Scalars); b_cols: length-m vector.
    Returns one solution x (length n) or None if the system is inconsistent.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    aug = [list(a_rows[k]) + [b_cols[k]] for k in range(m)]
    basis, pivots = rref(aug)
    x = None
    for row, p in zip(basis, pivots):
        if p == n:
            return None
    if not basis:
        ctx = b_cols[0].ctx if b_cols else None
        return [ctx.zero() for _ in range(n)] if ctx is not None else []
    ctx = basis[0][0].ctx if basis[0][0] else next(s for s in basis[0] if s).ctx
    x = [ctx.zero() for _ in range(n)]
    for row, p in zip(basis, pivots):
        x[p] = row[n]
    return x


def inconsistent_rows(a_rows, b_cols):
    """Return a certificate of inconsistency of A x = b, or None.

    The certificate is the offending reduced row (all-zero coefficients with a
    nonzero right side) of the augmented system.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    aug = [list(a_rows[k]) + [b_cols[k]] for k in range(m)]
    basis, pivots = rref(aug)
    for row, p in zip(basis, pivots):
        if p == n:
            return row
    return None


def nullspace(rows):
    """Basis of the right nullspace of the matrix given by rows."""
    if not rows:
        return []
    n = len(rows[0])
    basis, pivots = rref(rows)
    ctx = None
    for r in rows:
        for s in r:
            ctx = s.ctx
            break
        break
    free = [j for j in range(n) if j not in pivots]
    out = []
    for j in free:
        v = [ctx.zero() for _ in range(n)]
        v[j] = ctx.one()
        for row, p in zip(basis, pivots):
            v[p] = -row[j]
        out.append(v)
    return out


class SparseEliminator:
    """Incremental sparse row reduction keyed on smallest column index.

    add(row) reduces a {col: Scalar} row against the accumulated pivots and
    installs it if a nonzero residual remains; rank() is the pivot count.
    """

    def __init__(self):
        self.pivots = {}

    def reduce(self, row):
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row
            f = row[c]
            for pc, pv in piv.items():
                nv = row.get(pc)
                nv = (nv - f * pv) if nv is not None else -f * pv
                if nv:
                    row[pc] = nv
                else:
                    row.pop(pc, None)
        return row

    def add(self, row):
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        inv = row[c].inverse()
        row = {k: v * inv for k, v in row.items()}
        self.pivots[c] = row
        return True

    def rank(self):
        return len(self.pivots)
