"""Dense exact square matrices over Scalar, with the tensor-product and
minimal-polynomial operations the verification suites rely on."""

from __future__ import annotations

from .linalg import rref
from .scalar import Context, ContextMismatch, Scalar


class SingularMatrixError(ZeroDivisionError):
    """Raised when inverting an identically singular matrix."""


class SquareMatrix:
    __slots__ = ("ctx", "n", "rows")

    def __init__(self, ctx, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix is not square")
            for s in r:
                if s.ctx is not ctx and s.has_symbols():
                    raise ContextMismatch("entry context differs from matrix context")
        self.ctx = ctx
        self.n = n
        self.rows = rows

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, ctx, n):
        one, zero = ctx.one(), ctx.zero()
        return cls(ctx, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, ctx, n):
        z = ctx.zero()
        return cls(ctx, [[z] * n for _ in range(n)])

    @classmethod
    def from_ints(cls, ctx, grid):
        return cls(ctx, [[ctx.integer(v) for v in row] for row in grid])

    @classmethod
    def swap_2x2_legs(cls, ctx):
        """The 4x4 permutation exchanging the two tensor legs of C^2 (x) C^2."""
        p = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
        return cls.from_ints(ctx, p)

    # -- basics ----------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entry(self, i, j):
        """1-based entry access."""
        return self.rows[i - 1][j - 1]

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def _check(self, other):
        if self.ctx is not other.ctx:
            raise ContextMismatch("matrices live in different contexts")
        if self.n != other.n:
            raise ValueError("dimension mismatch: %d vs %d" % (self.n, other.n))

    def __add__(self, other):
        self._check(other)
        return SquareMatrix(self.ctx, [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check(other)
        return SquareMatrix(self.ctx, [
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return SquareMatrix(self.ctx, [[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, SquareMatrix):
            self._check(other)
            n = self.n
            cols = list(zip(*other.rows))
            zero = self.ctx.zero()
            out = []
            for ra in self.rows:
                row = []
                for c in cols:
                    acc = zero
                    for a, b in zip(ra, c):
                        if a and b:
                            acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return SquareMatrix(self.ctx, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, s):
        if isinstance(s, int):
            s = self.ctx.integer(s)
        return SquareMatrix(self.ctx, [[a * s for a in r] for r in self.rows])

    def transpose(self):
        return SquareMatrix(self.ctx, list(zip(*self.rows)))

    def is_zero(self):
        return all(not a for r in self.rows for a in r)

    def substitute(self, bindings):
        return SquareMatrix(self.ctx, [[a.substitute(bindings) for a in r] for r in self.rows])

    def map_entries(self, f):
        return SquareMatrix(self.ctx, [[f(a) for a in r] for r in self.rows])

    def __pow__(self, k):
        out = SquareMatrix.identity(self.ctx, self.n)
        for _ in range(k):
            out = out * self
        return out

    def first_nonzero(self):
        """(i, j, value) of the first nonzero entry in row-major order, or None."""
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if a:
                    return i, j, a
        return None

    def __repr__(self):
        body = "; ".join(", ".join(str(a) for a in r) for r in self.rows)
        return "SquareMatrix[%s]" % body


def kron(a, b):
    """Tensor (Kronecker) product: (A(x)B)[(i-1)*dim(B)+k][(j-1)*dim(B)+l]
    = A[i][j] * B[k][l] (1-based convention)."""
    if a.ctx is not b.ctx:
        raise ContextMismatch("tensor factors live in different contexts")
    n, m = a.n, b.n
    out = []
    for i in range(n):
        for k in range(m):
            row = []
            ai = a.rows[i]
            bk = b.rows[k]
            for j in range(n):
                aij = ai[j]
                if aij:
                    row.extend([aij * bkl for bkl in bk])
                else:
                    row.extend([a.ctx.zero()] * m)
            out.append(row)
    return SquareMatrix(a.ctx, out)


def determinant(a):
    """Exact determinant by fraction-field elimination."""
    n = a.n
    work = [list(r) for r in a.rows]
    det = a.ctx.one()
    for col in range(n):
        piv = None
        for i in range(col, n):
            if work[i][col]:
                piv = i
                break
        if piv is None:
            return a.ctx.zero()
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            det = -det
        det = det * work[col][col]
        inv = work[col][col].inverse()
        for i in range(col + 1, n):
            if work[i][col]:
                f = work[i][col] * inv
                for j in range(col, n):
                    if work[col][j]:
                        work[i][j] = work[i][j] - f * work[col][j]
    return det


def inverse(a):
    """Exact inverse; raises SingularMatrixError when det = 0 identically."""
    n = a.n
    work = [list(r) + [a.ctx.one() if i == j else a.ctx.zero() for j in range(n)]
            for i, r in enumerate(a.rows)]
    for col in range(n):
        piv = None
        best = None
        for i in range(col, n):
            if work[i][col]:
                cost = 0 if work[i][col].is_constant() else 1
                if best is None or cost < best:
                    piv, best = i, cost
                    if cost == 0:
                        break
        if piv is None:
            raise SingularMatrixError("matrix is identically singular")
        work[col], work[piv] = work[piv], work[col]
        inv_p = work[col][col].inverse()
        work[col] = [x * inv_p for x in work[col]]
        for i in range(n):
            if i != col and work[i][col]:
                f = work[i][col]
                row = work[col]
                work[i] = [x - f * y if y else x for x, y in zip(work[i], row)]
    return SquareMatrix(a.ctx, [r[n:] for r in work])


def vectorize(a):
    return [x for r in a.rows for x in r]


def evaluate_poly_at_matrix(coeffs, a):
    """Evaluate sum(coeffs[k] * A^k) (coeffs[0] is the constant term)."""
    acc = SquareMatrix.zero(a.ctx, a.n)
    power = SquareMatrix.identity(a.ctx, a.n)
    for k, c in enumerate(coeffs):
        if k:
            power = power * a
        if c:
            acc = acc + power.scale(c)
    return acc


def minimal_polynomial(a):
    """Monic minimal polynomial of A, as a coefficient list [c0, c1, ..., 1].

    Found as the first linear dependence among vec(I), vec(A), vec(A^2), ...;
    the degree is at most n, so the search terminates.
    """
    ctx = a.ctx
    n2 = a.n * a.n
    power = SquareMatrix.identity(ctx, a.n)
    vectors = []
    while True:
        vec = vectorize(power)
        vectors.append(vec)
        k = len(vectors) - 1
        # Augment with coefficient bookkeeping: columns 0..n2-1 hold the matrix
        # entries, columns n2..n2+k the combination coefficients.
        aug = []
        for idx, v in enumerate(vectors):
            coeff = [ctx.one() if t == idx else ctx.zero() for t in range(len(vectors))]
            aug.append(list(v) + coeff)
        basis, pivots = rref(aug)
        dependent = None
        for row, p in zip(basis, pivots):
            if p >= n2:
                dependent = row
                break
        if dependent is not None:
            coeffs = dependent[n2:]
            top = max(t for t, c in enumerate(coeffs) if c)
            inv = coeffs[top].inverse()
            return [c * inv for c in coeffs[: top + 1]]
        power = power * a


def poly_to_string(coeffs, var="t"):
    """Human-readable form of a coefficient list, lowest degree first."""
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            mono = ""
        elif k == 1:
            mono = var
        else:
            mono = "%s^%d" % (var, k)
        if not mono:
            piece = str(c)
        elif c.is_one():
            piece = mono
        elif c == -1:
            piece = "-%s" % mono
        else:
            cs = str(c)
            if ("+" in cs[1:]) or ("-" in cs[1:]) or "/" in cs:
                cs = "(%s)" % cs
            piece = "%s*%s" % (cs, mono)
        parts.append(piece)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
    return out


def poly_mul(ctx, p, q):
    out = [ctx.zero()] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return out


def poly_from_roots(ctx, roots_with_multiplicity):
    """Monic polynomial with the given (root, multiplicity) pairs."""
    p = [ctx.one()]
    for root, mult in roots_with_multiplicity:
        for _ in range(mult):
            p = poly_mul(ctx, p, [-root, ctx.one()])
    return p
