"""Concrete matrix representations: evaluation of relation systems on assigned
matrices, eigenvalue constraints for the cube-root generator, exact
irreducibility over the complex numbers, and the block-pattern family of
representations of the plus-sign tilde L-algebra."""

from __future__ import annotations

import random

from .freealg import Alphabet, NcPoly, parse_relation_lines
from .linalg import rref
from .matrix import SquareMatrix, determinant, kron, vectorize
from .scalar import Context, parse_scalar


class Representation:
    """dim plus a map generator name -> SquareMatrix (shared context)."""

    def __init__(self, dim, ctx, assign):
        for name, m in assign.items():
            if m.n != dim:
                raise ValueError("generator %s has dimension %d, expected %d"
                                 % (name, m.n, dim))
        self.dim = dim
        self.ctx = ctx
        self.assign = dict(assign)

    def conjugate(self, u):
        """Simultaneous change of basis U . M . U^(-1) of every generator."""
        from .matrix import inverse
        uinv = inverse(u)
        return Representation(self.dim, self.ctx,
                              {k: u * m * uinv for k, m in self.assign.items()})


def check_representation(rep, relations):
    """Evaluate every relation on the assigned matrices; returns
    (ok, failures) with failures = (relation-string, (i, j, value))."""
    failures = []
    for rel in relations:
        acc = SquareMatrix.zero(rep.ctx, rep.dim)
        for w, coeff in rel.terms.items():
            m = SquareMatrix.identity(rep.ctx, rep.dim)
            for g in w:
                name = rel.alphabet.names[g]
                if name not in rep.assign:
                    raise KeyError("generator %r is not assigned" % name)
                m = m * rep.assign[name]
            acc = acc + m.scale(coeff)
        hit = acc.first_nonzero()
        if hit is not None:
            failures.append((rel.to_string(), hit))
    return not failures, failures


def weight_vector_check(rep, gen="Dt"):
    """Check the generator's matrix satisfies M^3 = M (so its eigenvalues lie
    in {0, 1, -1}) and report which of those eigenvalues occur.

    Returns (ok, eigenvalues, message)."""
    m = rep.assign[gen]
    cube = m * m * m
    if cube != m:
        return False, [], "%s^3 != %s: an eigenvalue violates x^3 = x" % (gen, gen)
    ctx = rep.ctx
    eye = SquareMatrix.identity(ctx, m.n)
    eigs = []
    for label, shift in (("0", ctx.zero()), ("1", ctx.one()), ("-1", -ctx.one())):
        if determinant(m - eye.scale(shift)).is_zero():
            eigs.append(shift)
    return True, eigs, ""


def irreducible_numeric(rep):
    """Irreducibility over the complex numbers, decided exactly.

    The representation is irreducible iff the matrix algebra generated by the
    assigned matrices is the full n x n algebra (dimension n^2); the span of
    all products is computed by a closure over exact row reduction.  Entries
    must be symbol-free."""
    if rep.dim > 4:
        raise ValueError("irreducibility is decided only for dimension <= 4")
    mats = list(rep.assign.values())
    for m in mats:
        for row in m.rows:
            for s in row:
                if s.has_symbols():
                    raise ValueError("symbolic entries: specialise before deciding "
                                     "irreducibility")
    n = rep.dim
    target = n * n
    basis_rows = []
    pivots = []
    elements = []

    def try_add(m):
        nonlocal basis_rows, pivots
        rows = basis_rows + [vectorize(m)]
        reduced, piv = rref(rows)
        if len(reduced) > len(basis_rows):
            basis_rows, pivots = reduced, piv
            elements.append(m)
            return True
        return False

    try_add(SquareMatrix.identity(rep.ctx, n))
    frontier = []
    for m in mats:
        if try_add(m):
            frontier.append(m)
    while frontier and len(basis_rows) < target:
        nxt = []
        for e in list(elements):
            for g in mats:
                for prod in (e * g,):
                    if len(basis_rows) >= target:
                        break
                    if try_add(prod):
                        nxt.append(prod)
        if not nxt:
            break
        frontier = nxt
    return len(basis_rows) == target


LT_GENS = ("Lt11", "Lt12", "Lt21", "Lt22")


def one_sided_lt_relations(ctx=None):
    """The one-sign tilde L relation set as NcPolys over Lt11, Lt12, Lt21,
    Lt22 (shipped data)."""
    from .systems import data_text
    if ctx is None:
        ctx = Context(())
    alph = Alphabet(LT_GENS)
    return parse_relation_lines(data_text("s03_rll_pp.rel"), alph, ctx)


def block_rep_builder(n1, n2, seed=0):
    """Build the block-pattern representation of dimension n1 + n2:

    Lt11 = diag(rho_1..rho_n1, 0..0), Lt22 = diag(0..0, lam_1..lam_n2) with
    distinct nonzero diagonal entries, Lt12 supported on the n1 x n2 upper
    block, Lt21 on the n2 x n1 lower block, the free block entries filled from
    the seeded generator; then verify the one-sign relations.

    Returns (Representation, ok, failures)."""
    if n1 < 1 or n2 < 1:
        raise ValueError("n1 and n2 must be at least 1")
    rng = random.Random(seed)
    ctx = Context(())
    dim = n1 + n2
    zero = ctx.zero()

    def fresh_distinct(count, taken):
        out = []
        while len(out) < count:
            v = ctx.rational(rng.randint(1, 12), rng.randint(1, 4))
            if v not in taken and v not in out and not v.is_zero():
                out.append(v)
        return out

    rhos = fresh_distinct(n1, [])
    lams = fresh_distinct(n2, [])

    def diag(vals):
        return SquareMatrix(ctx, [[vals[i] if i == j else zero for j in range(dim)]
                                  for i in range(dim)])

    lt11 = diag(rhos + [zero] * n2)
    lt22 = diag([zero] * n1 + lams)
    rows12 = [[zero] * dim for _ in range(dim)]
    rows21 = [[zero] * dim for _ in range(dim)]
    for i in range(n1):
        for j in range(n2):
            rows12[i][n1 + j] = ctx.rational(rng.randint(1, 9), rng.randint(1, 3))
    for i in range(n2):
        for j in range(n1):
            rows21[n1 + i][j] = ctx.rational(rng.randint(1, 9), rng.randint(1, 3))
    rep = Representation(dim, ctx, {
        "Lt11": lt11, "Lt22": lt22,
        "Lt12": SquareMatrix(ctx, rows12),
        "Lt21": SquareMatrix(ctx, rows21),
    })
    ok, failures = check_representation(rep, one_sided_lt_relations(ctx))
    return rep, ok, failures


def pattern_violations(rep, n1, n2):
    """Entries of Lt12/Lt21 outside their allowed blocks (must be empty for a
    legal block representation)."""
    bad = []
    for name, rows_ok in (("Lt12", lambda i, j: i < n1 and j >= n1),
                          ("Lt21", lambda i, j: i >= n1 and j < n1)):
        m = rep.assign[name]
        for i in range(m.n):
            for j in range(m.n):
                if m[(i, j)] and not rows_ok(i, j):
                    bad.append((name, i, j))
    return bad


# -- representation files -------------------------------------------------------
#
#   dim = n
#   gen NAME = [[e11, e12, ...], [e21, ...], ...]


def parse_representation(text, ctx):
    dim = None
    assign = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("dim"):
            _, v = line.split("=", 1)
            dim = int(v.strip())
            continue
        if not line.startswith("gen "):
            raise ValueError("line %d: expected 'dim = n' or 'gen NAME = [[...]]'"
                             % lineno)
        head, v = line.split("=", 1)
        name = head[len("gen "):].strip()
        body = v.strip()
        if not (body.startswith("[[") and body.endswith("]]")):
            raise ValueError("line %d: matrix must be [[...],[...]]" % lineno)
        rows = []
        for chunk in body[2:-2].split("],["):
            rows.append([parse_scalar(e.strip(), ctx) for e in chunk.split(",")])
        if dim is None:
            raise ValueError("line %d: dim must come before gen lines" % lineno)
        assign[name] = SquareMatrix(ctx, rows)
    if dim is None:
        raise ValueError("missing 'dim = n'")
    return Representation(dim, ctx, assign)


# -- the distinguished representations ------------------------------------------


def l_operator_rep_from_r(r):
    """pi(L+) and pi(L-) read off the R-matrix: pi(L+_ij) is the (i, j)
    2x2 block of P R P, pi(L-_ij) the block of R^(-1) (block (i,j) has
    entries indexed by the second tensor leg)."""
    from .matrix import inverse
    ctx = r.ctx
    p = SquareMatrix.swap_2x2_legs(ctx)
    sources = {"p": p * r * p, "m": inverse(r)}
    assign = {}
    for sign, m in sources.items():
        for i in range(2):
            for j in range(2):
                block = [[m[(2 * i + k, 2 * j + l)] for l in range(2)] for k in range(2)]
                assign["L%s%d%d" % (sign, i + 1, j + 1)] = SquareMatrix(ctx, block)
    return Representation(2, ctx, assign)


def rll_relation_polys(r):
    """All three derived L-relation families as NcPolys over the eight raw
    L-generators (for feeding check_representation)."""
    from .rtt import derive_rll_relations, L_GENS
    alph = Alphabet(L_GENS)
    fams = derive_rll_relations(r)
    out = []
    for key in ("pp", "mm", "pm"):
        out.extend(fams[key].to_ncpolys(alph))
    return out


def two_dim_brute_force(relations, alphabet_names, grid, ctx=None):
    """Bounded brute-force search for two-dimensional representations over a
    small numeric grid: every generator is assigned a 2x2 matrix with entries
    from the grid.  Reports the assignments that satisfy all relations; no
    completeness beyond the grid is claimed."""
    if ctx is None:
        ctx = Context(())
    vals = [ctx.rational(p, q) for (p, q) in grid]
    hits = []

    def matrices():
        from itertools import product as iproduct
        for entries in iproduct(range(len(vals)), repeat=4):
            yield SquareMatrix(ctx, [[vals[entries[0]], vals[entries[1]]],
                                     [vals[entries[2]], vals[entries[3]]]])

    names = list(alphabet_names)
    if len(names) > 2:
        raise ValueError("brute force supports at most two unknown generators")
    from itertools import product as iproduct
    all_mats = list(matrices())
    for combo in iproduct(all_mats, repeat=len(names)):
        rep = Representation(2, ctx, dict(zip(names, combo)))
        ok, _ = check_representation(rep, relations)
        if ok:
            hits.append(rep)
    return hits
