"""Yang-Baxter verification: the constant equation on three tensor legs, its
braid form, spectral projectors of the quadratic case, and the promotion of a
constant solution to a one-parameter family satisfying the parametrised braid
equation."""

from __future__ import annotations

from .matrix import SquareMatrix, inverse, kron, minimal_polynomial
from .scalar import Context, parse_scalar


def lift_matrix(m, ctx):
    """Re-express a matrix in a context containing at least its symbols."""
    if m.ctx is ctx:
        return m
    return SquareMatrix(ctx, [[parse_scalar(s.to_string(), ctx) for s in row] for row in m.rows])


def extended_context(ctx, extra):
    symbols = list(ctx.symbols)
    for s in extra:
        if s not in symbols:
            symbols.append(s)
    return Context(tuple(symbols))


def leg_embeddings(r):
    """R12, R13, R23 acting on the triple tensor product (8x8)."""
    if r.n != 4:
        raise ValueError("expected a 4x4 matrix, got %dx%d" % (r.n, r.n))
    ctx = r.ctx
    i2 = SquareMatrix.identity(ctx, 2)
    p = SquareMatrix.swap_2x2_legs(ctx)
    r12 = kron(r, i2)
    r23 = kron(i2, r)
    p23 = kron(i2, p)
    r13 = p23 * r12 * p23
    return r12, r13, r23


def _first_difference(lhs, rhs):
    delta = lhs - rhs
    hit = delta.first_nonzero()
    if hit is None:
        return True, None
    i, j, v = hit
    return False, (i, j, v)


def check_constant_ybe(r):
    """R12 R13 R23 = R23 R13 R12 as exact 8x8 matrices.

    Returns (True, None) or (False, (i, j, difference_entry)).
    """
    r12, r13, r23 = leg_embeddings(r)
    return _first_difference(r12 * r13 * r23, r23 * r13 * r12)


def check_braid_constant(rhat):
    """(Rh (x) I)(I (x) Rh)(Rh (x) I) = (I (x) Rh)(Rh (x) I)(I (x) Rh)."""
    if rhat.n != 4:
        raise ValueError("expected a 4x4 matrix, got %dx%d" % (rhat.n, rhat.n))
    i2 = SquareMatrix.identity(rhat.ctx, 2)
    a = kron(rhat, i2)
    b = kron(i2, rhat)
    return _first_difference(a * b * a, b * a * b)


QUADRATIC_MINPOLY = (2, -2, 1)  # t^2 - 2t + 2, constant term first


def _require_quadratic(rhat):
    ctx = rhat.ctx
    mp = minimal_polynomial(rhat)
    want = [ctx.integer(c) for c in QUADRATIC_MINPOLY]
    if mp != want:
        raise ValueError("minimal polynomial mismatch: expected t^2 - 2t + 2")


def spectral_projectors(rhat):
    """The pair P(+), P(-) = (I +- i(Rh - I))/2 for a matrix satisfying
    t^2 - 2t + 2 = 0; they are orthogonal idempotents resolving the identity
    and (1-i)P(+) + (1+i)P(-) = Rh."""
    _require_quadratic(rhat)
    ctx = rhat.ctx
    i4 = SquareMatrix.identity(ctx, 4)
    iu = ctx.i()
    half = ctx.rational(1, 2)
    d = rhat - i4
    pp = (i4 + d.scale(iu)).scale(half)
    pm = (i4 - d.scale(iu)).scale(half)
    return pp, pm


class ParamFamily:
    """A 4x4 family in one spectral symbol (entries polynomial in it), plus a
    free-text note about the dropped scalar normalisation."""

    __slots__ = ("ctx", "symbol", "grid", "note")

    def __init__(self, ctx, symbol, grid, note=""):
        if symbol not in ctx.index:
            raise ValueError("spectral symbol %r not in context" % symbol)
        self.ctx = ctx
        self.symbol = symbol
        self.grid = grid
        self.note = note

    def at(self, arg):
        """Evaluate the family at a Scalar argument."""
        return self.grid.substitute({self.symbol: arg})


def baxterise(rhat):
    """Promote a constant solution with minimal polynomial t^2 - 2t + 2 to the
    unnormalised one-parameter family M(x) = Rh + 2x * Rh^(-1)."""
    _require_quadratic(rhat)
    ctx = extended_context(rhat.ctx, ("x", "y"))
    rh = lift_matrix(rhat, ctx)
    rinv = inverse(rh)
    x = ctx.gen("x")
    grid = rh + rinv.scale(x * 2)
    return ParamFamily(ctx, "x", grid,
                       note="normalisation 1/sqrt(2x) dropped; the braid check is insensitive to it")


def s03_reference_grid(ctx):
    """The closed form of the unnormalised S03 family:
    [[x+1,0,0,1-x],[0,x+1,x-1,0],[0,1-x,x+1,0],[x-1,0,0,x+1]]."""
    e = lambda s: parse_scalar(s, ctx)
    return SquareMatrix(ctx, [
        [e("x + 1"), e("0"), e("0"), e("1 - x")],
        [e("0"), e("x + 1"), e("x - 1"), e("0")],
        [e("0"), e("1 - x"), e("x + 1"), e("0")],
        [e("x - 1"), e("0"), e("0"), e("x + 1")],
    ])


def check_braid_parametrized(family):
    """M12(x) M23(xy) M12(y) = M23(y) M12(xy) M23(x) as exact polynomial
    matrices in x and y.  Returns (True, None) or (False, witness)."""
    ctx = family.ctx
    if "y" not in ctx.index:
        raise ValueError("family context must contain the second spectral symbol y")
    x = ctx.gen("x")
    y = ctx.gen("y")
    i2 = SquareMatrix.identity(ctx, 2)

    def m12(arg):
        return kron(family.at(arg), i2)

    def m23(arg):
        return kron(i2, family.at(arg))

    lhs = m12(x) * m23(x * y) * m12(y)
    rhs = m23(y) * m12(x * y) * m23(x)
    return _first_difference(lhs, rhs)


class AnsatzResult:
    """Outcome of searching for c(x) making I + c(x)*Rh satisfy the
    parametrised braid equation, using only the quadratic reduction of Rh."""

    __slots__ = ("applicable", "reason", "alpha", "constraint", "solution", "matches_family")

    def __init__(self, applicable, reason="", alpha=None, constraint="", solution="",
                 matches_family=False):
        self.applicable = applicable
        self.reason = reason
        self.alpha = alpha
        self.constraint = constraint
        self.solution = solution
        self.matches_family = matches_family


def find_braid_ansatz(rhat):
    """Impose the parametrised braid equation on I + c*Rh.

    Requires the minimal polynomial of Rh to be quadratic, t^2 = alpha*t +
    beta.  The difference of the two braid sides then collapses, with c1, c2,
    c3 standing for c(x), c(xy), c(y), to

        (c1 + c3 + alpha*c1*c3 - c2) * (Rh12 - Rh23),

    an identity this routine verifies exactly; the surviving functional
    constraint c(xy) = c(x) + c(y) + alpha c(x) c(y) is solved by
    c(x) = (x - 1)/alpha, which is verified and compared (up to the dropped
    normalisation) with the quadratic family Rh + 2x Rh^(-1) when the latter
    exists.
    """
    mp = minimal_polynomial(rhat)
    if len(mp) != 3:
        return AnsatzResult(False, reason="minimal polynomial degree %d, not 2" % (len(mp) - 1))
    beta, alpha = -mp[0], -mp[1]
    if alpha.is_zero():
        return AnsatzResult(False, reason="quadratic reduction has no linear term")

    base = rhat.ctx
    cctx = extended_context(base, ("c1", "c2", "c3"))
    rh = lift_matrix(rhat, cctx)
    i2 = SquareMatrix.identity(cctx, 2)
    i8 = SquareMatrix.identity(cctx, 8)
    a = kron(rh, i2)
    b = kron(i2, rh)
    c1, c2, c3 = cctx.gen("c1"), cctx.gen("c2"), cctx.gen("c3")
    lhs = (i8 + a.scale(c1)) * (i8 + b.scale(c2)) * (i8 + a.scale(c3))
    rhs = (i8 + b.scale(c3)) * (i8 + a.scale(c2)) * (i8 + b.scale(c1))
    alpha_l = parse_scalar(alpha.to_string(), cctx)
    phi = c1 + c3 + alpha_l * c1 * c3 - c2
    predicted = (a - b).scale(phi)
    if lhs - rhs != predicted:
        return AnsatzResult(False, reason="braid difference does not reduce to the "
                                          "single quadratic constraint")
    constraint = "c(x*y) = c(x) + c(y) + (%s)*c(x)*c(y)" % alpha.to_string()

    xyctx = extended_context(base, ("x", "y"))
    x, y = xyctx.gen("x"), xyctx.gen("y")
    alpha_xy = parse_scalar(alpha.to_string(), xyctx)
    c = lambda arg: (arg - 1) / alpha_xy
    residual = c(x) + c(y) + alpha_xy * c(x) * c(y) - c(x * y)
    if not residual.is_zero():
        return AnsatzResult(False, reason="candidate c(x) = (x-1)/alpha fails the "
                                          "functional constraint", constraint=constraint)
    solution = "c(x) = (x - 1)/(%s)" % alpha.to_string()

    matches = False
    if mp == [rhat.ctx.integer(2), rhat.ctx.integer(-2), rhat.ctx.one()]:
        fam = baxterise(rhat)
        rh_x = lift_matrix(rhat, fam.ctx)
        xg = fam.ctx.gen("x")
        cval = (xg - 1) / parse_scalar(alpha.to_string(), fam.ctx)
        candidate = SquareMatrix.identity(fam.ctx, 4) + rh_x.scale(cval)
        # M(x) = 2x * (I + c'(x) Rh) with c'(x) = (1-x)/(2x); equivalently the
        # candidate at x -> 1/x, rescaled: check 2x*candidate(1/x) == M(x) via
        # clearing the Laurent denominator: x * M(1) ... simplest exact form:
        matches = fam.grid == (candidate.substitute({"x": xg.inverse()}).scale(xg * 2))
    return AnsatzResult(True, alpha=alpha, constraint=constraint, solution=solution,
                        matches_family=matches)
