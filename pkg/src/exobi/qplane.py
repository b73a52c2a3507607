"""Quantum planes: coordinate and differential relation spans derived from
operator choices (P, Q) built out of the leg-swapped matrix, the mixed
coordinate-differential exchange rules, and the orthogonality condition
(P - id)(Q + id) = 0 that ties them together.

Degree-2 monomial bases are always ordered (11, 12, 21, 22)."""

from __future__ import annotations

from .catalog import hat_of
from .linalg import row_space_equal, rref
from .matrix import SquareMatrix, evaluate_poly_at_matrix, kron, minimal_polynomial
from .rtt import RelationSet
from .scalar import Context, parse_scalar


COORD_GENS = ("x", "y")
DIFF_GENS = ("xi", "eta")
COORD_GENS_S03 = ("x1", "x2")
DIFF_GENS_S03 = ("xi1", "xi2")


def coordinate_relation_span(p_matrix, gens=COORD_GENS):
    """Row space of (P - id), read as degree-2 relations z^i z^j = P z^k z^l
    on the coordinate alphabet."""
    eye = SquareMatrix.identity(p_matrix.ctx, 4)
    delta = p_matrix - eye
    return RelationSet(gens, p_matrix.ctx, [list(r) for r in delta.rows],
                       origin="derived")


def differential_relation_span(q_matrix, gens=DIFF_GENS):
    """Row space of (id + Q), read as degree-2 relations
    zeta^i zeta^j = -Q zeta^k zeta^l on the differential alphabet."""
    eye = SquareMatrix.identity(q_matrix.ctx, 4)
    total = q_matrix + eye
    return RelationSet(gens, q_matrix.ctx, [list(r) for r in total.rows],
                       origin="derived")


def mixed_exchange_check(q_matrix, stated_rows):
    """The mixed rule z^i zeta^j = Q_(ij),(kl) zeta^k z^l: stated_rows maps the
    composite index (i, j) to the four coefficients of (zeta^k z^l) in the
    (11, 12, 21, 22) order.  All four rows must be given.

    Returns (ok, mismatches)."""
    if set(stated_rows) != {(0, 0), (0, 1), (1, 0), (1, 1)}:
        raise ValueError("stated exchange rules must cover all four (i, j) pairs")
    mismatches = []
    for (i, j), want in stated_rows.items():
        got = list(q_matrix.rows[2 * i + j])
        if list(want) != got:
            mismatches.append(((i + 1, j + 1), want, got))
    return not mismatches, mismatches


def orthogonality_check(p_or_span, q_matrix):
    """(P - id)(Q + id) = 0 when a matrix P is given; when a coordinate
    relation span is given instead, r . (Q + id) = 0 for every row r (the
    relation-level content of the same condition)."""
    eye = SquareMatrix.identity(q_matrix.ctx, 4)
    qplus = q_matrix + eye
    if isinstance(p_or_span, SquareMatrix):
        prod = (p_or_span - eye) * qplus
        return prod.is_zero(), prod.first_nonzero()
    for row in p_or_span.rows:
        out = [sum((row[k] * qplus.rows[k][j] for k in range(4)),
                   q_matrix.ctx.zero()) for j in range(4)]
        if any(out):
            return False, (row, out)
    return True, None


def matrix_power_p(rhat, a):
    """P with P - id = (Rhat - id)^a."""
    eye = SquareMatrix.identity(rhat.ctx, 4)
    delta = rhat - eye
    out = eye
    for _ in range(a):
        out = out * delta if out is not eye else delta
    return out + eye


def enumerate_orthogonal_choices(rhat, max_exponent=3):
    """For each exponent a, the dimension of the affine space of solutions
    Q = c0 + c1 Rh + c2 Rh^2 + c3 Rh^3 of (Rh - id)^a (Q + id) = 0.

    Returns {a: dimension}; informational (the counts depend on how one
    chooses to count coincident powers, so no particular total is asserted)."""
    ctx = rhat.ctx
    eye = SquareMatrix.identity(ctx, 4)
    powers = [eye]
    for _ in range(3):
        powers.append(powers[-1] * rhat)
    delta = rhat - eye
    out = {}
    lead = eye
    for a in range(1, max_exponent + 1):
        lead = lead * delta
        # rows: for each coefficient c_k, the 16 entries of lead * Rh^k; the
        # solution space of lead * (sum c_k Rh^k + id) = 0 is an affine
        # subspace of dimension (number of free c) = 4 - rank.
        columns = []
        for k in range(4):
            m = lead * powers[k]
            columns.append([m[(i, j)] for i in range(4) for j in range(4)])
        rhs = [-(lead[(i, j)]) for i in range(4) for j in range(4)]
        rows = [[columns[k][idx] for k in range(4)] for idx in range(16)]
        from .linalg import solve, rank
        sol = solve(rows, rhs)
        if sol is None:
            out[a] = None
        else:
            out[a] = 4 - rank(rows)
    return out


# -- stated plane data ----------------------------------------------------------


def stated_coordinate_relation_e(ctx, family):
    """Coordinate relation x y - y x = s y^2 as a row (0, 1, -1, -s):
    s = h for the one-parameter family (and its deformation locus member),
    s = (h1 - h2)/2 for the generic triangular family."""
    if family in ("E1", "JORDANIAN"):
        s = parse_scalar("h", ctx)
    elif family == "E2":
        s = parse_scalar("(h1 - h2)/2", ctx)
    else:
        raise KeyError(family)
    zero, one = ctx.zero(), ctx.one()
    return RelationSet(COORD_GENS, ctx, [[zero, one, -one, -s]], origin="stated")


def stated_differential_relations_e(ctx, family):
    """Differential relations: xi^2 + s xi eta = 0, eta^2 = 0,
    xi eta + eta xi = 0 with s as above."""
    if family in ("E1", "JORDANIAN"):
        s = parse_scalar("h", ctx)
    elif family == "E2":
        s = parse_scalar("(h1 - h2)/2", ctx)
    else:
        raise KeyError(family)
    zero, one = ctx.zero(), ctx.one()
    rows = [
        [one, s, zero, zero],     # xi^2 + s xi.eta
        [zero, zero, zero, one],  # eta^2
        [zero, one, one, zero],   # xi.eta + eta.xi
    ]
    return RelationSet(DIFF_GENS, ctx, rows, origin="stated")


def stated_mixed_rows_e(ctx, family="E2"):
    """The mixed exchange block of the triangular family, as Q-rows over
    (xi x, xi y, eta x, eta y):
        x xi  = xi x + h1 xi y + h2 eta x + h3 eta y
        x eta = eta x + h1 eta y
        y xi  = xi y + h2 eta y
        y eta = eta y
    For the one-parameter members, (h1, h2) specialise to (h, -h) and h3 to
    -h^2 on the deformation locus."""
    subs = {"E2": ("h1", "h2", "h3"),
            "E1": ("h", "-h", "h3"),
            "JORDANIAN": ("h", "-h", "-h^2")}[family]
    h1s, h2s, h3s = subs
    e = lambda t: parse_scalar(t, ctx)
    return {
        (0, 0): [e("1"), e(h1s), e(h2s), e(h3s)],
        (0, 1): [e("0"), e("0"), e("1"), e(h1s)],
        (1, 0): [e("0"), e("1"), e("0"), e(h2s)],
        (1, 1): [e("0"), e("0"), e("0"), e("1")],
    }


def s03_exchange_matrix(ctx):
    """The one-parameter exchange operator of the S03 plane, read off the
    stated mixed rules:
        x1 xi1 = (nu-1) xi1 x1 + nu xi1 x2
        x1 xi2 = (nu-1) xi1 x2 + nu xi1 x1
        x2 xi1 = (nu-1) xi2 x1 - nu xi2 x2
        x2 xi2 = (nu-1) xi2 x2 - nu xi2 x1
    """
    e = lambda t: parse_scalar(t, ctx)
    return SquareMatrix(ctx, [
        [e("nu - 1"), e("nu"), e("0"), e("0")],
        [e("nu"), e("nu - 1"), e("0"), e("0")],
        [e("0"), e("0"), e("nu - 1"), e("-nu")],
        [e("0"), e("0"), e("-nu"), e("nu - 1")],
    ])


def stated_mixed_rows_s03(ctx):
    m = s03_exchange_matrix(ctx)
    return {(i, j): list(m.rows[2 * i + j]) for i in range(2) for j in range(2)}


def stated_coordinate_relations_s03(ctx):
    """x1^2 = x1 x2 and x2^2 = -x2 x1 as rows over (11, 12, 21, 22)."""
    zero, one = ctx.zero(), ctx.one()
    return RelationSet(COORD_GENS_S03, ctx,
                       [[one, -one, zero, zero], [zero, zero, one, one]],
                       origin="stated")


def stated_differential_relations_s03(ctx):
    """xi1^2 = -xi1 xi2 and xi2^2 = xi2 xi1."""
    zero, one = ctx.zero(), ctx.one()
    return RelationSet(DIFF_GENS_S03, ctx,
                       [[one, one, zero, zero], [zero, zero, -one, one]],
                       origin="stated")
