import pytest

from exobi.catalog import builtin, builtin_catalog, hat
from exobi.matrix import SquareMatrix, inverse, kron
from exobi.scalar import Context, parse_scalar
from exobi.ybe import (
    ParamFamily, baxterise, check_braid_constant, check_braid_parametrized,
    check_constant_ybe, extended_context, find_braid_ansatz, lift_matrix,
    s03_reference_grid, spectral_projectors,
)


def test_all_builtins_satisfy_constant_ybe():
    for d in builtin_catalog():
        ok, wit = check_constant_ybe(d.matrix)
        assert ok, (d.name, wit)


def test_identity_satisfies_ybe():
    ok, _ = check_constant_ybe(SquareMatrix.identity(Context(()), 4))
    assert ok


def test_perturbed_s03_fails_with_witness():
    s03 = builtin("S03")
    rows = [list(r) for r in s03.matrix.rows]
    rows[0][3] = s03.ctx.integer(2)
    bad = SquareMatrix(s03.ctx, rows)
    ok, wit = check_constant_ybe(bad)
    assert not ok
    assert wit is not None and wit[2]


def test_braid_for_hat_e1_and_swap():
    ok, _ = check_braid_constant(hat(builtin("E1")))
    assert ok
    p = SquareMatrix.swap_2x2_legs(Context(()))
    ok, _ = check_braid_constant(p)
    assert ok


def test_braid_fails_on_sign_flip():
    rh = hat(builtin("S03"))
    rows = [list(r) for r in rh.rows]
    rows[1][2] = -rows[1][2]
    bad = SquareMatrix(rh.ctx, rows)
    ok, wit = check_braid_constant(bad)
    assert not ok and wit is not None


def test_constant_ybe_iff_braid_of_hat():
    for d in builtin_catalog():
        ok1, _ = check_constant_ybe(d.matrix)
        ok2, _ = check_braid_constant(hat(d))
        assert ok1 == ok2


def test_spectral_projectors_s03():
    rh = hat(builtin("S03"))
    pp, pm = spectral_projectors(rh)
    ctx = rh.ctx
    i = ctx.i()
    half = ctx.rational(1, 2)
    want_pp = SquareMatrix(ctx, [
        [ctx.one(), ctx.zero(), ctx.zero(), i],
        [ctx.zero(), ctx.one(), -i, ctx.zero()],
        [ctx.zero(), i, ctx.one(), ctx.zero()],
        [-i, ctx.zero(), ctx.zero(), ctx.one()],
    ]).scale(half)
    assert pp == want_pp
    i4 = SquareMatrix.identity(ctx, 4)
    assert pp + pm == i4
    assert (pp * pm).is_zero()
    assert (pm * pp).is_zero()
    assert pp * pp == pp
    assert pm * pm == pm
    one_minus_i = ctx.one() - i
    one_plus_i = ctx.one() + i
    assert pp.scale(one_minus_i) + pm.scale(one_plus_i) == rh


def test_spectral_projectors_reject_wrong_minpoly():
    with pytest.raises(ValueError):
        spectral_projectors(hat(builtin("E1")))


def test_baxterise_at_one_is_twice_identity():
    fam = baxterise(hat(builtin("S03")))
    at1 = fam.at(fam.ctx.one())
    assert at1 == SquareMatrix.identity(fam.ctx, 4).scale(2)


def test_baxterise_matches_reference_grid():
    fam = baxterise(hat(builtin("S03")))
    ref = s03_reference_grid(fam.ctx)
    assert fam.grid == ref
    x = fam.ctx.gen("x")
    assert fam.grid.entry(1, 1) == x + 1
    assert fam.grid.entry(4, 1) == x - 1


def test_parametrized_braid_s03():
    fam = baxterise(hat(builtin("S03")))
    ok, wit = check_braid_parametrized(fam)
    assert ok, wit


def test_parametrized_braid_constant_identity_family():
    ctx = Context(("x", "y"))
    fam = ParamFamily(ctx, "x", SquareMatrix.identity(ctx, 4))
    ok, _ = check_braid_parametrized(fam)
    assert ok


def test_parametrized_braid_detects_wrong_coefficient():
    rh = hat(builtin("S03"))
    ctx = extended_context(rh.ctx, ("x", "y"))
    rh_l = lift_matrix(rh, ctx)
    broken = rh_l + inverse(rh_l).scale(ctx.gen("x"))  # coefficient 2 dropped
    fam = ParamFamily(ctx, "x", broken)
    ok, wit = check_braid_parametrized(fam)
    assert not ok and wit is not None


def test_ansatz_search_s03():
    res = find_braid_ansatz(hat(builtin("S03")))
    assert res.applicable
    assert res.alpha == 2
    assert res.matches_family
    assert "c(x*y)" in res.constraint


def test_ansatz_search_inapplicable_for_cubic_case():
    res = find_braid_ansatz(hat(builtin("E1")))
    assert not res.applicable
    assert "degree" in res.reason
