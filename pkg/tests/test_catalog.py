import pytest

from exobi.catalog import CatalogError, builtin, builtin_catalog, dump_catalog, hat, load_catalog
from exobi.matrix import SquareMatrix, determinant
from exobi.scalar import Context, parse_scalar


def test_builtin_names_and_invertibility():
    defs = builtin_catalog()
    assert [d.name for d in defs] == ["E1", "E2", "E3", "S03", "S14", "JORDANIAN"]
    for d in defs:
        assert not determinant(d.matrix).is_zero()


def test_s03_pinned_entries():
    s03 = builtin("S03")
    assert s03.matrix.entry(4, 1) == -1
    assert s03.matrix.entry(2, 3) == 1
    assert s03.matrix.entry(3, 3) == -1


def test_s14_entries_and_constraint():
    s14 = builtin("S14")
    q = s14.ctx.gen("q")
    assert s14.matrix.entry(1, 4) == q
    assert s14.matrix.entry(4, 1) == q
    assert [c[0] for c in s14.constraints] == [q]


def test_e1_constraint_is_jordanian_locus():
    e1 = builtin("E1")
    (poly, kind), = e1.constraints
    assert kind == "nonzero"
    assert poly == parse_scalar("h3 + h^2", e1.ctx)


def test_jordanian_is_e1_on_the_locus():
    e1 = builtin("E1")
    jor = builtin("JORDANIAN")
    locus = {"h3": -(e1.ctx.gen("h") ** 2)}
    specialised = e1.matrix.substitute(locus)
    rebuilt = SquareMatrix(
        e1.ctx,
        [[parse_scalar(s.to_string(), e1.ctx) for s in row] for row in jor.matrix.rows],
    )
    assert specialised == rebuilt


def test_hat_swaps_rows():
    s14 = builtin("S14")
    rh = hat(s14)
    q = s14.ctx.gen("q")
    z, o = s14.ctx.zero(), s14.ctx.one()
    assert rh.rows == ((z, z, z, q), (z, o, z, z), (z, z, o, z), (q, z, z, z))


def test_hat_s03_row2():
    rh = hat(builtin("S03"))
    ctx = rh.ctx
    assert list(rh.rows[1]) == [ctx.zero(), ctx.one(), -ctx.one(), ctx.zero()]


def test_hat_involution():
    for d in builtin_catalog():
        p = SquareMatrix.swap_2x2_legs(d.ctx)
        assert p * (p * d.matrix) == d.matrix


def test_hat_of_identity_def_is_swap():
    ctx = Context(())
    ident = SquareMatrix.identity(ctx, 4)
    p = SquareMatrix.swap_2x2_legs(ctx)
    assert p * ident == p


def test_catalog_roundtrip():
    defs = builtin_catalog()
    text = dump_catalog(defs)
    again = load_catalog(text)
    assert len(again) == len(defs)
    for a, b in zip(defs, again):
        assert a.name == b.name
        assert a.params == b.params
        assert a.matrix == b.matrix
        assert [(c[0], c[1]) for c in a.constraints] == [(c[0], c[1]) for c in b.constraints]
        assert a.note == b.note


def test_load_rejects_singular():
    text = """
[rmatrix.BAD]
params =
row = 0, 0, 0, 0
row = 0, 0, 0, 0
row = 0, 0, 0, 0
row = 0, 0, 0, 0
"""
    with pytest.raises(CatalogError):
        load_catalog(text)


def test_load_rejects_duplicate_names():
    good = dump_catalog([builtin("S03")])
    with pytest.raises(CatalogError):
        load_catalog(good + "\n" + good)


def test_load_single_entry_with_param():
    text = """
# a one-parameter entry
[rmatrix.T]
params = q
row = q, 0, 0, 0
row = 0, 1, 0, 0
row = 0, 0, 1, 0
row = 0, 0, 0, q
"""
    (d,) = load_catalog(text)
    assert d.name == "T"
    assert d.matrix.entry(1, 1) == d.ctx.gen("q")


def test_load_rejects_wrong_row_count():
    text = """
[rmatrix.T]
row = 1, 0, 0, 0
row = 0, 1, 0, 0
row = 0, 0, 1, 0
"""
    with pytest.raises(CatalogError):
        load_catalog(text)
