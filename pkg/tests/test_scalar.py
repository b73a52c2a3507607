import pytest
from hypothesis import given, settings, strategies as st

from exobi.scalar import Context, ContextMismatch, ParseError, Scalar, SubstitutionError, parse_scalar


CTX = Context(("h", "h1", "h2", "h3"))


def P(text, ctx=CTX):
    return parse_scalar(text, ctx)


def test_parse_rational():
    assert P("1/2") == Context(()).rational(1, 2)
    assert P("1/2") == CTX.rational(1, 2)
    assert P("3") == 3
    assert P("-4") == -4


def test_parse_imaginary_square():
    assert P("i^2") == -1
    assert P("i*i") == -1
    assert (P("i") * P("i")) == -1


def test_parse_polynomial():
    v = P("h1*h2 - h3")
    assert v == CTX.gen("h1") * CTX.gen("h2") - CTX.gen("h3")


def test_parse_precedence_and_parens():
    assert P("2 + 3*4") == 14
    assert P("(2 + 3)*4") == 20
    assert P("2*h^2") == CTX.integer(2) * CTX.gen("h") ** 2
    assert P("6/2/3") == 1


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as e:
        P("h1 + ")
    assert e.value.position == 5
    with pytest.raises(ParseError) as e:
        P("h1 * bogus")
    assert "bogus" in str(e.value)
    with pytest.raises(ParseError):
        P("h^(2)")
    with pytest.raises(ParseError):
        P("1/(h - h)")


def test_roundtrip_print_parse():
    samples = [
        "1/2", "-3", "i", "-i", "h", "2*h^2 - h3", "h1*h2 - h3",
        "(h + 1)/(h3 + 2)", "(h^2 + h1)/(h - 1)", "1/2 + 3*i",
        "(i)*h + 1", "(h - 1)/(h + 1)",
    ]
    for s in samples:
        v = P(s)
        again = P(v.to_string())
        assert again == v, (s, v.to_string())


def test_zero_is_canonical():
    z = P("h - h")
    assert z.is_zero()
    assert z == CTX.zero()
    assert z.is_constant()
    num, den = z.as_numer_denom()
    assert num.is_zero() and den.is_one()


def test_demotion_to_constant_form():
    v = P("(h + 1) - h")
    assert v.is_constant() and v == 1
    w = P("h/h")
    assert w.is_constant() and w == 1


def test_numer_denom_monic_real_denominator():
    v = P("(h + 1)/(2*h3 + 4)")
    num, den = v.as_numer_denom()
    assert den == P("h3 + 2")
    assert num == P("(h + 1)/2")
    # denominators stay i-free
    w = CTX.one() / (CTX.gen("h") + CTX.i())
    num, den = w.as_numer_denom()
    assert den.is_real()
    assert num / den == w


def test_substitute_simple():
    v = P("(h^2 + 1)/h")
    assert v.substitute({"h": CTX.integer(1)}) == 2


def test_substitute_jordanian_locus():
    v = P("h3 + h^2")
    assert v.substitute({"h3": -(CTX.gen("h") ** 2)}).is_zero()


def test_substitute_chained_specialization():
    v = P("h1 + h2")
    out = v.substitute({"h1": CTX.gen("h"), "h2": -CTX.gen("h")})
    assert out.is_zero()


def test_substitute_denominator_vanishes():
    v = P("1/(h3 + h^2)")
    with pytest.raises(SubstitutionError):
        v.substitute({"h3": -(CTX.gen("h") ** 2)})


def test_substitute_unknown_symbol_rejected():
    with pytest.raises(KeyError):
        P("h").substitute({"zz": CTX.one()})


def test_context_mismatch_raises():
    other = Context(("x",))
    with pytest.raises(ContextMismatch):
        P("h") + other.gen("x")


def test_cross_context_constants_compare_equal():
    a = Context(()).rational(2, 3)
    b = CTX.rational(2, 3)
    assert a == b


rationals = st.fractions(min_value=-30, max_value=30, max_denominator=7)


def _scalar(ctx, re, im, k):
    base = ctx.gaussian((re.numerator, re.denominator), (im.numerator, im.denominator))
    if k == 0:
        return base
    g = ctx.gen(ctx.symbols[k % len(ctx.symbols)])
    return base + g ** (1 + k % 2)


@settings(max_examples=60, deadline=None)
@given(rationals, rationals, rationals, st.integers(0, 3), st.integers(0, 3))
def test_field_axioms(r1, i1, r2, k1, k2):
    a = _scalar(CTX, r1, i1, k1)
    b = _scalar(CTX, r2, r1, k2)
    c = _scalar(CTX, i1, r2, k1 + 1)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + CTX.zero() == a
    assert a * CTX.one() == a
    if not a.is_zero():
        assert a * a.inverse() == CTX.one()
    assert a - a == CTX.zero()


@settings(max_examples=30, deadline=None)
@given(rationals, rationals)
def test_complex_inverse(re, im):
    ctx = Context(())
    a = ctx.gaussian((re.numerator, re.denominator), (im.numerator, im.denominator))
    if a.is_zero():
        return
    assert a * a.inverse() == ctx.one()
    assert (a * a.conjugate()).is_real()
