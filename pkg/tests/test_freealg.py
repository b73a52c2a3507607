import random

import pytest

from exobi.freealg import (
    Alphabet, NcPoly, OrientationError, RewriteSystem, build_rewrite_system,
    graded_ideal_rank, ideal_contains, ideal_span_contained, is_two_sided_ideal,
    parse_ncpoly, parse_relation_lines,
)
from exobi.scalar import Context
from exobi.systems import t_system


E1 = t_system("E1")
S03 = t_system("S03")
S14 = t_system("S14")


def p(text, sys_=E1):
    return parse_ncpoly(text, sys_.alphabet, sys_.ctx)


def test_normal_form_e1_leading_relation():
    nf = E1.rewrite.normal_form(p("dt*b"))
    assert nf == p("b*dt + 2*h*dt^2 + h*b*c")


def test_normal_form_kills_zero_products():
    assert E1.rewrite.normal_form(p("at*c")).is_zero()
    assert E1.rewrite.normal_form(p("c*at")).is_zero()
    assert E1.rewrite.normal_form(p("at*dt")).is_zero()


def test_normal_form_empty_system_is_identity():
    alph = Alphabet(("u", "v"))
    ctx = Context(())
    rs = RewriteSystem(alph, ctx)
    q = parse_ncpoly("u*v + 3*v*u", alph, ctx)
    assert rs.normal_form(q) == q


def test_normal_form_is_projection_and_linear():
    rng = random.Random(5)
    words = ["b*dt*b", "dt^2*b", "at*b*c", "dt*b*dt", "b^2", "c*b*c"]
    for _ in range(10):
        q1 = p(random.Random(rng.random()).choice(words))
        q2 = p(rng.choice(words)).scale(E1.ctx.rational(rng.randint(-3, 3), 2))
        nf = E1.rewrite.normal_form
        assert nf(nf(q1)) == nf(q1)
        assert nf(q1 + q2) == nf(q1) + nf(q2)


def test_confluence_empty_for_builtin_systems():
    for sys_ in (E1, S03, S14):
        assert sys_.rewrite.confluence_check(6) == []


def test_confluence_detects_inconsistent_toy():
    alph = Alphabet(("a", "b", "c"))
    ctx = Context(())
    rs = RewriteSystem(alph, ctx)
    rs.add_rule((0, 1), NcPoly.zero(alph, ctx))                 # ab -> 0
    rs.add_rule((1, 2), NcPoly.gen(alph, ctx, "c"))             # bc -> c
    bad = rs.confluence_check(6)
    assert bad, "the abc overlap must fail to resolve"
    words = [w for w, _ in bad]
    assert (0, 1, 2) in words


def test_enumerate_normal_monomials_e1_degree2():
    words = E1.rewrite.enumerate_normal_monomials(2)
    names = {E1.alphabet.word_string(w) for w in words}
    assert names == {"b^2", "b*at", "at^2", "b*dt", "dt^2", "b*c"}


def test_enumerate_normal_monomials_s03_degree2_matches_oracle():
    # The cyclic-basis blocks with zero exponents admit both bt*ct and ct*bt,
    # so degree 2 carries 8 normal words, in exact agreement with the
    # independent rank oracle.
    words = S03.rewrite.enumerate_normal_monomials(2)
    names = {S03.alphabet.word_string(w) for w in words}
    assert names == {"at^2", "dt^2", "at*ct", "ct*dt", "dt*bt", "bt*at",
                     "bt*ct", "ct*bt"}
    rank = graded_ideal_rank(S03.relations, S03.alphabet, S03.ctx, 2)
    assert len(words) == 4 ** 2 - rank


def test_enumerate_degree_zero():
    for sys_ in (E1, S03, S14):
        assert sys_.rewrite.enumerate_normal_monomials(0) == [()]


def test_graded_counts_match_oracle_to_degree5():
    for sys_ in (E1, S03, S14):
        n = len(sys_.alphabet.names)
        for d in range(2, 6):
            rank = graded_ideal_rank(sys_.relations, sys_.alphabet, sys_.ctx, d)
            assert sys_.rewrite.count_normal_monomials(d) == n ** d - rank, (
                sys_.name, d)


def test_e1_normal_words_never_mix_at_and_dt():
    at = E1.alphabet.index["at"]
    dt = E1.alphabet.index["dt"]
    for d in range(6):
        for w in E1.rewrite.enumerate_normal_monomials(d):
            assert not (at in w and dt in w), E1.alphabet.word_string(w)


def test_ideal_contains_examples():
    assert ideal_contains(p("c^2"), E1.rewrite)
    assert ideal_contains(p("b*c - c*b"), E1.rewrite)
    assert not ideal_contains(p("at*b + b*at"), E1.rewrite)
    assert not ideal_contains(p("b*c"), E1.rewrite)


def test_ideal_contains_needs_confluence():
    alph = Alphabet(("u",))
    ctx = Context(())
    rs = RewriteSystem(alph, ctx)
    with pytest.raises(ValueError):
        ideal_contains(parse_ncpoly("u", alph, ctx), rs)


def test_e1_ideal_chain():
    bc = p("b*c")
    dt2 = p("dt^2")
    bdt = p("b*dt")
    ok, _ = is_two_sided_ideal([bc], E1.rewrite, 5)
    assert ok
    ok, _ = is_two_sided_ideal([dt2, bc], E1.rewrite, 5)
    assert ok
    ok, _ = is_two_sided_ideal([bdt, dt2, bc], E1.rewrite, 5)
    assert ok
    assert ideal_span_contained([bc], [dt2, bc], E1.rewrite, 5)
    assert ideal_span_contained([dt2, bc], [bdt, dt2, bc], E1.rewrite, 5)


def test_b_alone_is_not_an_ideal():
    ok, witness = is_two_sided_ideal([p("b")], E1.rewrite, 5)
    assert not ok
    assert witness is not None


def test_orientation_rejected_when_rhs_not_smaller():
    alph = Alphabet(("x", "y"), order_desc=("x", "y"), lex="left")
    ctx = Context(())
    rs = RewriteSystem(alph, ctx)
    with pytest.raises(OrientationError):
        rs.add_rule((alph.index["x"],),
                    parse_ncpoly("y*y", alph, ctx))


def test_completion_adds_consequences():
    # x^2 -> y with y^2 -> x has an x^3 ambiguity forcing xy = yx.
    alph = Alphabet(("x", "y"), order_desc=("x", "y"), lex="left")
    ctx = Context(())
    rels = [parse_ncpoly("x^2 - y", alph, ctx)]
    rs = build_rewrite_system(rels, alph, ctx, max_degree=6)
    assert rs.confluence_check(6) == []
    nf = rs.normal_form(parse_ncpoly("x^2*x - x*x^2", alph, ctx))
    assert nf.is_zero()


def test_relation_file_parsing_roundtrip():
    alph = Alphabet(("u", "v"))
    ctx = Context(("h",))
    rels = parse_relation_lines("u*v = v*u + 2*h*v^2  # comment\n\nv^2 = 0\n",
                                alph, ctx)
    assert len(rels) == 2
    assert rels[0] == parse_ncpoly("u*v - v*u - 2*h*v^2", alph, ctx)


def test_relation_parser_rejects_word_division():
    alph = Alphabet(("u", "v"))
    ctx = Context(())
    with pytest.raises(ValueError):
        parse_ncpoly("u/v", alph, ctx)


def test_word_power_expansion():
    alph = Alphabet(("u", "v"))
    ctx = Context(())
    q = parse_ncpoly("(u*v)^2", alph, ctx)
    assert list(q.terms) == [(0, 1, 0, 1)]
