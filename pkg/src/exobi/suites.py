"""Verification suites: each builds the checks for one slice of the workbench
(Yang-Baxter, minimal polynomials, T/L relation derivations, dual bialgebras,
representations, quantum planes, Baxterisation) over one catalog matrix or all
of them, and assembles a Report.

Numeric specialisation: `specialize` bindings re-run the polynomial-identity
checks (Yang-Baxter, minimal-polynomial annihilation, projector and family
identities, orthogonality) at the given parameter point after validating the
point against the catalog constraints.  Span- and rank-valued checks stay
symbolic: their content is generic-rank equality, which a special point can
legitimately break without contradicting the symbolic claim.
"""

from __future__ import annotations

import random
import time

from . import bialg, qplane, reps, rtt, ybe
from .catalog import builtin_catalog, hat_of
from .freealg import NcPoly, graded_ideal_rank, ideal_contains, is_two_sided_ideal, \
    ideal_span_contained
from .matrix import SquareMatrix, evaluate_poly_at_matrix, inverse, minimal_polynomial, \
    poly_from_roots, poly_to_string
from .report import Check, FAIL, PASS, Report, UNDECIDED
from .scalar import Context, Scalar, parse_scalar
from .systems import dual_system, rll_tilde_system, t_system


SUITES = ("ybe", "minpoly", "rtt", "rll", "dual", "reps", "qplane", "baxter", "all")


class UsageError(ValueError):
    """Bad suite/matrix/config; maps to exit code 2."""


def _timed(report, check_id, anchor, fn):
    t0 = time.perf_counter()
    try:
        ok, witness = fn()
        status = PASS if ok else FAIL
    except _Undecided as exc:
        status, witness = UNDECIDED, str(exc)
    ms = (time.perf_counter() - t0) * 1000.0
    report.add(Check(check_id, anchor, status, witness or "", ms))


class _Undecided(Exception):
    pass


def _specialized_matrix(rdef, bindings):
    """Substitute a numeric point into a catalog matrix, after checking the
    definition's genericity constraints stay nonzero there."""
    relevant = {k: v for k, v in bindings.items() if k in rdef.ctx.index}
    if not relevant:
        return None
    point = {k: parse_scalar(v, rdef.ctx) if isinstance(v, str) else v
             for k, v in relevant.items()}
    for poly, kind in rdef.constraints:
        if kind == "nonzero" and poly.substitute(point).is_zero():
            raise UsageError(
                "specialization violates the constraint %s != 0 of %s"
                % (poly.to_string(), rdef.name))
    return rdef.matrix.substitute(point)


def _select(defs, matrix):
    if matrix == "all":
        return defs
    for d in defs:
        if d.name == matrix:
            return [d]
    raise UsageError("unknown matrix %r (have %s)"
                     % (matrix, ", ".join(d.name for d in defs)))


# -- ybe ---------------------------------------------------------------------------


def suite_ybe(report, defs, config):
    for d in defs:
        _timed(report, "ybe.constant.%s" % d.name,
               "R12 R13 R23 = R23 R13 R12 for %s, exact in all parameters" % d.name,
               lambda d=d: _witness_entry(ybe.check_constant_ybe(d.matrix)))
        _timed(report, "ybe.braid-equivalence.%s" % d.name,
               "constant equation holds iff the braid form holds for the leg-swap",
               lambda d=d: (ybe.check_constant_ybe(d.matrix)[0]
                            == ybe.check_braid_constant(hat_of(d.matrix))[0], ""))
        sp = _specialized_matrix(d, config.specialize)
        if sp is not None:
            _timed(report, "ybe.constant.%s.specialized" % d.name,
                   "constant equation at the numeric point",
                   lambda sp=sp: _witness_entry(ybe.check_constant_ybe(sp)))


def _witness_entry(result):
    ok, wit = result
    if ok:
        return True, ""
    i, j, v = wit
    return False, "first differing entry (%d, %d): %s" % (i + 1, j + 1, v.to_string())


# -- minpoly ------------------------------------------------------------------------


def _expected_minpoly(name, ctx):
    one = ctx.one()
    if name == "E1":
        return poly_from_roots(ctx, [(one, 2), (-one, 1)]), "(t-1)^2 (t+1)"
    if name == "E2":
        return poly_from_roots(ctx, [(one, 3), (-one, 1)]), "(t-1)^3 (t+1)"
    if name == "JORDANIAN":
        return poly_from_roots(ctx, [(one, 1), (-one, 1)]), "(t-1)(t+1)"
    if name == "S03":
        return [ctx.integer(2), ctx.integer(-2), one], "t^2 - 2t + 2"
    return None, None


def suite_minpoly(report, defs, config):
    for d in defs:
        rh = hat_of(d.matrix)
        mp = minimal_polynomial(rh)
        expected, label = _expected_minpoly(d.name, d.ctx)

        def run(d=d, rh=rh, mp=mp, expected=expected, label=label):
            if evaluate_poly_at_matrix(mp, rh).first_nonzero() is not None:
                return False, "computed polynomial does not annihilate"
            from .linalg import rank
            from .matrix import vectorize
            power = SquareMatrix.identity(d.ctx, 4)
            vecs = []
            for _ in range(len(mp) - 1):
                vecs.append(vectorize(power))
                power = power * rh
            if rank(vecs) != len(vecs):
                return False, "a lower-degree annihilator exists"
            if expected is not None and mp != expected:
                return False, "expected %s, computed %s" % (label, poly_to_string(mp))
            return True, poly_to_string(mp)

        _timed(report, "minpoly.%s" % d.name,
               "minimal polynomial of the leg-swapped matrix, with minimality",
               run)
        sp = _specialized_matrix(d, config.specialize)
        if sp is not None:
            rhs = hat_of(sp)
            _timed(report, "minpoly.%s.specialized" % d.name,
                   "the symbolic minimal polynomial still annihilates at the point",
                   lambda d=d, rhs=rhs, mp=mp: (
                       evaluate_poly_at_matrix(
                           [c.substitute({k: parse_scalar(v, d.ctx) if isinstance(v, str) else v
                                          for k, v in config.specialize.items()
                                          if k in d.ctx.index}) for c in mp],
                           rhs).first_nonzero() is None, ""))


# -- rtt ----------------------------------------------------------------------------


STATED_T = {"E1": False, "S03": True, "S14": True}  # name -> split_bc


def suite_rtt(report, defs, config):
    for d in defs:
        derived = rtt.derive_rtt_relations(d.matrix)
        if d.name in STATED_T:
            til = rtt.to_tilde_generators(derived, split_bc=STATED_T[d.name])
            stated = rtt.stated_t_relations(d.name)

            def run(til=til, stated=stated):
                eq, wit = til.span_equal(stated)
                if eq:
                    return True, "span dimension %d" % til.dim
                return False, "witness row in one span only: %s" % (
                    [s.to_string() for s in wit],)

            _timed(report, "rtt.span.%s" % d.name,
                   "derived quadratic relation span equals the stated tilde-basis set",
                   run)
        else:
            til = rtt.to_tilde_generators(derived, split_bc=True)
            _timed(report, "rtt.derived-dim.%s" % d.name,
                   "derived relation span (no stated set shipped; emitted for inspection)",
                   lambda derived=derived, til=til: (
                       True, "dimension %d; tilde rows: %s" % (
                           derived.dim,
                           "; ".join(p.to_string() for p in til.to_ncpolys()))))
        _timed(report, "rtt.tilde-dim.%s" % d.name,
               "span dimension is invariant under the tilde change of basis",
               lambda derived=derived, d=d: (
                   rtt.to_tilde_generators(derived, split_bc=True).dim == derived.dim, ""))
        _timed(report, "rtt.swap-symmetry.%s" % d.name,
               "when (X(x)X) R (X(x)X) = R, the span is stable under a<->d, b<->c",
               lambda d=d, derived=derived: _swap_symmetry(d, derived))

    if any(d.name in STATED_T for d in defs):
        for name in [d.name for d in defs if d.name in STATED_T]:
            sys_ = t_system(name, config.max_degree)
            _timed(report, "rtt.confluence.%s" % name,
                   "all rewriting ambiguities up to the degree cap resolve",
                   lambda s=sys_: (s.rewrite.confluence_check(config.max_degree) == [], ""))
            for dd in range(2, min(config.max_degree, 5) + 1):
                _timed(report, "rtt.normal-count-oracle.%s.%d" % (name, dd),
                       "normal-monomial count equals alphabet^d minus the rank of the "
                       "degree-d ideal component",
                       lambda s=sys_, dd=dd: _count_vs_oracle(s, dd))


def _count_vs_oracle(sys_, d):
    n = len(sys_.alphabet.names)
    r = graded_ideal_rank(sys_.relations, sys_.alphabet, sys_.ctx, d)
    enum = sys_.rewrite.count_normal_monomials(d)
    oracle = n ** d - r
    if enum == oracle:
        return True, "count %d" % enum
    return False, "enumerated %d, oracle %d" % (enum, oracle)


def _swap_symmetry(d, derived):
    ctx = d.ctx
    x = SquareMatrix.from_ints(ctx, [[0, 1], [1, 0]])
    from .matrix import kron
    xx = kron(x, x)
    if xx * d.matrix * xx != d.matrix:
        return True, "matrix lacks the swap symmetry; nothing to assert"
    # relabel a<->d, b<->c as a change of generators
    one = ctx.one()
    swapped = derived.change_generators(
        ("a", "b", "c", "d"),
        {"a": [("d", one)], "d": [("a", one)], "b": [("c", one)], "c": [("b", one)]})
    eq, _ = swapped.span_equal(derived)
    return eq, ""


# -- rll ----------------------------------------------------------------------------


def suite_rll(report, defs, config):
    for d in defs:
        fams = rtt.derive_rll_relations(d.matrix)
        if d.name == "S03":
            for key in ("pp", "mm", "pm"):
                til = rtt.rll_to_tilde(fams[key])
                stated = rtt.stated_rll_relations(key)
                _timed(report, "rll.%s.S03" % key,
                       "derived L-relation span equals the stated tilde-basis set",
                       lambda til=til, stated=stated: _span_check(til, stated))
            _timed(report, "rll.dim-invariance.S03",
                   "raw and tilde-basis spans of the same family have equal dimension",
                   lambda fams=fams: (
                       rtt.rll_to_tilde(fams["pp"]).dim == fams["pp"].dim, ""))
            _timed(report, "rll.raw-squares.S03",
                   "the raw one-sign span contains the square-difference relation",
                   lambda fams=fams, d=d: _raw_squares(fams["pp"], d.ctx))
            sys_ = rll_tilde_system(config.max_degree)
            _timed(report, "rll.confluence.S03",
                   "the tilde L system resolves all its ambiguities",
                   lambda s=sys_: (s.rewrite.confluence_check(3) == [], ""))
            rep_act = rtt.check_ordering_actions(n_max=2, exp_max=2, system=sys_)
            for label, res in sorted(rep_act.items()):
                _timed(report, "rll.ordering.%s" % label,
                       "reduction confirms the stated action under some literal reading",
                       lambda res=res: (
                           bool(res["readings_confirmed"]),
                           "confirmed readings: %s over %d instances"
                           % (",".join(res["readings_confirmed"]) or "none",
                              res["instances"])))
        else:
            _timed(report, "rll.derived-dims.%s" % d.name,
                   "derived L-relation family dimensions (emitted for inspection)",
                   lambda fams=fams: (True, "pp=%d mm=%d pm=%d" % (
                       fams["pp"].dim, fams["mm"].dim, fams["pm"].dim)))


def _span_check(a, b):
    eq, wit = a.span_equal(b)
    if eq:
        return True, "span dimension %d" % a.dim
    return False, "witness row: %s" % ([s.to_string() for s in wit],)


def _raw_squares(relset, ctx):
    n = len(relset.gens)
    row = [ctx.zero()] * (n * n)
    i11 = relset.gens.index("Lp11")
    i22 = relset.gens.index("Lp22")
    row[i11 * n + i11] = ctx.one()
    row[i22 * n + i22] = -ctx.one()
    from .linalg import rref, in_span
    basis, piv = rref(relset.rows)
    return in_span(row, basis, piv), ""


# -- dual ---------------------------------------------------------------------------


def suite_dual(report, defs, config):
    names = {d.name for d in defs}
    if "S03" in names:
        sysd = dual_system("S03", config.max_degree)
        sysp = dual_system("S03PRIME", config.max_degree)
        fba = bialg.build_finite_algebra(sysp)
        _timed(report, "dual.s03prime-dimension",
               "the subalgebra on Bt, Ct, Dt has dimension exactly 9",
               lambda fba=fba: (fba.dimension == 9, "basis: %s" % ", ".join(fba.labels)))
        _timed(report, "dual.s03prime-axioms",
               "associativity, coassociativity, counit laws and the coproduct "
               "homomorphism property hold on structure constants",
               lambda fba=fba: _fba_axioms(fba))
        _timed(report, "dual.s03prime-antipode",
               "the antipode equations are linearly infeasible",
               lambda fba=fba: _antipode_infeasible(fba))
        _timed(report, "dual.s03-axioms",
               "coproduct is an algebra homomorphism for every stated relation",
               lambda sysd=sysd: _axioms(sysd, config.max_degree))
        g = lambda n: NcPoly.gen(sysd.alphabet, sysd.ctx, n)
        for el, lbl, want in ((g("At"), "At", True),
                              (g("Bt") * g("Bt"), "Bt^2", True),
                              (g("Dt") * g("Dt"), "Dt^2", True),
                              (g("Bt"), "Bt", False)):
            _timed(report, "dual.s03-central.%s" % lbl,
                   "centrality of %s is %s" % (lbl, "asserted" if want else "refuted"),
                   lambda el=el, want=want, sysd=sysd: (
                       bialg.check_central(el, sysd.rewrite, config.max_degree)[0] == want,
                       ""))
        _timed(report, "dual.s03-unit-actions",
               "At Dt = Dt and Bt^2 At = At hold by reduction",
               lambda sysd=sysd, g=g: (
                   ideal_contains(g("At") * g("Dt") - g("Dt"), sysd.rewrite)
                   and ideal_contains(g("Bt") * g("Bt") * g("At") - g("At"), sysd.rewrite),
                   ""))
    if "E1" in names:
        syse = dual_system("E1", config.max_degree)
        _timed(report, "dual.e1-axioms",
               "coproduct is an algebra homomorphism for every stated relation "
               "(truncated tensor check)",
               lambda syse=syse: _axioms(syse, 4))
        _timed(report, "dual.e1-e-element",
               "the zero-pairing element kills every generator and is grouplike",
               lambda syse=syse: _e1_e_checks(syse))
        tsys = t_system("E1", config.max_degree)
        _timed(report, "dual.e1-ideals",
               "b*c, {dt^2, b*c} and {b*dt, dt^2, b*c} generate nested two-sided ideals",
               lambda tsys=tsys: _e1_ideals(tsys, config.max_degree))
    if "S14" in names:
        syss = dual_system("S14", config.max_degree)
        _timed(report, "dual.s14-axioms",
               "coproduct is an algebra homomorphism for every stated relation "
               "(truncated tensor check)",
               lambda syss=syss: _axioms(syss, 4))
        g = lambda n: NcPoly.gen(syss.alphabet, syss.ctx, n)
        _timed(report, "dual.s14-ct-membership",
               "Ct = Dt Bt = -Bt Dt and [At, Dt] = 0 by reduction",
               lambda syss=syss, g=g: (
                   ideal_contains(g("Ct") - g("Dt") * g("Bt"), syss.rewrite)
                   and ideal_contains(g("Ct") + g("Bt") * g("Dt"), syss.rewrite)
                   and ideal_contains(g("At") * g("Dt") - g("Dt") * g("At"), syss.rewrite),
                   ""))
    _timed(report, "dual.antipode-toy-z2",
           "the order-two group algebra does admit an antipode (solver sanity)",
           _toy_z2_antipode)
    for d in defs:
        deg = 3 if not d.ctx.symbols else 2
        _timed(report, "dual.frt-pairing.%s" % d.name,
               "derived L-relations pair to zero with T-words and derived "
               "T-relations with L-words (degree <= %d)" % deg,
               lambda d=d, deg=deg: _pairing(d, deg))
        _timed(report, "dual.frt-degree1.%s" % d.name,
               "the letter pairing table reproduces the leg-conjugated matrix",
               lambda d=d: _pairing_degree1(d))


def _fba_axioms(fba):
    for label, fn in (("associativity", fba.check_associativity),
                      ("coassociativity", fba.check_coassociativity),
                      ("counit", fba.check_counit),
                      ("coproduct homomorphism", fba.check_delta_homomorphism)):
        ok, wit = fn()
        if not ok:
            return False, "%s fails at %s" % (label, (wit,))
    return True, ""


def _antipode_infeasible(fba):
    s, cert = bialg.solve_antipode(fba)
    if s is None:
        return True, "inconsistent row found in the linear system"
    return False, "an antipode matrix exists"


def _axioms(system, cap):
    ok, fails = bialg.check_bialgebra_axioms(system, degree_cap=cap)
    und = [f for f in fails if f[0] == "undecided"]
    if und:
        raise _Undecided("; ".join(str(u) for u in und))
    if ok:
        return True, "%d relations checked" % len(system.relations)
    return False, "; ".join("%s at %s" % (f[0], f[1]) for f in fails[:3])


def _e1_e_checks(syse):
    g = lambda n: NcPoly.gen(syse.alphabet, syse.ctx, n)
    e = g("E")
    for z in ("At", "B", "C", "Dt"):
        if not ideal_contains(e * g(z), syse.rewrite):
            return False, "E*%s does not vanish" % z
        if not ideal_contains(g(z) * e, syse.rewrite):
            return False, "%s*E does not vanish" % z
    cop = bialg.Coproduct(syse)
    d = cop.delta_gen["E"]
    want = {((syse.alphabet.index["E"],), (syse.alphabet.index["E"],)): syse.ctx.one()}
    return d.terms == want, ""


def _e1_ideals(tsys, max_degree):
    alph, ctx = tsys.alphabet, tsys.ctx
    g = lambda n: NcPoly.gen(alph, ctx, n)
    bc = g("b") * g("c")
    dt2 = g("dt") * g("dt")
    bdt = g("b") * g("dt")
    cap = min(max_degree, 5)
    i1 = [bc]
    i2 = [dt2, bc]
    i_full = [bdt, dt2, bc]
    for gens, lbl in ((i1, "I1"), (i2, "I2"), (i_full, "I")):
        ok, wit = is_two_sided_ideal(gens, tsys.rewrite, cap)
        if not ok:
            return False, "%s is not a two-sided ideal; witness %s" % (lbl, wit.to_string())
    if not ideal_span_contained(i1, i2, tsys.rewrite, cap):
        return False, "I1 is not contained in I2"
    if not ideal_span_contained(i2, i_full, tsys.rewrite, cap):
        return False, "I2 is not contained in I"
    ok, wit = is_two_sided_ideal([g("b")], tsys.rewrite, cap)
    if ok:
        return False, "the span of b alone wrongly passes the ideal check"
    return True, ""


def _toy_z2_antipode():
    from .freealg import Alphabet
    from .systems import AlgebraSystem
    ctx = Context(())
    alph = Alphabet(("g",))
    gp = NcPoly.gen(alph, ctx, "g")
    one = NcPoly.one(alph, ctx)
    sys_ = AlgebraSystem("Z2", alph, ctx, [gp * gp - one], max_degree=4,
                         delta={"g": [(ctx.one(), gp, gp)]}, eps={"g": ctx.one()})
    fba = bialg.build_finite_algebra(sys_)
    s, cert = bialg.solve_antipode(fba)
    if s is None:
        return False, "no antipode found for the group algebra"
    return True, ""


def _pairing(d, deg):
    ok, fails = bialg.frt_pairing_check(d.matrix, max_degree=deg)
    if ok:
        return True, ""
    side, rel, word = fails[0]
    return False, "%s %s fails against %s" % (side, rel, word)


def _pairing_degree1(d):
    pairing = bialg.FrtPairing(d.matrix)
    want = pairing.r_plus
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    got = pairing.pair_letter(1, i, j, ((k, l),))
                    if got != want[(2 * i + k, 2 * j + l)]:
                        return False, "entry (%d%d),(%d%d)" % (i, j, k, l)
    return True, ""


# -- reps ---------------------------------------------------------------------------


def suite_reps(report, defs, config):
    names = {d.name for d in defs}
    rng = random.Random(config.seed)
    if "S03" in names:
        d = next(x for x in defs if x.name == "S03")
        rep = reps.l_operator_rep_from_r(d.matrix)
        rels = reps.rll_relation_polys(d.matrix)
        _timed(report, "reps.rrr-linear.S03",
               "the L-operators read off the matrix satisfy all derived relations",
               lambda rep=rep, rels=rels: _rep_check(rep, rels))
        _timed(report, "reps.rrr-conjugation.S03",
               "the relation check is basis independent (random conjugation)",
               lambda rep=rep, rels=rels, rng=rng: _conjugated(rep, rels, rng))
        _timed(report, "reps.rrr-irreducible.S03",
               "the two-dimensional L-operator representation is irreducible",
               lambda rep=rep: (reps.irreducible_numeric(rep), ""))
        _timed(report, "reps.s03-dual-1dim",
               "the one-dimensional assignment (mu, 1, i, 0) satisfies the dual "
               "relations symbolically",
               _s03_dual_1dim)
        _timed(report, "reps.s03-dual-2dim",
               "the sigma-type two-dimensional assignment satisfies the "
               "Bt, Ct, Dt subsystem",
               _s03_dual_2dim)
        _timed(report, "reps.s03-2dim-irreducible",
               "the sigma-type representation with unit central charge is irreducible",
               _s03_2dim_irred)
        _timed(report, "reps.weight-eigenvalues",
               "eigenvalues of the cube-root generator lie in {0, 1, -1}",
               _weights)
        _timed(report, "reps.2dim-grid-search",
               "bounded grid search for further two-dimensional dual "
               "representations (reported, not classified)",
               _grid_search)
    if "S14" in names:
        _timed(report, "reps.s14-dual-1dim",
               "the one-dimensional family (mu, 0, 0, lambda, 0) satisfies the "
               "dual relations with Casimir triple (mu, 0, lambda^2)",
               _s14_dual_1dim)
    _timed(report, "reps.block.1x1",
           "the block-pattern representation of size 1+1 solves the one-sign "
           "relations at the seed",
           lambda: _block(1, 1, config.seed))
    _timed(report, "reps.block.2x1",
           "the block-pattern representation of size 2+1 solves the one-sign "
           "relations at the seed",
           lambda: _block(2, 1, config.seed))
    _timed(report, "reps.block-pattern-violation",
           "an entry outside the allowed block is detected",
           _block_violation)


def _rep_check(rep, rels):
    ok, fails = reps.check_representation(rep, rels)
    if ok:
        return True, "%d relations" % len(rels)
    return False, "%s at entry %s" % (fails[0][0], fails[0][1][:2])


def _conjugated(rep, rels, rng):
    ctx = rep.ctx
    while True:
        u = SquareMatrix(ctx, [[ctx.integer(rng.randint(-3, 3)) for _ in range(rep.dim)]
                               for _ in range(rep.dim)])
        from .matrix import determinant
        if not determinant(u).is_zero():
            break
    ok, _ = reps.check_representation(rep.conjugate(u), rels)
    return ok, ""


def _s03_dual_relations(ctx):
    from .freealg import Alphabet, parse_relation_lines
    from .systems import data_text
    alph = Alphabet(("At", "Bt", "Ct", "Dt"))
    return alph, parse_relation_lines(data_text("s03_dual.rel"), alph, ctx)


def _s03_prime_relations(ctx):
    from .freealg import Alphabet, parse_relation_lines
    from .systems import data_text
    alph = Alphabet(("Bt", "Ct", "Dt"))
    return alph, parse_relation_lines(data_text("s03_prime.rel"), alph, ctx)


def _s03_dual_1dim():
    ctx = Context(("mu",))
    alph, rels = _s03_dual_relations(ctx)
    m = lambda s: SquareMatrix(ctx, [[s]])
    rep = reps.Representation(1, ctx, {
        "At": m(ctx.gen("mu")), "Bt": m(ctx.one()), "Ct": m(ctx.i()),
        "Dt": m(ctx.zero())})
    ok, fails = reps.check_representation(rep, rels)
    return ok, "Casimir values (mu, 1, 0)" if ok else str(fails[0])


def _sigma_rep(ctx, include_at=None):
    one, zero, i = ctx.one(), ctx.zero(), ctx.i()
    assign = {
        "Bt": SquareMatrix(ctx, [[zero, one], [one, zero]]),
        "Ct": SquareMatrix(ctx, [[zero, one], [-one, zero]]),
        "Dt": SquareMatrix(ctx, [[one, zero], [zero, -one]]),
    }
    if include_at is not None:
        assign["At"] = SquareMatrix(ctx, [[include_at, zero], [zero, include_at]])
    return reps.Representation(2, ctx, assign)


def _s03_dual_2dim():
    ctx = Context(("mu",))
    alph, rels = _s03_prime_relations(ctx)
    rep = _sigma_rep(ctx)
    ok, fails = reps.check_representation(rep, rels)
    if not ok:
        return False, str(fails[0])
    # With the central generator set to a symbolic scalar mu, the unit-action
    # relations force mu = 1; record the observation instead of resolving it.
    alph4, rels4 = _s03_dual_relations(ctx)
    rep_mu = _sigma_rep(ctx, include_at=ctx.gen("mu"))
    ok_mu, _ = reps.check_representation(rep_mu, rels4)
    rep_1 = _sigma_rep(ctx, include_at=ctx.one())
    ok_1, fails1 = reps.check_representation(rep_1, rels4)
    note = ("full system passes at At = 1; symbolic At = mu %s"
            % ("also passes" if ok_mu else "is forced to 1 by the unit actions"))
    return ok_1, note if ok_1 else str(fails1[0])


def _s03_2dim_irred():
    ctx = Context(())
    rep = _sigma_rep(ctx, include_at=ctx.one())
    return reps.irreducible_numeric(rep), ""


def _weights():
    ctx = Context(())
    one, zero = ctx.one(), ctx.zero()
    rep = reps.Representation(2, ctx, {"Dt": SquareMatrix(ctx, [[one, zero], [zero, -one]])})
    ok, eigs, _ = reps.weight_vector_check(rep)
    if not ok or {e.to_string() for e in eigs} != {"1", "-1"}:
        return False, "diagonal (1, -1) misreported"
    rep0 = reps.Representation(1, ctx, {"Dt": SquareMatrix(ctx, [[zero]])})
    ok0, eigs0, _ = reps.weight_vector_check(rep0)
    if not ok0 or [e.to_string() for e in eigs0] != ["0"]:
        return False, "zero matrix misreported"
    rep2 = reps.Representation(1, ctx, {"Dt": SquareMatrix(ctx, [[ctx.integer(2)]])})
    bad, _, msg = reps.weight_vector_check(rep2)
    if bad:
        return False, "eigenvalue 2 not flagged"
    return True, ""


def _grid_search():
    ctx = Context(())
    alph, rels = _s03_prime_relations(ctx)
    vals = [ctx.zero(), ctx.one(), -ctx.one()]
    hits = 0
    from itertools import product as iproduct
    mats = [SquareMatrix(ctx, [[a, b], [c, d]])
            for a, b, c, d in iproduct(vals, repeat=4)]
    half = ctx.rational(1, 2)
    for bt in mats:
        for ct in mats:
            dt = (bt * ct - ct * bt).scale(-half)
            rep = reps.Representation(2, ctx, {"Bt": bt, "Ct": ct, "Dt": dt})
            ok, _ = reps.check_representation(rep, rels)
            if ok and not (bt.is_zero() and ct.is_zero()):
                hits += 1
    return True, "%d nonzero grid assignments satisfy the subsystem" % hits


def _s14_dual_1dim():
    ctx = Context(("mu", "lam"))
    from .freealg import Alphabet, parse_relation_lines
    from .systems import data_text
    alph = Alphabet(("At", "Bt", "Ct", "Dt", "E"))
    rels = parse_relation_lines(data_text("s14_dual.rel"), alph, ctx)
    m = lambda s: SquareMatrix(ctx, [[s]])
    rep = reps.Representation(1, ctx, {
        "At": m(ctx.gen("mu")), "Bt": m(ctx.zero()), "Ct": m(ctx.zero()),
        "Dt": m(ctx.gen("lam")), "E": m(ctx.zero())})
    ok, fails = reps.check_representation(rep, rels)
    return ok, "Casimir values (mu, 0, lam^2)" if ok else str(fails[0])


def _block(n1, n2, seed):
    rep, ok, fails = reps.block_rep_builder(n1, n2, seed)
    if not ok:
        return False, str(fails[0])
    note = ""
    if n1 + n2 <= 4:
        note = "irreducible: %s" % reps.irreducible_numeric(rep)
    return True, note


def _block_violation():
    rep, ok, _ = reps.block_rep_builder(1, 1, 0)
    ctx = rep.ctx
    rows = [list(r) for r in rep.assign["Lt12"].rows]
    rows[1][0] = ctx.one()  # entry outside the allowed upper block
    bad = reps.Representation(rep.dim, ctx, dict(rep.assign, Lt12=SquareMatrix(ctx, rows)))
    if reps.pattern_violations(bad, 1, 1) == []:
        return False, "violation not detected"
    ok_bad, _ = reps.check_representation(bad, reps.one_sided_lt_relations(ctx))
    return (not ok_bad), "pattern violation also breaks the relations"


# -- qplane -------------------------------------------------------------------------


E_FAMILY_EXPONENT = {"E1": 2, "E2": 3, "JORDANIAN": 1}


def suite_qplane(report, defs, config):
    for d in defs:
        if d.name in E_FAMILY_EXPONENT:
            a = E_FAMILY_EXPONENT[d.name]
            rh = hat_of(d.matrix)
            p = qplane.matrix_power_p(rh, a)
            span = qplane.coordinate_relation_span(p)
            stated = qplane.stated_coordinate_relation_e(d.ctx, d.name)
            _timed(report, "qplane.coord.%s" % d.name,
                   "coordinate span of (P - id) with P - id the %d-th power "
                   "equals the stated single relation" % a,
                   lambda span=span, stated=stated: _span_check(span, stated))
            dspan = qplane.differential_relation_span(rh)
            dstated = qplane.stated_differential_relations_e(d.ctx, d.name)
            _timed(report, "qplane.diff.%s" % d.name,
                   "differential span of (id + Q) equals the stated rank-3 set",
                   lambda dspan=dspan, dstated=dstated: _span_check(dspan, dstated))
            _timed(report, "qplane.mixed.%s" % d.name,
                   "the stated exchange rules are the rows of Q",
                   lambda rh=rh, d=d: (
                       qplane.mixed_exchange_check(
                           rh, qplane.stated_mixed_rows_e(d.ctx, d.name))[0], ""))
            _timed(report, "qplane.orth.%s" % d.name,
                   "(P - id)(Q + id) = 0 symbolically",
                   lambda p=p, rh=rh: qplane.orthogonality_check(p, rh))
            if d.name == "E2":
                _timed(report, "qplane.orth-minimality.E2",
                       "the lower exponent fails the orthogonality condition",
                       lambda rh=rh: (
                           not qplane.orthogonality_check(
                               qplane.matrix_power_p(rh, 2), rh)[0], ""))
            _timed(report, "qplane.choices.%s" % d.name,
                   "solution-space dimensions of the orthogonality condition per "
                   "exponent (informational)",
                   lambda rh=rh: (True, str(qplane.enumerate_orthogonal_choices(rh))))
            sp = _specialized_matrix(d, config.specialize)
            if sp is not None:
                rhs = hat_of(sp)
                _timed(report, "qplane.orth.%s.specialized" % d.name,
                       "orthogonality at the numeric point",
                       lambda rhs=rhs, a=a: qplane.orthogonality_check(
                           qplane.matrix_power_p(rhs, a), rhs))
        if d.name == "S03":
            ctxn = Context(("nu",))
            q = qplane.s03_exchange_matrix(ctxn)
            rz = qplane.stated_coordinate_relations_s03(ctxn)
            _timed(report, "qplane.orth.S03",
                   "stated coordinate relations annihilate (Q + id) symbolically "
                   "in the free parameter",
                   lambda rz=rz, q=q: qplane.orthogonality_check(rz, q))
            dspan = qplane.differential_relation_span(q, gens=qplane.DIFF_GENS_S03)
            _timed(report, "qplane.diff.S03",
                   "differential span of (id + Q) equals the stated pair generically",
                   lambda dspan=dspan, ctxn=ctxn: _span_check(
                       dspan, qplane.stated_differential_relations_s03(ctxn)))
            _timed(report, "qplane.mixed.S03",
                   "the stated exchange rules are the rows of Q",
                   lambda q=q, ctxn=ctxn: (
                       qplane.mixed_exchange_check(
                           q, qplane.stated_mixed_rows_s03(ctxn))[0], ""))
    byname = {d.name for d in defs}
    if {"E1", "JORDANIAN"} <= byname:
        e1 = next(d for d in defs if d.name == "E1")
        jor = next(d for d in defs if d.name == "JORDANIAN")
        _timed(report, "qplane.e1-jordanian-coincide",
               "both coordinate spans reduce to the same single relation",
               lambda e1=e1, jor=jor: _qpc_coincide(e1, jor))


def _qpc_coincide(e1, jor):
    s1 = qplane.coordinate_relation_span(
        qplane.matrix_power_p(hat_of(e1.matrix), 2))
    s2 = qplane.coordinate_relation_span(
        qplane.matrix_power_p(hat_of(jor.matrix), 1))
    rows1 = [[x.to_string() for x in r] for r in s1.rows]
    rows2 = [[x.to_string() for x in r] for r in s2.rows]
    return rows1 == rows2, "row %s" % rows1


# -- baxter -------------------------------------------------------------------------


def suite_baxter(report, defs, config):
    for d in defs:
        rh = hat_of(d.matrix)
        res = ybe.find_braid_ansatz(rh)
        _timed(report, "baxter.ansatz.%s" % d.name,
               "search for c(x) making 1 + c(x) Rh satisfy the parametrised "
               "braid equation (reported per matrix)",
               lambda res=res: (True, _ansatz_note(res)))
        if d.name != "S03":
            continue
        fam = ybe.baxterise(rh)
        _timed(report, "baxter.family-grid.S03",
               "the unnormalised family Rh + 2x Rh^(-1) equals the closed-form grid",
               lambda fam=fam: (fam.grid == ybe.s03_reference_grid(fam.ctx), ""))
        _timed(report, "baxter.at-one.S03",
               "the family at x = 1 is twice the identity",
               lambda fam=fam: (
                   fam.at(fam.ctx.one()) == SquareMatrix.identity(fam.ctx, 4).scale(2), ""))
        _timed(report, "baxter.parametrized-braid.S03",
               "M12(x) M23(xy) M12(y) = M23(y) M12(xy) M23(x) exactly in x, y",
               lambda fam=fam: _witness_entry(ybe.check_braid_parametrized(fam)))
        _timed(report, "baxter.projectors.S03",
               "the spectral projectors are orthogonal idempotents resolving the "
               "identity and recombine to Rh",
               lambda rh=rh: _projector_identities(rh))
        sp = _specialized_matrix(d, config.specialize)


def _ansatz_note(res):
    if not res.applicable:
        return "not applicable: %s" % res.reason
    return "%s; solution %s; reproduces the quadratic family: %s" % (
        res.constraint, res.solution, res.matches_family)


def _projector_identities(rh):
    pp, pm = ybe.spectral_projectors(rh)
    ctx = rh.ctx
    i4 = SquareMatrix.identity(ctx, 4)
    iu = ctx.i()
    checks = [
        pp + pm == i4,
        (pp * pm).is_zero(),
        (pm * pp).is_zero(),
        pp * pp == pp,
        pm * pm == pm,
        pp.scale(ctx.one() - iu) + pm.scale(ctx.one() + iu) == rh,
        i4.scale(ctx.one() + iu) - pp.scale(iu * 2) == rh,
    ]
    return all(checks), "" if all(checks) else "identity %d fails" % checks.index(False)


# -- driver -------------------------------------------------------------------------


class VerifyConfig:
    def __init__(self, max_degree=6, specialize=None, seed=0, catalog=None):
        if max_degree < 2:
            raise UsageError("max-degree must be at least 2")
        self.max_degree = max_degree
        self.specialize = dict(specialize or {})
        self.seed = seed
        self.catalog = catalog


_SUITE_FNS = {
    "ybe": suite_ybe,
    "minpoly": suite_minpoly,
    "rtt": suite_rtt,
    "rll": suite_rll,
    "dual": suite_dual,
    "reps": suite_reps,
    "qplane": suite_qplane,
    "baxter": suite_baxter,
}


def run_suite(suite, matrix="all", config=None):
    """Run one named suite (or all of them) over one catalog matrix (or all);
    returns a deterministic Report."""
    config = config or VerifyConfig()
    if suite not in SUITES:
        raise UsageError("unknown suite %r (have %s)" % (suite, ", ".join(SUITES)))
    defs = config.catalog if config.catalog is not None else builtin_catalog()
    defs = _select(defs, matrix)
    report = Report(suite, max_degree=config.max_degree,
                    specialize=dict(config.specialize), seed=config.seed)
    if suite == "all":
        for name in ("ybe", "minpoly", "rtt", "rll", "dual", "reps", "qplane", "baxter"):
            _SUITE_FNS[name](report, defs, config)
    else:
        _SUITE_FNS[suite](report, defs, config)
    return report
