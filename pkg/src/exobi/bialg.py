"""Bialgebra verification: multiplicative coproducts on relation presentations
(checked by reduction in tensor powers), finite-dimensional structure-constant
bialgebras with exhaustive axiom checks, linear antipode solving, centrality,
and the pairing consistency between the T-algebra and the L-operator algebra
of an R-matrix."""

from __future__ import annotations

from itertools import product

from .freealg import NcPoly
from .linalg import inconsistent_rows, rref, in_span, solve
from .matrix import SquareMatrix, inverse
from .rtt import derive_rll_relations, derive_rtt_relations
from .scalar import Scalar


class TruncationError(ValueError):
    """A tensor-power reduction hit the degree cap before deciding."""


class TensorPoly:
    """A Scalar combination of k-fold tensors of words over one alphabet."""

    __slots__ = ("alphabet", "ctx", "arity", "terms")

    def __init__(self, alphabet, ctx, arity, terms=None):
        self.alphabet = alphabet
        self.ctx = ctx
        self.arity = arity
        self.terms = {t: c for t, c in (terms or {}).items() if c}

    @classmethod
    def unit(cls, alphabet, ctx, arity):
        return cls(alphabet, ctx, arity, {((),) * arity: ctx.one()})

    def __add__(self, other):
        out = dict(self.terms)
        for t, c in other.terms.items():
            s = out.get(t)
            s = c if s is None else s + c
            if s:
                out[t] = s
            else:
                out.pop(t, None)
        return TensorPoly(self.alphabet, self.ctx, self.arity, out)

    def __sub__(self, other):
        return self + other.scale(self.ctx.integer(-1))

    def scale(self, s):
        if not s:
            return TensorPoly(self.alphabet, self.ctx, self.arity)
        return TensorPoly(self.alphabet, self.ctx, self.arity,
                          {t: c * s for t, c in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                t = tuple(w1 + w2 for w1, w2 in zip(t1, t2))
                c = c1 * c2
                s = out.get(t)
                s = c if s is None else s + c
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)
        return TensorPoly(self.alphabet, self.ctx, self.arity, out)

    def is_zero(self):
        return not self.terms

    def max_slot_degree(self):
        return max((len(w) for t in self.terms for w in t), default=0)

    def normalize(self, rs, degree_cap=None):
        """Reduce every tensor slot to normal form."""
        out = TensorPoly(self.alphabet, self.ctx, self.arity)
        for t, c in self.terms.items():
            if degree_cap is not None and any(len(w) > degree_cap for w in t):
                raise TruncationError(
                    "tensor slot degree exceeds the truncation cap %d" % degree_cap)
            factors = [rs.normal_form(NcPoly.word(self.alphabet, self.ctx, w)) for w in t]
            partial = {(): c}
            for f in factors:
                nxt = {}
                for words, coeff in partial.items():
                    for w, fc in f.terms.items():
                        key = words + (w,)
                        s = nxt.get(key)
                        v = coeff * fc
                        s = v if s is None else s + v
                        if s:
                            nxt[key] = s
                        else:
                            nxt.pop(key, None)
                partial = nxt
            out = out + TensorPoly(self.alphabet, self.ctx, self.arity, partial)
        return out

    def to_string(self):
        if not self.terms:
            return "0"
        bits = []
        for t, c in sorted(self.terms.items()):
            body = " (x) ".join(self.alphabet.word_string(w) for w in t)
            bits.append("%s * [%s]" % (c.to_string(), body))
        return " + ".join(bits)


class Coproduct:
    """Multiplicative coproduct/counit data for an AlgebraSystem."""

    def __init__(self, system):
        if system.delta is None or system.eps is None:
            raise ValueError("system %s carries no coproduct data" % system.name)
        self.system = system
        self.alphabet = system.alphabet
        self.ctx = system.ctx
        self.delta_gen = {}
        for gen, pieces in system.delta.items():
            t = TensorPoly(self.alphabet, self.ctx, 2)
            for coeff, left, right in pieces:
                for lw, lc in left.terms.items():
                    for rw, rc in right.terms.items():
                        t = t + TensorPoly(self.alphabet, self.ctx, 2,
                                           {(lw, rw): coeff * lc * rc})
            self.delta_gen[gen] = t
        self.eps_gen = dict(system.eps)

    def delta_word(self, w, arity=2):
        """Delta^(arity-1) of a word, extended multiplicatively."""
        out = TensorPoly.unit(self.alphabet, self.ctx, arity)
        for g in w:
            name = self.alphabet.names[g]
            if name not in self.delta_gen:
                raise KeyError("no coproduct given for generator %r" % name)
            d = self.delta_gen[name]
            if arity == 2:
                out = out * d
            else:
                out = out * self._iterate(d, arity)
        return out

    def _iterate(self, d2, arity):
        """Lift a two-slot coproduct value to the given arity by repeatedly
        applying the coproduct to the last slot."""
        cur = d2
        while cur.arity < arity:
            nxt = TensorPoly(self.alphabet, self.ctx, cur.arity + 1)
            for t, c in cur.terms.items():
                tail = self.delta_word(t[-1])
                for (u, v), cc in tail.terms.items():
                    key = t[:-1] + (u, v)
                    nxt = nxt + TensorPoly(self.alphabet, self.ctx, cur.arity + 1,
                                           {key: c * cc})
            cur = nxt
        return cur

    def delta_poly(self, p, arity=2):
        out = TensorPoly(self.alphabet, self.ctx, arity)
        for w, c in p.terms.items():
            out = out + self.delta_word(w, arity).scale(c)
        return out

    def eps_word(self, w):
        v = self.ctx.one()
        for g in w:
            name = self.alphabet.names[g]
            v = v * self.eps_gen[name]
            if not v:
                break
        return v

    def eps_poly(self, p):
        out = self.ctx.zero()
        for w, c in p.terms.items():
            out = out + c * self.eps_word(w)
        return out

    def extend_slot(self, t2, slot):
        """Apply the coproduct to one slot of a two-slot tensor (giving the
        two sides of the coassociativity identity)."""
        out = TensorPoly(self.alphabet, self.ctx, 3)
        for (u, v), c in t2.terms.items():
            target = u if slot == 0 else v
            expanded = self.delta_word(target)
            for (p, q), cc in expanded.terms.items():
                key = (p, q, v) if slot == 0 else (u, p, q)
                out = out + TensorPoly(self.alphabet, self.ctx, 3, {key: c * cc})
        return out


def check_bialgebra_axioms(system, degree_cap=4):
    """Verify, by reduction modulo the system's rewrite rules:

    * Delta is an algebra homomorphism: Delta(r) reduces to zero in the
      tensor square for every defining relation r;
    * coassociativity on every generator;
    * both counit laws on every generator.

    Returns (ok, failures) where failures lists (kind, name, residue-string);
    a TruncationError is converted into an 'undecided' failure entry, never
    silently passed."""
    cop = Coproduct(system)
    rs = system.rewrite
    failures = []
    for idx, rel in enumerate(system.relations):
        try:
            residue = cop.delta_poly(rel).normalize(rs, degree_cap)
        except TruncationError as exc:
            failures.append(("undecided", "relation %d" % idx, str(exc)))
            continue
        if not residue.is_zero():
            failures.append(("homomorphism", rel.to_string(), residue.to_string()))
    for name in cop.delta_gen:
        d = cop.delta_gen[name]
        left = cop.extend_slot(d, 0)
        right = cop.extend_slot(d, 1)
        try:
            delta3 = (left - right).normalize(rs, degree_cap)
        except TruncationError as exc:
            failures.append(("undecided", "coassociativity %s" % name, str(exc)))
            delta3 = None
        if delta3 is not None and not delta3.is_zero():
            failures.append(("coassociativity", name, delta3.to_string()))
        # counit laws
        g = NcPoly.gen(system.alphabet, system.ctx, name)
        lhs = NcPoly(system.alphabet, system.ctx)
        rhs = NcPoly(system.alphabet, system.ctx)
        for (u, v), c in d.terms.items():
            lhs = lhs + NcPoly.word(system.alphabet, system.ctx, v).scale(c * cop.eps_word(u))
            rhs = rhs + NcPoly.word(system.alphabet, system.ctx, u).scale(c * cop.eps_word(v))
        if rs.normal_form(lhs - g).terms or rs.normal_form(rhs - g).terms:
            failures.append(("counit", name, "counit law fails"))
    return not failures, failures


def eps_is_homomorphism(system):
    """Counit kills every defining relation (eps extended multiplicatively)."""
    cop = Coproduct(system)
    bad = []
    for rel in system.relations:
        v = cop.eps_poly(rel)
        if v:
            bad.append((rel.to_string(), v.to_string()))
    return not bad, bad


class FiniteBialgebra:
    """Structure constants of a finite-dimensional bialgebra.

    basis: tuple of normal words; mult[i][j]: coefficient vector of e_i e_j;
    cop[i]: {(j, k): coeff} for Delta(e_i); counit: vector; unit: index of 1.
    """

    def __init__(self, ctx, basis_words, labels, mult, cop, counit, unit_index):
        self.ctx = ctx
        self.basis_words = basis_words
        self.labels = labels
        self.mult = mult
        self.cop = cop
        self.counit = counit
        self.unit = unit_index

    @property
    def dimension(self):
        return len(self.basis_words)

    def check_associativity(self):
        n = self.dimension
        zero = self.ctx.zero()
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    left = [zero] * n
                    for m, c in enumerate(self.mult[i][j]):
                        if c:
                            for r, c2 in enumerate(self.mult[m][k]):
                                if c2:
                                    left[r] = left[r] + c * c2
                    right = [zero] * n
                    for m, c in enumerate(self.mult[j][k]):
                        if c:
                            for r, c2 in enumerate(self.mult[i][m]):
                                if c2:
                                    right[r] = right[r] + c * c2
                    if left != right:
                        return False, (i, j, k)
        return True, None

    def check_coassociativity(self):
        n = self.dimension
        for i in range(n):
            left = {}
            right = {}
            for (j, k), c in self.cop[i].items():
                for (p, q), c2 in self.cop[j].items():
                    key = (p, q, k)
                    left[key] = left.get(key, self.ctx.zero()) + c * c2
                for (p, q), c2 in self.cop[k].items():
                    key = (j, p, q)
                    right[key] = right.get(key, self.ctx.zero()) + c * c2
            left = {k: v for k, v in left.items() if v}
            right = {k: v for k, v in right.items() if v}
            if left != right:
                return False, i
        return True, None

    def check_counit(self):
        n = self.dimension
        for i in range(n):
            lvec = [self.ctx.zero()] * n
            rvec = [self.ctx.zero()] * n
            for (j, k), c in self.cop[i].items():
                lvec[k] = lvec[k] + c * self.counit[j]
                rvec[j] = rvec[j] + c * self.counit[k]
            want = [self.ctx.one() if m == i else self.ctx.zero() for m in range(n)]
            if lvec != want or rvec != want:
                return False, i
        return True, None

    def check_delta_homomorphism(self):
        """Delta(e_i e_j) = Delta(e_i) Delta(e_j) over the structure constants."""
        n = self.dimension
        for i in range(n):
            for j in range(n):
                lhs = {}
                for m, c in enumerate(self.mult[i][j]):
                    if c:
                        for key, c2 in self.cop[m].items():
                            lhs[key] = lhs.get(key, self.ctx.zero()) + c * c2
                rhs = {}
                for (p, q), c1 in self.cop[i].items():
                    for (r, s), c2 in self.cop[j].items():
                        for u, cu in enumerate(self.mult[p][r]):
                            if not cu:
                                continue
                            for v, cv in enumerate(self.mult[q][s]):
                                if cv:
                                    key = (u, v)
                                    rhs[key] = rhs.get(key, self.ctx.zero()) + c1 * c2 * cu * cv
                lhs = {k: v for k, v in lhs.items() if v}
                rhs = {k: v for k, v in rhs.items() if v}
                if lhs != rhs:
                    return False, (i, j)
        return True, None


def build_finite_algebra(system, basis_cap=8):
    """Construct the FiniteBialgebra of a system whose normal monomials are
    finite; raises if the basis fails to terminate below the cap."""
    rs = system.rewrite
    basis_words = []
    d = 0
    while d <= basis_cap:
        ws = rs.enumerate_normal_monomials(d)
        if not ws:
            break
        basis_words.extend(ws)
        d += 1
    else:
        raise ValueError("normal monomials do not terminate below degree %d" % basis_cap)
    index = {w: k for k, w in enumerate(basis_words)}
    ctx = system.ctx
    alph = system.alphabet
    n = len(basis_words)

    def vec_of(p):
        v = [ctx.zero()] * n
        for w, c in p.terms.items():
            v[index[w]] = c
        return v

    mult = [[None] * n for _ in range(n)]
    for i, wi in enumerate(basis_words):
        for j, wj in enumerate(basis_words):
            mult[i][j] = vec_of(rs.normal_form(NcPoly.word(alph, ctx, wi + wj)))

    cop_data = [None] * n
    counit = [None] * n
    eps_lookup = dict(system.eps)
    cop = Coproduct(system)
    for i, w in enumerate(basis_words):
        t = cop.delta_word(w).normalize(rs)
        entry = {}
        for (u, v), c in t.terms.items():
            entry[(index[u], index[v])] = c
        cop_data[i] = entry
        counit[i] = cop.eps_word(w)

    labels = [alph.word_string(w) for w in basis_words]
    return FiniteBialgebra(ctx, tuple(basis_words), labels, mult, cop_data, counit,
                           index[()])


def solve_antipode(fba):
    """Solve m (S (x) id) Delta = unit . counit = m (id (x) S) Delta linearly.

    Returns (matrix S as rows S[x] = coordinates of S(e_x), None) when the
    combined system is solvable, else (None, certificate) where certificate is
    an inconsistent reduced row of the augmented system."""
    n = fba.dimension
    ctx = fba.ctx
    nun = n * n
    rows = []
    rhs = []
    for b in range(n):
        for r in range(n):
            left_row = [ctx.zero()] * nun
            right_row = [ctx.zero()] * nun
            for (p, q), c in fba.cop[b].items():
                for y in range(n):
                    cy = fba.mult[y][q][r]
                    if cy:
                        left_row[p * n + y] = left_row[p * n + y] + c * cy
                    cy2 = fba.mult[p][y][r]
                    if cy2:
                        right_row[q * n + y] = right_row[q * n + y] + c * cy2
            want = fba.counit[b] if r == fba.unit else ctx.zero()
            rows.append(left_row)
            rhs.append(want)
            rows.append(right_row)
            rhs.append(want)
    cert = inconsistent_rows(rows, rhs)
    if cert is not None:
        return None, cert
    x = solve(rows, rhs)
    s_matrix = [[x[p * n + y] for y in range(n)] for p in range(n)]
    return s_matrix, None


def check_central(element, rs, max_degree):
    """Does the element commute with every generator, by reduction?"""
    alph, ctx = rs.alphabet, rs.ctx
    if rs.confluent_to < max_degree:
        raise ValueError("confluence not established up to degree %d" % max_degree)
    for name in alph.names:
        g = NcPoly.gen(alph, ctx, name)
        comm = element * g - g * element
        if comm.degree() > max_degree:
            raise ValueError("degree cap exceeded")
        if rs.normal_form(comm).terms:
            return False, name
    return True, None


# -- pairing between the T-algebra and the L-operator algebra ----------------------


class FrtPairing:
    """The bilinear pairing built from <L(sign), T> = R(sign), with
    R(+) = P R P and R(-) = R^(-1), extended to words by the matrix coproducts
    on both sides."""

    def __init__(self, r):
        ctx = r.ctx
        p = SquareMatrix.swap_2x2_legs(ctx)
        self.ctx = ctx
        self.r_plus = p * r * p
        self.r_minus = inverse(r)
        self._memo = {}

    def _block(self, sign, k, l):
        """2x2 Scalar matrix Lambda(sign, t_kl)[i][m] = R(sign)[ik, ml]."""
        m = self.r_plus if sign > 0 else self.r_minus
        return [[m[(2 * i + k, 2 * mm + l)] for mm in range(2)] for i in range(2)]

    def pair_letter(self, sign, i, j, tword):
        """<L(sign)_ij, t-word>: entry (i, j) of the product of blocks."""
        if not tword:
            return self.ctx.one() if i == j else self.ctx.zero()
        acc = None
        for (k, l) in tword:
            blk = self._block(sign, k, l)
            if acc is None:
                acc = blk
            else:
                acc = [[acc[a][0] * blk[0][b] + acc[a][1] * blk[1][b]
                        for b in range(2)] for a in range(2)]
        return acc[i][j]

    def pair_word(self, lword, tword):
        """<L-word, T-word> with both coproducts expanded.

        lword: tuple of (sign, i, j); tword: tuple of (k, l)."""
        key = (lword, tword)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not lword:
            out = self.ctx.one()
            for (k, l) in tword:
                if k != l:
                    out = self.ctx.zero()
                    break
            self._memo[key] = out
            return out
        if len(lword) == 1:
            sign, i, j = lword[0]
            out = self.pair_letter(sign, i, j, tword)
            self._memo[key] = out
            return out
        head, rest = lword[0], lword[1:]
        out = self.ctx.zero()
        d = len(tword)
        for mids in product(range(2), repeat=d):
            first = tuple((tword[s][0], mids[s]) for s in range(d))
            second = tuple((mids[s], tword[s][1]) for s in range(d))
            a = self.pair_word((head,), first)
            if not a:
                continue
            b = self.pair_word(rest, second)
            if b:
                out = out + a * b
        self._memo[key] = out
        return out


def _t_words(max_degree):
    letters = [(k, l) for k in range(2) for l in range(2)]
    words = [()]
    frontier = [()]
    for _ in range(max_degree):
        frontier = [w + (a,) for w in frontier for a in letters]
        words.extend(frontier)
    return words


def _l_words(max_degree):
    letters = [(s, i, j) for s in (1, -1) for i in range(2) for j in range(2)]
    words = [()]
    frontier = [()]
    for _ in range(max_degree):
        frontier = [w + (a,) for w in frontier for a in letters]
        words.extend(frontier)
    return words


def frt_pairing_check(r, max_degree=3):
    """Well-definedness of the pairing: every derived L-relation pairs to zero
    against every T-word, and every derived T-relation pairs to zero against
    every L-word, up to the given word degree.

    Returns (ok, failures); failures list (side, relation-index, word)."""
    pairing = FrtPairing(r)
    ctx = r.ctx
    failures = []

    rll = derive_rll_relations(r)
    l_letters = []
    for sign, pref in ((1, "Lp"), (-1, "Lm")):
        for i in range(2):
            for j in range(2):
                l_letters.append((sign, i, j))

    twords = _t_words(max_degree)
    for fam, relset in rll.items():
        for ridx, row in enumerate(relset.rows):
            terms = []
            nl = 8
            for k, c in enumerate(row):
                if c:
                    g1, g2 = k // nl, k % nl
                    terms.append((c, (l_letters[g1], l_letters[g2])))
            for tw in twords:
                acc = ctx.zero()
                for c, lw in terms:
                    v = pairing.pair_word(lw, tw)
                    if v:
                        acc = acc + c * v
                if acc:
                    failures.append(("L-relation", "%s[%d]" % (fam, ridx), tw))
                    break

    rtt = derive_rtt_relations(r)
    t_letters = [(k, l) for k in range(2) for l in range(2)]
    lwords = _l_words(max_degree)
    for ridx, row in enumerate(rtt.rows):
        terms = []
        for k, c in enumerate(row):
            if c:
                g1, g2 = k // 4, k % 4
                terms.append((c, (t_letters[g1], t_letters[g2])))
        for lw in lwords:
            acc = ctx.zero()
            for c, tw in terms:
                v = pairing.pair_word(lw, tw)
                if v:
                    acc = acc + c * v
            if acc:
                failures.append(("T-relation", str(ridx), lw))
                break

    return not failures, failures
