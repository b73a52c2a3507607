"""Noncommutative polynomials over Scalar coefficients, oriented rewriting to
normal form, bounded-degree confluence via critical pairs, completion, and
normal-monomial enumeration.

Words are tuples of generator indices.  A monomial order compares by total
degree first, then lexicographically by a per-alphabet precedence, reading the
word left-to-right or right-to-left (both readings are needed: systems whose
displayed leading words cannot be oriented under one reading usually can be
under the other)."""

from __future__ import annotations

from .linalg import SparseEliminator, rref, in_span
from .scalar import Context, parse_scalar, _IDENT_START, _IDENT_CONT, ParseError


class Alphabet:
    """Generator names with a monomial order (degree, then lex by precedence).

    order_desc lists the generators from biggest to smallest; lex is "left"
    (compare first letters first) or "right" (compare last letters first).
    """

    __slots__ = ("names", "index", "rank", "lex")

    def __init__(self, names, order_desc=None, lex="left"):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        self.names = names
        self.index = {n: k for k, n in enumerate(names)}
        order_desc = tuple(order_desc) if order_desc is not None else names
        if sorted(order_desc) != sorted(names):
            raise ValueError("order must be a permutation of the generator names")
        if lex not in ("left", "right"):
            raise ValueError("lex must be 'left' or 'right'")
        rank = [0] * len(names)
        for pos, n in enumerate(order_desc):
            rank[self.index[n]] = len(names) - pos
        self.rank = tuple(rank)
        self.lex = lex

    def word_key(self, w):
        seq = w if self.lex == "left" else tuple(reversed(w))
        return (len(w), tuple(self.rank[g] for g in seq))

    def word_string(self, w):
        if not w:
            return "1"
        out = []
        k = 0
        while k < len(w):
            j = k
            while j < len(w) and w[j] == w[k]:
                j += 1
            n = self.names[w[k]]
            out.append(n if j - k == 1 else "%s^%d" % (n, j - k))
            k = j
        return "*".join(out)

    def __repr__(self):
        return "Alphabet(%s)" % ", ".join(self.names)


class NcPoly:
    """A finite Scalar-linear combination of words."""

    __slots__ = ("alphabet", "ctx", "terms")

    def __init__(self, alphabet, ctx, terms=None):
        self.alphabet = alphabet
        self.ctx = ctx
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, alphabet, ctx):
        return cls(alphabet, ctx)

    @classmethod
    def one(cls, alphabet, ctx):
        return cls(alphabet, ctx, {(): ctx.one()})

    @classmethod
    def gen(cls, alphabet, ctx, name):
        return cls(alphabet, ctx, {(alphabet.index[name],): ctx.one()})

    @classmethod
    def word(cls, alphabet, ctx, w, coeff=None):
        return cls(alphabet, ctx, {tuple(w): coeff if coeff is not None else ctx.one()})

    # -- predicates -------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((len(w) for w in self.terms), default=0)

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NcPoly(self.alphabet, self.ctx, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = -c if s is None else s - c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NcPoly(self.alphabet, self.ctx, out)

    def __neg__(self):
        return NcPoly(self.alphabet, self.ctx, {w: -c for w, c in self.terms.items()})

    def scale(self, s):
        if isinstance(s, int):
            s = self.ctx.integer(s)
        if not s:
            return NcPoly.zero(self.alphabet, self.ctx)
        return NcPoly(self.alphabet, self.ctx, {w: c * s for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    c = c1 * c2
                    s = out.get(w)
                    s = c if s is None else s + c
                    if s:
                        out[w] = s
                    else:
                        out.pop(w, None)
            return NcPoly(self.alphabet, self.ctx, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        out = NcPoly.one(self.alphabet, self.ctx)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def leading_word(self):
        if not self.terms:
            return None
        return max(self.terms, key=self.alphabet.word_key)

    def commutator(self, other):
        return self * other - other * self

    def anticommutator(self, other):
        return self * other + other * self

    def __repr__(self):
        return "NcPoly(%s)" % self.to_string()

    def to_string(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: self.alphabet.word_key(t[0]),
                       reverse=True)
        pieces = []
        for w, c in items:
            ws = self.alphabet.word_string(w)
            cs = c.to_string()
            if not w:
                pieces.append(cs if not _needs_parens(cs) else "(%s)" % cs)
            elif c.is_one():
                pieces.append(ws)
            elif c == -1:
                pieces.append("-%s" % ws)
            else:
                pieces.append("%s*%s" % (cs if not _needs_parens(cs) else "(%s)" % cs, ws))
        out = pieces[0]
        for p in pieces[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        return out


def _needs_parens(s):
    depth = 0
    for ch in s[1:]:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-/" and depth == 0:
            return True
    return False


class OrientationError(ValueError):
    """A relation cannot be oriented: some right-side word is not smaller."""


class RewriteSystem:
    """Oriented rules lhs_word -> NcPoly with every right side strictly below
    the left side in the alphabet's monomial order (so rewriting terminates).

    confluent_to records the largest degree D for which all overlap and
    inclusion ambiguities among left sides of total degree <= D have been
    checked to resolve; -1 until a check has run.
    """

    def __init__(self, alphabet, ctx, rules=None):
        self.alphabet = alphabet
        self.ctx = ctx
        self.rules = {}
        self.confluent_to = -1
        for lhs, rhs in (rules or {}).items():
            self.add_rule(lhs, rhs)

    def add_rule(self, lhs, rhs):
        lhs = tuple(lhs)
        key = self.alphabet.word_key(lhs)
        for w in rhs.terms:
            if not self.alphabet.word_key(w) < key:
                raise OrientationError(
                    "cannot orient: %s is not below %s" %
                    (self.alphabet.word_string(w), self.alphabet.word_string(lhs)))
        if lhs in self.rules:
            raise ValueError("duplicate rule left side %s" % self.alphabet.word_string(lhs))
        self.rules[lhs] = rhs
        self.confluent_to = -1

    def copy(self):
        rs = RewriteSystem(self.alphabet, self.ctx)
        rs.rules = dict(self.rules)
        rs.confluent_to = self.confluent_to
        return rs

    # -- rewriting ---------------------------------------------------------------

    def _first_redex(self, w):
        for pos in range(len(w)):
            for lhs in self.rules:
                n = len(lhs)
                if pos + n <= len(w) and w[pos:pos + n] == lhs:
                    return pos, lhs
        return None

    def normal_form(self, p):
        """Reduce until no left side occurs as a subword of any term."""
        if isinstance(p, tuple):
            p = NcPoly.word(self.alphabet, self.ctx, p)
        out = {}
        work = dict(p.terms)
        while work:
            w, c = work.popitem()
            if not c:
                continue
            hit = self._first_redex(w)
            if hit is None:
                s = out.get(w)
                s = c if s is None else s + c
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
                continue
            pos, lhs = hit
            head, tail = w[:pos], w[pos + len(lhs):]
            for rw, rc in self.rules[lhs].terms.items():
                nw = head + rw + tail
                nc = c * rc
                s = work.get(nw)
                s = nc if s is None else s + nc
                if s:
                    work[nw] = s
                else:
                    work.pop(nw, None)
        return NcPoly(self.alphabet, self.ctx, out)

    def is_normal_word(self, w):
        return self._first_redex(w) is None

    # -- ambiguities ---------------------------------------------------------------

    def _ambiguities(self, max_degree):
        """Yield (word, reduction_a, reduction_b) for every overlap or
        inclusion ambiguity of total degree <= max_degree."""
        rules = list(self.rules.items())
        alph = self.alphabet
        ctx = self.ctx
        for l1, r1 in rules:
            for l2, r2 in rules:
                # proper overlap: a suffix of l1 equals a prefix of l2
                for k in range(1, min(len(l1), len(l2))):
                    if l1[len(l1) - k:] == l2[:k]:
                        w = l1 + l2[k:]
                        if len(w) > max_degree:
                            continue
                        tail = NcPoly.word(alph, ctx, l2[k:])
                        head = NcPoly.word(alph, ctx, l1[:len(l1) - k])
                        yield w, r1 * tail, head * r2
                if l1 != l2 and len(l2) < len(l1):
                    # inclusion: l2 occurs inside l1
                    for pos in range(len(l1) - len(l2) + 1):
                        if l1[pos:pos + len(l2)] == l2:
                            if len(l1) > max_degree:
                                continue
                            head = NcPoly.word(alph, ctx, l1[:pos])
                            tail = NcPoly.word(alph, ctx, l1[pos + len(l2):])
                            yield l1, r1, head * r2 * tail

    def confluence_check(self, max_degree):
        """Reduce both sides of every ambiguity of degree <= max_degree;
        return the list of (word, difference) that fail to agree (empty means
        locally confluent up to the cap, recorded in confluent_to)."""
        if max_degree < 2:
            raise ValueError("max_degree must be at least 2")
        bad = []
        for w, a, b in self._ambiguities(max_degree):
            delta = self.normal_form(a - b)
            if not delta.is_zero():
                bad.append((w, delta))
        if not bad:
            self.confluent_to = max(self.confluent_to, max_degree)
        return bad

    def completed(self, max_degree, max_rounds=64):
        """Return a system extended by oriented unresolved ambiguity residues
        until every ambiguity of degree <= max_degree resolves."""
        rs = self.copy()
        for _ in range(max_rounds):
            bad = rs.confluence_check(max_degree)
            if not bad:
                return rs
            for _, delta in bad:
                delta = rs.normal_form(delta)
                if delta.is_zero():
                    continue
                lead = delta.leading_word()
                inv = delta.terms[lead].inverse()
                rest = NcPoly(rs.alphabet, rs.ctx,
                              {w: -c * inv for w, c in delta.terms.items() if w != lead})
                rs.add_rule(lead, rest)
        raise RuntimeError("completion did not stabilise in %d rounds" % max_rounds)

    # -- enumeration -----------------------------------------------------------------

    def enumerate_normal_monomials(self, degree):
        """All words of exactly the given degree containing no rule left side
        as a subword, in lexicographic generator order."""
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        out = []
        n = len(self.alphabet.names)
        lhs_by_len = {}
        for lhs in self.rules:
            lhs_by_len.setdefault(len(lhs), set()).add(lhs)

        def ok_suffix(w):
            for ln, group in lhs_by_len.items():
                if len(w) >= ln and w[len(w) - ln:] in group:
                    return False
            return True

        def walk(w):
            if len(w) == degree:
                out.append(w)
                return
            for g in range(n):
                nw = w + (g,)
                if ok_suffix(nw):
                    walk(nw)

        walk(())
        return out

    def count_normal_monomials(self, degree):
        return len(self.enumerate_normal_monomials(degree))


def ideal_contains(p, rs):
    """Membership in the two-sided ideal = vanishing normal form; only valid
    once confluence has been established past the degree of p."""
    if rs.confluent_to < p.degree():
        raise ValueError(
            "confluence not established up to degree %d (have %d)"
            % (p.degree(), rs.confluent_to))
    return rs.normal_form(p).is_zero()


def build_rewrite_system(relations, alphabet, ctx, max_degree=6):
    """Interreduce and orient a list of NcPoly relations (each understood as
    relation = 0), then complete up to max_degree."""
    rs = RewriteSystem(alphabet, ctx)
    queue = list(relations)
    while queue:
        rel = rs.normal_form(queue.pop(0))
        if rel.is_zero():
            continue
        lead = rel.leading_word()
        inv = rel.terms[lead].inverse()
        rest = NcPoly(alphabet, ctx, {w: -c * inv for w, c in rel.terms.items() if w != lead})
        if lead in rs.rules:
            # the leading word acquired a second reduction; push the difference
            queue.append(rest - rs.rules[lead])
            continue
        rs.add_rule(lead, rest)
    return rs.completed(max_degree)


def graded_ideal_rank(relations, alphabet, ctx, degree):
    """Rank of the degree-d component of the two-sided ideal generated by
    homogeneous degree-2 relations, computed by sparse elimination over the
    fraction field.  Serves as the independent oracle for normal-monomial
    counts: #normal(d) = (#alphabet)^d - rank(d)."""
    for r in relations:
        if any(len(w) != 2 for w in r.terms):
            raise ValueError("the graded oracle needs homogeneous degree-2 relations")
    n = len(alphabet.names)
    if degree < 2:
        return 0
    col = {}

    def col_of(w):
        k = col.get(w)
        if k is None:
            k = len(col)
            col[w] = k
        return k

    elim = SparseEliminator()
    words = [()]
    for _ in range(degree - 2):
        words.extend([w + (g,) for w in list(words) for g in range(n)])
    by_len = {}
    for w in words:
        by_len.setdefault(len(w), []).append(w)
    for i in range(degree - 1):
        for u in by_len.get(i, []):
            for v in by_len.get(degree - 2 - i, []):
                for r in relations:
                    row = {}
                    for w, c in r.terms.items():
                        key = col_of(u + w + v)
                        s = row.get(key)
                        s = c if s is None else s + c
                        if s:
                            row[key] = s
                        else:
                            row.pop(key, None)
                    if row:
                        elim.add(row)
    return elim.rank()


def is_two_sided_ideal(generators, rs, max_degree):
    """Check that the left-multiple span of the given elements absorbs right
    multiplication by the algebra generators (which makes the left ideal they
    generate two-sided).  The span collects normal forms of all x * v with x a
    monomial, up to max_degree; returns (flag, witness NcPoly or None)."""
    if rs.confluent_to < max_degree:
        raise ValueError("confluence not established up to degree %d" % max_degree)
    alph, ctx = rs.alphabet, rs.ctx

    basis, pivots, vec = _left_multiple_span(generators, rs, max_degree)

    for gname in alph.names:
        g = NcPoly.gen(alph, ctx, gname)
        for v in generators:
            for prod in (g * v, v * g):
                nf = rs.normal_form(prod)
                if nf.degree() > max_degree:
                    raise ValueError("degree bound exceeded mid-check")
                if nf and not in_span(vec(nf), basis, pivots):
                    return False, prod
    return True, None


def _left_multiple_span(generators, rs, max_degree):
    alph, ctx = rs.alphabet, rs.ctx
    n = len(alph.names)
    basis_words = []
    for d in range(max_degree + 1):
        basis_words.extend(rs.enumerate_normal_monomials(d))
    index = {w: k for k, w in enumerate(basis_words)}

    def vec(p):
        v = [ctx.zero()] * len(basis_words)
        for w, c in p.terms.items():
            v[index[w]] = c
        return v

    all_words = [()]
    frontier = [()]
    for _ in range(max_degree):
        frontier = [w + (g,) for w in frontier for g in range(n)]
        all_words.extend(frontier)
    span_rows = []
    for gpoly in generators:
        gd = gpoly.degree()
        for u in all_words:
            if len(u) + gd > max_degree:
                continue
            nf = rs.normal_form(NcPoly.word(alph, ctx, u) * gpoly)
            if nf:
                span_rows.append(vec(nf))
    basis, pivots = rref(span_rows) if span_rows else ([], [])
    return basis, pivots, vec


def ideal_span_contained(gens_small, gens_big, rs, max_degree):
    """Is the left-multiple span of gens_small contained in that of gens_big,
    compared through normal forms up to max_degree?"""
    basis_big, piv_big, _vec = _left_multiple_span(gens_big, rs, max_degree)
    basis_small, _, _ = _left_multiple_span(gens_small, rs, max_degree)
    for row in basis_small:
        if not in_span(row, basis_big, piv_big):
            return False
    return True


# -- relation file parsing -------------------------------------------------------
#
# One relation per line: "<lhs expr> = <rhs expr>", explicit '*' between
# generators, '#' comments.  Both sides parse as noncommutative expressions
# over the alphabet with Scalar coefficients; the relation is lhs - rhs.


class _NcParser:
    def __init__(self, text, alphabet, ctx):
        self.text = text
        self.alphabet = alphabet
        self.ctx = ctx
        self.pos = 0

    def error(self, msg):
        raise ParseError(msg, self.pos)

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self):
        c = self.peek()
        self.pos += 1
        return c

    def parse(self):
        v = self.expr()
        if self.peek():
            self.error("unexpected %r" % self.text[self.pos])
        return v

    def expr(self):
        if self.peek() == "-":
            self.take()
            v = -self.term()
        else:
            v = self.term()
        while True:
            c = self.peek()
            if c == "+":
                self.take()
                v = v + self.term()
            elif c == "-":
                self.take()
                v = v - self.term()
            else:
                return v

    def term(self):
        v = self.factor()
        while True:
            c = self.peek()
            if c == "*":
                self.take()
                v = v * self.factor()
            elif c == "/":
                self.take()
                d = self.factor()
                if set(d.terms) - {()}:
                    self.error("cannot divide by a word-bearing expression")
                if d.is_zero():
                    self.error("division by zero")
                v = v.scale(d.terms[()].inverse())
            else:
                return v

    def factor(self):
        v = self.base()
        if self.peek() == "^":
            self.take()
            n = self.uint()
            v = v ** n
        return v

    def uint(self):
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a nonnegative integer exponent")
        return int(self.text[start:self.pos])

    def base(self):
        c = self.peek()
        if c == "(":
            self.take()
            v = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return v
        if c.isdigit():
            return NcPoly.one(self.alphabet, self.ctx).scale(self.ctx.integer(self.uint()))
        if c in _IDENT_START:
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] in _IDENT_CONT:
                self.pos += 1
            name = self.text[start:self.pos]
            if name in self.alphabet.index:
                return NcPoly.gen(self.alphabet, self.ctx, name)
            if name == "i" or name in self.ctx.index:
                s = self.ctx.i() if name == "i" else self.ctx.gen(name)
                return NcPoly.one(self.alphabet, self.ctx).scale(s)
            self.pos = start
            self.error("unknown identifier %r" % name)
        self.error("unexpected %r" % (c or "end of input"))


def parse_ncpoly(text, alphabet, ctx):
    return _NcParser(text, alphabet, ctx).parse()


def parse_relation_lines(text, alphabet, ctx):
    """Parse relation-file content: one '<lhs> = <rhs>' per line."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError("line %d: expected '<lhs> = <rhs>'" % lineno)
        lhs, rhs = line.split("=", 1)
        out.append(parse_ncpoly(lhs.strip(), alphabet, ctx)
                   - parse_ncpoly(rhs.strip(), alphabet, ctx))
    return out
