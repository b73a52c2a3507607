"""Constructors for the named algebras of the workbench: the exotic T-algebra
relation systems, their dual algebras with coproducts and counits, and the
tilde-basis L-operator system.

Relation sets and coproducts are shipped as data files and parsed here; the
monomial order of each system is chosen so that every displayed relation
orients with its displayed left side on top (for the triangular family this
needs the right-to-left lexicographic reading).  Convention choices that the
relation displays leave open are adjoined explicitly in code:

* dual algebras acquire E^2 = E for their zero-pairing idempotent E, the
  unique choice compatible with Delta(E) = E (x) E and eps(E) = 1;
* the S14 dual acquires the grouplike sign K of the primitive generator At,
  with K^2 = 1, K central except K*Bt = -Bt*K and K*Ct = -Ct*K, and
  K*E = E*K = E.
"""

from __future__ import annotations

from importlib import resources

from .freealg import Alphabet, NcPoly, build_rewrite_system, parse_ncpoly, parse_relation_lines
from .scalar import Context, parse_scalar


def data_text(name):
    return (resources.files("exobi") / "data" / name).read_text()


DEFAULT_DEGREE_CAP = 6


def _load_relations(filename, alphabet, ctx, rename=None):
    text = data_text(filename)
    if rename:
        for old, new in rename.items():
            text = text.replace(old, new)
    return parse_relation_lines(text, alphabet, ctx)


class AlgebraSystem:
    """A named presentation: alphabet + stated relations + completed rewrite
    system (+ optional coproduct/counit data)."""

    def __init__(self, name, alphabet, ctx, relations, max_degree=DEFAULT_DEGREE_CAP,
                 delta=None, eps=None):
        self.name = name
        self.alphabet = alphabet
        self.ctx = ctx
        self.relations = list(relations)
        self.rewrite = build_rewrite_system(self.relations, alphabet, ctx, max_degree)
        self.delta = delta
        self.eps = eps

    def gen(self, name):
        return NcPoly.gen(self.alphabet, self.ctx, name)

    def parse(self, text):
        return parse_ncpoly(text, self.alphabet, self.ctx)


# -- T-algebras -------------------------------------------------------------------


def t_system_e1(max_degree=DEFAULT_DEGREE_CAP):
    """T-algebra of the E1 family: generators at, b, c, dt over Q(h).

    The relation dt*b = b*dt + 2h dt^2 + h b*c forces the right-to-left
    reading with b maximal: dt*b must dominate b*dt, dt^2 and b*c at once,
    which no left-to-right precedence can do.
    """
    alphabet = Alphabet(("at", "b", "c", "dt"), order_desc=("b", "dt", "at", "c"), lex="right")
    ctx = Context(("h",))
    rels = _load_relations("e1_t.rel", alphabet, ctx)
    return AlgebraSystem("E1-T", alphabet, ctx, rels, max_degree)


def t_system_s03(max_degree=DEFAULT_DEGREE_CAP):
    """T-algebra of S03: generators at, bt, ct, dt (all relations monomial)."""
    alphabet = Alphabet(("at", "bt", "ct", "dt"), order_desc=("at", "ct", "dt", "bt"), lex="left")
    ctx = Context(())
    rels = _load_relations("s03_t.rel", alphabet, ctx)
    return AlgebraSystem("S03-T", alphabet, ctx, rels, max_degree)


def t_system_s14(max_degree=DEFAULT_DEGREE_CAP):
    """T-algebra of S14: generators at, bt, ct, dt."""
    alphabet = Alphabet(("at", "bt", "ct", "dt"), order_desc=("dt", "ct", "bt", "at"), lex="left")
    ctx = Context(())
    rels = _load_relations("s14_t.rel", alphabet, ctx)
    return AlgebraSystem("S14-T", alphabet, ctx, rels, max_degree)


def t_system(name, max_degree=DEFAULT_DEGREE_CAP):
    builders = {"E1": t_system_e1, "S03": t_system_s03, "S14": t_system_s14}
    return builders[name](max_degree)


# -- dual algebras -------------------------------------------------------------------


def _parse_coproduct(filename, alphabet, ctx, only=None):
    """Parse 'Delta(gen) = [coeff*]term(left, right) +- ...' lines into
    {gen: [(coeff, left_word, right_word), ...]} with NcPoly sides."""
    out = {}
    for lineno, raw in enumerate(data_text(filename).splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, rhs = line.split("=", 1)
        head = head.strip()
        if not (head.startswith("Delta(") and head.endswith(")")):
            raise ValueError("line %d: expected Delta(gen) = ..." % lineno)
        gen = head[len("Delta("):-1].strip()
        if only is not None and gen not in only:
            continue
        pieces = []
        rhs = rhs.strip()
        pos, sign, acc = 0, 1, []
        depth = 0
        chunks = []
        cur = ""
        for ch in rhs:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if depth == 0 and ch in "+-" and cur.strip():
                chunks.append(cur)
                cur = ch
            else:
                cur += ch
        if cur.strip():
            chunks.append(cur)
        for chunk in chunks:
            chunk = chunk.strip()
            sign = 1
            if chunk.startswith("+"):
                chunk = chunk[1:].strip()
            elif chunk.startswith("-"):
                sign = -1
                chunk = chunk[1:].strip()
            coeff = ctx.integer(sign)
            if not chunk.startswith("term("):
                pre, chunk = chunk.split("*term(", 1)
                chunk = "term(" + chunk
                coeff = coeff * parse_scalar(pre.strip(), ctx)
            body = chunk[len("term("):]
            if not body.endswith(")"):
                raise ValueError("line %d: malformed term(...)" % lineno)
            body = body[:-1]
            depth2 = 0
            split_at = None
            for k, ch in enumerate(body):
                if ch == "(":
                    depth2 += 1
                elif ch == ")":
                    depth2 -= 1
                elif ch == "," and depth2 == 0:
                    split_at = k
                    break
            if split_at is None:
                raise ValueError("line %d: term needs two arguments" % lineno)
            left = parse_ncpoly(body[:split_at].strip(), alphabet, ctx)
            right = parse_ncpoly(body[split_at + 1:].strip(), alphabet, ctx)
            pieces.append((coeff, left, right))
        out[gen] = pieces
    return out


def _parse_counit(filename, ctx):
    out = {}
    for raw in data_text(filename).splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, rhs = line.split("=", 1)
        head = head.strip()
        gen = head[len("eps("):-1].strip()
        out[gen] = parse_scalar(rhs.strip(), ctx)
    return out


def dual_system_e1(max_degree=DEFAULT_DEGREE_CAP):
    """Dual algebra of the E1 family (At, B, C, Dt, E) with its coproduct."""
    alphabet = Alphabet(("At", "B", "C", "Dt", "E"),
                        order_desc=("C", "B", "Dt", "At", "E"), lex="right")
    ctx = Context(())
    rels = _load_relations("e1_dual.rel", alphabet, ctx)
    e = NcPoly.gen(alphabet, ctx, "E")
    rels.append(e * e - e)  # adjoined idempotency of the zero-pairing element
    delta = _parse_coproduct("e1_dual.cop", alphabet, ctx)
    eps = _parse_counit("e1_dual.eps", ctx)
    return AlgebraSystem("E1-dual", alphabet, ctx, rels, max_degree, delta, eps)


def dual_system_s03(max_degree=DEFAULT_DEGREE_CAP):
    """Full dual algebra of S03 (At, Bt, Ct, Dt) with its coproduct."""
    alphabet = Alphabet(("At", "Bt", "Ct", "Dt"),
                        order_desc=("Ct", "Dt", "Bt", "At"), lex="left")
    ctx = Context(())
    rels = _load_relations("s03_dual.rel", alphabet, ctx)
    delta = _parse_coproduct("s03_dual.cop", alphabet, ctx)
    eps = _parse_counit("s03_dual.eps", ctx)
    return AlgebraSystem("S03-dual", alphabet, ctx, rels, max_degree, delta, eps)


def dual_system_s03_prime(max_degree=DEFAULT_DEGREE_CAP):
    """The (Bt, Ct, Dt)-generated subalgebra of the S03 dual; its coproduct
    closes on these generators, making it a finite-dimensional sub-bialgebra."""
    alphabet = Alphabet(("Bt", "Ct", "Dt"), order_desc=("Ct", "Dt", "Bt"), lex="left")
    ctx = Context(())
    rels = _load_relations("s03_prime.rel", alphabet, ctx)
    delta = _parse_coproduct("s03_dual.cop", alphabet, ctx, only={"Bt", "Ct", "Dt"})
    eps = {k: v for k, v in _parse_counit("s03_dual.eps", ctx).items() if k != "At"}
    return AlgebraSystem("S03-prime", alphabet, ctx, rels, max_degree, delta, eps)


def dual_system_s14(max_degree=DEFAULT_DEGREE_CAP):
    """Dual algebra of S14 (At, Bt, Ct, Dt, E) extended by the grouplike sign
    K of At, with the convention rules listed in the module docstring."""
    alphabet = Alphabet(("At", "Bt", "Ct", "Dt", "E", "K"),
                        order_desc=("K", "E", "Dt", "Ct", "Bt", "At"), lex="left")
    ctx = Context(())
    rels = _load_relations("s14_dual.rel", alphabet, ctx)
    g = lambda n: NcPoly.gen(alphabet, ctx, n)
    one = NcPoly.one(alphabet, ctx)
    e, k = g("E"), g("K")
    rels.append(e * e - e)
    rels.append(k * k - one)
    rels.append(k * g("At") - g("At") * k)
    rels.append(k * g("Dt") - g("Dt") * k)
    rels.append(k * g("Bt") + g("Bt") * k)
    rels.append(k * g("Ct") + g("Ct") * k)
    rels.append(k * e - e)
    rels.append(e * k - e)
    delta = _parse_coproduct("s14_dual.cop", alphabet, ctx)
    eps = _parse_counit("s14_dual.eps", ctx)
    return AlgebraSystem("S14-dual", alphabet, ctx, rels, max_degree, delta, eps)


def dual_system(name, max_degree=DEFAULT_DEGREE_CAP):
    builders = {"E1": dual_system_e1, "S03": dual_system_s03,
                "S03PRIME": dual_system_s03_prime, "S14": dual_system_s14}
    return builders[name](max_degree)


# -- the tilde-basis L-operator system -------------------------------------------


LT_PLUS = ("Ltp11", "Ltp12", "Ltp21", "Ltp22")
LT_MINUS = ("Ltm11", "Ltm12", "Ltm21", "Ltm22")


def rll_tilde_system(max_degree=DEFAULT_DEGREE_CAP):
    """The full S03 L-operator system in the tilde basis: the one-sign
    relation sets for each sign plus the mixed-sign exchange rules, oriented
    so that minus-sign letters migrate to the right of plus-sign letters."""
    names = LT_MINUS + LT_PLUS
    alphabet = Alphabet(names, order_desc=names, lex="left")
    ctx = Context(())
    rels = []
    rels += _load_relations("s03_rll_pp.rel", alphabet, ctx,
                            rename={"Lt11": "Ltp11", "Lt12": "Ltp12",
                                    "Lt21": "Ltp21", "Lt22": "Ltp22"})
    rels += _load_relations("s03_rll_pp.rel", alphabet, ctx,
                            rename={"Lt11": "Ltm11", "Lt12": "Ltm12",
                                    "Lt21": "Ltm21", "Lt22": "Ltm22"})
    rels += _load_relations("s03_rll_pm.rel", alphabet, ctx)
    return AlgebraSystem("S03-RLL-tilde", alphabet, ctx, rels, max_degree)
