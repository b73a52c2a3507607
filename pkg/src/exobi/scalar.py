"""Exact scalar arithmetic: rational functions in declared parameters with
Gaussian-rational coefficients.

A Scalar is an element of the field Q(i)(s1, ..., sn) where s1..sn are the
symbols of its Context.  Internally a value is a complex pair (re, im); each
component is either a plain rational (fast path, used whenever the value is
free of symbols) or a reduced rational function over QQ.  Denominators are
kept i-free, so canonical forms are componentwise-reduced fractions with a
real monic common denominator; equality is structural equality of canonical
forms.
"""

from __future__ import annotations

from sympy.polys.domains import QQ
from sympy.polys.fields import FracField


class ContextMismatch(ValueError):
    """Raised when operands live in different parameter contexts."""


class ParseError(ValueError):
    """Syntax or name error while parsing a scalar expression."""

    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


class SubstitutionError(ValueError):
    """A substitution made a denominator vanish identically."""


_IDENT_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_IDENT_CONT = _IDENT_START | set("0123456789")


class Context:
    """An ordered list of parameter symbols, with its rational function field."""

    _cache = {}

    def __new__(cls, symbols=()):
        symbols = tuple(symbols)
        if symbols in cls._cache:
            return cls._cache[symbols]
        for s in symbols:
            if s == "i":
                raise ValueError("'i' is reserved for the imaginary unit")
            if not s or s[0] not in _IDENT_START or any(c not in _IDENT_CONT for c in s[1:]):
                raise ValueError("invalid symbol name %r" % (s,))
        if len(set(symbols)) != len(symbols):
            raise ValueError("duplicate symbols in context: %r" % (symbols,))
        self = object.__new__(cls)
        self.symbols = symbols
        self.field = FracField(list(symbols), QQ)
        self.index = {s: k for k, s in enumerate(symbols)}
        cls._cache[symbols] = self
        return self

    def __repr__(self):
        return "Context(%s)" % (", ".join(self.symbols))

    def __contains__(self, name):
        return name in self.index

    def zero(self):
        return Scalar(self, QQ(0), QQ(0))

    def one(self):
        return Scalar(self, QQ(1), QQ(0))

    def i(self):
        return Scalar(self, QQ(0), QQ(1))

    def integer(self, n):
        return Scalar(self, QQ(int(n)), QQ(0))

    def rational(self, p, q=1):
        return Scalar(self, QQ(int(p), int(q)), QQ(0))

    def gaussian(self, re, im):
        """Constant a + b*i from two rationals (ints, (p, q) pairs or QQ)."""
        return Scalar(self, _as_qq(re), _as_qq(im))

    def gen(self, name):
        if name not in self.index:
            raise KeyError("symbol %r not in context %r" % (name, self.symbols))
        g = self.field.gens[self.index[name]]
        return Scalar(self, g, self.field.zero)

    def gens(self):
        return [self.gen(s) for s in self.symbols]

    def parse(self, text):
        return parse_scalar(text, self)


def _as_qq(v):
    if isinstance(v, tuple):
        return QQ(int(v[0]), int(v[1]))
    if isinstance(v, int):
        return QQ(v)
    return QQ.convert(v)


def _is_frac(x):
    # FracElement instances have .numer; QQ ground elements (mpq) do not.
    return hasattr(x, "numer")


class Scalar:
    """Immutable element of Q(i)(symbols).

    re/im are both QQ rationals (constant form) or both FracElements of the
    context field (symbolic form).  A value without symbols is always stored
    in constant form, which makes equality and hashing canonical.
    """

    __slots__ = ("ctx", "re", "im")

    def __init__(self, ctx, re, im):
        self.ctx = ctx
        self.re = re
        self.im = im

    # -- construction helpers ------------------------------------------------

    def _wrap(self, re, im):
        if _is_frac(re):
            if re.numer.is_ground and re.denom.is_ground and im.numer.is_ground and im.denom.is_ground:
                return Scalar(self.ctx, _ground_value(re), _ground_value(im))
        return Scalar(self.ctx, re, im)

    def _lift(self):
        """Return (re, im) as FracElements."""
        if _is_frac(self.re):
            return self.re, self.im
        f = self.ctx.field
        return f.ground_new(self.re), f.ground_new(self.im)

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.ctx is not self.ctx:
                if not other.has_symbols() and not self.has_symbols():
                    return Scalar(self.ctx, other.re, other.im)
                raise ContextMismatch(
                    "mixed contexts %r and %r" % (self.ctx.symbols, other.ctx.symbols))
            return other
        if isinstance(other, int):
            return self.ctx.integer(other)
        return NotImplemented

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return not self.re and not self.im

    def is_one(self):
        return not self.im and not _is_frac(self.re) and self.re == QQ(1)

    def is_constant(self):
        return not _is_frac(self.re)

    def has_symbols(self):
        return _is_frac(self.re)

    def is_real(self):
        return not self.im

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if _is_frac(self.re) == _is_frac(other.re):
            return self._wrap(self.re + other.re, self.im + other.im)
        a, b = self._lift()
        c, d = other._lift()
        return self._wrap(a + c, b + d)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if _is_frac(self.re) == _is_frac(other.re):
            return self._wrap(self.re - other.re, self.im - other.im)
        a, b = self._lift()
        c, d = other._lift()
        return self._wrap(a - c, b - d)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__sub__(self)

    def __neg__(self):
        return Scalar(self.ctx, -self.re, -self.im)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if _is_frac(self.re) != _is_frac(other.re):
            a, b = self._lift()
            c, d = other._lift()
        else:
            a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return self._wrap(a * c, b)
        return self._wrap(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by the zero scalar")
        a, b = self.re, self.im
        if not b:
            if _is_frac(a):
                return self._wrap(self.ctx.field.one / a, b)
            return Scalar(self.ctx, QQ(1) / a, b)
        n = a * a + b * b
        if _is_frac(a):
            return self._wrap(a / n, -b / n)
        return Scalar(self.ctx, a / n, -b / n)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = self.ctx.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def conjugate(self):
        return Scalar(self.ctx, self.re, -self.im)

    # -- equality ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return not self.im and not _is_frac(self.re) and self.re == QQ(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.ctx is not other.ctx:
            if not _is_frac(self.re) and not _is_frac(other.re):
                return self.re == other.re and self.im == other.im
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if _is_frac(self.re):
            return hash((self.ctx.symbols, self.re, self.im))
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    # -- canonical numerator / denominator ------------------------------------

    def as_numer_denom(self):
        """Return (numerator, denominator) Scalars: the denominator is a real
        monic polynomial, the numerator a Gaussian polynomial, and the pair
        represents self exactly."""
        if not _is_frac(self.re):
            dr = self.re.denominator
            di = self.im.denominator
            g = _int_gcd(dr, di)
            den = dr * di // g
            num = Scalar(self.ctx, self.re * den, self.im * den)
            return num, self.ctx.integer(den)
        f = self.ctx.field
        a, b = self.re, self.im
        den = a.denom.lcm(b.denom)
        lc = den.LC
        if lc != QQ(1):
            den = den.monic()
        rnum = a.numer * den.quo(a.denom)
        inum = b.numer * den.quo(b.denom)
        if lc != QQ(1):
            inv = QQ(1) / lc
            rnum = rnum.mul_ground(inv)
            inum = inum.mul_ground(inv)
        num = Scalar(self.ctx, f.new(rnum, f.ring.one), f.new(inum, f.ring.one))
        return num._wrap(num.re, num.im), self._wrap(f.new(den, f.ring.one), f.zero)

    # -- substitution ----------------------------------------------------------

    def substitute(self, bindings):
        """Simultaneously substitute Scalars for symbols.

        bindings maps symbol names (must belong to the context) to Scalars in
        the same context.  Raises SubstitutionError if a denominator vanishes
        identically under the substitution.
        """
        for k, v in bindings.items():
            if k not in self.ctx.index:
                raise KeyError("symbol %r not in context %r" % (k, self.ctx.symbols))
            if isinstance(v, Scalar) and v.ctx is not self.ctx and v.has_symbols():
                raise ContextMismatch("binding for %r lies outside the context" % k)
        if not _is_frac(self.re):
            return self
        values = []
        for k, s in enumerate(self.ctx.symbols):
            if s in bindings:
                v = bindings[s]
                if not isinstance(v, Scalar):
                    v = self.ctx.integer(v)
                elif v.ctx is not self.ctx:
                    v = Scalar(self.ctx, v.re, v.im)
                values.append(v)
            else:
                values.append(self.ctx.gen(s))
        out = self.ctx.zero()
        for comp, unit in ((self.re, self.ctx.one()), (self.im, self.ctx.i())):
            num = _eval_poly(self.ctx, comp.numer, values)
            den = _eval_poly(self.ctx, comp.denom, values)
            if den.is_zero():
                if not num.is_zero():
                    raise SubstitutionError(
                        "denominator vanishes identically under the substitution")
                raise SubstitutionError(
                    "denominator vanishes identically under the substitution")
            out = out + unit * num / den
        return out

    # -- printing --------------------------------------------------------------

    def __repr__(self):
        return "Scalar(%s)" % self.to_string()

    def __str__(self):
        return self.to_string()

    def to_string(self):
        """Render in the expression grammar; parsing the result in the same
        context reproduces the value."""
        if not _is_frac(self.re):
            return _const_string(self.re, self.im)
        num, den = self.as_numer_denom()
        num_s = _poly_pair_string(self.ctx, num)
        if den.is_one():
            return num_s
        den_s = _poly_pair_string(self.ctx, den)
        return "(%s)/(%s)" % (num_s, den_s)


def _int_gcd(a, b):
    while b:
        a, b = b, a % b
    return a if a > 0 else -a


def _ground_value(fe):
    n = fe.numer.LC if fe.numer else QQ(0)
    d = fe.denom.LC
    return n / d


def _eval_poly(ctx, poly, values):
    """Evaluate a PolyElement at a vector of Scalars (one per context symbol)."""
    out = ctx.zero()
    for exps, coeff in poly.terms():
        term = Scalar(ctx, coeff, QQ(0))
        for k, e in enumerate(exps):
            if e:
                term = term * values[k] ** e
        out = out + term
    return out


# -- string rendering ---------------------------------------------------------


def _q_string(q):
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def _const_string(re, im):
    if not im:
        return _q_string(re)
    if not re:
        return _imag_string(im)
    im_s = _imag_string(im)
    if im_s.startswith("-"):
        return "%s - %s" % (_q_string(re), im_s[1:])
    return "%s + %s" % (_q_string(re), im_s)


def _imag_string(im):
    if im == QQ(1):
        return "i"
    if im == QQ(-1):
        return "-i"
    if im.denominator == 1:
        return "%d*i" % im.numerator
    return "(%s)*i" % _q_string(im)


def _mono_string(ctx, exps):
    parts = []
    for k, e in enumerate(exps):
        if e == 1:
            parts.append(ctx.symbols[k])
        elif e > 1:
            parts.append("%s^%d" % (ctx.symbols[k], e))
    return "*".join(parts)


def _poly_pair_string(ctx, s):
    """Render a Scalar known to be polynomial (denominator 1)."""
    if not _is_frac(s.re):
        return _const_string(s.re, s.im)
    terms = {}
    for exps, c in s.re.numer.terms():
        terms[exps] = (c, QQ(0))
    for exps, c in s.im.numer.terms():
        a, _ = terms.get(exps, (QQ(0), QQ(0)))
        terms[exps] = (a, c)
    if not terms:
        return "0"
    ordered = sorted(terms.items(), key=lambda t: t[0], reverse=True)
    pieces = []
    for exps, (a, b) in ordered:
        mono = _mono_string(ctx, exps)
        if not mono:
            pieces.append(_const_string(a, b) if (not b or not a) else "(%s)" % _const_string(a, b))
            continue
        if b:
            coeff = "(%s)" % _const_string(a, b)
            pieces.append("%s*%s" % (coeff, mono))
        elif a == QQ(1):
            pieces.append(mono)
        elif a == QQ(-1):
            pieces.append("-%s" % mono)
        elif a.denominator == 1:
            pieces.append("%d*%s" % (a.numerator, mono))
        else:
            pieces.append("(%s)*%s" % (_q_string(a), mono))
    out = pieces[0]
    for p in pieces[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


# -- parsing --------------------------------------------------------------------

# expr   := ['-'] term (('+'|'-') term)*
# term   := factor (('*'|'/') factor)*
# factor := base ('^' uint)?
# base   := uint | 'i' | ident | '(' expr ')'


class _Parser:
    def __init__(self, text, ctx):
        self.text = text
        self.ctx = ctx
        self.pos = 0

    def error(self, msg):
        raise ParseError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r\n":
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self):
        c = self.peek()
        self.pos += 1
        return c

    def parse(self):
        v = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
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
                if d.is_zero():
                    self.error("division by the zero polynomial")
                v = v / d
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
        self.skip_ws()
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
            return self.ctx.integer(self.uint())
        if c in _IDENT_START:
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] in _IDENT_CONT:
                self.pos += 1
            name = self.text[start:self.pos]
            if name == "i":
                return self.ctx.i()
            if name not in self.ctx.index:
                self.pos = start
                self.error("undeclared identifier %r" % name)
            return self.ctx.gen(name)
        self.error("unexpected %r" % (c or "end of input"))


def parse_scalar(text, ctx):
    """Parse an expression (integers, i, declared identifiers, + - * / ^,
    parentheses) into a canonical Scalar."""
    return _Parser(text, ctx).parse()
