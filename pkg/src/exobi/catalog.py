"""Built-in R-matrix definitions and the textual catalog format.

Each definition is a 4x4 invertible matrix over the rational function field in
its declared parameters, together with genericity constraints (polynomials
required to stay nonzero) and a free-text provenance note.
"""

from __future__ import annotations

from .matrix import SquareMatrix, determinant
from .scalar import Context, parse_scalar


class CatalogError(ValueError):
    pass


class RMatrixDef:
    __slots__ = ("name", "ctx", "matrix", "constraints", "note")

    def __init__(self, name, ctx, matrix, constraints=(), note=""):
        if matrix.n != 4:
            raise CatalogError("%s: catalog matrices are 4x4" % name)
        det = determinant(matrix)
        if det.is_zero():
            raise CatalogError("%s: matrix is singular over the fraction field" % name)
        self.name = name
        self.ctx = ctx
        self.matrix = matrix
        self.constraints = tuple(constraints)  # (Scalar, "nonzero") pairs
        self.note = note

    @property
    def params(self):
        return self.ctx.symbols

    def __repr__(self):
        return "RMatrixDef(%s, params=%r)" % (self.name, self.params)


def _def_from_grid(name, params, grid, constraint_exprs=(), note=""):
    ctx = Context(params)
    rows = [[parse_scalar(e, ctx) for e in row] for row in grid]
    constraints = tuple((parse_scalar(e, ctx), "nonzero") for e in constraint_exprs)
    return RMatrixDef(name, ctx, SquareMatrix(ctx, rows), constraints, note)


def builtin_catalog():
    """The six built-in 4x4 invertible solutions of the Yang-Baxter equation.

    E1/E2/JORDANIAN are the one-family triangular matrices (E1 pins the
    off-diagonal parameters to -h, h and keeps h3 free away from -h^2; the
    JORDANIAN member sits exactly on that excluded locus); E3, S03 and S14 are
    the exchange-type solutions, S14 carrying a free nonzero parameter q.
    """
    defs = [
        _def_from_grid(
            "E1", ("h", "h3"),
            [["1", "h", "-h", "h3"],
             ["0", "1", "0", "-h"],
             ["0", "0", "1", "h"],
             ["0", "0", "0", "1"]],
            constraint_exprs=("h3 + h^2",),
            note="triangular family with upper parameters (h, -h, h3), h3 away from "
                 "-h^2; the sign convention follows the algebra and plane relation "
                 "displays (the introduction names the same family via h -> -h)",
        ),
        _def_from_grid(
            "E2", ("h1", "h2", "h3"),
            [["1", "h1", "h2", "h3"],
             ["0", "1", "0", "h2"],
             ["0", "0", "1", "h1"],
             ["0", "0", "0", "1"]],
            constraint_exprs=("h1 + h2",),
            note="generic triangular family (h1, h2, h3) with h1 + h2 nonzero",
        ),
        _def_from_grid(
            "E3", (),
            [["1", "0", "0", "1"],
             ["0", "-1", "0", "0"],
             ["0", "0", "-1", "0"],
             ["0", "0", "0", "1"]],
            note="constant diagonal-plus-corner solution",
        ),
        _def_from_grid(
            "S03", (),
            [["1", "0", "0", "1"],
             ["0", "1", "1", "0"],
             ["0", "1", "-1", "0"],
             ["-1", "0", "0", "1"]],
            note="constant solution with eighth-root spectral structure",
        ),
        _def_from_grid(
            "S14", ("q",),
            [["0", "0", "0", "q"],
             ["0", "0", "1", "0"],
             ["0", "1", "0", "0"],
             ["q", "0", "0", "0"]],
            constraint_exprs=("q",),
            note="anti-diagonal exchange solution with free nonzero weight q",
        ),
        _def_from_grid(
            "JORDANIAN", ("h",),
            [["1", "h", "-h", "-h^2"],
             ["0", "1", "0", "-h"],
             ["0", "0", "1", "h"],
             ["0", "0", "0", "1"]],
            note="the E1 family on the locus h3 = -h^2 (a deformation case, kept for contrast)",
        ),
    ]
    return defs


def builtin(name):
    for d in builtin_catalog():
        if d.name == name:
            return d
    raise KeyError("no builtin R-matrix named %r" % name)


def hat(rdef):
    """The leg-swapped matrix P*R (P permutes the two tensor factors)."""
    p = SquareMatrix.swap_2x2_legs(rdef.ctx)
    return p * rdef.matrix


def hat_of(matrix):
    p = SquareMatrix.swap_2x2_legs(matrix.ctx)
    return p * matrix


# -- catalog file format -------------------------------------------------------
#
#   [rmatrix.NAME]
#   params = sym1, sym2, ...
#   constraint_nonzero = <expr>        (repeatable)
#   note = free text                   (optional)
#   row = e1, e2, e3, e4               (exactly four)
#
# '#' starts a comment; blank lines are ignored.


def dump_catalog(defs):
    lines = []
    for d in defs:
        lines.append("[rmatrix.%s]" % d.name)
        lines.append("params = %s" % ", ".join(d.params))
        for poly, kind in d.constraints:
            lines.append("constraint_nonzero = %s" % poly.to_string())
        if d.note:
            lines.append("note = %s" % d.note)
        for r in d.matrix.rows:
            lines.append("row = %s" % ", ".join(s.to_string() for s in r))
        lines.append("")
    return "\n".join(lines)


def load_catalog(text):
    defs = []
    seen = set()
    name = None
    params = None
    constraints = []
    note = ""
    rows = []

    def finish(lineno):
        nonlocal name, params, constraints, note, rows
        if name is None:
            return
        if len(rows) != 4:
            raise CatalogError("line %d: [rmatrix.%s] needs exactly 4 row lines, got %d"
                               % (lineno, name, len(rows)))
        ctx = Context(tuple(params or ()))
        try:
            grid = [[parse_scalar(e, ctx) for e in row] for row in rows]
            cons = tuple((parse_scalar(e, ctx), "nonzero") for e in constraints)
        except ValueError as exc:
            raise CatalogError("line %d: in [rmatrix.%s]: %s" % (lineno, name, exc))
        defs.append(RMatrixDef(name, ctx, SquareMatrix(ctx, grid), cons, note))
        name, params, constraints, note, rows = None, None, [], "", []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip() if not raw.strip().startswith("note") else raw.strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            finish(lineno)
            head = line[1:-1].strip()
            if not head.startswith("rmatrix."):
                raise CatalogError("line %d: expected [rmatrix.NAME]" % lineno)
            name = head[len("rmatrix."):].strip()
            if not name:
                raise CatalogError("line %d: empty catalog entry name" % lineno)
            if name in seen:
                raise CatalogError("line %d: duplicate name %r" % (lineno, name))
            seen.add(name)
            continue
        if name is None:
            raise CatalogError("line %d: content outside any [rmatrix.*] section" % lineno)
        if "=" not in line:
            raise CatalogError("line %d: expected 'key = value'" % lineno)
        key, value = line.split("=", 1)
        key = key.strip()
        value = value.strip()
        if key == "params":
            params = [p.strip() for p in value.split(",") if p.strip()]
        elif key == "constraint_nonzero":
            constraints.append(value)
        elif key == "note":
            note = value
        elif key == "row":
            rows.append([e.strip() for e in value.split(",")])
        else:
            raise CatalogError("line %d: unknown key %r" % (lineno, key))
    finish(len(text.splitlines()))
    return defs
