"""Matrices over V = Z/p^(m+1) and the Howell normal form.

Row spans over a chain ring are not determined by ordinary echelon forms:
unit row operations cannot expose the submodule hiding below a pivot like
2 * (2, 1) = (0, 2) over Z/4. The Howell form repairs this by adjoining the
annihilator multiples of every pivot row and is canonical: two matrices have
the same row span exactly when their Howell forms agree entrywise. Span
membership reduces to greedy elimination against the form.

A vectorized numpy path is used for moduli below 2^31 (products of two
residues then fit in int64); a plain Python path covers the rest and serves
as a cross-check in the test suite.
"""

from __future__ import annotations

from .chainring import ChainRingCtx

try:
    import numpy as _np
except ImportError:  # pragma: no cover
    _np = None

_NUMPY_MODULUS_LIMIT = 2**31


class Matrix:
    """Immutable matrix over V with rows reduced into [0, modulus)."""

    __slots__ = ("ctx", "nrows", "ncols", "rows")

    def __init__(self, ctx: ChainRingCtx, ncols: int, rows):
        if ncols < 0:
            raise ValueError("ncols must be >= 0")
        mod = ctx.modulus
        norm = []
        for r in rows:
            r = tuple(int(x) % mod for x in r)
            if len(r) != ncols:
                raise ValueError("row length does not match ncols")
            norm.append(r)
        self.ctx = ctx
        self.ncols = ncols
        self.rows = tuple(norm)
        self.nrows = len(norm)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.ctx == self.ctx
            and other.ncols == self.ncols
            and other.rows == self.rows
        )

    def __hash__(self):
        return hash((self.ctx, self.ncols, self.rows))

    def __repr__(self):
        return f"Matrix({self.ctx!r}, ncols={self.ncols}, rows={list(self.rows)})"


def _howell_rows_py(rows, ncols, ctx: ChainRingCtx):
    """Howell form of the given rows, plain Python reference implementation.

    Worklist elimination: each pending row is reduced against the current
    pivot rows by exact division at the pivot column; a row that improves a
    pivot (smaller valuation) displaces it and the old pivot is re-queued.
    Every installed pivot row p^j * (unit row) contributes its annihilator
    multiple p^(m+1-j) * row back to the worklist, which is what closes the
    span. A final pass reduces entries above each pivot modulo p^j.
    """
    p, mod = ctx.p, ctx.modulus
    pivots = {}  # column -> row (leading entry at that column is p^j)
    pending = [list(r) for r in rows if any(r)]
    while pending:
        r = pending.pop()
        while True:
            lead = next((c for c, x in enumerate(r) if x), None)
            if lead is None:
                break
            v = ctx.val(r[lead])
            q = pivots.get(lead)
            if q is None or ctx.val(q[lead]) > v:
                u_inv = pow(ctx.unit_part(r[lead]), -1, mod)
                r = [(x * u_inv) % mod for x in r]
                pivots[lead] = r
                ann = mod // p**v
                if ann % mod:
                    pending.append([(x * ann) % mod for x in r])
                if q is not None:
                    pending.append(q)
                break
            scale = r[lead] // q[lead]
            r = [(x - scale * y) % mod for x, y in zip(r, q)]
    cols = sorted(pivots)
    out = [list(pivots[c]) for c in cols]
    for i, c in enumerate(cols):
        pj = out[i][c]
        for k in range(i):
            scale = out[k][c] // pj
            if scale:
                out[k] = [(x - scale * y) % mod for x, y in zip(out[k], out[i])]
    return [tuple(r) for r in out]


def _col_vals(col, ctx):
    import numpy as np

    vals = np.full(col.shape, ctx.m + 1, dtype=np.int64)
    rem = col.copy()
    nz = rem != 0
    vals[nz] = 0
    for _ in range(ctx.m + 1):
        divisible = nz & (rem % ctx.p == 0)
        if not divisible.any():
            break
        rem[divisible] //= ctx.p
        vals[divisible] += 1
    return vals


def _sweep_np(a, ctx):
    """One min-valuation-pivot Gaussian sweep; returns (echelon rows, pivots)."""
    import numpy as np

    p, mod = ctx.p, ctx.modulus
    nrows, ncols = a.shape
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        vals = _col_vals(col[nz], ctx)
        k = int(nz[int(np.argmin(vals))])
        j = int(vals.min())
        if k:
            a[[r, r + k]] = a[[r + k, r]]
        u_inv = pow(ctx.unit_part(int(a[r, c])), -1, mod)
        a[r] = (a[r] * u_inv) % mod
        below = a[r + 1 :, c]
        scale = below // (p**j)
        a[r + 1 :] = (a[r + 1 :] - scale[:, None] * a[r][None, :]) % mod
        pivots.append((r, c, j))
        r += 1
    return a[:r], pivots


def _howell_rows_np(rows, ncols, ctx: ChainRingCtx):
    import numpy as np

    p, mod = ctx.p, ctx.modulus
    a = np.array([r for r in rows if any(r)], dtype=np.int64)
    if a.size == 0:
        return []
    a %= mod
    while True:
        a, pivots = _sweep_np(a, ctx)
        ann = []
        for r, _c, j in pivots:
            if j == 0:
                continue
            row = (a[r] * (mod // p**j)) % mod
            if row.any():
                ann.append(row)
        if not ann:
            break
        stacked = np.vstack([a] + ann)
        b, new_pivots = _sweep_np(stacked.copy(), ctx)
        if b.shape == a.shape and (b == a).all():
            break
        a, pivots = b, new_pivots
    for r, c, j in pivots:
        if r == 0:
            continue
        scale = a[:r, c] // (p**j)
        a[:r] = (a[:r] - scale[:, None] * a[r][None, :]) % mod
    return [tuple(int(x) for x in row) for row in a]


def howell_form(mat: Matrix) -> Matrix:
    """Canonical Howell normal form of the row span of ``mat``."""
    ctx = mat.ctx
    if _np is not None and ctx.modulus < _NUMPY_MODULUS_LIMIT:
        rows = _howell_rows_np(mat.rows, mat.ncols, ctx)
    else:
        rows = _howell_rows_py(mat.rows, mat.ncols, ctx)
    return Matrix(ctx, mat.ncols, rows)


def spans_equal(a: Matrix, b: Matrix) -> bool:
    if a.ctx != b.ctx or a.ncols != b.ncols:
        raise ValueError("span comparison requires matching ring and width")
    return howell_form(a).rows == howell_form(b).rows


def span_contains(mat: Matrix, vec) -> bool:
    """Whether ``vec`` lies in the row span of ``mat``.

    Reduces the vector greedily against the Howell form: at each pivot
    column the entry must be divisible by the pivot p^j, otherwise the
    vector escapes the span.
    """
    ctx = mat.ctx
    mod = ctx.modulus
    v = [int(x) % mod for x in vec]
    if len(v) != mat.ncols:
        raise ValueError("vector length does not match ncols")
    for row in howell_form(mat).rows:
        c = next((i for i, x in enumerate(row) if x), None)
        if c is None:
            continue
        if v[c] == 0:
            continue
        if v[c] % row[c]:
            return False
        scale = v[c] // row[c]
        v = [(x - scale * y) % mod for x, y in zip(v, row)]
    return not any(v)
