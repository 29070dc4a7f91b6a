"""Matrices of indeterminates: generic, symmetric and skew-symmetric.

A shape resolves positions to signed variables: symmetric matrices store
only cells with i <= j and reflect, skew-symmetric matrices store i < j,
vanish on the diagonal and negate below it.  Minors are computed by
cofactor expansion memoized on (rows, cols); pfaffians by the standard
expansion along the first index, pf() = 1, pf(i, j) = x[i,j].
"""

from . import poly
from .errors import PreconditionError


class GenericShape:
    """An m x n matrix of independent indeterminates."""

    kind = "generic"

    def __init__(self, m: int, n: int):
        if m < 1 or n < 1:
            raise PreconditionError("matrix dimensions must be positive")
        self.m = m
        self.n = n
        self._minors = {}

    def cells(self):
        return [(i, j) for i in range(1, self.m + 1) for j in range(1, self.n + 1)]

    def variables(self):
        return self.cells()

    def entry(self, i, j):
        """(sign, cell) of position (i, j); sign 0 means a zero entry."""
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise PreconditionError("position (%d, %d) outside matrix" % (i, j))
        return 1, (i, j)

    def __repr__(self):
        return "GenericShape(%d, %d)" % (self.m, self.n)


class SymmetricShape:
    """An n x n symmetric matrix: position (i, j) holds x[min,max]."""

    kind = "symmetric"

    def __init__(self, n: int):
        if n < 1:
            raise PreconditionError("matrix dimension must be positive")
        self.m = self.n = n
        self._minors = {}

    def cells(self):
        return [(i, j) for i in range(1, self.n + 1) for j in range(i, self.n + 1)]

    def variables(self):
        return self.cells()

    def entry(self, i, j):
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise PreconditionError("position (%d, %d) outside matrix" % (i, j))
        return 1, (min(i, j), max(i, j))

    def __repr__(self):
        return "SymmetricShape(%d)" % self.n


class SkewShape:
    """An n x n skew-symmetric matrix: zero diagonal, x[j,i] = -x[i,j]."""

    kind = "skew"

    def __init__(self, n: int):
        if n < 1:
            raise PreconditionError("matrix dimension must be positive")
        self.m = self.n = n
        self._minors = {}
        self._pf = {}

    def cells(self):
        return [(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)]

    def variables(self):
        return self.cells()

    def entry(self, i, j):
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise PreconditionError("position (%d, %d) outside matrix" % (i, j))
        if i == j:
            return 0, None
        if i < j:
            return 1, (i, j)
        return -1, (j, i)

    def __repr__(self):
        return "SkewShape(%d)" % self.n


def entry_poly(shape, i, j, field):
    sign, cell = shape.entry(i, j)
    if sign == 0:
        return {}
    c = field.one if sign > 0 else field.neg(field.one)
    return {(poly.cell_id(*cell), 1): c}


def _check_indices(idx, bound, what):
    if list(idx) != sorted(set(idx)):
        raise PreconditionError("%s must be strictly increasing" % what)
    if idx and (idx[0] < 1 or idx[-1] > bound):
        raise PreconditionError("%s out of range" % what)


def minor(shape, rows, cols, field):
    """Determinant of the submatrix on rows x cols, as a polynomial.

    rows and cols are strictly increasing index tuples of equal length.
    Memoized on (rows, cols) per shape (rational coefficients are reused
    across fields only when the field is the same object).
    """
    rows = tuple(rows)
    cols = tuple(cols)
    if len(rows) != len(cols):
        raise PreconditionError("minor needs equally many rows and columns")
    _check_indices(rows, shape.m, "rows")
    _check_indices(cols, shape.n, "columns")
    key = (rows, cols, id(field))
    cached = shape._minors.get(key)
    if cached is not None:
        return cached
    if not rows:
        out = {(): field.one}
    elif len(rows) == 1:
        out = entry_poly(shape, rows[0], cols[0], field)
    else:
        out = {}
        rest_rows = rows[1:]
        sign = 1
        for k, c in enumerate(cols):
            e = entry_poly(shape, rows[0], c, field)
            if e:
                rest_cols = cols[:k] + cols[k + 1 :]
                sub = minor(shape, rest_rows, rest_cols, field)
                term = poly.p_mul(e, sub, field)
                if sign < 0:
                    term = poly.p_scale(term, field.neg(field.one), field)
                out = poly.p_add(out, term, field)
            sign = -sign
        shape._minors[key] = out
    return out


def pfaffian(shape, indices, field):
    """Pfaffian of the principal skew submatrix on the given indices.

    Expansion along the first index with alternating signs; the square
    of the result is the determinant of the same submatrix.
    """
    if shape.kind != "skew":
        raise PreconditionError("pfaffian requires a skew-symmetric shape")
    indices = tuple(indices)
    _check_indices(indices, shape.n, "indices")
    if len(indices) % 2 != 0:
        raise PreconditionError("pfaffian needs an even number of indices")
    key = (indices, id(field))
    cached = shape._pf.get(key)
    if cached is not None:
        return cached
    if not indices:
        out = {(): field.one}
    elif len(indices) == 2:
        out = entry_poly(shape, indices[0], indices[1], field)
    else:
        out = {}
        first = indices[0]
        for pos in range(1, len(indices)):
            other = indices[pos]
            e = entry_poly(shape, first, other, field)
            rest = tuple(x for x in indices if x != first and x != other)
            sub = pfaffian(shape, rest, field)
            term = poly.p_mul(e, sub, field)
            # position is 1-based j = pos + 1; sign (-1)^j
            if (pos + 1) % 2 == 1:
                term = poly.p_scale(term, field.neg(field.one), field)
            out = poly.p_add(out, term, field)
        shape._pf[key] = out
    return out


def order_for(shape, kind: str):
    """Term order of the requested kind over all variables of the shape."""
    if kind == "diagonal" or kind == "diag":
        return poly.diagonal_order(shape.variables())
    if kind == "antidiagonal" or kind == "antidiag":
        return poly.antidiagonal_order(shape.variables())
    raise PreconditionError("unknown order kind %r" % kind)
