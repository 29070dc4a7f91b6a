"""Matrices of indeterminates and their minors/pfaffians.

Two oracle-grade identities anchor the pfaffian code: pf(S)^2 equals
the determinant of the principal submatrix on S, and the number of
monomials of pf(S) is the double factorial (|S|-1)!!.
"""

import itertools
import math
from fractions import Fraction

import pytest

from laddergb import QQ
from laddergb.errors import PreconditionError
from laddergb.matrices import (
    GenericShape,
    SkewShape,
    SymmetricShape,
    entry_poly,
    minor,
    order_for,
    pfaffian,
)
from laddergb.poly import cell_id, p_mul, p_scale, p_sub


def brute_det(shape, rows, cols, field=QQ):
    """Leibniz-formula determinant; independent of the cofactor code."""
    out = {}
    for perm in itertools.permutations(range(len(cols))):
        sign = 1
        seen = list(perm)
        for i in range(len(seen)):
            for j in range(i + 1, len(seen)):
                if seen[i] > seen[j]:
                    sign = -sign
        term = {(): field.of(sign)}
        for r, k in zip(rows, perm):
            term = p_mul(term, entry_poly(shape, r, cols[k], field), field)
        from laddergb.poly import p_add

        out = p_add(out, term, field)
    return out


# ---------------------------------------------------------------------------
# shapes


def test_generic_entries():
    s = GenericShape(2, 3)
    assert s.entry(1, 2) == (1, (1, 2))
    assert s.entry(2, 1) == (1, (2, 1))
    assert len(s.cells()) == 6
    with pytest.raises(PreconditionError):
        s.entry(3, 1)


def test_symmetric_entries_reflect():
    s = SymmetricShape(3)
    assert s.entry(2, 3) == (1, (2, 3))
    assert s.entry(3, 2) == (1, (2, 3))
    assert len(s.cells()) == 6  # upper triangle including diagonal


def test_skew_entries_negate():
    s = SkewShape(4)
    assert s.entry(1, 3) == (1, (1, 3))
    assert s.entry(3, 1) == (-1, (1, 3))
    assert s.entry(2, 2) == (0, None)
    assert len(s.cells()) == 6  # strictly upper triangle


# ---------------------------------------------------------------------------
# minors


@pytest.mark.parametrize("m,n,k", [(2, 2, 2), (3, 3, 2), (3, 3, 3), (3, 4, 3)])
def test_minor_matches_leibniz_generic(m, n, k):
    s = GenericShape(m, n)
    for rows in itertools.combinations(range(1, m + 1), k):
        for cols in itertools.combinations(range(1, n + 1), k):
            assert minor(s, rows, cols, QQ) == brute_det(s, rows, cols)


def test_minor_matches_leibniz_symmetric_and_skew():
    for s in (SymmetricShape(4), SkewShape(4)):
        for rows in itertools.combinations(range(1, 5), 2):
            for cols in itertools.combinations(range(1, 5), 2):
                assert minor(s, rows, cols, QQ) == brute_det(s, rows, cols)
        rows = cols = (1, 2, 3)
        assert minor(s, rows, cols, QQ) == brute_det(s, rows, cols)


def test_minor_term_count_is_factorial_for_generic():
    s = GenericShape(4, 4)
    full = minor(s, (1, 2, 3, 4), (1, 2, 3, 4), QQ)
    assert len(full) == math.factorial(4)


def test_minor_symmetric_under_transpose_of_symmetric_shape():
    s = SymmetricShape(4)
    assert minor(s, (1, 3), (2, 4), QQ) == minor(s, (2, 4), (1, 3), QQ)


def test_minor_rejects_bad_indices():
    s = GenericShape(3, 3)
    with pytest.raises(PreconditionError):
        minor(s, (1, 2), (1,), QQ)
    with pytest.raises(PreconditionError):
        minor(s, (2, 1), (1, 2), QQ)
    with pytest.raises(PreconditionError):
        minor(s, (1, 4), (1, 2), QQ)


def test_empty_minor_is_one():
    s = GenericShape(2, 2)
    assert minor(s, (), (), QQ) == {(): QQ.one}


# ---------------------------------------------------------------------------
# pfaffians


def test_pfaffian_base_cases():
    s = SkewShape(4)
    assert pfaffian(s, (), QQ) == {(): QQ.one}
    assert pfaffian(s, (1, 3), QQ) == {(cell_id(1, 3), 1): QQ.one}


def test_pfaffian_of_four_indices():
    # pf(1,2,3,4) = x12*x34 - x13*x24 + x14*x23
    s = SkewShape(4)
    p = pfaffian(s, (1, 2, 3, 4), QQ)
    x = lambda i, j: {(cell_id(i, j), 1): QQ.one}
    expected = p_sub(
        p_mul(x(1, 2), x(3, 4), QQ), p_mul(x(1, 3), x(2, 4), QQ), QQ
    )
    from laddergb.poly import p_add

    expected = p_add(expected, p_mul(x(1, 4), x(2, 3), QQ), QQ)
    assert p == expected


def double_factorial(n):
    return math.prod(range(n, 0, -2)) if n > 0 else 1


@pytest.mark.parametrize("size", [2, 4, 6])
def test_pfaffian_squared_is_determinant(size):
    s = SkewShape(7)
    for indices in itertools.combinations(range(1, 8), size):
        pf = pfaffian(s, indices, QQ)
        det = minor(s, indices, indices, QQ)
        assert p_mul(pf, pf, QQ) == det
        assert len(pf) == double_factorial(size - 1)


def test_pfaffian_rejects_bad_input():
    s = SkewShape(5)
    with pytest.raises(PreconditionError):
        pfaffian(s, (1, 2, 3), QQ)
    with pytest.raises(PreconditionError):
        pfaffian(s, (2, 1), QQ)
    with pytest.raises(PreconditionError):
        pfaffian(GenericShape(4, 4), (1, 2), QQ)


def test_odd_skew_determinant_vanishes():
    s = SkewShape(5)
    assert minor(s, (1, 2, 3), (1, 2, 3), QQ) == {}
    assert minor(s, (1, 2, 3, 4, 5), (1, 2, 3, 4, 5), QQ) == {}


# ---------------------------------------------------------------------------
# order_for


def test_order_for_kinds():
    s = GenericShape(2, 2)
    assert order_for(s, "diagonal").kind == "diagonal"
    assert order_for(s, "diag").kind == "diagonal"
    assert order_for(s, "antidiagonal").kind == "antidiagonal"
    with pytest.raises(PreconditionError):
        order_for(s, "weights")
