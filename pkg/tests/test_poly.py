"""Polynomial layer: term orders, arithmetic, division, Buchberger.

The division certificate (p = sum q_i*g_i + r with no remainder term
divisible by a leading monomial) is the load-bearing invariant; the
Buchberger checks rest on it.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laddergb import BudgetExceeded, MaxMinors, QQ, natural_generators
from laddergb.fields import PrimeField
from laddergb.poly import (
    antidiagonal_order,
    buchberger_reduced,
    cell_id,
    diagonal_order,
    division,
    freeze,
    id_cell,
    ideal_member,
    is_reduced_groebner,
    leading_term,
    mono_text,
    normal_form,
    p_add,
    p_const,
    p_degree,
    p_monic,
    p_mul,
    p_scale,
    p_sub,
    p_var,
    p_zero,
    poly_text,
    s_polynomial,
)

GRID = [(i, j) for i in range(1, 4) for j in range(1, 4)]
DIAG = diagonal_order(GRID)
ANTI = antidiagonal_order(GRID)


def x(i, j, field=QQ):
    return p_var(cell_id(i, j), field)


def polys(field=QQ, max_terms=4):
    cells = st.sampled_from([cell_id(i, j) for (i, j) in GRID])
    monos = st.dictionaries(cells, st.integers(1, 3), max_size=3).map(
        lambda d: tuple(x for v in sorted(d) for x in (v, d[v]))
    )
    coeffs = st.integers(-5, 5).filter(bool).map(field.of)
    return st.dictionaries(monos, coeffs, max_size=max_terms)


# ---------------------------------------------------------------------------
# cells and orders


def test_cell_id_roundtrip():
    for c in GRID:
        assert id_cell(cell_id(*c)) == c
    with pytest.raises(ValueError):
        cell_id(64, 1)
    with pytest.raises(ValueError):
        cell_id(1, -1)


def test_order_rank_sequences():
    # diagonal: row-major, (1,1) largest; antidiagonal: columns flipped
    assert DIAG.sequence[0] == cell_id(1, 1)
    assert DIAG.sequence[1] == cell_id(1, 2)
    assert ANTI.sequence[0] == cell_id(1, 3)
    assert ANTI.sequence[1] == cell_id(1, 2)
    assert DIAG.rank(cell_id(1, 1)) > DIAG.rank(cell_id(3, 3))
    assert ANTI.rank(cell_id(1, 3)) > ANTI.rank(cell_id(1, 1))


def test_leading_term_of_minor_is_main_diagonal_or_antidiagonal():
    # x11*x22 - x12*x21: diagonal order picks the diagonal product,
    # antidiagonal order picks the antidiagonal one.
    minor = p_sub(
        p_mul(x(1, 1), x(2, 2), QQ), p_mul(x(1, 2), x(2, 1), QQ), QQ
    )
    md, _ = leading_term(minor, DIAG)
    ma, _ = leading_term(minor, ANTI)
    assert md == (cell_id(1, 1), 1, cell_id(2, 2), 1)
    assert ma == (cell_id(1, 2), 1, cell_id(2, 1), 1)


@given(polys(), polys())
def test_order_multiplicative_on_leading_terms(p, q):
    if not p or not q:
        return
    mp, _ = leading_term(p, DIAG)
    mq, _ = leading_term(q, DIAG)
    prod = p_mul(p, q, QQ)
    if prod:
        from laddergb import mono

        assert DIAG.compare(leading_term(prod, DIAG)[0], mono.mul(mp, mq)) <= 0


def test_order_total_on_distinct_monomials():
    ms = [(cell_id(1, 1), 1), (cell_id(1, 2), 2), (cell_id(2, 1), 1, cell_id(2, 2), 1)]
    for a in ms:
        for b in ms:
            c = DIAG.compare(a, b)
            assert c == 0 if a == b else c in (-1, 1)
            assert DIAG.compare(b, a) == -c


# ---------------------------------------------------------------------------
# ring axioms


@given(polys(), polys())
def test_add_commutes(p, q):
    assert p_add(p, q, QQ) == p_add(q, p, QQ)


@given(polys(), polys(), polys())
def test_mul_distributes(p, q, r):
    left = p_mul(p, p_add(q, r, QQ), QQ)
    right = p_add(p_mul(p, q, QQ), p_mul(p, r, QQ), QQ)
    assert left == right


@given(polys(), polys(), polys())
@settings(max_examples=50)
def test_mul_associates(p, q, r):
    assert p_mul(p_mul(p, q, QQ), r, QQ) == p_mul(p, p_mul(q, r, QQ), QQ)


@given(polys())
def test_sub_self_is_zero(p):
    assert p_sub(p, p, QQ) == p_zero()
    assert p_add(p, p_zero(), QQ) == p
    assert p_mul(p, p_const(QQ, QQ.one), QQ) == p
    assert p_scale(p, QQ.zero, QQ) == p_zero()


@given(polys())
def test_degree_and_monic(p):
    if not p:
        assert p_degree(p) == -1
        return
    q = p_monic(p, DIAG, QQ)
    assert p_degree(q) == p_degree(p)
    assert QQ.eq(leading_term(q, DIAG)[1], QQ.one)
    assert freeze(p_monic(q, DIAG, QQ)) == freeze(q)


# ---------------------------------------------------------------------------
# division certificate


@given(polys(), st.lists(polys().filter(bool), min_size=1, max_size=3))
@settings(max_examples=100)
def test_division_certificate(p, G):
    r, quotients = division(p, G, DIAG, QQ)
    acc = dict(r)
    for q, g in zip(quotients, G):
        acc = p_add(acc, p_mul(q, g, QQ), QQ)
    assert acc == p
    lms = [leading_term(g, DIAG)[0] for g in G]
    from laddergb import mono

    for m in r:
        assert not any(mono.divides(lm, m) for lm in lms)


def test_normal_form_examples():
    g = p_sub(p_mul(x(1, 1), x(2, 2), QQ), p_mul(x(1, 2), x(2, 1), QQ), QQ)
    # x11*x22 reduces to x12*x21 modulo the minor
    r = normal_form(p_mul(x(1, 1), x(2, 2), QQ), [g], DIAG, QQ)
    assert r == p_mul(x(1, 2), x(2, 1), QQ)
    assert normal_form(g, [g], DIAG, QQ) == p_zero()


# ---------------------------------------------------------------------------
# S-polynomials and Buchberger


def test_s_polynomial_cancels_leading_terms():
    f = p_add(p_mul(x(1, 1), x(2, 2), QQ), x(3, 3), QQ)
    g = p_add(p_mul(x(1, 1), x(1, 2), QQ), x(2, 1), QQ)
    s = s_polynomial(f, g, DIAG, QQ)
    lf = leading_term(f, DIAG)[0]
    lg = leading_term(g, DIAG)[0]
    from laddergb import mono

    l = mono.lcm(lf, lg)
    assert all(DIAG.compare(m, l) < 0 for m in s)


def test_buchberger_completes_a_non_basis():
    # x*y - z^2 and y^2 - w^2 with x > y > z > w (lex) need completion
    cells = [(1, 1), (1, 2), (2, 1), (2, 2)]
    order = diagonal_order(cells)
    xv, yv, zv, wv = (p_var(cell_id(i, j), QQ) for (i, j) in cells)
    f = p_sub(p_mul(xv, yv, QQ), p_mul(zv, zv, QQ), QQ)
    g = p_sub(p_mul(yv, yv, QQ), p_mul(wv, wv, QQ), QQ)
    basis = buchberger_reduced([f, g], order, QQ)
    assert len(basis) == 3  # the S-pair contributes x*w^2 - y*z^2
    assert is_reduced_groebner(basis, order, QQ)
    assert not is_reduced_groebner([f, g], order, QQ)
    # membership of the new element in the original ideal
    for b in basis:
        assert ideal_member(b, basis, order, QQ)


def test_buchberger_idempotent_on_its_output():
    top = MaxMinors(2, 3)
    gens = natural_generators(top)
    order = diagonal_order(top.cells())
    basis = buchberger_reduced(gens, order, QQ)
    again = buchberger_reduced(basis, order, QQ)
    assert {freeze(g) for g in basis} == {freeze(g) for g in again}


def test_buchberger_respects_budget():
    top = MaxMinors(3, 4)
    gens = natural_generators(top)
    order = diagonal_order(top.cells())
    with pytest.raises(BudgetExceeded) as info:
        buchberger_reduced(gens, order, QQ, max_spairs=1)
    assert info.value.limit == 1
    # a generous budget is not consumed
    basis = buchberger_reduced(gens, order, QQ, max_spairs=10_000)
    assert basis


def test_reduced_predicate_rejects_redundancy():
    a = p_var(cell_id(1, 1), QQ)
    b = p_mul(a, p_var(cell_id(1, 2), QQ), QQ)  # leading term divisible by a
    assert not is_reduced_groebner([a, b], DIAG, QQ)
    two_a = p_scale(a, QQ.of(2), QQ)
    assert not is_reduced_groebner([two_a], DIAG, QQ)  # not monic
    assert is_reduced_groebner([a], DIAG, QQ)
    assert not is_reduced_groebner([a, p_zero()], DIAG, QQ)


def test_buchberger_over_prime_field_matches_rationals_here():
    gf = PrimeField(32003)
    top = MaxMinors(2, 3)
    order = diagonal_order(top.cells())
    bq = buchberger_reduced(natural_generators(top, QQ, order), order, QQ)
    bp = buchberger_reduced(natural_generators(top, gf, order), order, gf)
    as_int = lambda basis: {
        tuple(sorted((m, int(c) % 32003) for m, c in g.items())) for g in basis
    }
    assert as_int(bq) == as_int(bp)


# ---------------------------------------------------------------------------
# text forms


def test_text_forms():
    assert mono_text(()) == "1"
    assert mono_text((cell_id(1, 2), 1)) == "x[1,2]"
    assert mono_text((cell_id(1, 2), 3)) == "x[1,2]^3"
    minor = p_sub(
        p_mul(x(1, 1), x(2, 2), QQ), p_mul(x(1, 2), x(2, 1), QQ), QQ
    )
    assert poly_text(minor, DIAG, QQ) == "x[1,1]*x[2,2] - x[1,2]*x[2,1]"
    assert poly_text(p_zero(), DIAG, QQ) == "0"
    assert poly_text(p_scale(minor, QQ.of(-1), QQ), DIAG, QQ) == (
        "-x[1,1]*x[2,2] + x[1,2]*x[2,1]"
    )
