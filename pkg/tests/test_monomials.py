"""Monomial ideal algebra: minimal generators, colons, the basic double
link, and the two-route Hilbert function."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laddergb.errors import PreconditionError
from laddergb.monomials import (
    MonomialIdeal,
    basic_double_link,
    hilbert_function_brute,
    minimalize,
)

AMBIENT = tuple(range(6))


def monomials(max_vars=6, max_exp=3):
    return st.dictionaries(
        st.integers(min_value=0, max_value=max_vars - 1),
        st.integers(min_value=1, max_value=max_exp),
        min_size=1,
        max_size=3,
    ).map(lambda d: tuple(x for v in sorted(d) for x in (v, d[v])))


def ideals():
    return st.lists(monomials(), min_size=0, max_size=4).map(
        lambda gens: MonomialIdeal(gens, AMBIENT)
    )


# ---------------------------------------------------------------------------
# minimal generators


def test_minimalize_examples():
    x, y = (0, 1), (1, 1)
    xy = (0, 1, 1, 1)
    x2 = (0, 2)
    assert minimalize([x, xy]) == [x]
    assert minimalize([x2, xy, x]) == [x]
    assert minimalize([x2, xy]) == sorted([x2, xy], key=lambda m: (2, m))
    assert minimalize([]) == []
    assert minimalize([(), x]) == [()]


@given(st.lists(monomials(), max_size=6))
def test_minimalize_is_minimal_and_equivalent(gens):
    mins = minimalize(gens)
    ideal = MonomialIdeal(gens, AMBIENT)
    # same ideal
    assert MonomialIdeal(mins, AMBIENT) == ideal
    # no internal divisibility
    from laddergb import mono

    for a in mins:
        for b in mins:
            if a != b:
                assert not mono.divides(a, b)
    # every original generator is a multiple of some minimal one
    for g in gens:
        assert ideal.contains_monomial(g)


# ---------------------------------------------------------------------------
# ideal operations


def test_containment_and_membership():
    ideal = MonomialIdeal([(0, 1, 1, 1), (2, 2)], AMBIENT)
    assert ideal.contains_monomial((0, 1, 1, 1, 3, 4))
    assert ideal.contains_monomial((2, 3))
    assert not ideal.contains_monomial((0, 1))
    assert not ideal.contains_monomial(())
    smaller = MonomialIdeal([(0, 2, 1, 1)], AMBIENT)
    assert ideal.contains_ideal(smaller)
    assert not smaller.contains_ideal(ideal)


def test_zero_and_unit():
    assert MonomialIdeal([], AMBIENT).is_zero()
    assert MonomialIdeal([()], AMBIENT).is_unit()
    assert not MonomialIdeal([(0, 1)], AMBIENT).is_zero()


def test_ambient_is_enforced():
    with pytest.raises(PreconditionError):
        MonomialIdeal([(9, 1)], AMBIENT)


def test_colon_examples():
    # (x^2*y, z) : x = (x*y, z)
    ideal = MonomialIdeal([(0, 2, 1, 1), (2, 1)], AMBIENT)
    colon = ideal.colon((0, 1))
    assert set(colon.gens) == {(0, 1, 1, 1), (2, 1)}
    # colon by a variable not involved: unchanged
    assert ideal.colon((4, 1)) == ideal
    assert ideal.is_colon_stable((4, 1))
    assert not ideal.is_colon_stable((0, 1))


@given(ideals(), monomials())
def test_colon_contains_ideal(ideal, f):
    colon = ideal.colon(f)
    assert colon.contains_ideal(ideal)
    # definition check on a few witnesses: g in (I : f) iff f*g in I
    from laddergb import mono

    for g in colon.gens:
        assert ideal.contains_monomial(mono.mul(f, g))


def test_squarefree():
    assert MonomialIdeal([(0, 1, 1, 1)], AMBIENT).is_squarefree()
    assert not MonomialIdeal([(0, 2)], AMBIENT).is_squarefree()
    assert MonomialIdeal([], AMBIENT).is_squarefree()


def test_scaled():
    ideal = MonomialIdeal([(0, 1), (1, 1)], AMBIENT)
    scaled = ideal.scaled((2, 1))
    assert set(scaled.gens) == {(0, 1, 2, 1), (1, 1, 2, 1)}


# ---------------------------------------------------------------------------
# basic double link


def test_basic_double_link_example():
    # A = (y), B = (x, y), f = z: C = (y, x*z) after minimalization
    a = MonomialIdeal([(1, 1)], AMBIENT)
    b = MonomialIdeal([(0, 1), (1, 1)], AMBIENT)
    c = basic_double_link(a, b, (2, 1))
    assert set(c.gens) == {(1, 1), (0, 1, 2, 1)}


def test_basic_double_link_preconditions():
    a = MonomialIdeal([(1, 1)], AMBIENT)
    b = MonomialIdeal([(0, 1), (1, 1)], AMBIENT)
    with pytest.raises(PreconditionError):
        basic_double_link(a, b, ())  # unit multiplier
    with pytest.raises(PreconditionError):
        basic_double_link(a, b, (1, 1))  # A not colon-stable along f
    small = MonomialIdeal([(3, 1)], AMBIENT)
    with pytest.raises(PreconditionError):
        basic_double_link(small, b, (2, 1))  # A not contained in B
    other = MonomialIdeal([(1, 1)], (0, 1, 2))
    with pytest.raises(PreconditionError):
        basic_double_link(other, b, (2, 1))  # different ambient rings


# ---------------------------------------------------------------------------
# Hilbert functions, two routes


def test_hilbert_free_ring():
    ideal = MonomialIdeal([], (0, 1, 2))
    for d in range(6):
        assert ideal.hilbert_function(d) == math.comb(d + 2, 2)
    assert ideal.hilbert_function(-1) == 0


def test_hilbert_hypersurface():
    # one generator of degree 2 in 2 variables: 1, 2, 2, 2, ...
    ideal = MonomialIdeal([(0, 2)], (0, 1))
    assert [ideal.hilbert_function(d) for d in range(5)] == [1, 2, 2, 2, 2]


def test_hilbert_of_unit_and_of_linear():
    assert MonomialIdeal([()], AMBIENT).hilbert_function(0) == 0
    linear = MonomialIdeal([(0, 1)], (0, 1))
    assert [linear.hilbert_function(d) for d in range(4)] == [1, 1, 1, 1]


@given(ideals())
@settings(max_examples=60, deadline=None)
def test_hilbert_pivot_equals_brute(ideal):
    for d in range(5):
        assert ideal.hilbert_function(d) == hilbert_function_brute(ideal, d)


def test_hilbert_additive_along_colon_sequence():
    # H(R/I, d) = H(R/(I:x), d-1) + H(R/(I+x), d) for any variable x
    ideal = MonomialIdeal([(0, 1, 1, 2), (1, 1, 2, 1), (3, 2)], AMBIENT)
    x = (1, 1)
    colon = ideal.colon(x)
    added = ideal.plus([x])
    for d in range(7):
        assert ideal.hilbert_function(d) == colon.hilbert_function(
            d - 1
        ) + added.hilbert_function(d)


def test_brute_force_standalone():
    ideal = MonomialIdeal([(0, 1, 1, 1)], (0, 1))
    # standard monomials: all x^a*y^b with a = 0 or b = 0
    assert [hilbert_function_brute(ideal, d) for d in range(5)] == [1, 2, 2, 2, 2]
