from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beauville.perm import (
    Permutation, compose, conjugate, cycle_data, format_cycles, format_images, inverse, order,
    p_exponent, p_part, parse, parse_cycles, power,
)


def perms(max_degree: int = 12):
    return st.integers(1, max_degree).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(Permutation))


def same_degree_pairs(max_degree: int = 10):
    return st.integers(1, max_degree).flatmap(lambda n: st.tuples(
        st.permutations(list(range(1, n + 1))).map(Permutation),
        st.permutations(list(range(1, n + 1))).map(Permutation)))


def test_left_to_right_composition():
    p = parse_cycles("(1,2)", 3)
    q = parse_cycles("(2,3)", 3)
    assert format_cycles(p * q) == "(1,3,2)"
    assert compose(p, q) == p * q
    # (p*q)(i) = q(p(i))
    for i in range(1, 4):
        assert (p * q)(i) == q(p(i))


def test_identity_law_and_a5_product():
    p = parse("(1,2)(3,4,5)", 6)
    assert p * Permutation.identity(6) == p
    x1, y1 = parse("(1,2)(3,4)", 5), parse("(1,4,2,3,5)", 5)
    z1 = inverse(x1 * y1)
    assert z1.cycle_type == (5,)
    assert z1 == parse("(1,5,4,2,3)", 5)


def test_orders():
    assert order(parse("(1,2,3,4,5)", 5)) == 5
    assert order(parse("(1,2)(3,4,5)", 5)) == 6
    assert order(parse("(1,2,5)(3,6,7,8,9)", 9)) == 15


def test_cycle_data():
    cd = cycle_data(parse("(1,2)(3,4,5,6)", 8))
    assert cd.cycle_type == (4, 2, 1, 1)
    assert cd.parity == 1
    ident = cycle_data(Permutation.identity(4))
    assert ident.cycle_type == (1, 1, 1, 1) and ident.support == frozenset()
    x = parse("(1,2,3,4,5,6,7,8)(9,10)", 10)
    assert x.cycle_type == (8, 2) and x.order == 8 and x.is_even


def test_conjugate_relabels_points():
    g = parse("(1,2,3)", 3)
    h = parse("(1,2)", 3)
    assert conjugate(g, h) == parse("(1,3,2)", 3)
    # conjugating each point's image: g^h maps h(i) to h(g(i))
    for i in range(1, 4):
        assert conjugate(g, h)(h(i)) == h(g(i))


def test_power_negative_and_zero():
    p = parse("(1,2,3,4,5)(6,7)", 7)
    assert power(p, 0).is_identity()
    assert power(p, -1) == inverse(p)
    assert power(p, 12) == p ** 2


def test_p_parts():
    assert p_part(60, 2) == 4 and p_part(60, 5) == 5 and p_part(60, 7) == 1
    assert p_exponent(72, 3) == 2


def test_parse_errors():
    with pytest.raises(ValueError):
        parse("(1,2,2)", 3)
    with pytest.raises(ValueError):
        parse("(1,4)", 3)
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])


@given(perms())
def test_round_trips(p):
    assert parse(format_cycles(p), p.degree) == p
    assert parse(format_images(p)) == p


@given(perms(10))
def test_order_is_least_exponent(p):
    q = p
    e = 1
    while not q.is_identity():
        q = q * p
        e += 1
    assert e == p.order


@given(same_degree_pairs())
def test_parity_is_a_homomorphism(pq):
    p, q = pq
    assert (p * q).parity == p.parity * q.parity


@given(same_degree_pairs())
def test_conjugation_preserves_cycle_type(pq):
    g, h = pq
    assert conjugate(g, h).cycle_type == g.cycle_type
    assert conjugate(g, h) == inverse(h) * g * h


@settings(max_examples=50)
@given(perms(9), st.integers(-30, 30))
def test_power_matches_repeated_product(p, e):
    q = Permutation.identity(p.degree)
    step = p if e >= 0 else inverse(p)
    for _ in range(abs(e)):
        q = q * step
    assert power(p, e) == q


def test_odd_conjugate_of_5_cycle_leaves_its_A5_class():
    from beauville.conjugacy import conjugate_in_An
    c = parse("(1,2,3,4,5)", 5)
    assert not conjugate_in_An(c, conjugate(c, parse("(4,5)", 5)))
    assert conjugate_in_An(c, conjugate(c, parse("(1,2,3)", 5)))


def test_random_compose_associative():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(1, 9)
        a, b, c = (Permutation(rng.sample(range(1, n + 1), n)) for _ in range(3))
        assert (a * b) * c == a * (b * c)
