from __future__ import annotations

import random
from math import factorial, gcd

import pytest

from beauville.groups import GroupHandle, StabilizerChain, closure, is_alternating
from beauville.perm import Permutation, parse


def random_perm(rng, n):
    return Permutation(rng.sample(range(1, n + 1), n))


def test_orbits_and_transitivity():
    H = GroupHandle([parse("(1,2)(3,4)", 4)])
    assert sorted(map(sorted, H.orbits)) == [[1, 2], [3, 4]]
    assert not H.is_transitive
    assert GroupHandle([parse("(1,2,3,4,5,6,7)", 7)]).is_transitive
    x2, y2 = parse("(1,2,3,4)(5,6)", 6), parse("(1,3)(2,5,6,4)", 6)
    assert GroupHandle([x2, y2]).is_transitive


def test_block_systems_of_a_6_cycle():
    H = GroupHandle([parse("(1,2,3,4,5,6)", 6)])
    systems = {tuple(tuple(sorted(b)) for b in s) for s in H.block_systems}
    assert systems == {((1, 4), (2, 5), (3, 6)), ((1, 3, 5), (2, 4, 6))}
    assert not H.is_primitive


def test_block_systems_need_transitivity():
    with pytest.raises(ValueError):
        GroupHandle([parse("(1,2)", 4)]).block_systems


def test_small_orders():
    assert GroupHandle([parse("(1,2,3,4,5)", 5), parse("(3,4,5)", 5)]).order == 60
    for n in range(2, 10):
        gens = [parse("(1,2)", n), Permutation.from_cycles([range(1, n + 1)], n)]
        assert GroupHandle(gens).order == factorial(n)
    x, y = parse("(1,2,3)", 7), parse("(3,4,5,6,7)", 7)
    assert GroupHandle([x, y]).order == len(closure([x.img, y.img], 7)) == 2520


def test_order_matches_closure_on_random_sets():
    rng = random.Random(20240611)
    checked = 0
    while checked < 200:
        n = rng.randint(2, 10)
        gens = [random_perm(rng, n) for _ in range(rng.randint(1, 2))]
        # keep closures small enough to enumerate
        if rng.random() < 0.7:
            gens = [g ** (g.order // max(1, min(g.order, rng.choice([1, 2, 3])))) for g in gens]
        el = closure([g.img for g in gens], n, limit=20000)
        if len(el) >= 20000:
            continue
        assert StabilizerChain([g.img for g in gens], n).order == len(el)
        checked += 1


def test_membership():
    H = GroupHandle([parse("(1,2,3,4,5)", 5), parse("(1,2,3)", 5)])
    assert parse("(1,2)(3,4)", 5) in H
    assert parse("(1,2)", 5) not in H


def test_jordan_coprime_cycles_fire_on_degree_9():
    h = parse("(1,2,3,4)(5,6,7,8,9)", 9)
    H = GroupHandle([h, parse("(1,5,2)", 9)])
    crits = {c.criterion for c in H.jordan_certificates()}
    assert "two-coprime-cycles" in crits


def test_jordan_double_transposition_on_primitive_degree_9():
    H = GroupHandle([parse("(1,2)(3,4)", 9), Permutation.from_cycles([range(1, 10)], 9)])
    assert H.is_primitive
    crits = {c.criterion for c in H.jordan_certificates()}
    assert "double-transposition" in crits


def test_no_certificate_when_intransitive():
    assert GroupHandle([parse("(1,2,3,4)", 8)]).jordan_certificates() == []


def test_is_alternating_examples():
    assert is_alternating([parse("(1,2)(3,4)", 5), parse("(1,4,2,3,5)", 5)], 5)
    assert not is_alternating([parse("(1,2,3)", 5)], 5)
    v = is_alternating([parse("(1,2)", 5), parse("(1,2,3,4,5)", 5)], 5)
    assert not v and v.tag == "odd-generator"
    x = Permutation.from_cycles([range(1, 10)], 13)
    y = parse("(1,10)(2,11)(3,12)(4,13)", 13)
    assert is_alternating([x, y], 13)


def test_certificates_are_sound():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(5, 8)
        gens = [random_perm(rng, n) for _ in range(2)]
        gens = [g if g.is_even else g * parse("(1,2)", n) for g in gens]
        H = GroupHandle(gens)
        certs = H.jordan_certificates() if H.is_transitive else []
        if certs:
            assert H.order == factorial(n) // 2
        fast = is_alternating(gens, n)
        slow = is_alternating(gens, n, use_fast_path=False)
        assert fast.value == slow.value


def test_coprime_long_cycle_implies_primitive():
    rng = random.Random(3)
    hits = 0
    for _ in range(400):
        n = rng.randint(5, 12)
        m = rng.randint(n // 2 + 1, n - 1)
        if gcd(m, n) != 1:
            continue
        c = Permutation.from_cycles([rng.sample(range(1, n + 1), m)], n)
        H = GroupHandle([c, random_perm(rng, n)])
        if H.is_transitive:
            hits += 1
            assert H.is_primitive
    assert hits > 50


def test_primitive_with_short_cycle_contains_An():
    rng = random.Random(5)
    hits = 0
    for _ in range(300):
        n = rng.randint(5, 10)
        m = rng.randint(2, n - 3)
        c = Permutation.from_cycles([rng.sample(range(1, n + 1), m)], n)
        H = GroupHandle([c, random_perm(rng, n)])
        if H.is_primitive:
            hits += 1
            assert H.order >= factorial(n) // 2
    assert hits > 50
