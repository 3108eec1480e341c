"""Monomial and ideal algebra: spec examples, brute-force oracles, properties."""

import random

import pytest

from pathideal.monomials import (
    Monomial,
    MonomialIdeal,
    contains,
    ideal_from_text,
    ideal_intersect,
    ideal_product_disjoint,
    ideal_sum,
    ideal_to_text,
    minimalize,
    monomial_from_text,
    monomial_to_text,
)


def mono(*indices):
    return Monomial.from_vars(indices)


def ideal(n, *var_lists):
    return minimalize(n, [mono(*vs) for vs in var_lists])


def brute_minimal_members(n, member):
    """Independent oracle: minimal squarefree members of a membership predicate."""
    members = [w for w in range(1, 1 << n) if member(w)]
    minimal = []
    for w in members:
        if not any(v != w and v & w == v for v in members):
            minimal.append(w)
    return sorted(minimal)


# ---------------------------------------------------------------------------
# minimalize
# ---------------------------------------------------------------------------


def test_minimalize_absorbs_multiples():
    assert ideal(3, [1, 2], [1, 2, 3]) == ideal(3, [1, 2])


def test_minimalize_keeps_already_minimal():
    assert ideal(3, [1, 2, 3]).gens == (mono(1, 2, 3),)


def test_minimalize_drops_divisible_third():
    got = ideal(3, [1, 2], [2, 3], [1, 2, 3])
    assert got.gens == (mono(1, 2), mono(2, 3))


def test_minimalize_idempotent_and_shuffle_insensitive():
    rng = random.Random(20260810)
    for _ in range(200):
        n = rng.randint(1, 8)
        raw = [Monomial(rng.randint(0, (1 << n) - 1)) for _ in range(rng.randint(0, 6))]
        base = minimalize(n, raw)
        again = minimalize(n, base.gens)
        shuffled = raw[:]
        rng.shuffle(shuffled)
        assert again == base
        assert minimalize(n, shuffled) == base


def test_minimalize_rejects_oversized_generator():
    with pytest.raises(ValueError):
        minimalize(3, [mono(4)])


def test_unit_monomial_absorbs_everything():
    got = minimalize(3, [mono(1, 2), Monomial(0)])
    assert got.is_unit


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------


def test_contains_examples():
    assert contains(ideal(3, [1, 2]), mono(1, 2, 3))
    assert not contains(ideal(3, [1, 2]), mono(1, 3))
    assert not contains(ideal(5, [1, 2, 3], [3, 4, 5]), mono(3, 4))


def test_contains_rejects_oversized_monomial():
    with pytest.raises(ValueError):
        contains(ideal(3, [1, 2]), mono(5))


# ---------------------------------------------------------------------------
# sum / intersection / product
# ---------------------------------------------------------------------------


def test_sum_examples():
    assert ideal_sum(ideal(3, [1, 2]), ideal(3, [2, 3])) == ideal(3, [1, 2], [2, 3])
    assert ideal_sum(ideal(3, [1, 2]), ideal(3, [1, 2, 3])) == ideal(3, [1, 2])
    got = ideal_sum(ideal(5, [1, 2, 3]), ideal(5, [3, 4, 5]))
    assert got == ideal(5, [1, 2, 3], [3, 4, 5])


def test_intersect_examples():
    assert ideal_intersect(ideal(3, [1, 2]), ideal(3, [2, 3])) == ideal(3, [1, 2, 3])
    got = ideal_intersect(ideal(5, [1, 2, 3]), ideal(5, [3, 4, 5]))
    assert got == ideal(5, [1, 2, 3, 4, 5])


def test_intersect_two_by_one_against_brute_force():
    # expected value derived by brute force over divisibility in 4 variables
    a = ideal(4, [1, 2], [3, 4])
    b = ideal(4, [2, 3])
    expected_masks = brute_minimal_members(
        4, lambda w: contains(a, Monomial(w)) and contains(b, Monomial(w))
    )
    got = ideal_intersect(a, b)
    assert list(got.gen_masks()) == sorted(expected_masks)
    assert got == ideal(4, [1, 2, 3], [2, 3, 4])


def test_product_disjoint_examples():
    got = ideal_product_disjoint(ideal(5, [3, 4, 5]), ideal(5, [1, 2]))
    assert got == ideal(5, [1, 2, 3, 4, 5])
    got = ideal_product_disjoint(ideal(3, [1]), ideal(3, [2], [3]))
    assert got == ideal(3, [1, 2], [1, 3])


def test_product_rejects_overlapping_support():
    with pytest.raises(ValueError, match="overlap"):
        ideal_product_disjoint(ideal(3, [1, 2]), ideal(3, [2, 3]))


def test_ambient_mismatch_rejected():
    with pytest.raises(ValueError, match="mismatch"):
        ideal_sum(ideal(3, [1, 2]), ideal(4, [1, 2]))


# ---------------------------------------------------------------------------
# membership algebra and algebraic laws on random data
# ---------------------------------------------------------------------------


def random_ideal(rng, n, max_gens=4):
    gens = [Monomial(rng.randint(1, (1 << n) - 1)) for _ in range(rng.randint(1, max_gens))]
    return minimalize(n, gens)


def test_membership_algebra_random():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(2, 7)
        a, b = random_ideal(rng, n), random_ideal(rng, n)
        inter = ideal_intersect(a, b)
        total = ideal_sum(a, b)
        for _ in range(20):
            w = Monomial(rng.randint(0, (1 << n) - 1))
            assert contains(inter, w) == (contains(a, w) and contains(b, w))
            assert contains(total, w) == (contains(a, w) or contains(b, w))


def test_sum_intersect_commutative_associative():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(2, 6)
        a, b, c = (random_ideal(rng, n) for _ in range(3))
        assert ideal_sum(a, b) == ideal_sum(b, a)
        assert ideal_intersect(a, b) == ideal_intersect(b, a)
        assert ideal_sum(ideal_sum(a, b), c) == ideal_sum(a, ideal_sum(b, c))
        assert ideal_intersect(ideal_intersect(a, b), c) == ideal_intersect(
            a, ideal_intersect(b, c)
        )


def test_product_membership_random():
    rng = random.Random(13)
    for _ in range(60):
        left_n, right_lo = 3, 4
        a = minimalize(6, [Monomial(rng.randint(1, 7)) for _ in range(2)])
        b = minimalize(6, [Monomial(rng.randint(1, 7) << right_lo - 1) for _ in range(2)])
        prod = ideal_product_disjoint(a, b)
        for _ in range(20):
            w = Monomial(rng.randint(0, 63))
            expected = any(
                g.lcm(h).divides(w) for g in a.gens for h in b.gens
            )
            assert contains(prod, w) == expected


# ---------------------------------------------------------------------------
# text forms
# ---------------------------------------------------------------------------


def test_monomial_text_roundtrip():
    m = mono(1, 2, 3)
    assert monomial_to_text(m) == "x1*x2*x3"
    assert monomial_to_text(m, compact=True) == "{1,2,3}"
    assert monomial_from_text("x1*x2*x3") == m
    assert monomial_from_text("{1,2,3}") == m
    assert monomial_from_text("1") == Monomial(0)


def test_ideal_text_roundtrip():
    i = ideal(5, [1, 2, 3], [3, 4, 5])
    text = ideal_to_text(i)
    assert text == "n=5; (x1*x2*x3, x3*x4*x5)"
    assert ideal_from_text(text) == i
    assert ideal_from_text("n=5; ({1,2,3}, {3,4,5})") == i
    assert ideal_from_text("n=3; (0)").is_zero


def test_canonical_order_is_lex_on_index_lists():
    i = ideal(4, [1, 3], [1, 2, 4], [2, 3])
    assert [g.vars for g in i.gens] == [(1, 2, 4), (1, 3), (2, 3)]


def test_strict_constructor_rejects_non_canonical():
    with pytest.raises(ValueError):
        MonomialIdeal(3, (mono(2, 3), mono(1, 2)))
    with pytest.raises(ValueError):
        MonomialIdeal(3, (mono(1), mono(1, 2)))
