"""Clutters, covers, shellings, minors, free vertices, sequential CM."""

import random

import pytest

from pathideal.betti import stanley_reisner_complex
from pathideal.caps import CapExceeded
from pathideal.complexes import SimplicialComplex
from pathideal.fields import GF2, QQ
from pathideal.monomials import Monomial, ideal_from_text, iter_bits, minimalize
from pathideal.pathfamily import PathParams, make_path_ideal
from pathideal.topology import (
    Clutter,
    apply_assignment,
    clutter_from_text,
    clutter_of,
    cover_complex,
    find_shelling,
    free_vertex_property,
    has_free_vertex,
    is_path_clutter,
    is_sequentially_cm,
    is_shelling,
    minimal_vertex_covers,
    minors,
    path_minor_free_vertex,
)


def masks_to_sets(masks):
    return [set(iter_bits(m)) for m in masks]


def clutter(n, *edges):
    out = []
    for e in edges:
        mask = 0
        for v in e:
            mask |= 1 << (v - 1)
        out.append(mask)
    return Clutter.from_edges(n, out)


PATH_L4 = clutter(4, [1, 2], [2, 3], [3, 4])
TRIANGLE = clutter(3, [1, 2], [2, 3], [1, 3])
C312 = clutter_of(make_path_ideal(PathParams(3, 1, 2)))


# ---------------------------------------------------------------------------
# construction and covers
# ---------------------------------------------------------------------------


def test_clutter_of_examples():
    assert masks_to_sets(C312.edges) == [{1, 2, 3}, {3, 4, 5}]
    assert masks_to_sets(clutter_of(ideal_from_text("n=4; (x1*x2, x2*x3, x3*x4)")).edges) == [
        {1, 2}, {2, 3}, {3, 4}
    ]
    assert masks_to_sets(clutter_of(ideal_from_text("n=4; (x1*x2*x3*x4)")).edges) == [
        {1, 2, 3, 4}
    ]


def test_clutter_text_roundtrip():
    text = "n=5; {1,2,3},{3,4,5}"
    assert clutter_from_text(text) == C312
    assert str(C312) == text


def test_minimal_vertex_covers_examples():
    got = masks_to_sets(minimal_vertex_covers(PATH_L4))
    assert sorted(map(sorted, got)) == [[1, 3], [2, 3], [2, 4]]
    got = masks_to_sets(minimal_vertex_covers(clutter(2, [1, 2])))
    assert sorted(map(sorted, got)) == [[1], [2]]
    got = masks_to_sets(minimal_vertex_covers(C312))
    assert sorted(map(sorted, got)) == [[1, 4], [1, 5], [2, 4], [2, 5], [3]]


def test_minimal_covers_against_brute_force():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(2, 7)
        edges = [Monomial(rng.randint(1, (1 << n) - 1)) for _ in range(rng.randint(1, 4))]
        c = Clutter.from_edges(n, [e.mask for e in edges])
        covers = [
            a
            for a in range(1 << n)
            if all(a & e for e in c.edges)
        ]
        expected = sorted(
            a for a in covers if not any(b != a and b & a == b for b in covers)
        )
        assert sorted(minimal_vertex_covers(c)) == expected


def test_cover_complex_examples():
    got = cover_complex(PATH_L4)
    assert masks_to_sets(got.facets) == [{1, 3}, {1, 4}, {2, 4}]
    got = cover_complex(clutter(2, [1, 2]))
    assert masks_to_sets(got.facets) == [{1}, {2}]
    got = cover_complex(C312)
    assert sorted(map(sorted, masks_to_sets(got.facets))) == [
        [1, 2, 4, 5], [1, 3, 4], [1, 3, 5], [2, 3, 4], [2, 3, 5]
    ]


def test_cover_complex_equals_sr_complex():
    rng = random.Random(6)
    for _ in range(30):
        n = rng.randint(2, 6)
        ideal = minimalize(
            n, [Monomial(rng.randint(1, (1 << n) - 1)) for _ in range(rng.randint(1, 4))]
        )
        if not ideal.is_proper_nonzero:
            continue
        assert cover_complex(clutter_of(ideal)) == stanley_reisner_complex(ideal)


# ---------------------------------------------------------------------------
# shellings
# ---------------------------------------------------------------------------


def test_find_shelling_examples():
    order = find_shelling(SimplicialComplex.from_faces(4, [0b0101, 0b1001, 0b1010]))
    assert masks_to_sets(order) == [{1, 3}, {1, 4}, {2, 4}]
    points = SimplicialComplex.from_faces(3, [0b001, 0b010, 0b100])
    assert find_shelling(points) is not None
    disjoint = SimplicialComplex.from_faces(4, [0b0011, 0b1100])
    assert find_shelling(disjoint) is None


def test_returned_orders_pass_definitional_recheck():
    rng = random.Random(8)
    found = 0
    for _ in range(60):
        n = rng.randint(2, 6)
        facets = [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, 5))]
        cx = SimplicialComplex.from_faces(n, facets)
        order = find_shelling(cx)
        if order is not None:
            assert is_shelling(order)
            assert sorted(order) == sorted(cx.facets)
            found += 1
    assert found > 10


def test_is_shelling_rejects_wrong_order():
    assert not is_shelling([0b0011, 0b1100])


def test_shelling_cap():
    cx = SimplicialComplex.from_faces(13, [1 << i for i in range(13)])
    with pytest.raises(CapExceeded):
        find_shelling(cx, cap=12)


# ---------------------------------------------------------------------------
# minors, free vertices
# ---------------------------------------------------------------------------


def test_apply_assignment_examples():
    got = apply_assignment(C312, zeros=0, ones=0b00100)
    assert masks_to_sets(got.edges) == [{1, 2}, {4, 5}]
    got = apply_assignment(C312, zeros=0b00001, ones=0)
    assert masks_to_sets(got.edges) == [{3, 4, 5}]
    got = apply_assignment(C312, zeros=0, ones=0b00011)
    assert masks_to_sets(got.edges) == [{3}]
    assert apply_assignment(C312, zeros=0b00100, ones=0b00011) is None  # unit
    assert apply_assignment(clutter(2, [1, 2]), zeros=0b01, ones=0) is None  # zero


def test_minors_include_identity_and_dedupe():
    seen = list(minors(C312))
    assert seen[0][1] == C312
    edge_families = [m.edges for _, m in seen]
    assert len(edge_families) == len(set(edge_families))


def test_has_free_vertex_examples():
    assert has_free_vertex(C312) == 1
    assert has_free_vertex(TRIANGLE) is None
    assert has_free_vertex(clutter(4, [2, 3])) == 2


def test_free_vertex_property_examples():
    ok, counterexample = free_vertex_property(C312)
    assert ok and counterexample is None
    ok, counterexample = free_vertex_property(TRIANGLE)
    assert not ok and counterexample == TRIANGLE
    ok, _ = free_vertex_property(PATH_L4)
    assert ok


def test_free_vertex_property_closed_under_minors():
    for base in [C312, PATH_L4, clutter(4, [1, 2], [3, 4])]:
        ok, _ = free_vertex_property(base)
        if ok:
            for _, minor in minors(base):
                assert free_vertex_property(minor)[0]


def test_path_minor_witness_matches_generic_enumeration():
    import itertools

    for params in [PathParams(2, 1, 3), PathParams(3, 1, 2), PathParams(3, 2, 3),
                   PathParams(4, 2, 2)]:
        c = clutter_of(make_path_ideal(params))
        support = list(iter_bits(c.support))
        for choice in itertools.product((None, 0, 1), repeat=len(support)):
            zeros = ones = 0
            for v, ch in zip(support, choice):
                if ch == 0:
                    zeros |= 1 << (v - 1)
                elif ch == 1:
                    ones |= 1 << (v - 1)
            minor = apply_assignment(c, zeros, ones)
            witness = path_minor_free_vertex(params, zeros, ones)
            if minor is None:
                assert witness is None
            else:
                assert witness is not None
                count = sum(1 for e in minor.edges if e & (1 << (witness - 1)))
                assert count == 1, (str(params), zeros, ones, witness)


def test_is_path_clutter_recognition():
    assert is_path_clutter(C312) == PathParams(3, 1, 2)
    assert is_path_clutter(PATH_L4) == PathParams(2, 1, 3)
    assert is_path_clutter(TRIANGLE) is None
    assert is_path_clutter(clutter(4, [1, 2], [3, 4])) is None


# ---------------------------------------------------------------------------
# sequential CM
# ---------------------------------------------------------------------------


def test_seq_cm_examples():
    assert is_sequentially_cm(cover_complex(C312), GF2)
    points = SimplicialComplex.from_faces(3, [0b001, 0b010, 0b100])
    assert is_sequentially_cm(points, GF2)
    disjoint = SimplicialComplex.from_faces(4, [0b0011, 0b1100])
    assert not is_sequentially_cm(disjoint, GF2)


def test_seq_cm_cap():
    big = SimplicialComplex.from_faces(11, [(1 << 11) - 1])
    with pytest.raises(CapExceeded):
        is_sequentially_cm(big, GF2, cap=10)


def test_implication_chain_on_random_clutters():
    # free vertex property => a shelling exists => sequentially CM
    rng = random.Random(12)
    checked_fvp = 0
    for _ in range(60):
        n = rng.randint(2, 6)
        edges = [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, 4))]
        c = Clutter.from_edges(n, edges)
        cx = cover_complex(c)
        order = find_shelling(cx)
        if free_vertex_property(c)[0]:
            checked_fvp += 1
            assert order is not None, str(c)
        if order is not None:
            assert is_sequentially_cm(cx, GF2), str(c)
            assert is_sequentially_cm(cx, QQ), str(c)
    assert checked_fvp > 10


def test_seq_cm_consistent_with_shellability_on_family():
    for params in [PathParams(2, 1, 3), PathParams(3, 1, 2), PathParams(3, 2, 4)]:
        cx = cover_complex(clutter_of(make_path_ideal(params)))
        assert find_shelling(cx) is not None
        assert is_sequentially_cm(cx, GF2)
