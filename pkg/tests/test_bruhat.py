import itertools
import random

import pytest

from weylkit.bruhat import (build_order, classify, enumerate_balanced,
                            ideal_from_elements, ideal_from_json_dict,
                            ideal_to_json_dict, is_downward_closed, is_small,
                            leq, minimal_generators, orthogonal,
                            principal_ideal, subword_ideal_mask,
                            verify_short_small)
from weylkit.cartan import build_root_system, parse_type
from weylkit.errors import BudgetExceededError, InvalidInputError
from weylkit.parabolic import build_parabolic, is_right_invariant
from weylkit.weyl import generate

rng = random.Random(1823)


def make_order(spec, dense_limit=None):
    g = generate(build_root_system(parse_type(spec)))
    if dense_limit is None:
        return g, build_order(g)
    return g, build_order(g, dense_limit=dense_limit)


def test_covers_drop_length_by_one():
    for spec in ["A2", "B2", "G2", "A3", "B3"]:
        g, o = make_order(spec)
        assert sorted(o.upper[0]) == sorted(g.generators)
        for y in range(g.order):
            for x in o.covers[y]:
                assert g.length[x] == g.length[y] - 1
        # w0 dominates everything
        assert o.down[g.w0] == o.full_mask


def test_leq_is_a_partial_order_graded_by_length():
    g, o = make_order("A3")
    for x in range(g.order):
        assert leq(o, x, x)
        assert leq(o, 0, x)
    for _ in range(500):
        x, y = rng.randrange(g.order), rng.randrange(g.order)
        if leq(o, x, y) and leq(o, y, x):
            assert x == y
        if leq(o, x, y) and x != y:
            assert g.length[x] < g.length[y]
        z = rng.randrange(g.order)
        if leq(o, x, y) and leq(o, y, z):
            assert leq(o, x, z)


def test_down_masks_match_subword_criterion():
    for spec in ["A1", "A2", "A3", "B2", "B3", "G2", "A1xA2"]:
        g, o = make_order(spec)
        for y in range(g.order):
            assert o.down[y] == subword_ideal_mask(o, y)


def test_lifting_recursion_matches_masks():
    for spec in ["A3", "B3"]:
        g, o = make_order(spec)
        g2, o2 = make_order(spec, dense_limit=0)
        assert o2.down is None
        for _ in range(300):
            x, y = rng.randrange(g.order), rng.randrange(g.order)
            assert leq(o2, x, y) == bool(o.down[y] >> x & 1)


def test_reflection_inventory():
    for spec in ["A3", "B3", "G2"]:
        g, o = make_order(spec)
        assert len(o.reflections) == g.n_positive
        for t in o.reflections:
            assert g.multiply(t, t) == 0 and t != 0


def test_principal_ideal_and_generators():
    g, o = make_order("B2")
    for x in range(g.order):
        i = principal_ideal(o, x)
        assert is_downward_closed(o, i.mask)
        assert max(i.members(), key=lambda z: (g.length[z], z)) == \
            max(i.members(), key=lambda z: g.length[z])
        assert minimal_generators(o, i) == [x]


def test_ideal_from_elements_closes_downward():
    g, o = make_order("A3")
    for _ in range(50):
        seeds = [rng.randrange(g.order) for _ in range(3)]
        i = ideal_from_elements(o, seeds)
        assert is_downward_closed(o, i.mask)
        for s in seeds:
            assert s in i
        gens = minimal_generators(o, i)
        assert ideal_from_elements(o, gens).mask == i.mask


def test_orthogonal_involution_swaps_slim_fat():
    for spec in ["A2", "B2", "A3"]:
        g, o = make_order(spec)
        for x in range(g.order):
            i = principal_ideal(o, x)
            p = orthogonal(o, i)
            assert i.size + p.size == g.order
            assert orthogonal(o, p).mask == i.mask
            ci, cp = classify(o, i), classify(o, p)
            assert ci.slim == cp.fat and ci.fat == cp.slim


def test_small_elements_sit_in_every_fat_ideal():
    g, o = make_order("B2")
    small = [x for x in range(g.order) if is_small(o, x)]
    for x in range(g.order):
        i = principal_ideal(o, x)
        if classify(o, i).fat:
            for s in small:
                assert s in i


def brute_balanced(o):
    """All down-closed transversals of the {x, w0 x} pairs."""
    g = o.g
    pairs = []
    seen = set()
    for x in range(g.order):
        if x not in seen:
            px = g.w0_left(x)
            seen.add(x)
            seen.add(px)
            pairs.append((x, px))
    out = []
    for choice in itertools.product(range(2), repeat=len(pairs)):
        m = 0
        for (a, b), c in zip(pairs, choice):
            m |= 1 << (a if c == 0 else b)
        if is_downward_closed(o, m):
            out.append(m)
    return sorted(out)


def test_balanced_enumeration_matches_brute_force():
    for spec, count in [("A1", 1), ("A1xA1", 2), ("A2", 1), ("B2", 2),
                        ("A3", 10)]:
        g, o = make_order(spec)
        got = enumerate_balanced(o)
        assert sorted(i.mask for i in got) == brute_balanced(o)
        assert len(got) == count
        for i in got:
            c = classify(o, i)
            assert c.balanced and c.slim and c.fat
            assert 2 * i.size == g.order


def test_balanced_enumeration_is_deterministic():
    g, o = make_order("B3")
    first = [ideal_to_json_dict(o, i) for i in enumerate_balanced(o)]
    second = [ideal_to_json_dict(o, i) for i in enumerate_balanced(o)]
    assert first == second
    assert len(first) == 29


def test_right_invariant_enumeration_filters():
    g, o = make_order("A3")
    every = enumerate_balanced(o)
    for theta in [(0,), (1,), (2,), (0, 2)]:
        p = build_parabolic(g, theta)
        got = enumerate_balanced(o, invariance=p)
        want = [i.mask for i in every if is_right_invariant(i, p)]
        assert sorted(i.mask for i in got) == sorted(want)


def test_balanced_budget():
    g, o = make_order("B3")
    with pytest.raises(BudgetExceededError):
        enumerate_balanced(o, max_order=10)


def test_a2_unique_balanced_ideal():
    g, o = make_order("A2")
    (ideal,) = enumerate_balanced(o)
    members = {g.reduced_word(x) for x in ideal.members()}
    assert members == {(), (0,), (1,)}
    gens = minimal_generators(o, ideal)
    assert {g.reduced_word(x) for x in gens} == {(0,), (1,)}


def test_ideal_json_round_trip():
    g, o = make_order("B2")
    for x in range(g.order):
        i = principal_ideal(o, x)
        d = ideal_to_json_dict(o, i)
        assert ideal_from_json_dict(o, d).mask == i.mask
    g3, o3 = make_order("A3")
    with pytest.raises(InvalidInputError):
        ideal_from_json_dict(o3, ideal_to_json_dict(o, principal_ideal(o, 3)))


def test_short_small_witnesses():
    expected = {
        ("A1", 1): (False, {(0,)}),
        ("A2", 1): (True, set()),
        ("A2", 2): (False, {(0, 1), (1, 0)}),
        ("A3", 2): (False, {(1, 0), (1, 2)}),
        ("B2", 2): (False, {(0, 1), (1, 0)}),
        ("A4", 2): (True, set()),
        ("B3", 2): (True, set()),
        ("G2", 2): (True, set()),
    }
    for (spec, max_len), (want_all, want_wit) in expected.items():
        rep = verify_short_small(parse_type(spec), max_len)
        assert rep.all_small == want_all
        assert rep.expected_all_small == want_all
        assert set(rep.witnesses) == want_wit


def test_short_small_prediction_matches_scan():
    for spec in ["A1", "A2", "A3", "B2", "B3", "C3", "D3", "G2",
                 "A1xA1", "A1xB2", "A2xA1"]:
        for max_len in (1, 2):
            rep = verify_short_small(parse_type(spec), max_len)
            assert rep.all_small == rep.expected_all_small


def test_short_small_rejects_bad_length():
    with pytest.raises(InvalidInputError):
        verify_short_small(parse_type("A2"), 3)
