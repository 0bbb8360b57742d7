import itertools

import pytest

from weylkit.bruhat import build_order, principal_ideal
from weylkit.cartan import build_root_system, parse_type
from weylkit.errors import InvalidInputError
from weylkit.parabolic import (build_parabolic, double_coset_min_rep,
                               is_left_invariant, is_right_invariant,
                               quotient_ideal)
from weylkit.weyl import generate

TYPES = ["A2", "B2", "A3"]


def grp(spec):
    return generate(build_root_system(parse_type(spec)))


def all_thetas(rank):
    for r in range(rank + 1):
        yield from itertools.combinations(range(rank), r)


def test_subgroup_and_cosets_exhaustive():
    for spec in TYPES:
        g = grp(spec)
        for theta in all_thetas(g.rank):
            p = build_parabolic(g, theta)
            # subgroup is generated by theta and closed
            for x in p.subgroup:
                for i in theta:
                    assert p.subgroup_mask >> g.rmult[x][i] & 1
            assert p.n_cosets * p.order == g.order
            # each element factors as rep * subgroup element, lengths add
            for x in range(g.order):
                rep = p.coset_of[x]
                u = g.multiply(g.inverse[rep], x)
                assert p.subgroup_mask >> u & 1
                assert g.length[x] == g.length[rep] + g.length[u]
                # rep is the unique length minimum of its coset
                coset = [g.multiply(rep, v) for v in p.subgroup]
                best = min(coset, key=lambda z: g.length[z])
                assert g.length[best] == g.length[rep]
                assert sum(1 for z in coset
                           if g.length[z] == g.length[rep]) == 1


def test_min_reps_have_no_theta_descent():
    g = grp("A3")
    for theta in all_thetas(g.rank):
        p = build_parabolic(g, theta)
        for rep in p.min_reps:
            assert not any(i in g.right_descents(rep) for i in theta)
        # sorted by (length, id) and graded: counts form the quotient
        lengths = [g.length[r] for r in p.min_reps]
        assert lengths == sorted(lengths)
        assert p.max_quotient_length == lengths[-1]
        hist = [0] * (p.max_quotient_length + 1)
        for l in lengths:
            hist[l] += 1
        assert hist == hist[::-1]  # quotient Poincare is palindromic


def test_trivial_and_full_parabolic():
    g = grp("B2")
    p0 = build_parabolic(g, ())
    assert p0.order == 1 and p0.n_cosets == g.order
    pfull = build_parabolic(g, tuple(range(g.rank)))
    assert pfull.order == g.order and pfull.n_cosets == 1
    assert pfull.longest_subgroup_element == g.w0


def test_build_parabolic_validates_input():
    g = grp("A2")
    with pytest.raises(InvalidInputError):
        build_parabolic(g, (5,))
    with pytest.raises(InvalidInputError):
        build_parabolic(g, (-1,))


def test_quotient_lengths():
    g = grp("A3")
    p = build_parabolic(g, (0, 2))
    for x in range(g.order):
        assert p.quotient_length(x) == g.length[p.coset_of[x]]


def test_invariance_predicates():
    for spec in TYPES:
        g = grp(spec)
        o = build_order(g)
        for theta in all_thetas(g.rank):
            p = build_parabolic(g, theta)
            for x in range(g.order):
                ideal = principal_ideal(o, x)
                want_right = all(
                    (ideal.mask >> g.rmult[y][i] & 1)
                    for y in ideal.members() for i in theta)
                assert is_right_invariant(ideal, p) == want_right
                want_left = all(
                    (ideal.mask >> g.left_mult_gen(i, y) & 1)
                    for y in ideal.members() for i in theta)
                assert is_left_invariant(ideal, p) == want_left


def test_quotient_ideal_requires_invariance():
    g = grp("A2")
    o = build_order(g)
    p = build_parabolic(g, (0,))
    ideal = principal_ideal(o, g.generators[1])  # {e, s2}: not invariant
    with pytest.raises(InvalidInputError):
        quotient_ideal(ideal, p)
    good = principal_ideal(o, g.w0)
    pairs = quotient_ideal(good, p)
    assert len(pairs) == p.n_cosets
    assert sorted(l for _, l in pairs) == [0, 1, 2]


def test_double_coset_min_rep_exhaustive():
    for spec in TYPES:
        g = grp(spec)
        parabolics = [build_parabolic(g, th) for th in all_thetas(g.rank)]
        for p in parabolics:
            for q in parabolics:
                for x in range(g.order):
                    rep = double_coset_min_rep(g, p, q, x)
                    coset = {g.multiply(a, g.multiply(x, b))
                             for a in p.subgroup for b in q.subgroup}
                    best = min(g.length[z] for z in coset)
                    assert rep in coset
                    assert g.length[rep] == best


def test_double_coset_a2_examples():
    g = grp("A2")
    p1 = build_parabolic(g, (0,))
    p2 = build_parabolic(g, (1,))
    # <s1> w0 <s2> = {w0, s2*s1}: minimum has length 2
    rep = double_coset_min_rep(g, p1, p2, g.w0)
    assert g.length[rep] == 2
    # <s1> s1 <s1> = {e, s1}: minimum is the identity
    rep = double_coset_min_rep(g, p1, p1, g.generators[0])
    assert rep == 0
