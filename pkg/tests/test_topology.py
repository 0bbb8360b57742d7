import itertools
import random

import pytest

from weylkit.bruhat import (build_order, enumerate_balanced,
                            ideal_from_elements, orthogonal)
from weylkit.cartan import build_root_system, parse_type
from weylkit.errors import InvalidInputError
from weylkit.families import build_symmetric, lower_half_ideal
from weylkit.parabolic import build_parabolic, is_right_invariant
from weylkit.topology import (GradedRanks, euler_omega, flag_poincare,
                              hausdorff_bound, homotopy_distinction,
                              incidence_betti, omega_betti,
                              omega2n_closed_form, quotient_homology,
                              splitting_check, thickening_ranks)
from weylkit.weyl import generate

rng = random.Random(90125)


def make_order(spec):
    g = generate(build_root_system(parse_type(spec)))
    return g, build_order(g)


def test_graded_ranks_basics():
    r = GradedRanks.from_even((1, 4, 1))
    assert r.ranks == (1, 0, 4, 0, 1)
    assert r.even() == (1, 4, 1)
    assert r.total == 6
    assert r.euler == 6
    assert r.get(2) == 4 and r.get(99) == 0
    with pytest.raises(InvalidInputError):
        GradedRanks((1, -1))


def test_a2_lower_half_chain():
    g, o = make_order("A2")
    ideal = lower_half_ideal(o)
    p = build_parabolic(g, ())
    assert thickening_ranks(ideal, p).even() == (1, 2)
    omega = omega_betti(o, ideal, p)
    assert omega.even() == (1, 4, 1)
    assert euler_omega(o, ideal, p) == 6
    quot = quotient_homology(omega, 2)
    assert quot.ranks == (1, 4, 5, 16, 5, 4, 1)
    assert quot.euler == -2 * 6


def test_omega_betti_symmetric_for_balanced():
    for spec in ["A2", "B2", "A3", "B3"]:
        g, o = make_order(spec)
        p = build_parabolic(g, ())
        for ideal in enumerate_balanced(o):
            omega = omega_betti(o, ideal, p)
            assert omega.ranks == omega.ranks[::-1]
            assert euler_omega(o, ideal, p) == g.order
            for genus in (2, 3):
                quot = quotient_homology(omega, genus)
                assert quot.euler == (2 - 2 * genus) * g.order


def test_omega_betti_requires_slim():
    g, o = make_order("A2")
    p = build_parabolic(g, ())
    with pytest.raises(InvalidInputError):
        omega_betti(o, ideal_from_elements(o, [g.w0]), p)


def test_euler_omega_requires_balanced():
    g, o = make_order("A2")
    p = build_parabolic(g, ())
    slim_not_balanced = ideal_from_elements(o, [0])
    with pytest.raises(InvalidInputError):
        euler_omega(o, slim_not_balanced, p)


def test_splitting_exhaustive_small_types():
    # every downward-closed subset of A2 and B2, every compatible domain
    from weylkit.bruhat import is_downward_closed, make_ideal
    for spec in ["A2", "B2"]:
        g, o = make_order(spec)
        parabolics = [build_parabolic(g, theta)
                      for r in range(g.rank + 1)
                      for theta in itertools.combinations(range(g.rank), r)]
        count = 0
        for mask in range(1 << g.order):
            if not is_downward_closed(o, mask):
                continue
            ideal = make_ideal(o, mask)
            count += 1
            for p in parabolics:
                if is_right_invariant(ideal, p):
                    assert splitting_check(o, ideal, p)
        assert count > g.order  # the ideal lattice is non-trivial


def test_splitting_random_ideals():
    for n in (4, 5):
        g, o = make_order(f"A{n - 1}")
        p = build_parabolic(g, ())
        for _ in range(300):
            seeds = [rng.randrange(g.order)
                     for _ in range(rng.randrange(1, 4))]
            ideal = ideal_from_elements(o, seeds)
            assert splitting_check(o, ideal, p)


def test_quotient_homology_validates_genus():
    omega = GradedRanks.from_even((1, 4, 1))
    with pytest.raises(InvalidInputError):
        quotient_homology(omega, 1)


def test_hausdorff_bound_a2():
    g, o = make_order("A2")
    ideal = lower_half_ideal(o)
    p = build_parabolic(g, ())
    rep = hausdorff_bound(o, ideal, p, limit_curve_dim=1.0)
    assert rep.bound == 3.0
    assert rep.n == 3
    assert rep.domain_nonempty  # 3 < 6
    assert rep.max_quotient_length == 1
    with pytest.raises(InvalidInputError):
        hausdorff_bound(o, ideal, p, limit_curve_dim=2.5)


def test_flag_poincare_matches_length_histogram():
    for m in range(2, 8):
        g, _ = build_symmetric(m)
        hist = [0] * (g.n_positive + 1)
        for l in g.length:
            hist[l] += 1
        assert flag_poincare(m).even() == tuple(hist)
        assert flag_poincare(m).total == g.order


def test_omega2n_closed_form_matches_direct():
    for n in (1, 2, 3):
        g, o = make_order(f"A{2 * n - 1}")
        from weylkit.families import principal_2n_ideal
        ideal = principal_2n_ideal(o)
        p = build_parabolic(g, ())
        assert omega2n_closed_form(n).ranks == \
            omega_betti(o, ideal, p).ranks
    assert omega2n_closed_form(2).even() == (1, 4, 7, 7, 4, 1)
    assert omega2n_closed_form(2).total == 24


def test_incidence_betti_closed_form():
    from weylkit.families import incidence_ideal, incidence_subgroup_indices
    for n in range(3, 6):
        g, o = make_order(f"A{n - 1}")
        ideal = incidence_ideal(o)
        p = build_parabolic(g, incidence_subgroup_indices(n))
        omega = omega_betti(o, ideal, p)
        top = p.max_quotient_length
        for k in range(top + 2):
            assert omega.get(2 * k) == incidence_betti(n, k)


def test_homotopy_distinction_j1():
    rep = homotopy_distinction(1)
    assert (rep.j, rep.n, rep.k) == (1, 3, 7)
    assert rep.b_lower_half == 202
    assert rep.b_principal == 114
    assert rep.strict


def test_thickening_with_nontrivial_domain():
    g, o = make_order("A3")
    from weylkit.families import incidence_ideal, incidence_subgroup_indices
    ideal = incidence_ideal(o)
    p = build_parabolic(g, incidence_subgroup_indices(4))
    ranks = thickening_ranks(ideal, p)
    assert ranks.total == len({p.coset_of[x] for x in ideal.members()})
    perp = orthogonal(o, ideal)
    assert thickening_ranks(perp, p).total + ranks.total == p.n_cosets
