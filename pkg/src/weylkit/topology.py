"""Homological invariants of thickenings, domains, and quotients.

Everything here reduces to counting coset representatives by quotient
length.  Thickenings have free even homology with rank r_k in degree 2k
(r = length histogram of I/W_D); domains combine r(I) and r(I-perp);
quotient manifolds tensor with the surface homology (1, 2g, 1).

Polynomial arithmetic is exact over the integers and divisions assert a
zero remainder, so the closed forms are checked as identities, not
numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bruhat import BruhatOrder, Ideal, classify, orthogonal
from .errors import InvalidInputError
from .families import build_symmetric, lower_half_ideal, principal_2n_ideal
from .parabolic import (ParabolicSubset, build_parabolic, is_right_invariant,
                        quotient_ideal)


@dataclass(frozen=True)
class GradedRanks:
    """Ranks of a graded abelian group, indexed by real degree."""

    ranks: tuple[int, ...]

    def __post_init__(self):
        if any(r < 0 for r in self.ranks):
            raise InvalidInputError("negative rank")

    @staticmethod
    def from_even(even) -> "GradedRanks":
        ranks = []
        for r in even:
            ranks.extend((r, 0))
        return GradedRanks(_trim(ranks))

    def get(self, k: int) -> int:
        return self.ranks[k] if 0 <= k < len(self.ranks) else 0

    def even(self) -> tuple[int, ...]:
        return tuple(self.ranks[0::2])

    @property
    def total(self) -> int:
        return sum(self.ranks)

    @property
    def euler(self) -> int:
        return sum(r if k % 2 == 0 else -r for k, r in enumerate(self.ranks))

    def to_json(self) -> list[int]:
        return list(self.ranks)


def _trim(ranks) -> tuple[int, ...]:
    ranks = list(ranks)
    while ranks and ranks[-1] == 0:
        ranks.pop()
    return tuple(ranks)


def _length_histogram(pairs) -> list[int]:
    """Counts by quotient length from (rep, length) pairs."""
    if not pairs:
        return []
    hist = [0] * (max(l for _, l in pairs) + 1)
    for _, l in pairs:
        hist[l] += 1
    return hist


def thickening_ranks(ideal: Ideal, p: ParabolicSubset) -> GradedRanks:
    """Homology of the model thickening: rank r_k in degree 2k."""
    hist = _length_histogram(quotient_ideal(ideal, p))
    return GradedRanks.from_even(hist)


def omega_betti(o: BruhatOrder, ideal: Ideal, p: ParabolicSubset) -> GradedRanks:
    """Betti numbers of the domain for a slim right-invariant ideal.

    b_2k = r_{n-1-k}(I) + r_k(I-perp) with n the top quotient length;
    odd Betti numbers vanish.  For balanced I this is r_k + r_{n-1-k}.
    """
    g = o.g
    if p.g is not g or ideal.g is not g:
        raise InvalidInputError("ideal, parabolic, and order must share a group")
    if not classify(o, ideal).slim:
        raise InvalidInputError("ideal is not slim")
    perp = orthogonal(o, ideal)
    if not is_right_invariant(perp, p):
        raise InvalidInputError("orthogonal ideal is not right-invariant")
    r_i = _length_histogram(quotient_ideal(ideal, p))
    r_p = _length_histogram(quotient_ideal(perp, p))
    n = p.max_quotient_length
    def at(hist, k):
        return hist[k] if 0 <= k < len(hist) else 0
    even = [at(r_i, n - 1 - k) + at(r_p, k) for k in range(n)]
    return GradedRanks.from_even(even)


def euler_omega(o: BruhatOrder, ideal: Ideal, p: ParabolicSubset) -> int:
    """Euler characteristic of the domain for balanced I: |W/W_P|."""
    if not classify(o, ideal).balanced:
        raise InvalidInputError("ideal is not balanced")
    chi = p.n_cosets
    assert omega_betti(o, ideal, p).total == chi
    return chi


def quotient_homology(omega: GradedRanks, genus: int) -> GradedRanks:
    """Tensor with the homology (1, 2g, 1) of a genus-g surface."""
    if genus < 2:
        raise InvalidInputError("genus must be at least 2")
    if any(omega.ranks[1::2]):
        raise InvalidInputError("omega ranks must be supported in even degrees")
    top = len(omega.ranks) + 1
    ranks = [omega.get(k) + 2 * genus * omega.get(k - 1) + omega.get(k - 2)
             for k in range(top + 1)]
    return GradedRanks(_trim(ranks))


def splitting_check(o: BruhatOrder, ideal: Ideal, p: ParabolicSubset) -> bool:
    """Coset counts of W/W_P split as r_k(I) + r_{n-k}(I-perp)."""
    g = o.g
    r_i = _length_histogram(quotient_ideal(ideal, p))
    r_p = _length_histogram(quotient_ideal(orthogonal(o, ideal), p))
    full = _length_histogram([(x, g.length[x]) for x in p.min_reps])
    n = p.max_quotient_length
    def at(hist, k):
        return hist[k] if 0 <= k < len(hist) else 0
    return all(at(full, k) == at(r_i, k) + at(r_p, n - k)
               for k in range(n + 1))


@dataclass(frozen=True)
class HausdorffReport:
    bound: float                     # limit curve dim + 2 * max length
    limit_curve_dim: float
    max_quotient_length: int
    n: int                           # complex dimension of G/P_D
    domain_nonempty: bool            # bound < 2n
    measure_2n_minus_2_vanishes: bool
    measure_2n_minus_4_vanishes: bool

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "limit_curve_dim": self.limit_curve_dim,
            "max_quotient_length": self.max_quotient_length,
            "complex_dim": self.n,
            "domain_nonempty": self.domain_nonempty,
            "measure_2n_minus_2_vanishes": self.measure_2n_minus_2_vanishes,
            "measure_2n_minus_4_vanishes": self.measure_2n_minus_4_vanishes,
        }


def hausdorff_bound(o: BruhatOrder, ideal: Ideal, p: ParabolicSubset,
                    limit_curve_dim: float = 1.0) -> HausdorffReport:
    """Upper bound for the Hausdorff dimension of the limit set.

    The bound is limit_curve_dim + 2 max length over I/W_P.  When it is
    below the real dimension 2n of G/P_D the domain is non-empty; two
    further thresholds flag vanishing (2n-2)- and (2n-4)-dimensional
    Hausdorff measure.
    """
    if not 0.0 <= limit_curve_dim <= 2.0:
        raise InvalidInputError("limit curve dimension must lie in [0, 2]")
    if not classify(o, ideal).slim:
        raise InvalidInputError("ideal is not slim")
    reps = quotient_ideal(ideal, p)
    maxlen = max((l for _, l in reps), default=0)
    n = p.max_quotient_length
    bound = limit_curve_dim + 2 * maxlen
    return HausdorffReport(
        bound=bound,
        limit_curve_dim=limit_curve_dim,
        max_quotient_length=maxlen,
        n=n,
        domain_nonempty=bound < 2 * n,
        measure_2n_minus_2_vanishes=bound < 2 * n - 2,
        measure_2n_minus_4_vanishes=bound < 2 * n - 4,
    )


# ---------------------------------------------------------------------------
# Exact polynomial closed forms

def _polymul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polydivexact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of num by den; asserts the remainder is zero."""
    num = list(num)
    while den and den[-1] == 0:
        den = den[:-1]
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], den[-1])
        assert r == 0
        q[i] = c
        for j, y in enumerate(den):
            num[i + j] -= c * y
    assert all(v == 0 for v in num)
    return q


def _one_minus_t_pow(k: int) -> list[int]:
    p = [0] * (k + 1)
    p[0], p[k] = 1, -1
    return p


def flag_poincare(m: int) -> GradedRanks:
    """Poincare polynomial of the full flag variety of C^m."""
    if m < 1:
        raise InvalidInputError("need m >= 1")
    num = [1]
    for i in range(1, m):
        num = _polymul(num, _one_minus_t_pow(2 * (i + 1)))
    den = [1]
    for _ in range(m - 1):
        den = _polymul(den, _one_minus_t_pow(2))
    return GradedRanks(_trim(_polydivexact(num, den)))


def omega2n_closed_form(n: int) -> GradedRanks:
    """Closed-form Poincare polynomial of the principal-family domain."""
    if n < 1:
        raise InvalidInputError("need n >= 1")
    num = [1] + [0] * (2 * n - 3) + [1] if n > 1 else [2]  # 1 + t^(2n-2)
    num = _polymul(num, _one_minus_t_pow(2 * n))
    for i in range(1, 2 * n - 1):
        num = _polymul(num, _one_minus_t_pow(2 * (i + 1)))
    den = [1]
    for _ in range(2 * n - 1):
        den = _polymul(den, _one_minus_t_pow(2))
    return GradedRanks(_trim(_polydivexact(num, den)))


def incidence_betti(n: int, k: int) -> int:
    """Closed-form b_2k of the incidence-family domain in S_n."""
    if n < 2 or k < 0:
        raise InvalidInputError("need n >= 2 and k >= 0")
    if k == n - 2:
        return 2 * n - 2
    return max(0, n - 1 - abs(n - k - 2))


# ---------------------------------------------------------------------------
# Homotopy distinction of the two named families

@dataclass(frozen=True)
class DistinctionReport:
    j: int
    n: int                           # = 2j + 1; the group is S_2n
    k: int                           # middle length (l(w0) = 2k + 1)
    b_lower_half: int                # b_2k of the lower-half domain
    b_principal: int                 # b_2k of the principal-family domain
    strict: bool

    def to_json(self) -> dict:
        return {
            "j": self.j,
            "n": self.n,
            "k": self.k,
            "b_lower_half": self.b_lower_half,
            "b_principal": self.b_principal,
            "strict": self.strict,
        }


def homotopy_distinction(j: int, verify: bool | None = None,
                         max_table_entries: int | None = None
                         ) -> DistinctionReport:
    """Compare middle Betti numbers of the two domains over S_2(2j+1).

    The lower-half and principal-family domains differ in b_2k where
    k = (l(w0) - 1) / 2; the report also re-derives both values from the
    raw length counts.
    """
    if j < 1:
        raise InvalidInputError("need j >= 1")
    n = 2 * j + 1
    g, o = build_symmetric(2 * n, max_table_entries=max_table_entries)
    assert g.n_positive % 2 == 1
    k = (g.n_positive - 1) // 2
    p = build_parabolic(g, ())
    half = lower_half_ideal(o, verify=verify)
    principal = principal_2n_ideal(o, verify=verify)
    b_half = omega_betti(o, half, p).get(2 * k)
    b_principal = omega_betti(o, principal, p).get(2 * k)
    # balanced + l(w0) odd make both values twice a middle length count
    level = sum(1 for x in range(g.order) if g.length[x] == k)
    assert b_half == 2 * level
    assert b_principal == 2 * sum(1 for x in principal.members()
                                  if g.length[x] == k)
    return DistinctionReport(j=j, n=n, k=k, b_lower_half=b_half,
                             b_principal=b_principal, strict=b_principal < b_half)
