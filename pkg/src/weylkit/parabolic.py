"""Standard parabolic subgroups, coset representatives, double cosets.

The input is the generator subset that generates W_P itself, not its
complement.  Each left coset x W_P contains a unique element with no
right descent into the subset, and it is the strictly shortest member;
it is found by stripping descents.  Lengths add along the factorization
x = rep * u with u in W_P, which build_parabolic asserts for every
element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError
from .weyl import WeylGroup


@dataclass
class ParabolicSubset:
    g: WeylGroup
    theta: tuple[int, ...]            # generator indices of W_P, sorted
    subgroup: list[int]               # element ids of W_P, sorted
    subgroup_mask: int
    min_reps: list[int]               # W^P, sorted by (length, id)
    coset_of: list[int]               # element id -> its representative id

    @property
    def order(self) -> int:
        return len(self.subgroup)

    @property
    def n_cosets(self) -> int:
        return len(self.min_reps)

    @property
    def longest_subgroup_element(self) -> int:
        return max(self.subgroup, key=lambda x: self.g.length[x])

    @property
    def max_quotient_length(self) -> int:
        """l(w0 W_P): quotient length of the longest coset."""
        return self.g.length[self.min_reps[-1]]

    def quotient_length(self, x: int) -> int:
        return self.g.length[self.coset_of[x]]

    def to_json(self) -> list[int]:
        return list(self.theta)


def build_parabolic(g: WeylGroup, theta) -> ParabolicSubset:
    theta = tuple(sorted(set(theta)))
    for i in theta:
        if not 0 <= i < g.rank:
            raise InvalidInputError(f"generator index {i} out of range")

    sub = {0}
    queue = [0]
    while queue:
        x = queue.pop()
        for i in theta:
            y = g.rmult[x][i]
            if y not in sub:
                sub.add(y)
                queue.append(y)
    subgroup = sorted(sub)
    mask = 0
    for x in subgroup:
        mask |= 1 << x
    assert g.order % len(subgroup) == 0

    coset_of = [0] * g.order
    for x in range(g.order):
        y = x
        while True:
            act = g.acts[y]
            i = next((i for i in theta if act[i] < 0), None)
            if i is None:
                break
            y = g.rmult[y][i]
        coset_of[x] = y
        # length-additive factorization x = y * u, u in W_P
        u = g.multiply(g.inverse[y], x)
        assert mask >> u & 1
        assert g.length[x] == g.length[y] + g.length[u]

    min_reps = sorted({coset_of[x] for x in range(g.order)},
                      key=lambda x: (g.length[x], x))
    assert len(min_reps) * len(subgroup) == g.order
    return ParabolicSubset(g=g, theta=theta, subgroup=subgroup,
                           subgroup_mask=mask, min_reps=min_reps,
                           coset_of=coset_of)


def is_right_invariant(ideal, p: ParabolicSubset) -> bool:
    """Membership constant on left cosets x W_P."""
    g = p.g
    for x in ideal.members():
        for i in p.theta:
            if not ideal.mask >> g.rmult[x][i] & 1:
                return False
    return True


def is_left_invariant(ideal, p: ParabolicSubset) -> bool:
    """Membership constant on right cosets W_P x."""
    g = p.g
    for x in ideal.members():
        for i in p.theta:
            if not ideal.mask >> g.left_mult_gen(i, x) & 1:
                return False
    return True


def quotient_ideal(ideal, p: ParabolicSubset) -> list[tuple[int, int]]:
    """W^P representatives inside a right-W_P-invariant ideal.

    Returns (representative id, quotient length) sorted by (length, id).
    """
    if not is_right_invariant(ideal, p):
        raise InvalidInputError("ideal is not right-invariant under W_P")
    g = p.g
    return [(x, g.length[x]) for x in p.min_reps if ideal.mask >> x & 1]


def double_coset_min_rep(g: WeylGroup, p: ParabolicSubset,
                         q: ParabolicSubset, x: int) -> int:
    """The unique minimal element of W_P x W_Q.

    Alternately strip left descents into P and right descents into Q;
    each step shortens, so this terminates at the minimum.
    """
    g._check_id(x)
    while True:
        i = next((i for i in p.theta
                  if g.length[g.left_mult_gen(i, x)] < g.length[x]), None)
        if i is not None:
            x = g.left_mult_gen(i, x)
            continue
        j = next((j for j in q.theta
                  if g.length[g.rmult[x][j]] < g.length[x]), None)
        if j is None:
            return x
        x = g.rmult[x][j]
