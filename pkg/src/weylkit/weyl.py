"""The finite Weyl group as an explicit table.

An element is identified with its signed action on the list of positive
roots: entry j of the action tuple is ``+-(k+1)`` when the element sends
positive root j to ``+-`` positive root k.  This gives exact equality
testing and O(|Sigma^+|) products without any irrational arithmetic.

The table is built breadth-first from the identity over right
multiplication by the simple reflections, so an element's BFS depth is
its length; the build cross-checks that against the root-inversion count.
Only the generator-multiplication columns are cached (memory |W| x rank);
general products are composed letter by letter.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cartan import RootSystem, component_coxeter_number
from .errors import BudgetExceededError, InvalidInputError

Word = tuple[int, ...]

# the table design is memory-bound: |W| * (|Sigma^+| + rank) small ints
DEFAULT_MAX_TABLE_ENTRIES = 10**7


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Action of the product: apply b to each root, then a."""
    out = []
    for v in b:
        if v > 0:
            out.append(a[v - 1])
        else:
            out.append(-a[-v - 1])
    return tuple(out)


@dataclass
class WeylGroup:
    rs: RootSystem
    acts: list[tuple[int, ...]]
    length: list[int]
    rmult: list[list[int]]          # rmult[x][i] = id of x * s_i
    bfs_parent: list[int]
    bfs_letter: list[int]
    generators: list[int]           # ids of the simple reflections
    inverse: list[int]
    w0: int
    _id_of: dict[tuple[int, ...], int]
    _w0_left: list[int] | None = None
    _words: dict[int, Word] = field(default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.acts)

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def n_positive(self) -> int:
        return self.rs.n_positive

    # -- products ----------------------------------------------------------

    def id_of_act(self, act: tuple[int, ...]) -> int:
        return self._id_of[act]

    def bfs_word(self, x: int) -> Word:
        """Some reduced word for x (the BFS discovery word)."""
        letters = []
        while x != 0:
            letters.append(self.bfs_letter[x])
            x = self.bfs_parent[x]
        return tuple(reversed(letters))

    def multiply(self, x: int, y: int) -> int:
        """Product xy, composed along a reduced word of y."""
        self._check_id(x)
        cur = x
        for i in self.bfs_word(y):
            cur = self.rmult[cur][i]
        return cur

    def left_mult_gen(self, i: int, x: int) -> int:
        """s_i * x in O(1) table lookups, via (x^-1 s_i)^-1."""
        return self.inverse[self.rmult[self.inverse[x]][i]]

    def word_to_id(self, word: Word) -> int:
        cur = 0
        for i in word:
            if not 0 <= i < self.rank:
                raise InvalidInputError(f"letter {i} out of range")
            cur = self.rmult[cur][i]
        return cur

    def w0_left(self, x: int) -> int:
        """w0 * x, from a lazily built table."""
        if self._w0_left is None:
            w0_act = self.acts[self.w0]
            self._w0_left = [self._id_of[_compose(w0_act, a)] for a in self.acts]
        return self._w0_left[x]

    # -- descents and words -------------------------------------------------

    def right_descents(self, x: int) -> list[int]:
        """Generators s with l(xs) < l(x): simple roots sent negative."""
        act = self.acts[x]
        return [i for i in range(self.rank) if act[i] < 0]

    def left_descents(self, x: int) -> list[int]:
        return self.right_descents(self.inverse[x])

    def reduced_word(self, x: int) -> Word:
        """Canonical reduced word: greedy smallest left descent.

        Stripping the smallest left descent first yields the
        lexicographically smallest reduced word.
        """
        self._check_id(x)
        cached = self._words.get(x)
        if cached is not None:
            return cached
        letters = []
        cur = x
        while cur != 0:
            i = min(self.left_descents(cur))
            letters.append(i)
            cur = self.left_mult_gen(i, cur)
        word = tuple(letters)
        self._words[x] = word
        return word

    def _check_id(self, x: int) -> None:
        if not 0 <= x < self.order:
            raise InvalidInputError(f"element id {x} out of range")


def generate(rs: RootSystem,
             max_table_entries: int | None = None) -> WeylGroup:
    """Breadth-first closure of the simple reflections.

    Element identity is the signed root action; lengths are BFS depths,
    cross-checked against inversion counts.  Refuses to build tables
    larger than the configured entry budget.
    """
    cap = DEFAULT_MAX_TABLE_ENTRIES if max_table_entries is None else max_table_entries
    order = rs.cartan_type.weyl_order()
    npos = rs.n_positive
    entries = order * (npos + rs.rank)
    if entries > cap:
        raise BudgetExceededError(
            f"{rs.cartan_type}: table needs {entries} entries > budget {cap}")

    root_index = {r: k for k, r in enumerate(rs.positive_roots)}
    gen_acts = []
    for i in range(rs.rank):
        act = []
        for r in rs.positive_roots:
            img = rs.reflect(i, r)
            if img in root_index:
                act.append(root_index[img] + 1)
            else:
                neg = tuple(-c for c in img)
                act.append(-(root_index[neg] + 1))
        gen_acts.append(tuple(act))

    ident = tuple(range(1, npos + 1))
    acts = [ident]
    id_of = {ident: 0}
    length = [0]
    parent = [0]
    letter = [-1]
    rmult: list[list[int]] = [[-1] * rs.rank]

    head = 0
    while head < len(acts):
        x = head
        head += 1
        ax = acts[x]
        for i in range(rs.rank):
            t = _compose(ax, gen_acts[i])
            y = id_of.get(t)
            if y is None:
                y = len(acts)
                id_of[t] = y
                acts.append(t)
                length.append(length[x] + 1)
                parent.append(x)
                letter.append(i)
                rmult.append([-1] * rs.rank)
            rmult[x][i] = y

    if len(acts) != order:
        raise AssertionError(
            f"BFS found {len(acts)} elements, order formula says {order}")
    for x, a in enumerate(acts):
        inv_count = sum(1 for v in a if v < 0)
        if inv_count != length[x]:
            raise AssertionError(f"length/inversion mismatch at element {x}")

    inverse = []
    for a in acts:
        ia = [0] * npos
        for j, v in enumerate(a):
            if v > 0:
                ia[v - 1] = j + 1
            else:
                ia[-v - 1] = -(j + 1)
        inverse.append(id_of[tuple(ia)])

    maxlen = max(length)
    longest = [x for x in range(len(acts)) if length[x] == maxlen]
    if maxlen != npos or len(longest) != 1:
        raise AssertionError("longest element is not unique of length |Sigma^+|")

    return WeylGroup(
        rs=rs,
        acts=acts,
        length=length,
        rmult=rmult,
        bfs_parent=parent,
        bfs_letter=letter,
        generators=[id_of[g] for g in gen_acts],
        inverse=inverse,
        w0=longest[0],
        _id_of=id_of,
    )


def multiply(g: WeylGroup, x: int, y: int) -> int:
    return g.multiply(x, y)


def reduced_word(g: WeylGroup, x: int) -> Word:
    return g.reduced_word(x)


def left_w0_length(g: WeylGroup, x: int) -> int:
    """l(w0 x), asserted equal to l(w0) - l(x)."""
    g._check_id(x)
    val = g.length[g.w0_left(x)]
    assert val == g.length[g.w0] - g.length[x]
    return val


# ---------------------------------------------------------------------------
# Bourbaki bipartite word for w0

def default_bipartition(rs: RootSystem) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Greedy 2-coloring of the Dynkin diagram (a forest, so it works)."""
    color = {}
    for comp in rs.components:
        start = comp[0]
        color[start] = 0
        stack = [start]
        while stack:
            i = stack.pop()
            for j in comp:
                if j != i and rs.cartan_matrix[i][j] != 0 and j not in color:
                    color[j] = 1 - color[i]
                    stack.append(j)
    part0 = tuple(sorted(i for i, c in color.items() if c == 0))
    part1 = tuple(sorted(i for i, c in color.items() if c == 1))
    return part0, part1


def bipartite_w0_word(g: WeylGroup,
                      split: tuple[tuple[int, ...], tuple[int, ...]] | None = None,
                      ) -> Word:
    """The reduced word (ab)^(h/2), resp. (ab)^((h-1)/2) a for odd h.

    a and b are the products of the two parts of a pairwise-commuting
    bipartition of the generators; the construction runs per connected
    Dynkin component and the component words are concatenated.  The result
    is asserted reduced and equal to w0.
    """
    rs = g.rs
    if split is None:
        split = default_bipartition(rs)
    s_prime, s_second = (tuple(sorted(set(p))) for p in split)
    if sorted(s_prime + s_second) != list(range(rs.rank)):
        raise InvalidInputError("split must partition the generator indices")
    for part in (s_prime, s_second):
        for i in part:
            for j in part:
                if i < j and rs.cartan_matrix[i][j] != 0:
                    raise InvalidInputError(
                        f"generators {i},{j} in the same part are adjacent")

    word: list[int] = []
    for comp in rs.components:
        a = [i for i in s_prime if i in comp]
        b = [i for i in s_second if i in comp]
        h = component_coxeter_number(rs, comp)
        if h % 2 == 0:
            piece = (a + b) * (h // 2)
        else:
            piece = (a + b) * ((h - 1) // 2) + a
        word.extend(piece)

    result = tuple(word)
    if len(result) != g.n_positive or g.word_to_id(result) != g.w0:
        raise AssertionError("bipartite word is not a reduced word for w0")
    return result


# ---------------------------------------------------------------------------
# Exchange/deletion

def exchange_deletion(g: WeylGroup, word: Word, s: int) -> tuple[int, int]:
    """Given a reduced word for x and a right descent s, delete one letter.

    Returns (k, q) with k the 1-based position whose deletion yields a
    word for xs, and q the element with ``q s q^{-1}`` equal to the
    deleted simple reflection (q is the suffix after position k); the
    conjugacy is verified before returning.
    """
    if any(not 0 <= i < g.rank for i in word):
        raise InvalidInputError("word letters out of range")
    if not 0 <= s < g.rank:
        raise InvalidInputError("generator index out of range")
    x = g.word_to_id(word)
    if g.length[x] != len(word):
        raise InvalidInputError("word is not reduced")
    xs = g.rmult[x][s]
    if g.length[xs] != g.length[x] - 1:
        raise InvalidInputError("s is not a right descent of the word's product")

    for k in range(len(word)):
        shorter = word[:k] + word[k + 1:]
        if g.word_to_id(shorter) == xs:
            q = g.word_to_id(word[k + 1:])
            s_elem = g.generators[s]
            deleted = g.generators[word[k]]
            conj = g.multiply(g.multiply(q, s_elem), g.inverse[q])
            assert conj == deleted, "deleted letter not conjugate via the suffix"
            return k + 1, q
    raise AssertionError("exchange property failed to produce a deletion")
