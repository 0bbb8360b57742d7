"""Cartan types and root systems.

Everything downstream works over exact integer coordinates:

* roots are integer vectors in the simple-root basis, so the simple
  reflection s_i changes only coordinate i and the Cartan matrix drives
  the whole computation;
* weights are integer vectors in the fundamental-weight basis (the value
  of the weight on each simple coroot), see module bbw.

A type is a product of simple factors like ``A2`` or ``B2xA1``.  All per
factor data (Cartan matrix blocks, roots, Coxeter numbers) is assembled
block-diagonally, so the Weyl group of a product is the direct product.
"""

from __future__ import annotations

from dataclasses import dataclass
import re

from .errors import InvalidInputError

# ---------------------------------------------------------------------------
# Cartan types

_FACTOR_RE = re.compile(r"([A-Ga-g])([0-9]+)")

# valid ranks per family; D needs rank >= 2 to have a diagram at all
_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 1,
    "C": lambda n: n >= 1,
    "D": lambda n: n >= 2,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

# |W| per simple factor, used to pre-check budgets before generating tables
_FACTORIALS = [1]
for _i in range(1, 13):
    _FACTORIALS.append(_FACTORIALS[-1] * _i)

_EXC_ORDER = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
              ("F", 4): 1152, ("G", 2): 12}


@dataclass(frozen=True)
class CartanType:
    """An ordered product of (family, rank) factors."""

    factors: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise InvalidInputError("empty Cartan type")
        for fam, rank in self.factors:
            if fam not in _RANK_OK:
                raise InvalidInputError(f"unknown family {fam!r}")
            if not _RANK_OK[fam](rank):
                raise InvalidInputError(f"invalid rank {rank} for family {fam}")

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.factors)

    def weyl_order(self) -> int:
        """|W|, from the classical per-family order formulas."""
        order = 1
        for fam, n in self.factors:
            if fam == "A":
                order *= _FACTORIALS[n + 1]
            elif fam in ("B", "C"):
                order *= 2**n * _FACTORIALS[n]
            elif fam == "D":
                order *= 2 ** (n - 1) * _FACTORIALS[n]
            else:
                order *= _EXC_ORDER[(fam, n)]
        return order

    def __str__(self) -> str:
        return "x".join(f"{fam}{rank}" for fam, rank in self.factors)


def parse_type(spec: str) -> CartanType:
    """Parse a product expression like ``"A3"``, ``"B2"``, ``"a1xA1"``.

    Case-insensitive; factors joined by ``x``.
    """
    text = spec.strip()
    if not text:
        raise InvalidInputError("empty type string")
    factors = []
    for part in re.split(r"[xX]", text):
        m = _FACTOR_RE.fullmatch(part.strip())
        if m is None:
            raise InvalidInputError(f"malformed type factor {part!r} in {spec!r}")
        factors.append((m.group(1).upper(), int(m.group(2))))
    return CartanType(tuple(factors))


# ---------------------------------------------------------------------------
# Cartan matrices

def _simple_cartan_matrix(fam: str, n: int) -> list[list[int]]:
    """Standard Cartan matrix, entries C[i][j] = <alpha_j, alpha_i^vee>.

    Convention: simple reflection action on a root coordinate vector v is
    v_i -> v_i - sum_j C[i][j] v_j.  For B the last simple root is short,
    for C it is long (the two are transposes of each other).
    """
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        c[i][j] = cij
        c[j][i] = cji

    if fam in ("A", "B", "C"):
        for i in range(n - 1):
            edge(i, i + 1)
        if fam == "B" and n >= 2:
            # alpha_{n-1} short: <alpha_{n-2}, alpha_{n-1}^vee> = -2
            c[n - 1][n - 2] = -2
        if fam == "C" and n >= 2:
            c[n - 2][n - 1] = -2
    elif fam == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        if n >= 3:
            edge(n - 3, n - 1)
        # n == 2: no edges, the diagram is two isolated vertices (= A1xA1)
    elif fam == "E":
        # Bourbaki numbering: node 1 (index 1) hangs off node 3 (index 2)
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            edge(a, b)
        edge(1, 3)
    elif fam == "F":
        edge(0, 1)
        edge(1, 2, -1, -2)
        edge(2, 3)
    elif fam == "G":
        edge(0, 1, -1, -3)
    return c


# ---------------------------------------------------------------------------
# Root systems

@dataclass(frozen=True)
class RootSystem:
    """Positive roots and Cartan data for a (product) type.

    positive_roots holds integer coordinate vectors in the simple-root
    basis, the first ``rank`` entries being the simple roots themselves.
    coxeter_numbers has one entry per factor of the input type; components
    lists the connected Dynkin-diagram components (the true simple factors,
    which for D2 differ from the input factors).
    """

    cartan_type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]
    simple_roots: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    coxeter_numbers: tuple[int, ...]
    delta: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    def reflect(self, i: int, v: tuple[int, ...]) -> tuple[int, ...]:
        """Apply the simple reflection s_i to a root coordinate vector."""
        row = self.cartan_matrix[i]
        pairing = sum(row[j] * v[j] for j in range(len(v)))
        out = list(v)
        out[i] -= pairing
        return tuple(out)


def _dynkin_components(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    """Connected components of the Dynkin diagram, each sorted."""
    n = len(cartan)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j != i and not seen[j] and cartan[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return comps


def _positive_roots(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    """Close the simple roots under simple reflections.

    Keeps exactly the vectors with all coordinates >= 0; the closure of
    the simple roots under W meets the positive cone in Sigma^+.
    """
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found = set(simple)
    queue = list(simple)
    while queue:
        v = queue.pop()
        for i in range(n):
            pairing = sum(cartan[i][j] * v[j] for j in range(n))
            w = list(v)
            w[i] -= pairing
            wt = tuple(w)
            if wt not in found and all(c >= 0 for c in wt):
                found.add(wt)
                queue.append(wt)
    extra = sorted(v for v in found if v not in set(simple))
    # simple roots first, then by (height, coords): deterministic layout
    extra.sort(key=lambda v: (sum(v), v))
    return simple + extra


def _coxeter_number_of_indices(cartan: list[list[int]],
                               indices: tuple[int, ...]) -> int:
    """Order of the product of the simple reflections with these indices.

    Computed as the order of the composite acting on root coordinates, a
    faithful representation, so this equals the element order in W.
    """
    n = len(cartan)

    def reflect(i: int, v: list[int]) -> list[int]:
        pairing = sum(cartan[i][j] * v[j] for j in range(n))
        out = list(v)
        out[i] -= pairing
        return out

    # columns of the composite matrix
    cols = []
    for j in range(n):
        v = [1 if a == j else 0 for a in range(n)]
        for i in reversed(indices):
            v = reflect(i, v)
        cols.append(v)
    ident = [[1 if a == j else 0 for a in range(n)] for j in range(n)]
    cur = [list(v) for v in cols]
    order = 1
    while cur != ident:
        cur = [[sum(cols[a][r] * c[a] for a in range(n)) for r in range(n)]
               for c in cur]
        order += 1
        if order > 64:  # h <= 30 for every supported type
            raise AssertionError("runaway Coxeter element order")
    return order


def build_root_system(t: CartanType) -> RootSystem:
    """Assemble the block-diagonal root system of a product type."""
    rank = t.rank
    cartan = [[0] * rank for _ in range(rank)]
    offset = 0
    factor_blocks = []
    for fam, n in t.factors:
        block = _simple_cartan_matrix(fam, n)
        for i in range(n):
            for j in range(n):
                cartan[offset + i][offset + j] = block[i][j]
        factor_blocks.append(tuple(range(offset, offset + n)))
        offset += n

    roots = _positive_roots(cartan)
    coxeter = tuple(_coxeter_number_of_indices(cartan, blk)
                    for blk in factor_blocks)
    return RootSystem(
        cartan_type=t,
        cartan_matrix=tuple(tuple(row) for row in cartan),
        simple_roots=tuple(roots[:rank]),
        positive_roots=tuple(roots),
        coxeter_numbers=coxeter,
        delta=tuple(1 for _ in range(rank)),
        components=tuple(_dynkin_components(cartan)),
    )


def positive_coroots(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """Positive coroots in simple-coroot coordinates.

    These are the positive roots of the dual system, whose Cartan
    matrix is the transpose; the count matches the root count.
    """
    rank = rs.rank
    transposed = [[rs.cartan_matrix[j][i] for j in range(rank)]
                  for i in range(rank)]
    coroots = _positive_roots(transposed)
    assert len(coroots) == len(rs.positive_roots)
    return tuple(coroots)


def coxeter_number(t: CartanType, factor_index: int) -> int:
    """The order of any product of all simple reflections of the factor."""
    if not 0 <= factor_index < len(t.factors):
        raise InvalidInputError(f"factor index {factor_index} out of range")
    rs = build_root_system(CartanType((t.factors[factor_index],)))
    return _coxeter_number_of_indices(
        [list(r) for r in rs.cartan_matrix], tuple(range(rs.rank)))


def component_coxeter_number(rs: RootSystem, component: tuple[int, ...]) -> int:
    """Coxeter number of one connected Dynkin component of rs."""
    return _coxeter_number_of_indices(
        [list(r) for r in rs.cartan_matrix], component)
