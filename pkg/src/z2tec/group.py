"""Arithmetic and subgroup combinatorics of the elementary abelian group Z_2^l.

Elements are plain integer indices.  For every ``l`` the index order sorts the
coordinate vectors by Hamming weight and then in descending lexicographic
order, which for ``l = 3`` reproduces the fixed numbering

    x0=(0,0,0) x1=(1,0,0) x2=(0,1,0) x3=(0,0,1)
    x4=(1,1,0) x5=(1,0,1) x6=(0,1,1) x7=(1,1,1)

The group is self-dual, so characters share the same index space.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

MAX_L = 4

Subgroup = frozenset  # frozenset[int], always contains 0


class Decomposition(NamedTuple):
    """Direct sum splitting ``x1 (+) x2`` with ``|x1| = 2`` and ``|x2| = 4``."""

    x1: frozenset
    x2: frozenset

    @property
    def g(self) -> int:
        """The nonzero element of ``x1``."""
        return max(self.x1)

    def label(self) -> str:
        return f"H{max(self.x1)}+K{enumerate_A2().index(self.x2) + 1}"


def _check_l(l: int) -> None:
    if not 1 <= l <= MAX_L:
        raise ValueError(f"group exponent l must be in 1..{MAX_L}, got {l}")


@lru_cache(maxsize=None)
def coordinate_table(l: int) -> tuple[tuple[int, ...], ...]:
    _check_l(l)
    vectors = itertools.product((0, 1), repeat=l)
    return tuple(sorted(vectors, key=lambda v: (sum(v), tuple(-c for c in v))))


@lru_cache(maxsize=None)
def _index_of(l: int) -> dict[tuple[int, ...], int]:
    return {v: i for i, v in enumerate(coordinate_table(l))}


def coords(i: int, l: int = 3) -> tuple[int, ...]:
    return coordinate_table(l)[i]


def index(v: Sequence[int], l: int | None = None) -> int:
    v = tuple(int(c) % 2 for c in v)
    return _index_of(len(v) if l is None else l)[v]


@lru_cache(maxsize=None)
def addition_table(l: int) -> tuple[tuple[int, ...], ...]:
    table = coordinate_table(l)
    lookup = _index_of(l)
    return tuple(
        tuple(lookup[tuple((a + b) % 2 for a, b in zip(u, v))] for v in table)
        for u in table
    )


@lru_cache(maxsize=None)
def character_table(l: int) -> tuple[tuple[int, ...], ...]:
    """``table[i][y]`` is the value of character ``y`` on element ``x_i``."""
    table = coordinate_table(l)
    return tuple(
        tuple(-1 if sum(a * b for a, b in zip(x, y)) % 2 else 1 for y in table)
        for x in table
    )


def add(x: int, y: int, l: int = 3) -> int:
    return addition_table(l)[x][y]


def add_set(x: int, e, l: int = 3) -> frozenset:
    """The translate ``x + e`` of a set of elements."""
    row = addition_table(l)[x]
    return frozenset(row[i] for i in e)


def pairing(x: int, y: int, l: int = 3) -> int:
    return character_table(l)[x][y]


def order(l: int) -> int:
    return 1 << l


def log2_size(n: int) -> int:
    l = n.bit_length() - 1
    if n < 2 or (1 << l) != n:
        raise ValueError(f"vector length must be a power of two >= 2, got {n}")
    _check_l(l)
    return l


# -- character transform -----------------------------------------------------

def walsh_forward(masses: Sequence) -> tuple:
    """Characteristic function values ``sum_i masses[i] * (x_i, y)`` for every ``y``.

    Works on any exact numeric type (``int``, ``Fraction``).
    """
    l = log2_size(len(masses))
    table = character_table(l)
    n = len(masses)
    return tuple(sum(masses[i] * table[i][y] for i in range(n)) for y in range(n))


def walsh_inverse(values: Sequence) -> tuple[Fraction, ...]:
    l = log2_size(len(values))
    table = character_table(l)
    n = len(values)
    return tuple(
        Fraction(sum(values[y] * table[i][y] for y in range(n))) / n
        for i in range(n)
    )


# -- subgroups ---------------------------------------------------------------

def is_subgroup(e, l: int = 3) -> bool:
    e = frozenset(e)
    add_t = addition_table(l)
    return 0 in e and all(add_t[a][b] in e for a in e for b in e)


@lru_cache(maxsize=None)
def all_subgroups(l: int) -> tuple[frozenset, ...]:
    """Every subgroup of Z_2^l, by brute force over subsets containing 0."""
    if l > MAX_L:
        raise ValueError(f"subgroup lattice only for l <= {MAX_L}")
    n = order(l)
    found = []
    for r in range(0, n):
        for rest in itertools.combinations(range(1, n), r):
            e = frozenset((0,) + rest)
            if (len(e) & (len(e) - 1)) == 0 and is_subgroup(e, l):
                found.append(e)
    return tuple(found)


def subgroups_of_order(size: int, l: int) -> tuple[frozenset, ...]:
    return tuple(s for s in all_subgroups(l) if len(s) == size)


@lru_cache(maxsize=None)
def enumerate_A1(l: int = 3) -> tuple[frozenset, ...]:
    """Order-2 subgroups ``H_i = {x0, x_i}`` in index order."""
    return tuple(frozenset((0, i)) for i in range(1, order(l)))


# K_1 .. K_7 in the fixed order used throughout; checked against brute force.
_A2_L3 = (
    (0, 2, 3, 6),
    (0, 1, 3, 5),
    (0, 1, 2, 4),
    (0, 1, 6, 7),
    (0, 3, 4, 7),
    (0, 2, 5, 7),
    (0, 4, 5, 6),
)


@lru_cache(maxsize=None)
def enumerate_A2() -> tuple[frozenset, ...]:
    """Order-4 subgroups ``K_1 .. K_7`` of Z_2^3."""
    ks = tuple(frozenset(k) for k in _A2_L3)
    assert set(ks) == set(subgroups_of_order(4, 3))
    return ks


def _require_l3_subgroup(s, size: int, name: str) -> frozenset:
    s = frozenset(s)
    if len(s) != size or not is_subgroup(s, 3):
        raise ValueError(f"{name} must be a subgroup of order {size} of Z_2^3, got {sorted(s)}")
    return s


def complement_coset(k) -> frozenset:
    """The coset of an order-4 subgroup other than itself (written K-bar)."""
    k = _require_l3_subgroup(k, 4, "k")
    return frozenset(range(8)) - k


def overgroups(h) -> tuple[frozenset, ...]:
    h = _require_l3_subgroup(h, 2, "h")
    return tuple(k for k in enumerate_A2() if h <= k)


def complements(h) -> tuple[frozenset, ...]:
    h = _require_l3_subgroup(h, 2, "h")
    return tuple(k for k in enumerate_A2() if not h <= k)


def lemma1_z(h, k_j0, k_j) -> int:
    """Unique ``z`` in the coset of ``k_j`` lying outside both ``h`` and ``k_j0``."""
    h = _require_l3_subgroup(h, 2, "h")
    comps = complements(h)
    k_j0, k_j = frozenset(k_j0), frozenset(k_j)
    if k_j0 not in comps or k_j not in comps:
        raise ValueError("k_j0 and k_j must both be complements of h")
    if k_j0 == k_j:
        raise ValueError("k_j must differ from k_j0")
    (z,) = complement_coset(k_j) - h - k_j0
    return z


@lru_cache(maxsize=None)
def decompositions() -> tuple[Decomposition, ...]:
    """All 28 splittings, ordered by ``(H_i, K_j)`` index."""
    return tuple(
        Decomposition(h, k)
        for h in enumerate_A1(3)
        for k in enumerate_A2()
        if h & k == {0}
    )


# -- index permutations ------------------------------------------------------

_SIGMA_CYCLES = {
    1: (),
    2: ((1, 2), (5, 6)),
    3: ((1, 3), (4, 6)),
    4: ((1, 2), (3, 7)),
    5: ((2, 4), (6, 7)),
    6: ((3, 5), (6, 7)),
    7: ((2, 4), (3, 5)),
}


@lru_cache(maxsize=None)
def sigma(k: int) -> tuple[int, ...]:
    """Index permutation carrying ``K_1`` onto ``K_k`` (as a tuple ``i -> perm[i]``)."""
    if k not in _SIGMA_CYCLES:
        raise ValueError(f"sigma index must be in 1..7, got {k}")
    perm = list(range(8))
    for a, b in _SIGMA_CYCLES[k]:
        perm[a], perm[b] = b, a
    return tuple(perm)


def apply_perm(perm: Sequence[int], e) -> frozenset:
    return frozenset(perm[i] for i in e)


@lru_cache(maxsize=None)
def automorphisms(l: int = 3) -> tuple[tuple[int, ...], ...]:
    """All group automorphisms as index permutations (invertible GF(2) matrices)."""
    table = coordinate_table(l)
    lookup = _index_of(l)
    result = []
    for cols in itertools.product(table[1:], repeat=l):
        # matrix with columns = images of the unit vectors
        image = [
            tuple(sum(v[c] * cols[c][r] for c in range(l)) % 2 for r in range(l))
            for v in table
        ]
        if len(set(image)) == len(table):
            result.append(tuple(lookup[w] for w in image))
    return tuple(result)
