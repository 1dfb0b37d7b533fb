import itertools
from fractions import Fraction

import pytest
from hypothesis import given

from z2tec import group
from z2tec.group import (
    add, add_set, complement_coset, complements, enumerate_A1, enumerate_A2,
    lemma1_z, overgroups, pairing, sigma, walsh_forward, walsh_inverse,
)

from conftest import rational_vectors

K = enumerate_A2()
H = enumerate_A1()


def fs(*xs):
    return frozenset(xs)


def test_l3_coordinates_match_fixed_table():
    expected = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
                (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
    assert list(group.coordinate_table(3)) == expected


@pytest.mark.parametrize("x, y, expected", [(0, 5, 1), (7, 7, -1), (4, 4, 1)])
def test_pairing(x, y, expected):
    assert pairing(x, y) == expected


def test_pairing_matches_dot_product_for_all_l():
    for l in range(1, 5):
        tab = group.coordinate_table(l)
        for i, j in itertools.product(range(1 << l), repeat=2):
            dot = sum(a * b for a, b in zip(tab[i], tab[j]))
            assert pairing(i, j, l) == (-1) ** dot


def test_add():
    assert add(1, 2) == 4
    assert add(5, 5) == 0
    assert add_set(1, {2, 3}) == {4, 5}
    for l in range(1, 5):
        for x in range(1 << l):
            assert add(x, x, l) == 0


def test_A1():
    assert H == tuple(fs(0, i) for i in range(1, 8))
    assert all(len(h) == 2 and group.is_subgroup(h) for h in H)


def test_A2_order_and_content():
    assert K[0] == fs(0, 2, 3, 6)
    assert [sorted(k) for k in K] == [
        [0, 2, 3, 6], [0, 1, 3, 5], [0, 1, 2, 4], [0, 1, 6, 7],
        [0, 3, 4, 7], [0, 2, 5, 7], [0, 4, 5, 6],
    ]
    assert len(set(K)) == 7 and all(len(k) == 4 and group.is_subgroup(k) for k in K)
    assert frozenset().union(*K) == frozenset(range(8))


def test_subgroup_counts_by_brute_force():
    # number of subspaces of GF(2)^l by dimension
    sizes = {l: sorted(len(s) for s in group.all_subgroups(l)) for l in range(1, 5)}
    assert sizes[2].count(2) == 3
    assert sizes[3].count(2) == 7 and sizes[3].count(4) == 7
    assert sizes[4].count(2) == 15 and sizes[4].count(4) == 35 and sizes[4].count(8) == 15


def test_complement_coset():
    assert complement_coset(K[4]) == fs(1, 2, 5, 6)
    assert complement_coset(K[0]) == fs(1, 4, 5, 7)
    for k in K:
        assert k | complement_coset(k) == frozenset(range(8))
        assert not k & complement_coset(k)


def test_overgroups_and_complements_for_x1():
    h = fs(0, 1)
    assert set(overgroups(h)) == {fs(0, 1, 2, 4), fs(0, 1, 3, 5), fs(0, 1, 6, 7)}
    assert complements(h) == (K[0], K[4], K[5], K[6])


@pytest.mark.parametrize("h", H)
def test_lemma1_structure(h):
    over, comp = overgroups(h), complements(h)
    assert len(over) == 3 and len(comp) == 4
    assert set(over) | set(comp) == set(K) and not set(over) & set(comp)
    for k in comp:
        homes = [next(i for i, big in enumerate(over) if s in big) for s in k - {0}]
        assert sorted(homes) == [0, 1, 2]
    for k0, kj in itertools.permutations(comp, 2):
        z = lemma1_z(h, k0, kj)
        assert z in complement_coset(kj) and z not in h and z not in k0


def test_lemma1_z_values():
    h = fs(0, 1)
    assert lemma1_z(h, K[0], K[4]) == 5
    assert lemma1_z(h, K[0], K[5]) == 4
    assert lemma1_z(h, K[0], K[6]) == 7
    with pytest.raises(ValueError):
        lemma1_z(h, K[0], K[0])
    with pytest.raises(ValueError):
        lemma1_z(h, K[0], K[1])


def test_decompositions():
    ds = group.decompositions()
    assert len(ds) == 28
    for d in ds:
        assert d.x1 & d.x2 == {0}
        assert {add(a, b) for a in d.x1 for b in d.x2} == set(range(8))


def test_walsh_examples():
    assert walsh_forward([Fraction(1, 8)] * 8) == (1, 0, 0, 0, 0, 0, 0, 0)
    assert walsh_forward([1, 0, 0, 0, 0, 0, 0, 0]) == (1,) * 8
    assert walsh_inverse([1, 0, 0, 0, 0, 0, 0, 0]) == (Fraction(1, 8),) * 8
    q = Fraction(2, 5)
    masses = walsh_inverse([1] + [q] * 7)
    assert masses == ((1 + 7 * q) / 8,) + ((1 - q) / 8,) * 7
    assert walsh_forward(masses) == (1,) + (q,) * 7


@given(rational_vectors())
def test_walsh_round_trip_and_parseval(v):
    hat = walsh_forward(v)
    assert walsh_inverse(hat) == tuple(v)
    assert sum(x * x for x in hat) == 8 * sum(x * x for x in v)


def test_character_orthogonality():
    for l in range(1, 5):
        n = 1 << l
        for i in range(n):
            total = sum(pairing(i, y, l) for y in range(n))
            assert total == (n if i == 0 else 0)


def test_sigma():
    assert sigma(1) == tuple(range(8))
    assert group.apply_perm(sigma(2), K[0]) == K[1]
    assert group.apply_perm(sigma(5), K[0]) == K[4]
    for k in range(1, 8):
        s = sigma(k)
        assert all(s[s[i]] == i for i in range(8))
        assert group.apply_perm(s, K[0]) == K[k - 1]
    with pytest.raises(ValueError):
        sigma(8)


def test_automorphisms():
    autos = group.automorphisms(3)
    assert len(set(autos)) == 168
    for a in autos:
        assert a[0] == 0
        assert all(a[add(x, y)] == add(a[x], a[y]) for x in range(8) for y in range(8))
