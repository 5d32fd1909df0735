import itertools

import pytest

from fillpairs.menage import (
    black_slot,
    enumerate_menage,
    gilbert_class_count,
    gilbert_class_of,
    gilbert_classes,
    is_all_opposite,
    is_menage,
    menage_number,
    opposite_permutation,
    rotate_conjugate,
    usable_classes,
    white_slot,
)


def test_is_menage_small():
    assert sum(is_menage(P) for P in itertools.permutations(range(5))) == 13


@pytest.mark.parametrize("n", range(3, 10))
def test_touchard_matches_enumeration(n):
    assert menage_number(n) == sum(1 for _ in enumerate_menage(n))


def test_known_values():
    assert [menage_number(n) for n in range(3, 10)] == [1, 2, 13, 80, 579, 4738, 43387]


def test_enumeration_is_lexicographic():
    out = list(enumerate_menage(6))
    assert out == sorted(out)
    assert all(is_menage(P) for P in out)


def test_small_n_rejected():
    with pytest.raises(ValueError):
        menage_number(2)
    with pytest.raises(ValueError):
        list(enumerate_menage(2))


def test_gilbert_classes_n5():
    classes = gilbert_classes(5)
    assert sorted(c.size for c in classes) == [1, 1, 1, 5, 5]
    assert sum(c.size for c in classes) == 13


@pytest.mark.parametrize("n", range(3, 10))
def test_burnside_matches_orbits(n):
    classes = gilbert_classes(n)
    assert len(classes) == gilbert_class_count(n)
    assert sum(c.size for c in classes) == menage_number(n)


def test_class_membership_closed():
    for c in gilbert_classes(6):
        members = c.members()
        assert len(members) == c.size
        assert all(gilbert_class_of(P) == c for P in members)
        assert rotate_conjugate(members[0], 0) == members[0]


def test_slot_layout_adjacency():
    n = 7
    for i in range(n):
        w = white_slot(i, n)
        neighbours = {(w - 2) % (2 * n) + 1, w % (2 * n) + 1}
        assert neighbours == {black_slot(i, n), black_slot((i + 1) % n, n)}


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_single_opposite_class(n):
    assert is_menage(opposite_permutation(n))
    assert sum(is_all_opposite(P) for P in enumerate_menage(n)) == 1
    assert len(usable_classes(n)) == len(gilbert_classes(n)) - 1


def test_opposite_needs_odd():
    with pytest.raises(ValueError):
        opposite_permutation(6)
    with pytest.raises(ValueError):
        is_all_opposite((2, 3, 0, 1))
