import math

import pytest
from hypothesis import given, strategies as st

from fillpairs.perms import (
    Perm,
    PermutationError,
    commutator,
    compose,
    conjugate,
    cycle_of,
    cycles,
    format_cycles,
    from_diffs,
    inverse,
    is_ncycle,
    iterate_ncycles,
    parse_cycle,
    parse_cycles,
    prefixes,
    to_diffs,
)


def perms(min_n=1, max_n=9):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.permutations(range(n)).map(lambda v: Perm(tuple(v)))
    )


def perm_pairs(max_n=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(
            st.permutations(range(n)).map(lambda v: Perm(tuple(v))),
            st.permutations(range(n)).map(lambda v: Perm(tuple(v))),
        )
    )


def test_rejects_non_bijection():
    with pytest.raises(PermutationError):
        Perm((0, 0, 1))
    with pytest.raises(PermutationError):
        Perm(())


def test_compose_order():
    p = Perm((1, 2, 0))
    q = Perm((1, 0, 2))
    # i -> p(q(i))
    assert compose(p, q).images == (2, 1, 0)


def test_size_mismatch():
    with pytest.raises(PermutationError):
        compose(Perm.identity(3), Perm.identity(4))


def test_cycles_listed_from_minimum():
    p = parse_cycles("(3 1)(2 5 4)", 5)
    assert cycles(p) == [(0, 2), (1, 4, 3)]


def test_parse_and_format_roundtrip():
    p = parse_cycle("(1 2 5 3 4)")
    assert p.images == (1, 4, 3, 0, 2)
    assert format_cycles(p) == "(1 2 5 3 4)"
    assert format_cycles(Perm.identity(3)) == "()"


@pytest.mark.parametrize("text", ["(1 2 2)", "1 2 3", "(1 2)(3", "(0 1)"])
def test_parse_rejects(text):
    with pytest.raises(PermutationError):
        parse_cycles(text)


def test_parse_cycle_needs_single_cycle():
    with pytest.raises(PermutationError):
        parse_cycle("(1 2)(3 4)")
    with pytest.raises(PermutationError):
        parse_cycle("(1 2 3)", 4)


@pytest.mark.parametrize("n", range(2, 8))
def test_iterate_ncycles_counts_and_order(n):
    seen = list(iterate_ncycles(n))
    assert len(seen) == math.factorial(n - 1)
    assert seen == sorted(seen)
    assert all(is_ncycle(Perm.from_cycle(c)) for c in seen)


def test_prefix_partition_covers_everything():
    n = 6
    parts = [c for pre in prefixes(n, 2) for c in iterate_ncycles(n, pre)]
    assert parts == list(iterate_ncycles(n))


def test_bad_prefix():
    with pytest.raises(ValueError):
        list(iterate_ncycles(5, (0,)))
    with pytest.raises(ValueError):
        list(iterate_ncycles(5, (2, 2)))


def test_from_diffs_rejects_non_cycles():
    with pytest.raises(PermutationError):
        from_diffs((2, 2, 2, 2))
    with pytest.raises(PermutationError):
        from_diffs((1, 1, 1, 2))


@given(perms())
def test_inverse(p):
    assert compose(p, inverse(p)) == Perm.identity(p.n)


@given(perm_pairs())
def test_commutator_cycle_count_symmetric(pair):
    a, b = pair
    k = len(cycles(commutator(a, b)))
    assert len(cycles(commutator(b, a))) == k
    assert len(cycles(inverse(commutator(a, b)))) == k


@given(perm_pairs())
def test_conjugate_preserves_cycle_type(pair):
    p, r = pair
    lengths = sorted(len(c) for c in cycles(p))
    assert sorted(len(c) for c in cycles(conjugate(p, r))) == lengths


@given(st.integers(2, 10).flatmap(lambda n: st.permutations(range(1, n)).map(lambda t: (0, *t))))
def test_diffs_roundtrip(entries):
    assert from_diffs(to_diffs(entries)) == entries
    assert cycle_of(Perm.from_cycle(entries)) == entries
