import pytest

from fillpairs.census import (
    CensusTooLarge,
    count_ordered,
    diff_prefixes,
    enumerate_brute,
    enumerate_constructive,
    genus2_census,
    scan,
    verify_one,
)
from fillpairs.origami import Origami, canonical_form, is_coherent_minimal_pair, orbit_size
from fillpairs.perms import Perm, PermutationError, iterate_ncycles, parse_cycle
from fillpairs.bounds import exact_bound


def _python_census(n, group="mirror"):
    classes = set()
    ordered = 0
    for c in iterate_ncycles(n):
        o = Origami.from_cycle(c)
        if is_coherent_minimal_pair(o):
            ordered += 1
            classes.add(canonical_form(o, group))
    return ordered, classes


@pytest.mark.parametrize("group", ["mirror", "full"])
@pytest.mark.parametrize("g", [3, 4, 5])
def test_kernel_matches_python(g, group):
    ordered, classes = _python_census(2 * g - 1, group)
    res = enumerate_brute(g, group=group)
    assert res.canonical_set() == classes
    assert res.ordered_count == ordered == count_ordered(g)
    for c in res.classes:
        assert orbit_size(c.origami(), group) == c.orbit_size
        assert c.stratum == (2 * g - 2,)


@pytest.mark.parametrize("n", [4, 6])
def test_even_n_has_no_single_vertex_cycles(n):
    assert scan(n, canonical=False, store=False)[0] == 0


def test_unpruned_scan_counts_all_cycles():
    # every accepted row is a valid single-vertex cycle, and rows come out sorted
    valid, rows = scan(7, canonical=False)
    assert valid == len(rows) == 112
    keys = [tuple(r[:7]) for r in rows]
    assert keys == sorted(keys)
    for r in rows:
        cyc = [0]
        for d in r[:6]:
            cyc.append((cyc[-1] + int(d)) % 7)
        assert is_coherent_minimal_pair(Origami.from_cycle(cyc))


def test_prefixes_partition():
    pre = diff_prefixes(9, canonical=False)
    assert len(pre) == 8 * 7
    assert len(set(pre)) == len(pre)


@pytest.mark.parametrize("g", [3, 4, 5])
def test_brute_equals_constructive(g):
    brute = enumerate_brute(g)
    cons = enumerate_constructive(g)
    assert brute.canonical_set() == cons.canonical_set()
    assert [c.canonical for c in brute.classes] == [c.canonical for c in cons.classes]
    # every class is built once per mirror image
    assert cons.extra["constructed"] == 2 * cons.count


def test_workers_do_not_change_output():
    one = enumerate_brute(5, workers=1)
    two = enumerate_brute(5, workers=2)
    assert [c.to_json() for c in one.classes] == [c.to_json() for c in two.classes]


def test_output_sorted_and_distinct():
    res = enumerate_brute(5)
    keys = [c.canonical for c in res.classes]
    assert keys == sorted(set(keys))


@pytest.mark.parametrize("g", [3, 4, 5])
def test_census_below_exact_bound(g):
    assert enumerate_brute(g).count <= exact_bound(g)[1]


def test_genus_gates():
    with pytest.raises(CensusTooLarge):
        enumerate_brute(8)
    with pytest.raises(ValueError):
        enumerate_brute(2)


def test_genus2():
    res = genus2_census()
    assert res.extra["candidates"] == 6
    assert res.ordered_count == 4
    assert res.count == 1


def test_verify_one():
    r = verify_one(parse_cycle("(1 2 5 3 4)"), 5)
    assert r["valid"] and r["valid_via_trace"]
    assert (r["genus"], r["orbit_size"], r["stratum"]) == (3, 10, [4])
    r = verify_one(Perm.rotation(5), 5)
    assert not r["valid"] and r["genus"] == 1
    r = verify_one(parse_cycle("(1 3 9 7 6 8 5 4 2)"))
    assert r["valid"] and r["genus"] == 5
    r = verify_one(Perm((1, 0, 2)))
    assert r == {"n": 3, "is_ncycle": False, "valid": False}
    with pytest.raises(PermutationError):
        verify_one(Perm.identity(4), 5)
