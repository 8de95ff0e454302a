from itertools import combinations

import pytest

from grpdeg import Subgroup, is_normal
from grpdeg.errors import NotASubgroup
from grpdeg.spec import default_corpus, resolve
from grpdeg.subgroups import all_subgroups, normal_subgroups


def subgroups_by_subsets(G):
    """Every subset containing 0 that passes the Subgroup closure checks."""
    found = []
    rest = range(1, G.order)
    for k in range(G.order):
        for combo in combinations(rest, k):
            try:
                found.append(Subgroup(G, (0,) + combo).members)
            except NotASubgroup:
                pass
    return sorted(found)


@pytest.mark.parametrize(
    "spec", ["cyclic:6", "dihedral:3", "dihedral:4", "dicyclic:2", "dihedral:2 x cyclic:2",
             "cyclic:2 x cyclic:5", "dihedral:5", "alt:4"]
)
def test_matches_subset_enumeration(spec):
    G = resolve(spec)
    assert sorted(s.members for s in all_subgroups(G)) == subgroups_by_subsets(G)


@pytest.mark.parametrize(
    "spec, count, normal",
    [("sym:4", 30, 4), ("dihedral:4", 10, 6), ("dicyclic:2", 6, 6),
     ("dihedral:2 x dihedral:2", 67, 67), ("cyclic:24", 8, 8), ("dihedral:12", 34, 9)],
)
def test_known_counts(spec, count, normal):
    G = resolve(spec)
    assert len(all_subgroups(G)) == count
    assert len(normal_subgroups(G)) == normal


def test_lagrange_over_corpus():
    for spec in default_corpus(24):
        G = resolve(spec)
        subs = all_subgroups(G)
        assert subs[0].is_trivial and subs[-1].is_whole
        assert all(G.order % s.order == 0 for s in subs)
        assert len({s.members for s in subs}) == len(subs)


def test_normal_filter():
    G = resolve("sym:4")
    assert [N.order for N in normal_subgroups(G)] == [1, 4, 12, 24]
    assert all(is_normal(G, N) for N in normal_subgroups(G))
