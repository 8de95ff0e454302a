import pytest

from grpdeg import (
    InvalidParameter,
    NotAPermutation,
    OrderCapExceeded,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    from_permutation_generators,
    heisenberg,
    nilpotency_class,
    structure_probe,
    symmetric,
)

from oracles import perm_closure
from test_group_core import isomorphic_by_search


@pytest.mark.parametrize(
    "ctor, arg, order",
    [
        (cyclic, 1, 1), (cyclic, 7, 7), (dihedral, 1, 2), (dihedral, 6, 12),
        (symmetric, 1, 1), (symmetric, 4, 24), (alternating, 3, 3), (alternating, 4, 12),
        (dicyclic, 2, 8), (dicyclic, 5, 20), (heisenberg, 2, 8), (heisenberg, 3, 27),
    ],
)
def test_orders(ctor, arg, order):
    assert ctor(arg).order == order


@pytest.mark.parametrize(
    "ctor, arg",
    [(cyclic, 0), (dihedral, 0), (symmetric, 0), (alternating, 2), (dicyclic, 1),
     (heisenberg, 4), (heisenberg, 1), (cyclic, 2.5)],
)
def test_invalid(ctor, arg):
    with pytest.raises(InvalidParameter):
        ctor(arg)


def test_c2_times_c3_is_c6():
    P = direct_product(cyclic(2), cyclic(3))
    assert P.is_abelian and structure_probe(P).is_cyclic and P.order == 6


def test_q8_single_involution():
    census = structure_probe(dicyclic(2)).element_order_census
    assert census == {1: 1, 2: 1, 4: 6}


def test_q8_matches_quaternions():
    from oracles import q8_elements, q_mul
    from grpdeg import from_cayley_table

    els = q8_elements()
    table = [[els.index(q_mul(a, b)) for b in els] for a in els]
    assert isomorphic_by_search(from_cayley_table(table), dicyclic(2))


def test_dihedral_ordering():
    D = dihedral(5)
    r, s = 1, 5
    assert [D.labels[i] for i in (0, 4, 5, 9)] == ["r0", "r4", "r0s", "r4s"]
    assert D.mul(r, s) == 6  # r*s is the reflection rs
    assert D.mul(s, r) == D.mul(D.inv(r), s)  # s r = r^-1 s
    assert D.element_orders[5:].tolist() == [2] * 5


def test_dicyclic_relations():
    G = dicyclic(3)
    a, x = 1, 6
    assert G.element_orders[a] == 6
    assert G.mul(x, x) == 3  # x^2 = a^m
    assert G.mul(G.mul(x, a), G.inv(x)) == G.inv(a)


def test_heisenberg_class_two():
    for p in (2, 3, 5):
        H = heisenberg(p)
        assert nilpotency_class(H) == 2


def test_heisenberg_2_is_d4():
    assert isomorphic_by_search(heisenberg(2), dihedral(4))


def test_alternating_4_has_no_order_6_subgroup_elements():
    assert structure_probe(alternating(4)).element_order_census == {1: 1, 2: 3, 3: 8}


class TestPermutationGenerators:
    def test_s3(self):
        G = from_permutation_generators(3, [[1, 2, 0], [1, 0, 2]])
        assert G.order == len(perm_closure([(1, 2, 0), (1, 0, 2)], 3)) == 6
        assert isomorphic_by_search(G, symmetric(3))

    def test_empty(self):
        assert from_permutation_generators(4, []).order == 1

    def test_d4(self):
        G = from_permutation_generators(4, [[1, 2, 3, 0], [0, 3, 2, 1]])
        assert G.order == len(perm_closure([(1, 2, 3, 0), (0, 3, 2, 1)], 4)) == 8
        assert isomorphic_by_search(G, dihedral(4))

    def test_identity_first(self):
        G = from_permutation_generators(5, [[1, 2, 3, 4, 0]])
        assert G.labels[0] == "[0, 1, 2, 3, 4]"

    def test_not_a_permutation(self):
        with pytest.raises(NotAPermutation):
            from_permutation_generators(3, [[0, 0, 1]])
        with pytest.raises(NotAPermutation):
            from_permutation_generators(3, [[0, 1]])

    def test_cap(self):
        with pytest.raises(OrderCapExceeded):
            from_permutation_generators(5, [[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]], cap=100)

    def test_s5_under_default_cap(self):
        assert from_permutation_generators(5, [[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]]).order == 120
