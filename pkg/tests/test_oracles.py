import random

import pytest
from helpers import random_abelian_action, random_invariant_order

from invorder.action import Permutation, cyclic_action, generate_group, trivial_action
from invorder.errors import CapExceeded
from invorder.oracles import (
    all_invariant_linear_preorders,
    cone_member_brute,
    is_invariant_over_group,
    leq_g_by_sequences,
    linear_extensions_by_permutations,
    sim_g_by_definition,
)
from invorder.lattice import ConeOrder
from invorder.relations import Relation, classify


def test_simg_definition_examples():
    assert sim_g_by_definition(cyclic_action(2, (0, 1)), 0, 1)
    assert not sim_g_by_definition(trivial_action(2), 0, 1)
    rng = random.Random(1)
    for _ in range(30):
        a = random_abelian_action(rng)
        assert all(sim_g_by_definition(a, x, x) for x in range(a.n))


def test_simg_definition_cap():
    big = generate_group(9, [Permutation.from_cycles(9, (0, 1, 2, 3, 4)), Permutation.from_cycles(9, (5, 6, 7, 8))])
    assert big.order == 20
    sim_g_by_definition(big, 0, 1)
    huge = generate_group(18, [Permutation.from_cycles(18, tuple(range(7))), Permutation.from_cycles(18, tuple(range(7, 18)))])
    assert huge.order == 77
    with pytest.raises(CapExceeded):
        sim_g_by_definition(huge, 0, 1)


def test_sequences_trivial_group_is_leq():
    leq = Relation.from_pairs(3, [(0, 1)], reflexive_close=True)
    a = trivial_action(3)
    for x in range(3):
        for y in range(3):
            assert leq_g_by_sequences(a, leq, x, y, 6) == leq(x, y)


def test_sequences_double_swap():
    a = cyclic_action(4, (0, 1), (2, 3))
    leq = Relation.from_pairs(4, [(0, 2), (1, 3)], reflexive_close=True)
    assert not leq_g_by_sequences(a, leq, 1, 2, 1)
    assert leq_g_by_sequences(a, leq, 1, 2, 2)
    assert not leq_g_by_sequences(a, leq, 2, 1, 6)


def test_sequences_caps():
    a = cyclic_action(7, (0, 1, 2, 3, 4, 5, 6))
    with pytest.raises(CapExceeded):
        leq_g_by_sequences(a, Relation.equality(7), 0, 0, 3)
    with pytest.raises(CapExceeded):
        leq_g_by_sequences(trivial_action(2), Relation.equality(2), 0, 0, 7)


def test_sequences_never_overclaim():
    from invorder.extension import leq_g

    rng = random.Random(2)
    for _ in range(40):
        a = random_abelian_action(rng, max_order=6)
        leq = random_invariant_order(rng, a)
        lg = leq_g(a, leq)
        for x in range(a.n):
            for y in range(a.n):
                for k in (1, 2, 3):
                    if leq_g_by_sequences(a, leq, x, y, k):
                        assert lg(x, y)


def test_all_preorders_counts():
    assert len(list(all_invariant_linear_preorders(trivial_action(1)))) == 1
    assert len(list(all_invariant_linear_preorders(trivial_action(2)))) == 3
    swap = list(all_invariant_linear_preorders(cyclic_action(2, (0, 1))))
    assert len(swap) == 1 and swap[0].pairs() == [(0, 0), (0, 1), (1, 0), (1, 1)]
    # ordered set partitions of 3 and 4 points (Fubini numbers)
    assert len(list(all_invariant_linear_preorders(trivial_action(3)))) == 13
    assert len(list(all_invariant_linear_preorders(trivial_action(4)))) == 75


def test_all_preorders_exhaustive_and_distinct():
    rng = random.Random(3)
    for _ in range(20):
        a = random_abelian_action(rng, max_n=4)
        got = list(all_invariant_linear_preorders(a))
        assert len(got) == len(set(got))
        for r in got:
            assert classify(r).is_linear_preorder and is_invariant_over_group(r, a)


def test_all_preorders_cap():
    with pytest.raises(CapExceeded):
        next(all_invariant_linear_preorders(trivial_action(6)))


def test_linear_extensions_by_permutations():
    assert len(linear_extensions_by_permutations(Relation.equality(3))) == 6
    chain = Relation.from_sequence(3, [2, 0, 1])
    assert linear_extensions_by_permutations(chain) == [(2, 0, 1)]


def test_cone_member_brute():
    c = ConeOrder(2, [(2, 0), (0, 2)])
    assert cone_member_brute(c, (1, 1)) == (2, (1, 1))
    assert cone_member_brute(ConeOrder(2, [(1, 0)]), (0, 1)) is None
