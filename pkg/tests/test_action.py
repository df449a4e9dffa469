import itertools
import random

import pytest
from helpers import random_abelian_action

from invorder.action import (
    EquivalenceClasses,
    Permutation,
    acts_trivially,
    collapse_exponents,
    collapse_net_exponents,
    condition_no_finite_orbits,
    cyclic_action,
    element_orbit,
    evaluate_word,
    finite_orbit_witness,
    generate_group,
    orbits,
    powerset_action,
    quotient_action,
    sim_g,
    subset_inclusion,
    trivial_action,
)
from invorder.errors import CapExceeded, NonAbelianError, NotABijection, WellDefinednessError
from invorder.oracles import sim_g_by_definition
from invorder.relations import Relation, classify


def test_permutation_basics():
    p = Permutation.from_cycles(4, (0, 1, 2))
    assert p.order() == 3
    assert (p * p.inverse()).is_identity()
    assert p ** 3 == Permutation.identity(4)
    assert p ** -1 == p.inverse()
    assert str(p) == "(0 1 2)"
    with pytest.raises(NotABijection):
        Permutation((0, 0, 1))


def test_generate_trivial():
    a = generate_group(3, [])
    assert a.order == 1 and a.abelian


def test_generate_swap():
    assert cyclic_action(3, (0, 1)).order == 2


def test_generate_rejects_noncommuting():
    gens = [Permutation.from_cycles(3, (0, 1, 2)), Permutation.from_cycles(3, (0, 1))]
    assert gens[0] * gens[1] != gens[1] * gens[0]
    with pytest.raises(NonAbelianError):
        generate_group(3, gens)
    s3 = generate_group(3, gens, allow_nonabelian=True)
    assert s3.order == 6 and not s3.abelian


def test_generate_cap():
    with pytest.raises(CapExceeded):
        generate_group(5, [Permutation.from_cycles(5, (0, 1, 2, 3, 4))], cap=4)


def test_generate_bad_generator():
    with pytest.raises(NotABijection):
        generate_group(3, [Permutation.from_cycles(2, (0, 1))])


def test_words_reproduce_elements():
    rng = random.Random(3)
    for _ in range(50):
        a = random_abelian_action(rng)
        for g in a.elements:
            assert evaluate_word(g.word, a.generators, a.n) == g.perm
        assert len(set(g.perm for g in a.elements)) == a.order
        # closed under composition and inverse
        perms = {g.perm for g in a.elements}
        assert all(p * q in perms and p.inverse() in perms for p in perms for q in perms)


def test_element_order_is_deterministic():
    a1 = generate_group(4, [Permutation.from_cycles(4, (0, 1)), Permutation.from_cycles(4, (2, 3))])
    a2 = generate_group(4, [Permutation.from_cycles(4, (0, 1)), Permutation.from_cycles(4, (2, 3))])
    assert [g.perm for g in a1.elements] == [g.perm for g in a2.elements]
    assert [g.word for g in a1.elements] == [(), (0,), (1,), (0, 1)]


# -- orbits ------------------------------------------------------------------------


def test_orbits_trivial():
    assert orbits(trivial_action(2)).classes() == [frozenset({0}), frozenset({1})]


def test_element_orbit():
    g = cyclic_action(4, (0, 1), (2, 3)).elements[1]
    assert element_orbit(g, 0) == {0, 1}


def test_group_orbits_two_swaps():
    a = generate_group(4, [Permutation.from_cycles(4, (0, 1)), Permutation.from_cycles(4, (2, 3))])
    assert a.order == 4
    assert orbits(a).classes() == [frozenset({0, 1}), frozenset({2, 3})]


def test_condition_examples():
    assert condition_no_finite_orbits(trivial_action(3))
    assert condition_no_finite_orbits(trivial_action(5))
    a = cyclic_action(2, (0, 1))
    assert not condition_no_finite_orbits(a)
    g, orb = finite_orbit_witness(a)
    assert orb == {0, 1} and g.perm == Permutation.from_cycles(2, (0, 1))


def test_condition_literal_equals_shortcut():
    rng = random.Random(11)
    for _ in range(200):
        a = random_abelian_action(rng)
        assert condition_no_finite_orbits(a) == acts_trivially(a) == (a.order == 1)


# -- ~G ---------------------------------------------------------------------------


def test_simg_examples():
    assert sim_g(trivial_action(3)) == Relation.equality(3)
    swap = sim_g(cyclic_action(2, (0, 1)))
    assert (0, 1) in swap and (1, 0) in swap
    assert sim_g(cyclic_action(3, (0, 1, 2))).pairs() == [(i, j) for i in range(3) for j in range(3)]


def _sequence_characterization(a, x, y, max_len=6):
    """x = g_i y for all i and product e, over multisets of length <= max_len."""
    usable = [g.perm for g in a.elements if g(y) == x]
    ident = Permutation.identity(a.n)
    for k in range(1, max_len + 1):
        for seq in itertools.combinations_with_replacement(usable, k):
            prod = ident
            for p in seq:
                prod = prod * p
            if prod == ident:
                return True
    return False


def test_simg_properties_on_random_actions():
    rng = random.Random(5)
    for _ in range(150):
        a = random_abelian_action(rng)
        s = sim_g(a)
        c = classify(s)
        assert c.is_equivalence
        assert s == orbits(a).to_relation()
        for x in range(a.n):
            for y in range(a.n):
                assert s(x, y) == sim_g_by_definition(a, x, y)
                if a.order <= 6:
                    # every element has order <= 6 here, so the bound is exact
                    assert s(x, y) == _sequence_characterization(a, x, y)
        assert (s == Relation.equality(a.n)) == condition_no_finite_orbits(a)


def test_simg_nonabelian_still_orbit_equivalence():
    # on a finite set each element has finite order, so ~G is the orbit relation even for S3
    s3 = generate_group(3, [Permutation.from_cycles(3, (0, 1, 2)), Permutation.from_cycles(3, (0, 1))], allow_nonabelian=True)
    s = sim_g(s3)
    assert classify(s).is_equivalence
    assert s == orbits(s3).to_relation()


# -- quotient / powerset -------------------------------------------------------------


def test_quotient_double_swap():
    a = cyclic_action(4, (0, 1), (2, 3))
    q = quotient_action(a, orbits(a))
    assert q.n == 2 and acts_trivially(q)
    assert q.universe.labels == ("0~1", "2~3")


def test_quotient_trivial_group_isomorphic():
    a = trivial_action(3)
    q = quotient_action(a, orbits(a))
    assert q.n == 3 and q.order == 1


def test_quotient_three_cycle():
    a = cyclic_action(3, (0, 1, 2))
    assert quotient_action(a, orbits(a)).n == 1


def test_quotient_detects_ill_defined_classes():
    a = cyclic_action(4, (0, 1, 2, 3))
    bad = EquivalenceClasses(a.universe, (0, 0, 2, 2))
    with pytest.raises(WellDefinednessError):
        quotient_action(a, bad)


def test_quotient_simg_is_equality():
    rng = random.Random(8)
    for _ in range(100):
        a = random_abelian_action(rng)
        q = quotient_action(a, EquivalenceClasses.from_relation(sim_g(a)))
        assert sim_g(q) == Relation.equality(q.universe)
        assert condition_no_finite_orbits(q)


def test_powerset_trivial():
    p = powerset_action(trivial_action(1))
    assert p.n == 2 and p.universe.labels == ("∅", "{0}")


def test_powerset_swap():
    p = powerset_action(cyclic_action(2, (0, 1)))
    assert p.universe.labels == ("∅", "{0}", "{1}", "{0,1}")
    assert p.generators[0].images == (0, 2, 1, 3)


def test_powerset_three_cycle():
    p = powerset_action(cyclic_action(3, (0, 1, 2)))
    labels = p.universe.labels
    assert labels == ("∅", "{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}", "{0,1,2}")
    g = p.generators[0]
    # {0}->{1}->{2}, {0,1}->{1,2}->{0,2}
    assert [labels[g(i)] for i in range(8)] == ["∅", "{1}", "{2}", "{0}", "{1,2}", "{0,1}", "{0,2}", "{0,1,2}"]
    assert cycle_lengths(g) == [3, 3]


def cycle_lengths(p):
    return sorted(len(c) for c in p.cycles())


def test_powerset_cap():
    with pytest.raises(CapExceeded):
        powerset_action(trivial_action(6))


def test_subset_inclusion_is_invariant_partial_order():
    a = cyclic_action(3, (0, 1, 2))
    p = powerset_action(a)
    inc = subset_inclusion(3)
    assert classify(inc).is_partial_order
    from invorder.relations import is_invariant

    assert is_invariant(inc, p)


# -- exponent bookkeeping for collapsing classes -----------------------------------


def test_collapse_exponents_base_case():
    assert collapse_exponents(3, 3, 3) == (6, 9, 9, 3)


@pytest.mark.parametrize("m,n,p", list(itertools.product(range(3, 8), repeat=3)))
def test_collapse_identity_against_free_group(m, n, p):
    from sympy.combinatorics.free_groups import free_group

    _, f, g, h = free_group("f g h")
    factors = [f * g, f * g ** (1 - n), f ** (1 - m) * g * h ** -1, f * g * h**p]
    mult = collapse_exponents(m, n, p)
    assert all(k >= 0 for k in mult)
    word = factors[0] ** mult[0] * factors[1] ** mult[1] * factors[2] ** mult[2] * factors[3] ** mult[3]
    net = [sum(e for s, e in word.array_form if s == sym) for sym in (f.array_form[0][0], g.array_form[0][0], h.array_form[0][0])]
    assert net == [0, 0, 0]
    assert collapse_net_exponents(m, n, p) == (0, 0, 0)
