from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fdpairs.constructions import base_set, block_E, dircon1, dircon2, lift_pair, power_group, power_set
from fdpairs.duality import (
    chi_square_real, is_formally_dual, lifting_condition, partner_obstructions, required_partner_weights,
    verify_formally_dual, verify_primitive,
)
from fdpairs.errors import EmptySetError, NotAPartitionError
from fdpairs.groups import all_subgroups, make_group

from conftest import groups, subsets

G_J, J = base_set("J")
G_L, L = base_set("L")
JJ = power_set(J, 2)


def test_known_pairs_verify():
    assert verify_formally_dual(G_J, J, J).ok
    assert verify_formally_dual(G_L, L, L).ok
    assert is_formally_dual(G_L, JJ, JJ)


def test_size_precheck():
    rep = verify_formally_dual(make_group([5]), [(0,), (1,)], [(0,), (1,)])
    assert not rep.ok
    assert str(rep.failures[0]) == "size precheck 4 != 5"


def test_failure_witness_and_required_nu():
    Z4 = make_group([4])
    rep = verify_formally_dual(Z4, [(0,), (2,)], [(0,), (1,)], "S-side")
    assert not rep.ok
    f = rep.failures[0]
    assert f.witness is not None and f.required_nu == Fraction(f.lhs * 2, 4)


def test_empty_sets_rejected():
    with pytest.raises(EmptySetError):
        verify_formally_dual(G_J, [], J)


def test_primitivity_examples():
    assert verify_primitive(G_J, J).primitive
    rep = verify_primitive(G_J, [(0,), (2,)])
    assert not rep.primitive and rep.coset_confined and rep.stabilized
    p = dircon1(1)
    assert verify_primitive(p.group, p.T).primitive


@settings(max_examples=80, deadline=None)
@given(groups(bound=64), st.data())
def test_character_criterion_matches_coset_test(G, data):
    S = data.draw(subsets(G))
    assert verify_primitive(G, S).character_criterion_agrees


def test_proper_subgroups_of_lifted_group_are_confined():
    # any proper subgroup H of Z2 x Z4^2 is caught both directly and through characters
    G = make_group([2, 4, 4])
    for H in all_subgroups(G):
        if H.is_proper:
            rep = verify_primitive(G, H.elements())
            assert rep.coset_confined and rep.character_confined


def _random_instance(rng):
    orders = [int(x) for x in rng.choice([2, 3, 4, 6], size=int(rng.integers(1, 4)))]
    while np.prod(orders) > 64:
        orders.pop()
    G = make_group(orders)
    divs = [d for d in range(1, G.order + 1) if G.order % d == 0]
    s = int(rng.choice(divs))
    S = [G.unrank(int(r)) for r in rng.choice(G.order, s, replace=False)]
    T = [G.unrank(int(r)) for r in rng.choice(G.order, G.order // s, replace=False)]
    return G, S, T


def _dual_instances():
    out = [(G_J, J, J), (G_L, L, L), (G_L, JJ, JJ)]
    for p in (dircon1(1), dircon2(1)):
        out.append((p.group, p.S, p.T))
    return out


def test_interchangeability_and_translation_invariance():
    rng = np.random.default_rng(7)
    cases = _dual_instances() + [_random_instance(rng) for _ in range(50)]
    n_dual = 0
    for G, S, T in cases:
        s_ok = verify_formally_dual(G, S, T, "S-side").ok
        assert s_ok == verify_formally_dual(G, S, T, "T-side").ok
        n_dual += s_ok
        g, h = G.unrank(int(rng.integers(G.order))), G.unrank(int(rng.integers(G.order)))
        moved = verify_formally_dual(G, [G.add(x, g) for x in S], [G.add(x, h) for x in T], "both")
        assert moved.ok == s_ok
    assert n_dual >= len(_dual_instances())


def test_cross_pair_of_jj_and_l_under_the_fixed_pairing():
    # only the coordinate-wise pairing is tried; (JxJ, L) fails under it
    rep = verify_formally_dual(G_L, JJ, L)
    assert not rep.ok
    assert rep.failures[0].witness == (0, 1) and rep.failures[0].lhs == 8


@pytest.mark.parametrize("m", [1, 2])
def test_odd_power_of_j_forces_half(m):
    n = 2 * m + 1
    G = power_group(4, n)
    T = power_set(J, n)
    S0 = frozenset(x for x in T if sum(x) % 4 in (0, 1))
    p = lift_pair(G, S0, T - S0, T)
    forced = required_partner_weights(p.group, p.T, p.group.order // len(p.T))
    z = (0,) + (1,) * n
    assert forced[p.group.rank(z)] == Fraction(1, 2)
    assert any(y == z for y, _ in partner_obstructions(p.group, p.T, len(p.S)))
    assert not verify_formally_dual(p.group, p.S, p.T).ok


def test_lifting_condition_examples():
    S0 = [(0, 0), (0, 1), (1, 0)]
    assert lifting_condition(G_L, S0, [(1, 1)], JJ).holds
    assert lifting_condition(G_L, block_E(1, 1), block_E(1, 0), L).holds
    bad = lifting_condition(G_L, JJ, [], JJ)
    assert not bad.holds and bad.witness is not None and bad.equation in (1, 2)


def test_lifting_condition_matches_lifted_verification():
    for p in (dircon1(1), dircon1(2), dircon2(1), dircon2(2)):
        assert lifting_condition(p.base_group, p.S0, p.S1, p.base_T).holds
        assert verify_formally_dual(p.group, p.S, p.T).ok


def test_lifting_condition_rejects_overlap():
    with pytest.raises(NotAPartitionError):
        lifting_condition(G_L, [(0, 0)], [(0, 0)], L)


def test_chi_square_real_examples():
    assert chi_square_real(G_L, L)
    assert not chi_square_real(G_J, J)
    assert chi_square_real(G_J, [(0,), (2,)])
    assert chi_square_real(G_L, [(0, 1), (0, 3)])
