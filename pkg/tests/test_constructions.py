import itertools

import pytest

from fdpairs.characters import character_spectrum
from fdpairs.constructions import (
    _dircon1, _dircon2, base_set, binomial, block_B, block_E, dircon1, dircon1_spectrum, dircon2,
    dircon2_inductive, dircon2_theta, j_difference_value, j_sum_value, l_difference_value, l_sum_value,
    lift_pair, mix, mix_theta, power_set, predict, product_pair, recur_combine, s0s1_difference_value,
    support_sizes, t_plus_tinv_norm, theta_product_law,
)
from fdpairs.duality import verify_formally_dual, verify_primitive
from fdpairs.errors import ConditionViolatedError, NotAPartitionError, ParameterError
from fdpairs.group_ring import GroupRingElement, difference_counts, difference_spectrum, ring_product, theta
from fdpairs.groups import FiniteAbelianGroup, make_group

TITO_S = {(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 1, 1)}
TITO_T = {(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 3), (1, 3, 0), (1, 3, 3)}
TEICH_S = {(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 3, 3)}
TEICH_T = {(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 3, 3), (1, 0, 0), (1, 0, 3), (1, 3, 0), (1, 1, 1)}


def _full(p):
    return (verify_formally_dual(p.group, p.S, p.T).ok
            and verify_primitive(p.group, p.S).primitive and verify_primitive(p.group, p.T).primitive)


def test_base_sets():
    assert base_set("J")[1] == {(0,), (1,)}
    assert base_set("L2")[1] == {(3, 3)}
    assert len(base_set("I")[1]) == 6
    with pytest.raises(ParameterError):
        base_set("Q")


def test_blocks():
    assert block_B(1, 2) == {(1, 1)}
    assert block_B(1, 1) == {(0, 1), (1, 0)}
    assert len(block_B(2, 2)) == 6
    assert block_E(1, 1) == base_set("L1")[1]
    assert block_E(1, 0) == {(3, 3)}
    assert len(block_E(2, 1)) == 6
    with pytest.raises(ParameterError):
        block_B(1, 3)


def test_lift_examples():
    G = make_group([4, 4])
    p = lift_pair(G, base_set("L1")[1], base_set("L2")[1], base_set("L")[1])
    assert p.S == TEICH_S and p.T == TEICH_T
    p = lift_pair(G, [(0, 0), (0, 1), (1, 0)], [(1, 1)], power_set(base_set("J")[1], 2))
    assert p.S == TITO_S and p.T == TITO_T
    JJ = power_set(base_set("J")[1], 2)
    q = lift_pair(G, JJ, [], JJ)
    assert len(q.T) == 8 and len(q.S) == 4
    with pytest.raises(NotAPartitionError):
        lift_pair(G, [(0, 0)], [(0, 0)], JJ)


def test_product_pair_examples():
    Z4, J = base_set("J")
    G, S, T = product_pair(Z4, (J, J), Z4, (J, J))
    assert S == power_set(J, 2) and verify_formally_dual(G, S, T).ok
    H, L = base_set("L")
    G, S, T = product_pair(H, (L, L), H, (L, L))
    assert G.orders == (4, 4, 4, 4) and verify_formally_dual(G, S, T).ok
    triv = FiniteAbelianGroup.trivial()
    G, S, T = product_pair(Z4, (J, J), triv, ({()}, {()}))
    assert G == Z4 and S == J and T == J


def test_recur_combine_examples():
    p = recur_combine(dircon2(1), dircon2(1))
    assert p.S == dircon2(2).S and p.T == dircon2(2).T
    assert theta(p.group, p.T) == 243
    q = recur_combine(dircon1(1), dircon2(1))
    assert theta(q.group, q.T) == 255
    with pytest.raises(ConditionViolatedError):
        recur_combine(dircon1(1), dircon1(1))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_families_verify(m):
    assert _full(dircon1(m))
    assert _full(dircon2(m))


def test_literal_examples():
    assert dircon1(1).S == TITO_S and dircon1(1).T == TITO_T
    assert dircon2(1).S == TEICH_S and dircon2(1).T == TEICH_T
    p = dircon1(2)
    assert (len(p.S), len(p.T), p.group.orders) == (16, 32, (2, 4, 4, 4, 4))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_dircon1_spectrum_formula(m):
    p = dircon1(m)
    spec = dircon1_spectrum(m)
    assert difference_spectrum(p.group, p.T) == spec
    assert spec.total() == p.group.order and spec.weighted_total() == len(p.T) ** 2


def test_dircon1_spectrum_m1():
    assert dircon1_spectrum(1) == {0: 9, 2: 16, 4: 6, 8: 1}


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_dircon2_theta(m):
    p = dircon2(m)
    assert theta(p.group, p.T) == dircon2_theta(m) == 2 ** (4 * m + 1) - 13**m - 10**m


@pytest.mark.parametrize("m", [1, 2, 3])
def test_dircon2_direct_equals_inductive(m):
    a, b = dircon2(m), dircon2_inductive(m)
    assert (a.S, a.T, a.S0, a.S1) == (b.S, b.T, b.S0, b.S1)


def test_predict_values():
    assert predict("dircon2-theta", 4) == 92511
    assert predict("mix-theta", 1, 1) == 255
    assert dircon2_theta(3) == 4995
    with pytest.raises(ParameterError):
        predict("nope", 1)
    with pytest.raises(ParameterError):
        predict("mix-theta", 1)


def test_mix_at_m2():
    thetas = {s: theta(mix(*s).group, mix(*s).T) for s in ((2, 0), (1, 1), (0, 2))}
    assert thetas == {(2, 0): 285, (1, 1): 255, (0, 2): 243}
    for s in thetas:
        assert _full(mix(*s))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_mix_theta_formula(m):
    for m1 in range(m + 1):
        p = mix(m1, m - m1)
        assert theta(p.group, p.T) == mix_theta(m1, m - m1)


def test_mix_degenerate_cases():
    assert mix(1, 0).S == dircon1(1).S and mix(1, 0).T == dircon1(1).T
    assert mix(0, 2).S == dircon2(2).S and mix(0, 2).T == dircon2(2).T
    with pytest.raises(ParameterError):
        mix(0, 0)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_predicted_thetas_distinct(m):
    vals = [mix_theta(m1, m - m1) for m1 in range(m + 1)]
    assert len(set(vals)) == m + 1


def test_m1_mix_pairs_share_spectra():
    a, b = mix(1, 0), mix(0, 1)
    G = a.group
    assert difference_spectrum(G, a.S) == difference_spectrum(G, b.S)
    assert difference_spectrum(G, a.T) == difference_spectrum(G, b.T)
    for X, Y in ((a.S, b.S), (a.T, b.T)):
        assert character_spectrum(GroupRingElement.from_set(G, X)) == character_spectrum(GroupRingElement.from_set(G, Y))


def test_theta_product_law():
    bases = [_dircon1(0), _dircon1(1), _dircon1(2), _dircon2(0), _dircon2(1), _dircon2(2)]
    checked = 0
    for P1, P2 in itertools.product(bases, repeat=2):
        try:
            P = recur_combine(P1, P2)
        except ConditionViolatedError:
            continue
        if P.group.order > 2 * 4**6:
            continue
        assert theta(P.group, P.T) == theta_product_law(P1, P2)
        checked += 1
    assert checked >= 20


@pytest.mark.parametrize("m", [1, 2, 3])
def test_support_sizes_of_l_power(m):
    p = dircon2(m)
    sizes = support_sizes(p.base_group, p.base_T)
    assert sizes["diff"] == 13**m and sizes["sum"] == 10**m


def test_binomial_convention():
    assert binomial(3, 5) == 0 and binomial(4, 2) == 6 and binomial(2, -1) == 0


def _values(G, arr, fn):
    return all(int(arr[r]) == fn(x) for r, x in enumerate(G.elements()))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_block_coefficient_lemma(m, rng):
    p = dircon1(m)
    G = p.base_group
    n = 2 * m
    for _ in range(12):
        u = int(rng.integers(0, n + 1))
        v = int(rng.integers(0, n + 1 - u))
        h = int(rng.integers(0, n - u - v + 1))
        prod = ring_product(GroupRingElement.from_set(G, block_B(m, u + h)),
                            GroupRingElement.from_set(G, block_B(m, v + h)).involution())
        for x in G.elements():
            if x.count(1) == u and x.count(3) == v and x.count(0) == n - u - v:
                assert prod[x] == binomial(n - u - v, h)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_convolution_lemmas(m):
    p = dircon1(m)
    G = p.base_group
    S0, S1 = (GroupRingElement.from_set(G, X) for X in (p.S0, p.S1))
    conv = ring_product(S0, S0.involution()) + ring_product(S1, S1.involution())
    assert _values(G, conv.coeffs, lambda z: s0s1_difference_value(m, z))
    T = GroupRingElement.from_set(G, p.base_T)
    from fdpairs.characters import integer_sq_spectrum
    assert _values(G, integer_sq_spectrum(T + T.involution()), lambda z: t_plus_tinv_norm(m, z))


@pytest.mark.parametrize("m", [1, 2])
def test_tt_difference_lemmas(m):
    p, q = dircon1(m), dircon2(m)
    G = p.base_group
    T = GroupRingElement.from_set(G, p.base_T)
    assert _values(G, difference_counts(G, p.base_T), j_difference_value)
    assert _values(G, (T * T).coeffs, j_sum_value)
    assert _values(G, (T.involution() * T.involution()).coeffs, lambda x: j_sum_value(G.neg(x)))
    Lm = GroupRingElement.from_set(G, q.base_T)
    assert _values(G, difference_counts(G, q.base_T), l_difference_value)
    assert _values(G, (Lm * Lm).coeffs, l_sum_value)


def test_invalid_parameters():
    for bad in (0, -1):
        with pytest.raises(ParameterError):
            dircon1(bad)
        with pytest.raises(ParameterError):
            dircon2(bad)
