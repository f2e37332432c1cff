import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fdpairs.errors import GroupMismatchError, InvalidOrderError, SizeLimitError
from fdpairs.groups import (
    FiniteAbelianGroup, all_subgroups, automorphisms, coset_confinement,
    direct_product, make_group, nontrivial_stabilizer, subgroup_generated,
)

from conftest import groups


@pytest.mark.parametrize("orders, order, exponent", [([4], 4, 4), ([2, 4, 4], 32, 4), ([6, 4], 24, 12), ([], 1, 1)])
def test_order_and_exponent(orders, order, exponent):
    G = make_group(orders)
    assert (G.order, G.exponent) == (order, exponent)


@pytest.mark.parametrize("orders", [[4, 1], [0], [-3]])
def test_invalid_orders(orders):
    with pytest.raises(InvalidOrderError):
        make_group(orders)


def test_elementwise_ops():
    G = make_group([4, 4])
    assert G.add((3, 3), (1, 2)) == (0, 1)
    assert G.neg((0, 1)) == (0, 3)
    assert make_group([2, 4, 4]).rank((1, 0, 0)) == 16
    assert G.element_order((2, 1)) == 4
    with pytest.raises(GroupMismatchError):
        G.add((4, 0), (0, 0))
    with pytest.raises(GroupMismatchError):
        G.rank((0, 0, 0))


@given(groups(), st.data())
def test_rank_roundtrip_and_vector_ops(G, data):
    r = data.draw(st.integers(0, G.order - 1))
    s = data.draw(st.integers(0, G.order - 1))
    g, h = G.unrank(r), G.unrank(s)
    assert G.rank(g) == r
    assert G.unrank(int(G.add_ranks(r, s))) == G.add(g, h)
    assert G.unrank(int(G.sub_ranks(r, s))) == G.sub(g, h)
    assert G.unrank(int(G.neg_ranks(r))) == G.neg(g)


def test_elements_in_rank_order():
    G = make_group([2, 3])
    assert [G.rank(x) for x in G.elements()] == list(range(6))


def test_subgroup_generated():
    Z4 = make_group([4])
    assert subgroup_generated(Z4, [(2,)]).elements() == [(0,), (2,)]
    G = make_group([4, 4])
    assert subgroup_generated(G, [(0, 1), (1, 0)]).order == 16
    H = subgroup_generated(make_group([2, 4, 4]), [(0, 2, 0)])
    assert set(H.elements()) == {(0, 0, 0), (0, 2, 0)}


def test_coset_confinement():
    G = make_group([4, 4])
    assert not coset_confinement(G, [(0, 0), (0, 1), (1, 0), (1, 1)]).confined
    Z4 = make_group([4])
    for S in ([(0,), (2,)], [(1,), (3,)]):
        v = coset_confinement(Z4, S)
        assert v.confined and v.witness.elements() == [(0,), (2,)]


def test_nontrivial_stabilizer():
    Z4 = make_group([4])
    assert nontrivial_stabilizer(Z4, list(Z4.elements())) is not None
    assert nontrivial_stabilizer(Z4, [(0,), (1,)]) is None
    assert nontrivial_stabilizer(Z4, [(0,), (2,)]) == (2,)


def _brute_subgroups(G):
    elems = list(G.elements())
    out = set()
    for mask in range(1 << G.order):
        S = [elems[i] for i in range(G.order) if mask >> i & 1]
        if S and all(G.sub(a, b) in S for a in S for b in S):
            out.add(frozenset(S))
    return out


@pytest.mark.parametrize("orders", [[4], [2, 2], [2, 4], [6], [3, 3]])
def test_all_subgroups_against_bruteforce(orders):
    G = make_group(orders)
    got = {frozenset(H.elements()) for H in all_subgroups(G)}
    assert got == _brute_subgroups(G)


def _brute_automorphisms(G):
    """Count every assignment of basis images that is a well-defined bijective homomorphism."""
    r = len(G.orders)
    coords = G.coords_of(np.arange(G.order))
    orders = np.array(G.orders)
    triples = np.array(list(itertools.product(range(G.order), repeat=r)))
    M = coords[triples]                                   # (k, r, r): row i is the image of e_i
    well_defined = np.all((M * orders[None, :, None]) % orders == 0, axis=(1, 2))
    M = M[well_defined]
    imgs = np.einsum("xi,kij->kxj", coords, M) % orders
    ranks = np.sort(imgs @ G.strides, axis=1)
    return int(np.all(ranks == np.arange(G.order), axis=1).sum())


@pytest.mark.parametrize("orders, count", [([4], 2), ([2, 2], 6), ([2, 4], 8), ([4, 4], 96), ([3, 3], 48),
                                           ([6], 2), ([2, 4, 4], 1536)])
def test_automorphism_count(orders, count):
    G = make_group(orders)
    autos = automorphisms(G)
    assert len(autos) == count
    assert _brute_automorphisms(G) == count


def test_automorphisms_are_bijective_homomorphisms():
    G = make_group([2, 4, 4])
    ranks = np.arange(G.order)
    rng = np.random.default_rng(3)
    autos = automorphisms(G)
    for phi in [autos[i] for i in rng.choice(len(autos), 40, replace=False)]:
        img = phi.apply_ranks(ranks)
        assert len(set(img.tolist())) == G.order and img[0] == 0
        for g in G.elements():
            assert G.element_order(phi(g)) == G.element_order(g)
        a, b = rng.integers(G.order, size=(2, 30))
        assert np.array_equal(phi.apply_ranks(G.add_ranks(a, b)), G.add_ranks(phi.apply_ranks(a), phi.apply_ranks(b)))


def test_automorphism_bound():
    with pytest.raises(SizeLimitError):
        automorphisms(make_group([4, 4, 8]))


def test_direct_product_orders():
    G = direct_product(make_group([2]), make_group([4, 4]))
    assert G.orders == (2, 4, 4)
    assert FiniteAbelianGroup.trivial().order == 1
