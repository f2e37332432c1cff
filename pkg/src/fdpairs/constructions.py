"""Explicit families of formally dual pairs and their closed-form invariants.

Lifted pairs live in ``Z2 x G`` with the ``Z2`` coordinate first.  A lifted
pair remembers its base group, base set ``T`` and the partition ``S0 | S1``
so that two lifted pairs can be combined recursively.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .duality import chi_square_real
from .errors import ConditionViolatedError, NotAPartitionError, ParameterError
from .group_ring import GroupRingElement, SpectrumMultiset, difference_counts, ring_product
from .groups import FiniteAbelianGroup, direct_product, make_group, product_set

Z2 = make_group([2])
Z4 = make_group([4])
Z4x4 = make_group([4, 4])

_BASE_SETS = {
    "J": (Z4, [(0,), (1,)]),
    "L": (Z4x4, [(0, 0), (0, 1), (1, 0), (3, 3)]),
    "L1": (Z4x4, [(0, 0), (0, 1), (1, 0)]),
    "L2": (Z4x4, [(3, 3)]),
    "Y": (Z4x4, [(0, 0), (0, 2), (2, 0), (2, 2)]),
    "Z": (Z4x4, [(0, 2), (2, 0), (2, 2)]),
    "I": (Z4x4, [(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)]),
}


def base_set(which: str) -> tuple[FiniteAbelianGroup, frozenset]:
    """One of the literal sets J, L, L1, L2, Y, Z, I with its home group."""
    try:
        G, elems = _BASE_SETS[which]
    except KeyError:
        raise ParameterError(f"unknown base set {which!r}; choose from {sorted(_BASE_SETS)}") from None
    return G, frozenset(elems)


def power_group(n: int, k: int) -> FiniteAbelianGroup:
    return make_group([n] * k)


def power_set(S: Iterable, k: int) -> frozenset:
    """``S x S x ... x S`` (k factors); the empty product is ``{()}``."""
    out = frozenset([()])
    S = list(S)
    for _ in range(k):
        out = product_set(out, S)
    return out


def negate(G: FiniteAbelianGroup, S: Iterable) -> frozenset:
    return frozenset(G.neg(x) for x in S)


def block_B(m: int, i: int) -> frozenset:
    """0/1 vectors of length 2m with exactly ``i`` ones, inside ``Z4^(2m)``."""
    if m < 0 or not 0 <= i <= 2 * m:
        raise ParameterError(f"block_B needs 0 <= i <= 2m, got m={m}, i={i}")
    out = set()
    for ones in itertools.combinations(range(2 * m), i):
        x = [0] * (2 * m)
        for j in ones:
            x[j] = 1
        out.add(tuple(x))
    return frozenset(out)


def block_E(m: int, i: int) -> frozenset:
    """Union of products ``N_1 x ... x N_m`` with exactly ``i`` factors equal to L1, the rest L2."""
    if m < 0 or not 0 <= i <= m:
        raise ParameterError(f"block_E needs 0 <= i <= m, got m={m}, i={i}")
    L1 = _BASE_SETS["L1"][1]
    L2 = _BASE_SETS["L2"][1]
    out = set()
    for chosen in itertools.combinations(range(m), i):
        blocks = [L1 if j in chosen else L2 for j in range(m)]
        for parts in itertools.product(*blocks):
            out.add(tuple(c for p in parts for c in p))
    return frozenset(out)


# -- lifted pairs ---------------------------------------------------------


@dataclass(frozen=True)
class LiftedPair:
    """``S' = {0} x S0  u  {1} x S1`` and ``T' = {0} x T  u  {1} x T^(-1)`` in ``Z2 x G``."""

    group: FiniteAbelianGroup
    S: frozenset
    T: frozenset
    base_group: FiniteAbelianGroup
    S0: frozenset
    S1: frozenset
    base_T: frozenset
    family: str = "lift"
    params: tuple = field(default=())

    @property
    def base_S(self) -> frozenset:
        return self.S0 | self.S1

    def provenance(self) -> dict:
        return {"family": self.family, "params": list(self.params)}


def lift_pair(G: FiniteAbelianGroup, S0: Iterable, S1: Iterable, T: Iterable,
              family: str = "lift", params: tuple = ()) -> LiftedPair:
    """Build the lifted pair; no duality check is made here."""
    S0, S1, T = G.as_set(S0), G.as_set(S1), G.as_set(T)
    if S0 & S1:
        raise NotAPartitionError(f"S0 and S1 share {sorted(S0 & S1)[:3]}")
    lifted = Z2.product(G)
    S = frozenset((0,) + x for x in S0) | frozenset((1,) + x for x in S1)
    Tp = frozenset((0,) + x for x in T) | frozenset((1,) + x for x in negate(G, T))
    return LiftedPair(lifted, S, Tp, G, S0, S1, T, family, tuple(params))


def product_pair(G1: FiniteAbelianGroup, P1, G2: FiniteAbelianGroup, P2):
    """``(S1 x S2, T1 x T2)`` in ``G1 x G2``; only the sizes are checked."""
    (S1, T1), (S2, T2) = P1, P2
    for G, S, T in ((G1, S1, T1), (G2, S2, T2)):
        if len(G.as_set(S)) * len(G.as_set(T)) != G.order:
            raise ParameterError(f"|S||T| != |G| for a factor pair in {G!r}")
    return direct_product(G1, G2), product_set(S1, S2), product_set(T1, T2)


def recur_combine(P1: LiftedPair, P2: LiftedPair, family: str = "recur", params: tuple = ()) -> LiftedPair:
    """Combine two lifted pairs over ``G1`` and ``G2`` into one over ``Z2 x G1 x G2``.

    ``S0'' = S10 x S20  u  S11 x S21`` and ``S1'' = S10 x S21  u  S11 x S20``;
    the new base set is ``T1 x T2``.  Refused unless ``chi(T1)^2`` or
    ``chi(T2)^2`` is real for every character.
    """
    if not (chi_square_real(P2.base_group, P2.base_T) or chi_square_real(P1.base_group, P1.base_T)):
        raise ConditionViolatedError("neither base set has real squared character sums")
    S0 = product_set(P1.S0, P2.S0) | product_set(P1.S1, P2.S1)
    S1 = product_set(P1.S0, P2.S1) | product_set(P1.S1, P2.S0)
    G = direct_product(P1.base_group, P2.base_group)
    return lift_pair(G, S0, S1, product_set(P1.base_T, P2.base_T), family, params)


def _dircon1(m: int) -> LiftedPair:
    G = power_group(4, 2 * m)
    S0 = frozenset().union(*(block_B(m, i) for i in range(2 * m + 1) if i % 4 in (0, 1)))
    S1 = frozenset().union(*(block_B(m, i) for i in range(2 * m + 1) if i % 4 in (2, 3)))
    return lift_pair(G, S0, S1, power_set([(0,), (1,)], 2 * m), "dircon1", (m,))


def _dircon2_parts(m: int) -> tuple[frozenset, frozenset]:
    # S0 takes the E blocks whose L1-count has the parity of m
    S0 = frozenset().union(*(block_E(m, i) for i in range(m + 1) if i % 2 == m % 2))
    S1 = frozenset().union(*(block_E(m, i) for i in range(m + 1) if i % 2 != m % 2))
    return S0, S1


def _dircon2(m: int) -> LiftedPair:
    G = power_group(4, 2 * m)
    S0, S1 = _dircon2_parts(m)
    return lift_pair(G, S0, S1, power_set(_BASE_SETS["L"][1], m), "dircon2", (m,))


def _check_m(m: int, name: str):
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise ParameterError(f"{name} needs m >= 1, got {m!r}")


def dircon1(m: int) -> LiftedPair:
    """Lift of ``J^(2m)`` split by the number of ones mod 4 ({0,1} vs {2,3})."""
    _check_m(m, "dircon1")
    return _dircon1(int(m))


def dircon2(m: int) -> LiftedPair:
    """Lift of ``L^m`` split by the parity of the number of L1 blocks."""
    _check_m(m, "dircon2")
    return _dircon2(int(m))


def dircon2_inductive(m: int) -> LiftedPair:
    """The same pair as ``dircon2(m)``, grown one ``L`` block at a time by ``recur_combine``."""
    _check_m(m, "dircon2_inductive")
    base = _dircon2(1)
    pair = base
    for k in range(1, int(m)):
        pair = recur_combine(pair, base, "dircon2", (k + 1,))
    return pair


def mix(m1: int, m2: int) -> LiftedPair:
    """Recursive combination of the ``J`` family of size ``m1`` with the ``L`` family of size ``m2``."""
    if m1 < 0 or m2 < 0 or m1 + m2 < 1:
        raise ParameterError(f"mix needs m1, m2 >= 0 and m1 + m2 >= 1, got ({m1}, {m2})")
    return recur_combine(_dircon1(int(m1)), _dircon2(int(m2)), "mix", (int(m1), int(m2)))


FAMILIES = {"dircon1": dircon1, "dircon2": dircon2, "dircon2-inductive": dircon2_inductive}


# -- closed forms ---------------------------------------------------------


def binomial(a: int, b: int) -> int:
    """Binomial coefficient, 0 when ``b > a`` or ``b < 0``."""
    return math.comb(a, b) if 0 <= b <= a else 0


def dircon1_spectrum(m: int) -> SpectrumMultiset:
    _check_m(m, "dircon1-spectrum")
    spec = {0: 2 ** (4 * m + 1) - 3 ** (2 * m + 1) + 2 ** (2 * m), 2: (m + 1) * 2 ** (2 * m + 1)}
    for l in range(2, 2 * m + 2):
        spec[2**l] = 2 ** (2 * m - l + 1) * (binomial(2 * m, l - 1) + binomial(2 * m, l))
    return SpectrumMultiset(spec)


def dircon2_theta(m: int) -> int:
    _check_m(m, "dircon2-theta")
    return 2 ** (4 * m + 1) - 13**m - 10**m


def mix_theta(m1: int, m2: int) -> int:
    if m1 < 0 or m2 < 0 or m1 + m2 < 1:
        raise ParameterError(f"mix-theta needs m1, m2 >= 0 and m1 + m2 >= 1, got ({m1}, {m2})")
    m = m1 + m2
    return 2 ** (4 * m + 1) - 3 ** (2 * m1) * 13**m2 - (2 * 3 ** (2 * m1) - 2 ** (2 * m1)) * 10**m2


PREDICTORS = {"dircon1-spectrum": dircon1_spectrum, "dircon2-theta": dircon2_theta, "mix-theta": mix_theta}


def predict(family: str, *params: int):
    try:
        fn = PREDICTORS[family]
    except KeyError:
        raise ParameterError(f"unknown prediction {family!r}; choose from {sorted(PREDICTORS)}") from None
    try:
        return fn(*params)
    except TypeError:
        raise ParameterError(f"wrong number of parameters for {family}") from None


def support_sizes(G: FiniteAbelianGroup, T: Iterable) -> dict:
    """Support sizes of ``TT^(-1)``, ``TT``, ``T^(-1)T^(-1)`` and ``TT + T^(-1)T^(-1)``."""
    A = GroupRingElement.from_set(G, T)
    TT = ring_product(A, A)
    inv = A.involution()
    TiTi = ring_product(inv, inv)
    return {
        "diff": int(np.count_nonzero(difference_counts(G, T))),
        "sum": TT.support_size(),
        "inv_sum": TiTi.support_size(),
        "sum_both": (TT + TiTi).support_size(),
    }


def theta_product_law(P1: LiftedPair, P2: LiftedPair) -> int:
    """Predicted ``theta`` of ``recur_combine(P1, P2).T`` from the two base sets.

    ``2|G1||G2| - |{T1T1^-1}||{T2T2^-1}| - |{T1T1 + T1^-1 T1^-1}||{T2T2}|``,
    with the roles of the two sides swapped when only ``T1`` has real
    squared character sums.
    """
    G1, G2 = P1.base_group, P2.base_group
    s1, s2 = support_sizes(G1, P1.base_T), support_sizes(G2, P2.base_T)
    if not chi_square_real(G2, P2.base_T):
        s1, s2 = s2, s1
    return 2 * G1.order * G2.order - s1["diff"] * s2["diff"] - s1["sum_both"] * s2["sum"]


# Per-element values used by the block lemmas over Z4^(2m).

def weights(x: Sequence[int]) -> tuple[int, int, int, int]:
    """``(wt_0, wt_1, wt_2, wt_3)`` of a vector over Z4."""
    return tuple(sum(1 for c in x if c == j) for j in range(4))


def s0s1_difference_value(m: int, z) -> int:
    """Predicted ``[S0 S0^-1 + S1 S1^-1]_z`` for the ``J`` family partition."""
    _, u, two, v = weights(z)
    if two:
        return 0
    rest = 2 * m - u - v
    return {0: 2**rest, 1: 2 ** (rest - 1), 2: 0, 3: 2 ** (rest - 1)}[(u - v) % 4]


def t_plus_tinv_norm(m: int, z) -> int:
    """Predicted ``|chi_z(T + T^-1)|^2`` for ``T = J^(2m)``."""
    _, u, two, v = weights(z)
    if two:
        return 0
    return {0: 2 ** (4 * m + 2 - u - v), 1: 2 ** (4 * m + 1 - u - v), 2: 0,
            3: 2 ** (4 * m + 1 - u - v)}[(u - v) % 4]


def j_difference_value(x) -> int:
    """Predicted ``[TT^-1]_x`` for ``T = J^n``: 0 if some coordinate is 2, else 2^wt_0."""
    w0, _, two, _ = weights(x)
    return 0 if two else 2**w0


def j_sum_value(x) -> int:
    """Predicted ``[TT]_x`` for ``T = J^n``: 0 if some coordinate is 3, else 2^wt_1."""
    _, w1, _, w3 = weights(x)
    return 0 if w3 else 2**w1


def l_difference_value(x) -> int:
    """Predicted ``[TT^-1]_x`` for ``T = L^m`` (blocks are consecutive coordinate pairs)."""
    Zs = _BASE_SETS["Z"][1]
    blocks = [tuple(x[2 * j: 2 * j + 2]) for j in range(len(x) // 2)]
    if any(b in Zs for b in blocks):
        return 0
    return 4 ** sum(1 for b in blocks if b == (0, 0))


def l_sum_value(x) -> int:
    """Predicted ``[TT]_x`` for ``T = L^m``."""
    Ys, Is = set(_BASE_SETS["Y"][1]), set(_BASE_SETS["I"][1])
    blocks = [tuple(x[2 * j: 2 * j + 2]) for j in range(len(x) // 2)]
    if any(b not in Ys and b not in Is for b in blocks):
        return 0
    return 2 ** sum(1 for b in blocks if b in Is)
