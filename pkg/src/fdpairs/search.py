"""Exhaustive search for formally dual pairs in small groups, and equivalence tests.

Search normalises by translation only: both S and T contain the identity.
Automorphic copies are left in the output and collapsed afterwards by
``classify_by_invariants``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .characters import character_spectrum
from .duality import required_partner_weights, verify_formally_dual, verify_primitive
from .errors import ParameterError, SizeLimitError
from .group_ring import GroupRingElement, difference_spectrum
from .groups import DEFAULT_AUTOMORPHISM_BOUND, Automorphism, FiniteAbelianGroup, automorphisms

PAIR_SEARCH_BOUND = 32
FEASIBILITY_BOUND = 64


@dataclass(frozen=True)
class SearchTask:
    group: FiniteAbelianGroup
    size_s: int
    size_t: int
    require_primitive: bool = True
    max_order: int = PAIR_SEARCH_BOUND

    def validate(self, bound: Optional[int] = None):
        bound = self.max_order if bound is None else bound
        if self.size_s * self.size_t != self.group.order:
            raise ParameterError(f"|S||T| = {self.size_s * self.size_t} but |G| = {self.group.order}")
        if self.size_s < 1 or self.size_t < 1:
            raise ParameterError("set sizes must be positive")
        if self.group.order > bound:
            raise SizeLimitError(f"|G| = {self.group.order} exceeds the search bound {bound}")


def _normalized_sets(G: FiniteAbelianGroup, size: int):
    for rest in itertools.combinations(range(1, G.order), size - 1):
        yield (0,) + rest


def _forced_counts(G, S_ranks, size_t):
    forced = required_partner_weights(G, G.coords_of(np.array(S_ranks)), size_t)
    out = []
    for v in forced:
        if v is None or v.denominator != 1 or v < 0:
            return None
        out.append(int(v.numerator))
    return np.array(out, dtype=np.int64)


def _primitive(G, ranks) -> bool:
    return verify_primitive(G, G.coords_of(np.array(ranks))).primitive


def _match_difference_function(G: FiniteAbelianGroup, forced: np.ndarray, size_t: int) -> list[tuple]:
    """All normalised ``T`` with ``nu_T == forced`` exactly, by backtracking.

    Candidates are elements with positive forced weight, tried in order of
    decreasing forced weight; a branch dies as soon as some difference count
    exceeds its forced value.
    """
    cands = [r for r in range(1, G.order) if forced[r] > 0]
    cands.sort(key=lambda r: (-forced[r], r))
    cand_arr = np.array(cands, dtype=np.int64)
    found = []
    counts = np.zeros(G.order, dtype=np.int64)
    counts[0] = 1
    chosen = [0]

    def rec(start: int):
        if len(chosen) == size_t:
            if np.array_equal(counts, forced):
                found.append(tuple(sorted(chosen)))
            return
        need = size_t - len(chosen)
        for idx in range(start, len(cands) - need + 1):
            t = int(cand_arr[idx])
            cur = np.array(chosen, dtype=np.int64)
            d1 = G.sub_ranks(t, cur)
            d2 = G.sub_ranks(cur, t)
            np.add.at(counts, d1, 1)
            np.add.at(counts, d2, 1)
            counts[0] += 1
            if (counts <= forced).all():
                chosen.append(t)
                rec(idx + 1)
                chosen.pop()
            np.add.at(counts, d1, -1)
            np.add.at(counts, d2, -1)
            counts[0] -= 1

    rec(0)
    return sorted(found)


def _search_chunk(args):
    orders, size_s, size_t, require_primitive, s_list = args
    G = FiniteAbelianGroup(orders)
    cache: dict = {}
    out = []
    for S in s_list:
        if require_primitive and not _primitive(G, S):
            continue
        forced = _forced_counts(G, S, size_t)
        if forced is None:
            continue
        key = forced.tobytes()
        if key not in cache:
            Ts = _match_difference_function(G, forced, size_t)
            if require_primitive:
                Ts = [T for T in Ts if _primitive(G, T)]
            cache[key] = Ts
        out.extend((S, T) for T in cache[key])
    return out


def _to_elements(G, ranks) -> tuple:
    return tuple(G.unrank(r) for r in ranks)


def exhaustive_pairs(task: SearchTask, n_jobs: int = 1) -> list[tuple[tuple, tuple]]:
    """Every normalised formally dual pair ``(S, T)`` of the requested sizes.

    Each candidate ``S`` fixes the weight function a partner must have,
    ``nu_T(y) = |chi_y(S)|^2 |T| / |S|^2``; candidates with a non-integral
    requirement are dropped before any ``T`` is tried.  Pairs come back as
    tuples of elements in rank order, sorted.
    """
    task.validate()
    G = task.group
    s_sets = list(_normalized_sets(G, task.size_s))
    if n_jobs > 1 and len(s_sets) > 1:
        chunks = [s_sets[i::n_jobs] for i in range(n_jobs)]
        args = [(G.orders, task.size_s, task.size_t, task.require_primitive, c) for c in chunks]
        with ProcessPoolExecutor(n_jobs) as pool:
            raw = [p for part in pool.map(_search_chunk, args) for p in part]
    else:
        raw = _search_chunk((G.orders, task.size_s, task.size_t, task.require_primitive, s_sets))
    raw.sort()
    return [(_to_elements(G, S), _to_elements(G, T)) for S, T in raw]


def exhaustive_pairs_unpruned(task: SearchTask) -> list[tuple[tuple, tuple]]:
    """Double loop over all normalised ``(S, T)`` calling the verifier; a reference for tiny groups."""
    task.validate()
    G = task.group
    out = []
    for S in _normalized_sets(G, task.size_s):
        for T in _normalized_sets(G, task.size_t):
            Sc, Tc = G.coords_of(np.array(S)), G.coords_of(np.array(T))
            if not verify_formally_dual(G, Sc, Tc, "both", max_failures=0).ok:
                continue
            if task.require_primitive and not (_primitive(G, S) and _primitive(G, T)):
                continue
            out.append((_to_elements(G, S), _to_elements(G, T)))
    return sorted(out, key=lambda p: ([G.rank(x) for x in p[0]], [G.rank(x) for x in p[1]]))


def feasible_s_sets(task: SearchTask) -> list[tuple]:
    """Normalised ``S`` whose forced partner weights are all nonnegative integers."""
    task.validate(bound=max(task.max_order, FEASIBILITY_BOUND))
    G = task.group
    out = []
    for S in _normalized_sets(G, task.size_s):
        if task.require_primitive and not _primitive(G, S):
            continue
        if _forced_counts(G, S, task.size_t) is not None:
            out.append(_to_elements(G, S))
    return out


# -- equivalence ----------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceCertificate:
    key: tuple
    witness: Optional[tuple] = None


def invariant_key(G: FiniteAbelianGroup, S: Iterable, T: Iterable) -> tuple:
    """Difference and character spectra of ``S`` and ``T``; equal for equivalent pairs."""
    S, T = G.as_set(S), G.as_set(T)
    return (
        difference_spectrum(G, S).key(),
        difference_spectrum(G, T).key(),
        character_spectrum(GroupRingElement.from_set(G, S)).key(),
        character_spectrum(GroupRingElement.from_set(G, T)).key(),
    )


def classify_by_invariants(G: FiniteAbelianGroup, pairs: Iterable) -> dict:
    """Group pairs by ``invariant_key``; pairs in different buckets are inequivalent."""
    buckets: dict = {}
    for S, T in pairs:
        buckets.setdefault(invariant_key(G, S, T), []).append((S, T))
    return buckets


def equivalence_bruteforce(G: FiniteAbelianGroup, S: Iterable, S2: Iterable,
                           max_order: int = DEFAULT_AUTOMORPHISM_BOUND,
                           autos: Optional[list[Automorphism]] = None):
    """A witness ``(g, phi)`` with ``S2 = g + phi(S)``, or ``None``."""
    a, b = G.as_ranks(S), G.as_ranks(S2)
    if a.size != b.size:
        return None
    if a.size == 0:
        return (G.identity, automorphisms(G, max_order)[0])
    target = np.zeros(G.order, dtype=bool)
    target[b] = True
    for phi in autos if autos is not None else automorphisms(G, max_order):
        img = phi.apply_ranks(a)
        for g in G.sub_ranks(b, img[0]).tolist():
            if target[G.add_ranks(img, g)].all():
                return G.unrank(g), phi
    return None


def pair_equivalence(G: FiniteAbelianGroup, P1, P2, max_order: int = DEFAULT_AUTOMORPHISM_BOUND):
    """Witness that one set of ``P1`` is equivalent to one set of ``P2``, as ``(i, j, g, phi)``."""
    autos = automorphisms(G, max_order)
    for i, A in enumerate(P1):
        for j, B in enumerate(P2):
            if len(G.as_set(A)) != len(G.as_set(B)):
                continue
            w = equivalence_bruteforce(G, A, B, autos=autos)
            if w is not None:
                return (i, j) + w
    return None
