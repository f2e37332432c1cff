"""Reproduction checks run by ``fdpairs selftest`` and the acceptance tests.

Each check returns a ``CheckResult``; the text never contains timings or
anything else that varies between runs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .characters import char_sum_table, fourier_invert, integer_sq_spectrum, sq_spectrum
from .constructions import (
    base_set, binomial, block_B, dircon1, dircon1_spectrum, dircon2, dircon2_inductive,
    dircon2_theta, j_difference_value, j_sum_value, l_difference_value, l_sum_value,
    lift_pair, mix, mix_theta, power_group, power_set, s0s1_difference_value,
    support_sizes, t_plus_tinv_norm,
)
from .duality import required_partner_weights, verify_formally_dual, verify_primitive
from .group_ring import GroupRingElement, difference_counts, difference_spectrum, ring_product, theta
from .groups import FiniteAbelianGroup, make_group
from .search import SearchTask, classify_by_invariants, equivalence_bruteforce, exhaustive_pairs

SEED = 20240611

TITO_S = {(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 1, 1)}
TITO_T = {(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 3), (1, 3, 0), (1, 3, 3)}
TEICH_S = {(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 3, 3)}
TEICH_T = {(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 3, 3), (1, 0, 0), (1, 0, 3), (1, 3, 0), (1, 1, 1)}


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    ok: bool
    details: tuple = ()

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} [{self.number:2d}] {self.name}"


class _Log:
    def __init__(self):
        self.ok = True
        self.details: list[str] = []

    def check(self, cond, msg: str):
        cond = bool(cond)
        self.ok &= cond
        self.details.append(f"{'ok ' if cond else 'BAD'} {msg}")
        return cond


def _full_ok(pair) -> bool:
    G = pair.group
    return (verify_formally_dual(G, pair.S, pair.T, "both", max_failures=0).ok
            and verify_primitive(G, pair.S).primitive and verify_primitive(G, pair.T).primitive)


# -- criteria -------------------------------------------------------------


def check_base_pair(log: _Log):
    G, J = base_set("J")
    log.check(verify_formally_dual(G, J, J, "both").ok, "(J, J) dual in Z4, both directions")
    spec = integer_sq_spectrum(GroupRingElement.from_set(G, J)).tolist()
    log.check(spec == [4, 2, 0, 2], f"|chi(J)|^2 = {spec}")


def check_examples(log: _Log):
    for name, pair, S, T in (("dircon1(1)", dircon1(1), TITO_S, TITO_T),
                             ("dircon2(1)", dircon2(1), TEICH_S, TEICH_T)):
        log.check(set(pair.S) == S and set(pair.T) == T, f"{name} sets match the literal example")
        log.check(_full_ok(pair), f"{name} primitive formally dual")
        log.check(theta(pair.group, pair.T) == 9, f"{name} theta(T') = {theta(pair.group, pair.T)}")


def check_dircon1(log: _Log):
    for m in (1, 2, 3):
        log.check(_full_ok(dircon1(m)), f"dircon1({m}) primitive formally dual")
    for m in (1, 2, 3, 4):
        p = dircon1(m)
        got = difference_spectrum(p.group, p.T)
        log.check(got == dircon1_spectrum(m), f"dircon1({m}) difference spectrum {dict(got)}")


def check_dircon2(log: _Log):
    for m in (1, 2, 3):
        p = dircon2(m)
        log.check(_full_ok(p), f"dircon2({m}) primitive formally dual")
        q = dircon2_inductive(m)
        log.check(p.S == q.S and p.T == q.T and p.S0 == q.S0, f"dircon2({m}) direct == inductive")
    for m in (1, 2, 3, 4):
        p = dircon2(m)
        got, want = theta(p.group, p.T), dircon2_theta(m)
        log.check(got == want, f"dircon2({m}) theta {got} (closed form {want})")


def check_mix(log: _Log):
    pairs = {s: mix(*s) for s in ((2, 0), (1, 1), (0, 2))}
    thetas = set()
    for s, p in pairs.items():
        log.check(_full_ok(p), f"mix{s} primitive formally dual")
        thetas.add(theta(p.group, p.T))
    log.check(thetas == {243, 255, 285}, f"mix thetas at m=2: {sorted(thetas)}")
    G = pairs[(1, 1)].group
    buckets = classify_by_invariants(G, [(p.S, p.T) for p in pairs.values()])
    log.check(len(buckets) == 3, f"m=2 mix pairs fall into {len(buckets)} invariant buckets")
    for m in range(2, 6):
        preds = [mix_theta(m1, m - m1) for m1 in range(m + 1)]
        log.check(len(set(preds)) == m + 1, f"m={m} predicted thetas {preds} pairwise distinct")
    for m in (1, 2, 3):
        for m1 in range(m + 1):
            p = mix(m1, m - m1)
            got, want = theta(p.group, p.T), mix_theta(m1, m - m1)
            log.check(got == want, f"mix({m1},{m - m1}) theta {got} (closed form {want})")


def _block_lemma(log: _Log, m: int):
    G = power_group(4, 2 * m)
    n = 2 * m
    coords = G.coords_of(np.arange(G.order))
    w1 = (coords == 1).sum(axis=1)
    w3 = (coords == 3).sum(axis=1)
    w2 = (coords == 2).sum(axis=1)
    blocks = [GroupRingElement.from_set(G, block_B(m, i)) for i in range(n + 1)]
    inv = [b.involution() for b in blocks]
    ok_coeff = ok_support = True
    for i, j in itertools.product(range(n + 1), repeat=2):
        prod = ring_product(blocks[i], inv[j]).coeffs
        for u in range(n + 1):
            for v in range(n + 1 - u):
                mask = (w1 == u) & (w3 == v) & (w2 == 0)
                h = i - u
                inside = h == j - v and 0 <= h <= n - u - v
                if inside:
                    ok_coeff &= bool(np.all(prod[mask] == binomial(n - u - v, h)))
                ok_support &= bool(np.all(prod[mask] > 0)) == inside
    log.check(ok_coeff, f"m={m}: [B_(u+h) B_(v+h)^(-1)]_x = binomial(2m-u-v, h) on every C_(m,u,v)")
    log.check(ok_support, f"m={m}: C_(m,u,v) inside the support exactly when (i, j) = (u+h, v+h)")


def _per_element(G: FiniteAbelianGroup, values: np.ndarray, fn) -> bool:
    coords = G.coords_of(np.arange(G.order)).tolist()
    return all(int(values[r]) == fn(x) for r, x in enumerate(coords))


def check_lemmas(log: _Log):
    for m in (1, 2, 3):
        _block_lemma(log, m)
        p = dircon1(m)
        G = p.base_group
        S0 = GroupRingElement.from_set(G, p.S0)
        S1 = GroupRingElement.from_set(G, p.S1)
        conv = (ring_product(S0, S0.involution()) + ring_product(S1, S1.involution())).coeffs
        log.check(_per_element(G, conv, lambda z: s0s1_difference_value(m, z)),
                  f"m={m}: [S0 S0^(-1) + S1 S1^(-1)]_z four-case formula")
        T = GroupRingElement.from_set(G, p.base_T)
        norms = integer_sq_spectrum(T + T.involution())
        log.check(_per_element(G, norms, lambda z: t_plus_tinv_norm(m, z)),
                  f"m={m}: |chi_z(T + T^(-1))|^2 four-case formula")
        log.check(_per_element(G, difference_counts(G, p.base_T), j_difference_value),
                  f"m={m}: [TT^(-1)]_x = 2^l on C_(m,u,2m-l-u) for T = J^(2m)")
        log.check(_per_element(G, ring_product(T, T).coeffs, j_sum_value),
                  f"m={m}: [TT]_x = 2^u on D_(m,u,v) for T = J^(2m)")
        q = dircon2(m)
        Lm = GroupRingElement.from_set(q.base_group, q.base_T)
        log.check(_per_element(G, difference_counts(G, q.base_T), l_difference_value),
                  f"m={m}: [TT^(-1)]_x for T = L^m")
        log.check(_per_element(G, ring_product(Lm, Lm).coeffs, l_sum_value), f"m={m}: [TT]_x for T = L^m")
        sizes = support_sizes(q.base_group, q.base_T)
        log.check(sizes["diff"] == 13**m and sizes["sum"] == 10**m,
                  f"m={m}: |{{TT^(-1)}}| = {sizes['diff']}, |{{TT}}| = {sizes['sum']} for T = L^m")


def check_negative(log: _Log):
    for m in (1, 2):
        n = 2 * m + 1
        G = power_group(4, n)
        T = power_set([(0,), (1,)], n)
        # any partition works for the argument; use the weight split of the even case
        S0 = frozenset(x for x in T if sum(x) % 4 in (0, 1))
        pair = lift_pair(G, S0, T - S0, T)
        s_size = pair.group.order // len(pair.T)
        forced = required_partner_weights(pair.group, pair.T, s_size)
        z = (0,) + (1,) * n
        val = forced[pair.group.rank(z)]
        log.check(val == Fraction(1, 2), f"J^{n}: forced nu_S'{z} = {val}")
        bad = [v for v in forced if v is None or v.denominator != 1]
        log.check(bool(bad), f"J^{n}: {len(bad)} non-integral forced weights, so no S' of size {s_size} works")
        # |S'| = |S0| + |S1| = 2^n is already the partner size
        rep = verify_formally_dual(pair.group, pair.S, pair.T, "T-side", max_failures=pair.group.order)
        hit = [f for f in rep.failures if f.witness == z]
        log.check(not rep.ok and hit and hit[0].required_nu == Fraction(1, 2),
                  f"J^{n}: verifier rejects a candidate S' with required nu = 1/2 at {z}")


def _random_group(rng, bound: int = 256) -> FiniteAbelianGroup:
    while True:
        k = int(rng.integers(1, 4))
        orders = [int(rng.choice([2, 3, 4, 5, 6, 7, 8, 9, 12, 16])) for _ in range(k)]
        if int(np.prod(orders)) <= bound:
            return make_group(orders)


def check_transforms(log: _Log):
    rng = np.random.default_rng(SEED)
    agree = roundtrip = parseval = True
    n = 100
    for _ in range(n):
        G = _random_group(rng)
        A = GroupRingElement(G, rng.integers(-3, 4, size=G.order))
        fast, naive = sq_spectrum(A, "fast"), sq_spectrum(A, "naive")
        agree &= bool(np.array_equal(fast, naive))
        roundtrip &= fourier_invert(G, char_sum_table(A)) == A
        # rows are linear in the value, so summing them sums |chi(A)|^2
        total = fast.astype(object).sum(axis=0)
        parseval &= total[0] == G.order * int((A.coeffs.astype(object) ** 2).sum()) and not any(total[1:])
    log.check(agree, f"fast == naive squared spectra on {n} random elements")
    log.check(roundtrip, f"Fourier inversion roundtrip on {n} random elements")
    log.check(parseval, f"Parseval on {n} random elements")


def _dual_instances():
    out = []
    G, J = base_set("J")
    out.append((G, J, J))
    G, L = base_set("L")
    out.append((G, L, L))
    out.append((G, power_set(J, 2), power_set(J, 2)))
    for p in (dircon1(1), dircon2(1), mix(1, 1)):
        out.append((p.group, p.S, p.T))
    return out


def check_symmetry(log: _Log):
    rng = np.random.default_rng(SEED + 1)
    base = _dual_instances()
    cases = []
    for k in range(50):
        if k % 2 == 0:
            G, S, T = base[k // 2 % len(base)]
        else:
            G = _random_group(rng, 64)
            divs = [d for d in range(1, G.order + 1) if G.order % d == 0]
            s = int(rng.choice(divs))
            ranks = rng.permutation(G.order)
            S = G.coords_of(np.sort(ranks[:s]))
            T = G.coords_of(np.sort(rng.permutation(G.order)[: G.order // s]))
        cases.append((G, G.as_set(S), G.as_set(T)))
    inter = trans = True
    n_dual = 0
    for G, S, T in cases:
        s_side = verify_formally_dual(G, S, T, "S-side", max_failures=0).ok
        t_side = verify_formally_dual(G, S, T, "T-side", max_failures=0).ok
        inter &= s_side == t_side
        n_dual += s_side
        g, h = G.unrank(int(rng.integers(G.order))), G.unrank(int(rng.integers(G.order)))
        S2 = [G.add(x, g) for x in S]
        T2 = [G.add(x, h) for x in T]
        trans &= verify_formally_dual(G, S2, T2, "S-side", max_failures=0).ok == s_side
    log.check(inter, f"S-side verdict == T-side verdict on {len(cases)} instances ({n_dual} dual)")
    log.check(trans, f"verdict unchanged by random translations on {len(cases)} instances")


def check_search(log: _Log):
    Z4 = make_group([4])
    _, J = base_set("J")
    found = exhaustive_pairs(SearchTask(Z4, 2, 2))
    log.check(len(found) == 4, f"Z4 (2,2): {len(found)} normalised primitive pairs")
    log.check(all(equivalence_bruteforce(Z4, J, S) and equivalence_bruteforce(Z4, J, T) for S, T in found),
              "every Z4 pair is equivalent to (J, J)")
    none = exhaustive_pairs(SearchTask(make_group([2, 2]), 2, 2))
    log.check(not none, f"Z2^2 (2,2): {len(none)} primitive pairs")
    G, L = base_set("L")
    JJ = tuple(G.sorted_elements(power_set(J, 2)))
    LL = tuple(G.sorted_elements(L))
    found = exhaustive_pairs(SearchTask(G, 4, 4))
    log.check((JJ, JJ) in found and (LL, LL) in found, f"Z4^2 (4,4): {len(found)} pairs include (JxJ, JxJ) and (L, L)")
    log.check(all(verify_formally_dual(G, S, T, "both", max_failures=0).ok for S, T in found),
              "every Z4^2 pair re-verifies")


CRITERIA: list[tuple[int, str, Callable]] = [
    (1, "base pair (J, J) in Z4", check_base_pair),
    (2, "literal examples from both direct constructions", check_examples),
    (3, "first direct family and its spectrum formula", check_dircon1),
    (4, "second direct family, inductive form and theta formula", check_dircon2),
    (5, "mixed family thetas and distinctness", check_mix),
    (6, "block and convolution lemmas", check_lemmas),
    (7, "odd power of J has no partner", check_negative),
    (8, "exact transform, inversion and Parseval", check_transforms),
    (9, "interchangeability and translation invariance", check_symmetry),
    (10, "exhaustive search in Z4, Z2^2 and Z4^2", check_search),
]


def run_check(number: int) -> CheckResult:
    for num, name, fn in CRITERIA:
        if num == number:
            log = _Log()
            try:
                fn(log)
            except Exception as exc:  # a crash is a failed criterion, not a crashed suite
                log.ok = False
                log.details.append(f"BAD raised {type(exc).__name__}: {exc}")
            return CheckResult(num, name, log.ok, tuple(log.details))
    raise KeyError(number)


def run_all() -> list[CheckResult]:
    return [run_check(num) for num, _, _ in CRITERIA]
