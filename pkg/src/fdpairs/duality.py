"""Verification of formal duality, primitivity and the lifting conditions.

Every check is exact: squared character sums come from the cyclotomic
transform, weight enumerators from pair enumeration, and the two sides of
each identity are compared as integers after clearing the denominator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from .characters import sq_spectrum, square_table
from .cyclotomic import CyclotomicInteger, cyclic_conj, reduce_cyclic
from .errors import EmptySetError, NotAPartitionError
from .group_ring import GroupRingElement, weight_enumerator_array
from .groups import CosetVerdict, FiniteAbelianGroup, Subgroup, coset_confinement, nontrivial_stabilizer

DIRECTIONS = ("S-side", "T-side", "both")


@dataclass(frozen=True)
class DualityFailure:
    """One violated identity ``|chi_y(A)|^2 = (|A|^2 / |B|) nu_B(y)``.

    ``required_nu`` is the value ``nu_B(y)`` would need for the identity to
    hold; a non-integral value proves no partner of that size exists.
    """

    side: str
    witness: Optional[tuple]
    lhs: object
    rhs: Fraction
    required_nu: Optional[Fraction] = None

    def __str__(self):
        if self.side == "size":
            return f"size precheck {self.lhs} != {self.rhs}"
        req = "" if self.required_nu is None else f" (requires nu = {self.required_nu})"
        return f"{self.side} at y={self.witness}: |chi_y|^2 = {self.lhs} but rhs = {self.rhs}{req}"


@dataclass(frozen=True)
class DualPairReport:
    ok: bool
    failures: tuple = ()
    checked_direction: str = "both"
    n_failures: int = 0

    def __bool__(self):
        return self.ok


def _lhs_value(row) -> object:
    row = [int(c) for c in row]
    if any(row[1:]):
        return row
    return row[0]


def _check_side(G: FiniteAbelianGroup, A: np.ndarray, B: np.ndarray, side: str, max_failures: int):
    """Compare ``|chi_y(A)|^2 |B|`` with ``|A|^2 nu_B(y)`` for every ``y``."""
    a, b = len(A), len(B)
    rows = sq_spectrum(GroupRingElement.from_set(G, G.coords_of(A)))
    nu = weight_enumerator_array(G, G.coords_of(B), G.coords_of(B))
    rational = np.ones(G.order, dtype=bool) if rows.shape[1] == 1 else ~np.any(rows[:, 1:] != 0, axis=1)
    good = rational & (rows[:, 0] * b == nu * (a * a))
    bad = np.flatnonzero(~good)
    failures = []
    e = G.exponent
    for r in bad[:max_failures].tolist():
        lhs_row = rows[r]
        lhs = _lhs_value(lhs_row)
        if isinstance(lhs, list):
            lhs = CyclotomicInteger(e, lhs)
            required = None
        else:
            required = Fraction(lhs * b, a * a)
        failures.append(DualityFailure(side, G.unrank(r), lhs, Fraction(a * a * int(nu[r]), b), required))
    return failures, int(bad.size)


def verify_formally_dual(G: FiniteAbelianGroup, S: Iterable, T: Iterable, direction: str = "both",
                         max_failures: int = 16) -> DualPairReport:
    """Check ``|chi_y(S)|^2 = (|S|^2/|T|) nu_T(y)`` (and/or the T-side twin) for all ``y``.

    A size mismatch ``|G| != |S||T|`` is reported as a failure rather than
    raised.
    """
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}")
    Sr, Tr = G.as_ranks(S), G.as_ranks(T)
    if Sr.size == 0 or Tr.size == 0:
        raise EmptySetError("formal duality needs nonempty S and T")
    if Sr.size * Tr.size != G.order:
        fail = DualityFailure("size", None, Sr.size * Tr.size, Fraction(G.order))
        return DualPairReport(False, (fail,), direction, 1)
    failures, count = [], 0
    if direction in ("S-side", "both"):
        f, c = _check_side(G, Sr, Tr, "S-side", max_failures)
        failures += f
        count += c
    if direction in ("T-side", "both"):
        f, c = _check_side(G, Tr, Sr, "T-side", max_failures)
        failures += f
        count += c
    return DualPairReport(count == 0, tuple(failures), direction, count)


def is_formally_dual(G: FiniteAbelianGroup, S: Iterable, T: Iterable) -> bool:
    return verify_formally_dual(G, S, T, "S-side", max_failures=0).ok


def required_partner_weights(G: FiniteAbelianGroup, A: Iterable, partner_size: int) -> list:
    """``nu_B(y)`` forced on any partner ``B`` of ``A`` with ``|B| = partner_size``.

    Entry ``y`` is ``|chi_y(A)|^2 * |B| / |A|^2`` as a ``Fraction``, or
    ``None`` when ``|chi_y(A)|^2`` is irrational (no partner can exist).
    """
    Ar = G.as_ranks(A)
    a = Ar.size
    rows = sq_spectrum(GroupRingElement.from_set(G, G.coords_of(Ar)))
    out = []
    for row in rows.tolist():
        if any(row[1:]):
            out.append(None)
        else:
            out.append(Fraction(int(row[0]) * partner_size, a * a))
    return out


def partner_obstructions(G: FiniteAbelianGroup, A: Iterable, partner_size: int) -> list:
    """``(y, required nu)`` for every ``y`` whose forced weight is not a nonnegative integer."""
    out = []
    for r, v in enumerate(required_partner_weights(G, A, partner_size)):
        if v is None or v.denominator != 1 or v < 0:
            out.append((G.unrank(r), v))
    return out


# -- primitivity ----------------------------------------------------------


@dataclass(frozen=True)
class PrimitivityReport:
    coset_confined: bool
    confinement_witness: Subgroup
    stabilized: bool
    stabilizer_witness: Optional[tuple]
    character_confined: bool
    character_witness: Optional[tuple]

    @property
    def character_criterion_agrees(self) -> bool:
        return self.coset_confined == self.character_confined

    @property
    def primitive(self) -> bool:
        return not self.coset_confined and not self.stabilized

    def __bool__(self):
        return self.primitive


def character_confinement(G: FiniteAbelianGroup, S: Iterable) -> Optional[tuple]:
    """A nonzero ``z`` with ``|chi_z(S)|^2 = |S|^2``, or ``None``."""
    Sr = G.as_ranks(S)
    rows = sq_spectrum(GroupRingElement.from_set(G, G.coords_of(Sr)))
    hits = rows[:, 0] == Sr.size ** 2
    if rows.shape[1] > 1:
        hits &= ~np.any(rows[:, 1:] != 0, axis=1)
    hits[0] = False
    idx = np.flatnonzero(hits)
    return G.unrank(int(idx[0])) if idx.size else None


def verify_primitive(G: FiniteAbelianGroup, S: Iterable) -> PrimitivityReport:
    Sr = G.as_ranks(S)
    if Sr.size == 0:
        raise EmptySetError("primitivity of the empty set")
    coords = G.coords_of(Sr)
    verdict: CosetVerdict = coset_confinement(G, coords)
    stab = nontrivial_stabilizer(G, coords)
    z = character_confinement(G, coords)
    return PrimitivityReport(verdict.confined, verdict.witness, stab is not None, stab, z is not None, z)


def is_primitive_pair(G: FiniteAbelianGroup, S: Iterable, T: Iterable) -> bool:
    return (verify_formally_dual(G, S, T, "both", max_failures=0).ok
            and verify_primitive(G, S).primitive and verify_primitive(G, T).primitive)


# -- lifting --------------------------------------------------------------


@dataclass(frozen=True)
class LiftingVerdict:
    holds: bool
    witness: Optional[tuple] = None
    equation: Optional[int] = None
    lhs: object = None
    rhs: Optional[Fraction] = None
    checked: tuple = field(default=(1, 2))

    def __bool__(self):
        return self.holds


def lifting_condition(G: FiniteAbelianGroup, S0: Iterable, S1: Iterable, T: Iterable,
                      T1: Optional[Iterable] = None) -> LiftingVerdict:
    """Check the two lifting identities for ``(S0 | S1, T0 = T, T1)`` over ``G``.

    With ``T1`` omitted the slices are ``T`` and ``T^(-1)``.  For every ``z``::

        |chi_z(T0 + T1)|^2 = (4|T|^2/|S|) (nu_S0(z) + nu_S1(z))
        |chi_z(T0 - T1)|^2 = (4|T|^2/|S|) (nu_S0,S1(z) + nu_S1,S0(z))

    where ``|S| = |S0| + |S1|`` and ``|T| = (|T0| + |T1|) / 2``.  The first
    failing ``z`` (equation 1 before 2) is the witness.
    """
    r0, r1 = G.as_ranks(S0), G.as_ranks(S1)
    if np.intersect1d(r0, r1).size:
        raise NotAPartitionError("S0 and S1 overlap")
    if r0.size + r1.size == 0:
        raise EmptySetError("S0 and S1 are both empty")
    T0 = GroupRingElement.from_set(G, T)
    T1e = T0.involution() if T1 is None else GroupRingElement.from_set(G, T1)
    if T0.total() == 0:
        raise EmptySetError("T is empty")
    c0, c1 = G.coords_of(r0), G.coords_of(r1)
    s = r0.size + r1.size
    t2 = Fraction(T0.total() + T1e.total(), 2) ** 2
    factor = 4 * t2 / s
    sides = [
        (T0 + T1e, weight_enumerator_array(G, c0, c0) + weight_enumerator_array(G, c1, c1)),
        (T0 - T1e, weight_enumerator_array(G, c0, c1) + weight_enumerator_array(G, c1, c0)),
    ]
    for eq, (elem, nu) in enumerate(sides, start=1):
        rows = sq_spectrum(elem)
        rational = np.ones(G.order, dtype=bool) if rows.shape[1] == 1 else ~np.any(rows[:, 1:] != 0, axis=1)
        good = rational & (rows[:, 0] * factor.denominator == nu * factor.numerator)
        bad = np.flatnonzero(~good)
        if bad.size:
            r = int(bad[0])
            return LiftingVerdict(False, G.unrank(r), eq, _lhs_value(rows[r]), factor * int(nu[r]))
    return LiftingVerdict(True)


def chi_square_real(G: FiniteAbelianGroup, T: Iterable) -> bool:
    """Whether ``chi_z(T)^2`` is real for every character."""
    sq = square_table(GroupRingElement.from_set(G, T))
    return not np.any(reduce_cyclic(sq - cyclic_conj(sq), G.exponent) != 0)
