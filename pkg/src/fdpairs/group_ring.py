"""Integer group ring Z[G]: dense coefficient vectors, convolution, difference spectra."""

from __future__ import annotations

from collections.abc import Mapping
from typing import Iterable

import numpy as np

from .cyclotomic import working_dtype
from .errors import GroupMismatchError
from .groups import FiniteAbelianGroup

# pairs materialised per chunk in pair enumerations
_PAIR_CHUNK = 1 << 22


class GroupRingElement:
    """``sum_g a_g g`` with integer ``a_g`` stored by dense rank."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: FiniteAbelianGroup, coeffs):
        coeffs = np.asarray(coeffs)
        if coeffs.dtype != object:
            coeffs = coeffs.astype(np.int64)
        if coeffs.shape != (group.order,):
            raise GroupMismatchError(f"expected {group.order} coefficients, got shape {coeffs.shape}")
        coeffs.flags.writeable = False
        self.group = group
        self.coeffs = coeffs

    @classmethod
    def from_set(cls, group: FiniteAbelianGroup, S: Iterable) -> "GroupRingElement":
        coeffs = np.zeros(group.order, dtype=np.int64)
        coeffs[group.as_ranks(S)] = 1
        return cls(group, coeffs)

    @classmethod
    def zero(cls, group: FiniteAbelianGroup) -> "GroupRingElement":
        return cls(group, np.zeros(group.order, dtype=np.int64))

    @classmethod
    def identity(cls, group: FiniteAbelianGroup) -> "GroupRingElement":
        coeffs = np.zeros(group.order, dtype=np.int64)
        coeffs[0] = 1
        return cls(group, coeffs)

    def _same_group(self, other: "GroupRingElement"):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        if other.group != self.group:
            raise GroupMismatchError(f"{self.group!r} vs {other.group!r}")
        return other

    def __getitem__(self, g) -> int:
        return int(self.coeffs[self.group.rank(g)])

    def __add__(self, other):
        if self._same_group(other) is NotImplemented:
            return NotImplemented
        return GroupRingElement(self.group, _checked(self.coeffs, other.coeffs, np.add))

    def __sub__(self, other):
        if self._same_group(other) is NotImplemented:
            return NotImplemented
        return GroupRingElement(self.group, _checked(self.coeffs, other.coeffs, np.subtract))

    def __neg__(self):
        return GroupRingElement(self.group, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return GroupRingElement(self.group, _checked(self.coeffs, int(other), np.multiply))
        if self._same_group(other) is NotImplemented:
            return NotImplemented
        return ring_product(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return (isinstance(other, GroupRingElement) and self.group == other.group
                and bool(np.all(self.coeffs == other.coeffs)))

    def __hash__(self):
        return hash((self.group, tuple(self.coeffs.tolist())))

    def __repr__(self):
        items = ", ".join(f"{self.group.unrank(r)}: {int(c)}" for r, c in self.nonzero_items())
        return f"GroupRingElement({{{items}}})"

    def nonzero_items(self) -> list[tuple[int, int]]:
        ranks = np.flatnonzero(self.coeffs != 0)
        return [(int(r), int(self.coeffs[r])) for r in ranks]

    def support(self) -> frozenset:
        """The underlying set of elements with non-zero coefficient."""
        return self.group.as_set(self.group.coords_of(np.flatnonzero(self.coeffs != 0)))

    def support_size(self) -> int:
        return int(np.count_nonzero(self.coeffs))

    def total(self) -> int:
        return int(self.coeffs.sum())

    def abs_total(self) -> int:
        return int(np.abs(self.coeffs).sum())

    def involution(self) -> "GroupRingElement":
        return involution(self)


def _checked(a, b, op):
    """Apply ``op`` in int64 unless the result could overflow, then in Python ints."""
    def magnitude(x):
        x = np.asarray(x)
        return int(np.abs(x).max()) if x.size else 0

    ma, mb = magnitude(a), magnitude(b)
    worst = ma * mb if op is np.multiply else ma + mb
    if working_dtype(worst) is object:
        return op(np.asarray(a, dtype=object), np.asarray(b, dtype=object))
    return op(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))


def involution(A: GroupRingElement) -> GroupRingElement:
    """``A^(-1)``: coefficients pulled back along negation."""
    G = A.group
    neg = G.neg_ranks(np.arange(G.order, dtype=np.int64))
    return GroupRingElement(G, A.coeffs[neg])


def _pair_sums(G, a_ranks, a_vals, b_ranks, b_vals, subtract: bool, dtype):
    """Accumulate ``a_vals[i] * b_vals[j]`` at ``a_i +/- b_j`` over all pairs."""
    out = np.zeros(G.order, dtype=dtype)
    if a_ranks.size == 0 or b_ranks.size == 0:
        return out
    step = max(1, _PAIR_CHUNK // b_ranks.size)
    combine = G.sub_ranks if subtract else G.add_ranks
    for lo in range(0, a_ranks.size, step):
        ar = a_ranks[lo: lo + step]
        av = a_vals[lo: lo + step]
        idx = combine(ar[:, None], b_ranks[None, :]).ravel()
        w = (av[:, None] * b_vals[None, :]).ravel()
        if dtype is not object and (w == 1).all():
            out += np.bincount(idx, minlength=G.order)
        else:
            # bincount weights go through float64, add.at stays exact
            np.add.at(out, idx, w)
    return out


def ring_product(A: GroupRingElement, B: GroupRingElement) -> GroupRingElement:
    """``[AB]_g = sum_h a_(g-h) b_h``, enumerated over pairs of support elements."""
    if A.group != B.group:
        raise GroupMismatchError(f"{A.group!r} vs {B.group!r}")
    G = A.group
    ar = np.flatnonzero(A.coeffs != 0)
    br = np.flatnonzero(B.coeffs != 0)
    dtype = working_dtype(A.abs_total() * B.abs_total())
    av = A.coeffs[ar] if dtype is not object else A.coeffs[ar].astype(object)
    bv = B.coeffs[br] if dtype is not object else B.coeffs[br].astype(object)
    return GroupRingElement(G, _pair_sums(G, ar, av, br, bv, subtract=False, dtype=dtype))


def weight_enumerator_array(G: FiniteAbelianGroup, A1: Iterable, A2: Iterable) -> np.ndarray:
    """``nu_{A1,A2}(y)`` for every ``y``, by dense rank."""
    r1, r2 = G.as_ranks(A1), G.as_ranks(A2)
    ones1 = np.ones(r1.size, dtype=np.int64)
    ones2 = np.ones(r2.size, dtype=np.int64)
    return _pair_sums(G, r1, ones1, r2, ones2, subtract=True, dtype=np.int64)


def weight_enumerator(G: FiniteAbelianGroup, A1: Iterable, A2: Iterable, y) -> int:
    """Number of ordered pairs ``(a1, a2)`` with ``a1 - a2 == y``."""
    y = G.rank(y)
    r1, r2 = G.as_ranks(A1), G.as_ranks(A2)
    return int(np.count_nonzero(G.sub_ranks(r1[:, None], r2[None, :]) == y))


def difference_counts(G: FiniteAbelianGroup, A: Iterable) -> np.ndarray:
    """Coefficients of ``A A^(-1)`` by dense rank."""
    return weight_enumerator_array(G, A, A)


class SpectrumMultiset(Mapping):
    """Read-only value -> multiplicity map."""

    __slots__ = ("_data",)

    def __init__(self, data=None):
        cleaned = {}
        for v, m in dict(data or {}).items():
            if m:
                cleaned[v] = int(m)
        # irrational values are keyed by coefficient tuples and sort after integers
        self._data = dict(sorted(cleaned.items(), key=lambda kv: (isinstance(kv[0], tuple), kv[0])))

    @classmethod
    def from_values(cls, values) -> "SpectrumMultiset":
        vals, counts = np.unique(np.asarray(values), return_counts=True)
        return cls({int(v): int(c) for v, c in zip(vals, counts)})

    def __getitem__(self, value):
        return self._data.get(value, 0)

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __contains__(self, value):
        return value in self._data

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return self._data == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._data.items()))

    def __repr__(self):
        return f"SpectrumMultiset({self._data})"

    def total(self) -> int:
        return sum(self._data.values())

    def weighted_total(self) -> int:
        return sum(v * m for v, m in self._data.items())

    def key(self) -> tuple:
        return tuple(self._data.items())

    def lines(self) -> list[str]:
        return [f"{v} {m}" for v, m in self._data.items()]


def difference_spectrum(G: FiniteAbelianGroup, A: Iterable) -> SpectrumMultiset:
    """Multiset of ``[A A^(-1)]_g`` over all ``g``, by O(|A|^2) pair enumeration."""
    return SpectrumMultiset.from_values(difference_counts(G, A))


def theta(G: FiniteAbelianGroup, A: Iterable) -> int:
    """How many group elements are not a difference of two elements of ``A``."""
    return int(np.count_nonzero(difference_counts(G, A) == 0))
