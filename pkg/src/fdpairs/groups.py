"""Finite abelian groups as explicit products of cyclic groups.

Elements are plain tuples of residues, one per cyclic factor.  Every array
indexed by group elements uses the dense mixed-radix rank with the first
factor most significant, so ``(1, 0, 0)`` in ``Z2 x Z4 x Z4`` has rank 16.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptySetError, GroupMismatchError, InvalidOrderError, SizeLimitError

DEFAULT_AUTOMORPHISM_BOUND = 64
MAX_AUTOMORPHISMS = 200_000


class FiniteAbelianGroup:
    """The group ``Z_{n_1} x ... x Z_{n_r}`` with a fixed factor order."""

    __slots__ = ("orders", "order", "exponent", "strides", "_orders_arr")

    def __init__(self, orders: Sequence[int] = ()):
        orders = tuple(int(n) for n in orders)
        for i, n in enumerate(orders):
            if n < 2:
                raise InvalidOrderError(f"cyclic factor {i} has order {n}; every order must be >= 2")
        self.orders = orders
        self.order = math.prod(orders)
        self.exponent = math.lcm(*orders) if orders else 1
        strides = [1] * len(orders)
        for i in range(len(orders) - 2, -1, -1):
            strides[i] = strides[i + 1] * orders[i + 1]
        self.strides = np.array(strides, dtype=np.int64)
        self._orders_arr = np.array(orders, dtype=np.int64)

    @classmethod
    def trivial(cls) -> "FiniteAbelianGroup":
        return cls(())

    @property
    def rank_count(self) -> int:
        """Number of cyclic factors."""
        return len(self.orders)

    @property
    def identity(self) -> tuple:
        return (0,) * len(self.orders)

    def __eq__(self, other):
        return isinstance(other, FiniteAbelianGroup) and self.orders == other.orders

    def __hash__(self):
        return hash(("FiniteAbelianGroup", self.orders))

    def __repr__(self):
        if not self.orders:
            return "FiniteAbelianGroup(trivial)"
        return "FiniteAbelianGroup(" + " x ".join(f"Z{n}" for n in self.orders) + ")"

    def __len__(self):
        return self.order

    def product(self, other: "FiniteAbelianGroup") -> "FiniteAbelianGroup":
        """Direct product with coordinates of ``self`` first."""
        return FiniteAbelianGroup(self.orders + other.orders)

    # -- single elements ---------------------------------------------------

    def check(self, x) -> tuple:
        """Return ``x`` as a tuple, raising if it is not an element of this group."""
        try:
            x = tuple(int(c) for c in x)
        except TypeError:
            raise GroupMismatchError(f"{x!r} is not a coordinate vector") from None
        if len(x) != len(self.orders):
            raise GroupMismatchError(f"{x} has {len(x)} coordinates, {self!r} needs {len(self.orders)}")
        for i, (c, n) in enumerate(zip(x, self.orders)):
            if not 0 <= c < n:
                raise GroupMismatchError(f"coordinate {i} of {x} is outside [0, {n})")
        return x

    def __contains__(self, x) -> bool:
        try:
            self.check(x)
        except GroupMismatchError:
            return False
        return True

    def add(self, g, h) -> tuple:
        g, h = self.check(g), self.check(h)
        return tuple((a + b) % n for a, b, n in zip(g, h, self.orders))

    def sub(self, g, h) -> tuple:
        g, h = self.check(g), self.check(h)
        return tuple((a - b) % n for a, b, n in zip(g, h, self.orders))

    def neg(self, g) -> tuple:
        g = self.check(g)
        return tuple((-a) % n for a, n in zip(g, self.orders))

    def scale(self, k: int, g) -> tuple:
        g = self.check(g)
        return tuple((k * a) % n for a, n in zip(g, self.orders))

    def element_order(self, g) -> int:
        g = self.check(g)
        return math.lcm(1, *(n // math.gcd(n, a) for a, n in zip(g, self.orders)))

    def rank(self, g) -> int:
        g = self.check(g)
        return int(sum(c * s for c, s in zip(g, self.strides.tolist())))

    def unrank(self, r: int) -> tuple:
        r = int(r)
        if not 0 <= r < self.order:
            raise GroupMismatchError(f"rank {r} is outside [0, {self.order})")
        return tuple(int(c) for c in self.coords_of(np.array([r]))[0])

    def elements(self):
        """All elements in rank order."""
        return itertools.product(*(range(n) for n in self.orders))

    # -- vectorised helpers on rank / coordinate arrays --------------------

    def coords_of(self, ranks) -> np.ndarray:
        """Coordinates of each rank, shape ``(len(ranks), r)``."""
        ranks = np.asarray(ranks, dtype=np.int64)
        if not self.orders:
            return np.zeros((ranks.size, 0), dtype=np.int64)
        return (ranks[:, None] // self.strides[None, :]) % self._orders_arr[None, :]

    def ranks_of(self, coords) -> np.ndarray:
        """Ranks of coordinate rows; coordinates are reduced first."""
        coords = np.asarray(coords, dtype=np.int64)
        if not self.orders:
            return np.zeros(coords.shape[0] if coords.ndim else 1, dtype=np.int64)
        coords = coords.reshape(-1, len(self.orders))
        return (coords % self._orders_arr) @ self.strides

    def add_ranks(self, a, b) -> np.ndarray:
        """Elementwise (broadcast) sum of two rank arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        for n, s in zip(self.orders, self.strides.tolist()):
            out += (((a // s) + (b // s)) % n) * s
        return out

    def sub_ranks(self, a, b) -> np.ndarray:
        """Elementwise (broadcast) difference ``a - b`` of two rank arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        for n, s in zip(self.orders, self.strides.tolist()):
            out += (((a // s) - (b // s)) % n) * s
        return out

    def neg_ranks(self, a) -> np.ndarray:
        return self.sub_ranks(0, a)

    def as_ranks(self, S: Iterable) -> np.ndarray:
        """Sorted unique ranks of a collection of elements (tuples or a coordinate array)."""
        if isinstance(S, np.ndarray) and S.ndim == 2:
            rows = S
        else:
            rows = [self.check(x) for x in S]
            if not rows:
                return np.zeros(0, dtype=np.int64)
            rows = np.array(rows, dtype=np.int64).reshape(len(rows), len(self.orders))
        rows = np.asarray(rows, dtype=np.int64)
        if rows.size and ((rows < 0).any() or (rows >= self._orders_arr).any()):
            raise GroupMismatchError(f"coordinate array does not fit {self!r}")
        return np.unique(self.ranks_of(rows))

    def as_set(self, S: Iterable) -> frozenset:
        return frozenset(map(tuple, self.coords_of(self.as_ranks(S)).tolist()))

    def sorted_elements(self, S: Iterable) -> list[tuple]:
        """Elements of ``S`` sorted by dense rank."""
        return [tuple(x) for x in self.coords_of(self.as_ranks(S)).tolist()]


def make_group(orders: Sequence[int]) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(orders)


def direct_product(*groups: FiniteAbelianGroup) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(n for G in groups for n in G.orders))


def product_set(S1: Iterable, S2: Iterable) -> frozenset:
    """Cartesian product of two element sets with concatenated coordinates."""
    S2 = list(S2)
    return frozenset(tuple(a) + tuple(b) for a in S1 for b in S2)


def reorder_isomorphism(G: FiniteAbelianGroup, H: FiniteAbelianGroup):
    """Coordinate permutation ``G -> H`` when ``H`` lists the same factors in another order.

    Returns a function on elements; raises ``GroupMismatchError`` if the
    factor multisets differ.
    """
    if sorted(G.orders) != sorted(H.orders):
        raise GroupMismatchError(f"{G!r} and {H!r} do not have the same cyclic factors")
    free = list(range(len(G.orders)))
    perm = []
    for n in H.orders:
        j = next(j for j in free if G.orders[j] == n)
        free.remove(j)
        perm.append(j)

    def iso(x):
        x = G.check(x)
        return tuple(x[j] for j in perm)

    return iso


# -- subgroups ------------------------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    group: FiniteAbelianGroup
    ranks: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.ranks)

    @property
    def is_proper(self) -> bool:
        return self.order < self.group.order

    def __contains__(self, x) -> bool:
        return self.group.rank(x) in set(self.ranks)

    def elements(self) -> list[tuple]:
        return [tuple(x) for x in self.group.coords_of(np.array(self.ranks, dtype=np.int64)).tolist()]


def _span_mask(G: FiniteAbelianGroup, gen_ranks: np.ndarray) -> np.ndarray:
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    H = np.zeros(1, dtype=np.int64)
    for x in np.asarray(gen_ranks, dtype=np.int64).tolist():
        if mask[x]:
            continue
        k = G.element_order(G.unrank(x))
        multiples = np.zeros(k, dtype=np.int64)
        for i in range(1, k):
            multiples[i] = G.add_ranks(multiples[i - 1], x)
        H = np.unique(G.add_ranks(H[:, None], multiples[None, :]))
        mask[H] = True
    return mask


def subgroup_generated(G: FiniteAbelianGroup, X: Iterable) -> Subgroup:
    """Smallest subgroup containing ``X``."""
    mask = _span_mask(G, G.as_ranks(X))
    return Subgroup(G, tuple(np.flatnonzero(mask).tolist()))


@dataclass(frozen=True)
class CosetVerdict:
    confined: bool
    witness: Subgroup


def coset_confinement(G: FiniteAbelianGroup, S: Iterable) -> CosetVerdict:
    """Decide whether ``S`` lies in a coset of a proper subgroup.

    The witness is the subgroup generated by ``S - s0``; ``S`` is confined
    exactly when that subgroup is proper.
    """
    ranks = G.as_ranks(S)
    if ranks.size == 0:
        raise EmptySetError("coset confinement of the empty set")
    diffs = G.sub_ranks(ranks, ranks[0])
    H = Subgroup(G, tuple(np.flatnonzero(_span_mask(G, diffs)).tolist()))
    return CosetVerdict(H.is_proper, H)


def nontrivial_stabilizer(G: FiniteAbelianGroup, S: Iterable):
    """Some ``g != 0`` with ``g + S == S``, or ``None``."""
    ranks = G.as_ranks(S)
    if ranks.size == 0:
        raise EmptySetError("stabilizer of the empty set")
    mask = np.zeros(G.order, dtype=bool)
    mask[ranks] = True
    # a stabilizing g maps ranks[0] into S, so g is one of S - s0
    for g in G.sub_ranks(ranks, ranks[0]).tolist():
        if g != 0 and mask[G.add_ranks(ranks, g)].all():
            return G.unrank(g)
    return None


def all_subgroups(G: FiniteAbelianGroup, max_order: int = DEFAULT_AUTOMORPHISM_BOUND) -> list[Subgroup]:
    """Every subgroup of a small group, found by adjoining generators until closed."""
    if G.order > max_order:
        raise SizeLimitError(f"|G| = {G.order} exceeds the subgroup enumeration bound {max_order}")
    found = {tuple(np.flatnonzero(_span_mask(G, np.zeros(0, np.int64))).tolist())}
    frontier = list(found)
    while frontier:
        nxt = []
        for H in frontier:
            for g in range(G.order):
                if g in H:
                    continue
                K = tuple(np.flatnonzero(_span_mask(G, np.array(H + (g,)))).tolist())
                if K not in found:
                    found.add(K)
                    nxt.append(K)
        frontier = nxt
    return [Subgroup(G, H) for H in sorted(found, key=lambda h: (len(h), h))]


# -- automorphisms --------------------------------------------------------


class Automorphism:
    """Group automorphism given by the images of the standard basis vectors."""

    def __init__(self, group: FiniteAbelianGroup, images: Sequence[Sequence[int]]):
        self.group = group
        self.images = tuple(group.check(x) for x in images)
        self._matrix = np.array(self.images, dtype=np.int64).reshape(len(group.orders), len(group.orders))

    def __call__(self, x) -> tuple:
        x = self.group.check(x)
        return tuple(int(c) for c in self.group.coords_of(self.apply_ranks([self.group.rank(x)]))[0])

    def apply_ranks(self, ranks) -> np.ndarray:
        coords = self.group.coords_of(ranks)
        return self.group.ranks_of(coords @ self._matrix)

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.group == other.group and self.images == other.images

    def __hash__(self):
        return hash((self.group, self.images))

    def __repr__(self):
        return f"Automorphism({self.images})"


def automorphisms(G: FiniteAbelianGroup, max_order: int = DEFAULT_AUTOMORPHISM_BOUND) -> list[Automorphism]:
    """All automorphisms of a small group.

    Basis images are chosen one factor at a time.  The image of ``e_i`` must
    be killed by ``n_i`` (homomorphism condition) and the images chosen so
    far must generate a subgroup of order ``n_1 * ... * n_i`` (injectivity
    on the sub-product), which prunes most non-bijective choices early.
    """
    if G.order > max_order:
        raise SizeLimitError(f"|G| = {G.order} exceeds the automorphism enumeration bound {max_order}")
    r = len(G.orders)
    if r == 0:
        return [Automorphism(G, [])]
    everything = np.arange(G.order, dtype=np.int64)
    coords = G.coords_of(everything)
    candidates = []
    for n in G.orders:
        killed = G.ranks_of(coords * n) == 0
        candidates.append(everything[killed].tolist())

    found: list[Automorphism] = []

    def extend(chosen: list[int]):
        i = len(chosen)
        if i == r:
            found.append(Automorphism(G, [G.unrank(x) for x in chosen]))
            if len(found) > MAX_AUTOMORPHISMS:
                raise SizeLimitError(f"more than {MAX_AUTOMORPHISMS} automorphisms")
            return
        target = math.prod(G.orders[: i + 1])
        for x in candidates[i]:
            if int(_span_mask(G, np.array(chosen + [x])).sum()) == target:
                extend(chosen + [x])

    extend([])
    return found
