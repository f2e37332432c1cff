"""Exact characters, character sums and squared character spectra.

The pairing is fixed coordinate-wise: ``chi_z(g) = zeta_e^k`` with
``k = sum_i (e / n_i) z_i g_i mod e`` where ``e`` is the group exponent.
On ``Z2 x Z4^n`` this is ``(-1)^(wa) * i^(z.b)``.

Bulk transforms run one exact DFT per cyclic factor on arrays whose last
axis holds a polynomial in Z[x]/(x^e - 1); twiddles are cyclic shifts.
"""

from __future__ import annotations

import numpy as np

from .cyclotomic import (
    CyclotomicInteger,
    cyclic_mul,
    cyclic_norm_sq,
    euler_phi,
    lift_cyclic,
    reduce_cyclic,
    working_dtype,
)
from .errors import GroupMismatchError, NotGroupRingElementError, SizeLimitError
from .group_ring import GroupRingElement, SpectrumMultiset
from .groups import FiniteAbelianGroup

NAIVE_BOUND = 4096


def char_exponent(G: FiniteAbelianGroup, z, g) -> int:
    """The ``k`` in ``chi_z(g) = zeta_e^k``."""
    z, g = G.check(z), G.check(g)
    e = G.exponent
    return sum((e // n) * a * b for a, b, n in zip(z, g, G.orders)) % e


def _weights(G: FiniteAbelianGroup) -> np.ndarray:
    return np.array([G.exponent // n for n in G.orders], dtype=np.int64)


def char_sum(z, A: GroupRingElement) -> CyclotomicInteger:
    """``chi_z(A) = sum_g a_g chi_z(g)``."""
    G = A.group
    z = np.array(G.check(z), dtype=np.int64)
    e = G.exponent
    ranks = np.flatnonzero(A.coeffs != 0)
    ks = (G.coords_of(ranks) @ (z * _weights(G))) % e if G.orders else np.zeros(ranks.size, np.int64)
    powers = [0] * e
    for k, a in zip(ks.tolist(), A.coeffs[ranks].tolist()):
        powers[k] += a
    return CyclotomicInteger(e, powers)


def _transform(G: FiniteAbelianGroup, arr: np.ndarray, sign: int) -> np.ndarray:
    """Axis-wise DFT of an array shaped ``orders + (e,)``.

    Along axis ``i`` of size ``n``: ``out[k] = sum_j x^(sign * (e/n) * j * k) * in[j]``.
    """
    e = G.exponent
    for axis, n in enumerate(G.orders):
        step = e // n
        moved = np.moveaxis(arr, axis, 0)
        out = np.zeros_like(moved)
        for j in range(n):
            src = moved[j]
            for k in range(n):
                shift = (sign * step * j * k) % e
                out[k] += np.roll(src, shift, axis=-1) if shift else src
        arr = np.moveaxis(out, 0, axis)
    return arr


def char_sum_table(A: GroupRingElement, reduced: bool = True) -> np.ndarray:
    """``chi_z(A)`` for every ``z`` (rows in rank order).

    With ``reduced`` the rows are canonical coefficients of length phi(e);
    otherwise they are the length-e cyclic form.
    """
    G = A.group
    e = G.exponent
    dtype = working_dtype(A.abs_total())
    arr = np.zeros(G.orders + (e,), dtype=dtype)
    arr[..., 0] = A.coeffs.astype(dtype).reshape(G.orders)
    table = _transform(G, arr, +1).reshape(G.order, e)
    return reduce_cyclic(table, e) if reduced else table


def _norm_rows(table: np.ndarray, e: int, fast: bool) -> np.ndarray:
    """Reduced rows of ``|v|^2`` for each cyclic-form row ``v``."""
    if fast and e in (1, 2, 4):
        # Gaussian-integer path: v = re + i*im with zeta_4 = i
        if e == 4:
            re = table[:, 0] - table[:, 2]
            im = table[:, 1] - table[:, 3]
            out = np.zeros((table.shape[0], 2), dtype=table.dtype)
            out[:, 0] = re * re + im * im
            return out
        v = table[:, 0] - table[:, 1] if e == 2 else table[:, 0]
        return (v * v)[:, None]
    return reduce_cyclic(cyclic_norm_sq(table), e)


def _naive_table(A: GroupRingElement) -> np.ndarray:
    G = A.group
    if G.order > NAIVE_BOUND:
        raise SizeLimitError(f"naive character table limited to |G| <= {NAIVE_BOUND}")
    e = G.exponent
    coords = G.coords_of(np.arange(G.order))
    K = ((coords * _weights(G)) @ coords.T) % e if G.orders else np.zeros((1, 1), np.int64)
    dtype = working_dtype(A.abs_total())
    a = A.coeffs.astype(dtype)
    table = np.zeros((G.order, e), dtype=dtype)
    for k in range(e):
        table[:, k] = (K == k).astype(dtype) @ a
    return table


def sq_spectrum(A: GroupRingElement, method: str = "fast") -> np.ndarray:
    """Reduced coefficient rows of ``|chi_z(A)|^2`` for every ``z`` in rank order.

    Column 0 is the integer value whenever the norm is rational, which is
    always the case for exponents dividing 4.  ``method="naive"`` evaluates
    every character sum directly in O(|G|^2) and is kept as an oracle.
    """
    G = A.group
    e = G.exponent
    if method == "fast":
        table = char_sum_table(A, reduced=False)
    elif method == "naive":
        table = _naive_table(A)
    else:
        raise ValueError(f"unknown method {method!r}")
    if working_dtype(A.abs_total() ** 2) is object and table.dtype != object:
        table = table.astype(object)
    return _norm_rows(table, e, fast=(method == "fast"))


def integer_sq_spectrum(A: GroupRingElement, method: str = "fast") -> np.ndarray:
    """``|chi_z(A)|^2`` as integers; raises ``ValueError`` if some value is irrational."""
    rows = sq_spectrum(A, method)
    if rows.shape[1] > 1 and np.any(rows[:, 1:] != 0):
        raise ValueError("squared character spectrum has irrational entries")
    return rows[:, 0]


def character_spectrum(A: GroupRingElement) -> SpectrumMultiset:
    """Multiset of ``|chi(A)|^2``; irrational values are keyed by their coefficient tuple."""
    rows = sq_spectrum(A)
    if rows.shape[1] == 1 or not np.any(rows[:, 1:] != 0):
        return SpectrumMultiset.from_values(rows[:, 0])
    counts: dict = {}
    for row in map(tuple, rows.tolist()):
        key = row[0] if not any(row[1:]) else row
        counts[key] = counts.get(key, 0) + 1
    return SpectrumMultiset(dict(sorted(counts.items(), key=lambda kv: repr(kv[0]))))


def square_table(A: GroupRingElement) -> np.ndarray:
    """Cyclic-form rows of ``chi_z(A)^2``."""
    table = char_sum_table(A, reduced=False)
    if working_dtype(A.abs_total() ** 2) is object and table.dtype != object:
        table = table.astype(object)
    return cyclic_mul(table, table)


def fourier_invert(G: FiniteAbelianGroup, values) -> GroupRingElement:
    """The unique ``A`` in Z[G] with ``chi_z(A) = values[z]``.

    ``values`` is either a sequence of ``CyclotomicInteger`` indexed by rank
    or an array of reduced coefficient rows.  Division by |G| is exact and
    checked; a remainder or irrational coefficient raises
    ``NotGroupRingElementError``.
    """
    e = G.exponent
    phi = euler_phi(e)
    if isinstance(values, np.ndarray) and values.ndim == 2:
        rows = values
    else:
        vals = list(values)
        for v in vals:
            if v.conductor != e:
                raise GroupMismatchError(f"character value has conductor {v.conductor}, group exponent is {e}")
        rows = np.array([v.coeffs for v in vals], dtype=object).reshape(len(vals), phi)
    if rows.shape != (G.order, phi):
        raise GroupMismatchError(f"expected {G.order} rows of {phi} coefficients, got {rows.shape}")
    bound = int(np.abs(rows).max()) * phi * G.order if rows.size else 0
    rows = rows.astype(working_dtype(bound))
    arr = lift_cyclic(rows, e).reshape(G.orders + (e,))
    sums = reduce_cyclic(_transform(G, arr, -1).reshape(G.order, e), e)
    if phi > 1 and np.any(sums[:, 1:] != 0):
        bad = int(np.flatnonzero(np.any(sums[:, 1:] != 0, axis=1))[0])
        raise NotGroupRingElementError(f"coefficient at {G.unrank(bad)} is not rational")
    total = sums[:, 0]
    rem = total % G.order
    if np.any(rem != 0):
        bad = int(np.flatnonzero(rem != 0)[0])
        raise NotGroupRingElementError(f"coefficient at {G.unrank(bad)} is {total[bad]}/{G.order}")
    coeffs = total // G.order
    if coeffs.dtype == object and working_dtype(int(np.abs(coeffs).max())) is np.int64:
        coeffs = coeffs.astype(np.int64)
    return GroupRingElement(G, coeffs)
