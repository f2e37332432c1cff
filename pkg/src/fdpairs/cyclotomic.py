"""Exact arithmetic in Z[zeta_e], reduced modulo the e-th cyclotomic polynomial.

Two representations are used.  ``CyclotomicInteger`` stores the reduced
coefficient vector of length phi(e) and is the scalar type handed to
callers.  Bulk code (the character transforms) works on numpy arrays whose
last axis has length ``e``: a polynomial in Z[x]/(x^e - 1).  In that form
multiplication by zeta^k is a cyclic shift and conjugation is the index map
k -> -k, so transforms never leave the integers.  ``reduce_cyclic`` maps the
length-e form onto the canonical reduced coefficients.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import ConductorMismatchError, InvalidConductorError

INT64_SAFE = 2**62


def euler_phi(e: int) -> int:
    result = e
    p, n = 2, e
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (low degree first); ``den`` must be monic."""
    num = list(num)
    dq = len(den) - 1
    q = [0] * (len(num) - dq)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + dq]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[:dq]):
        raise ArithmeticError("polynomial division left a remainder")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e, lowest degree first (``(1, 0, 1)`` is x^2 + 1)."""
    if not isinstance(e, (int, np.integer)) or e < 1:
        raise InvalidConductorError(f"conductor must be a positive integer, got {e!r}")
    e = int(e)
    num = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            num = _poly_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _phi_array(e: int) -> np.ndarray:
    return np.array(cyclotomic_poly(e), dtype=np.int64)


def working_dtype(bound: int):
    """int64 when every intermediate stays below ``bound``, otherwise Python ints."""
    return np.int64 if bound < INT64_SAFE else object


def reduce_cyclic(a: np.ndarray, e: int) -> np.ndarray:
    """Reduce polynomials of degree < e (last axis) modulo Phi_e; returns last axis phi(e)."""
    phi = _phi_array(e)
    deg = len(phi) - 1
    a = np.array(a, dtype=a.dtype, copy=True)
    if a.dtype != object:
        phi_t = phi
    else:
        phi_t = np.array([int(c) for c in phi], dtype=object)
    for d in range(a.shape[-1] - 1, deg - 1, -1):
        c = a[..., d].copy()
        if a.dtype == object or c.any():
            a[..., d - deg: d + 1] -= c[..., None] * phi_t
    return a[..., :deg]


def lift_cyclic(reduced: np.ndarray, e: int) -> np.ndarray:
    """Embed reduced coefficients (last axis phi(e)) into the length-e form."""
    out = np.zeros(reduced.shape[:-1] + (e,), dtype=reduced.dtype)
    out[..., : reduced.shape[-1]] = reduced
    return out


def cyclic_conj(a: np.ndarray) -> np.ndarray:
    e = a.shape[-1]
    return a[..., (-np.arange(e)) % e]


def cyclic_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product in Z[x]/(x^e - 1) along the last axis."""
    e = a.shape[-1]
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.result_type(a, b))
    for k in range(e):
        out += a[..., k: k + 1] * np.roll(b, k, axis=-1)
    return out


def cyclic_norm_sq(a: np.ndarray) -> np.ndarray:
    return cyclic_mul(a, cyclic_conj(a))


def rational_values(reduced: np.ndarray):
    """Integer values of reduced rows whose non-constant part vanishes, else ``None``."""
    if reduced.shape[-1] > 1 and np.any(reduced[..., 1:] != 0):
        return None
    return reduced[..., 0]


class CyclotomicInteger:
    """An element of Z[zeta_e], stored as reduced coefficients in powers of zeta_e."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs=()):
        poly = cyclotomic_poly(conductor)
        self.conductor = int(conductor)
        work = [0] * self.conductor
        for k, c in enumerate(coeffs):
            work[k % self.conductor] += int(c)
        deg = len(poly) - 1
        for d in range(self.conductor - 1, deg - 1, -1):
            c = work[d]
            if c:
                for j, p in enumerate(poly):
                    work[d - deg + j] -= c * p
        self.coeffs = tuple(work[:deg])

    @classmethod
    def zeta(cls, conductor: int, k: int = 1) -> "CyclotomicInteger":
        coeffs = [0] * conductor
        coeffs[k % conductor] = 1
        return cls(conductor, coeffs)

    @classmethod
    def from_int(cls, conductor: int, n: int) -> "CyclotomicInteger":
        return cls(conductor, [n])

    def _coerce(self, other) -> "CyclotomicInteger":
        if isinstance(other, CyclotomicInteger):
            if other.conductor != self.conductor:
                raise ConductorMismatchError(f"conductors {self.conductor} and {other.conductor} differ")
            return other
        if isinstance(other, (int, np.integer)):
            return CyclotomicInteger(self.conductor, [int(other)])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicInteger(self.conductor, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.conductor, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicInteger(self.conductor, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [0] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CyclotomicInteger(self.conductor, prod)

    __rmul__ = __mul__

    def conj(self) -> "CyclotomicInteger":
        """Image under zeta_e -> zeta_e^(e-1)."""
        e = self.conductor
        work = [0] * e
        for k, c in enumerate(self.coeffs):
            work[(-k) % e] += c
        return CyclotomicInteger(e, work)

    def norm_sq(self) -> "CyclotomicInteger":
        """``a * conj(a)``, the squared absolute value under every complex embedding."""
        return self * self.conj()

    def is_rational_integer(self):
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0] if self.coeffs else 0

    def is_real(self) -> bool:
        return self.conj() == self

    def __complex__(self):
        z = complex(math.cos(2 * math.pi / self.conductor), math.sin(2 * math.pi / self.conductor))
        return sum((c * z**k for k, c in enumerate(self.coeffs)), 0j)

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.is_rational_integer() == int(other)
        return (isinstance(other, CyclotomicInteger) and self.conductor == other.conductor
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if k == 0 else f"{c}*z{self.conductor}^{k}")
        return " + ".join(terms) if terms else "0"
