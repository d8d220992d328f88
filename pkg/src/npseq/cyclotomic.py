"""Exact integer arithmetic in Z[zeta_p] for prime p.

Elements are stored as length-p coefficient vectors over the powers
1, zeta, ..., zeta^(p-1) and kept in a canonical form with the last
coefficient forced to zero via the relation 1 + zeta + ... + zeta^(p-1) = 0.
Since {1, zeta, ..., zeta^(p-2)} is an integral basis for prime p, canonical
vectors are unique and equality/hashing are plain tuple comparisons.

p = 2 is allowed (zeta_2 = -1), which makes binary sequences usable as cheap
cross-checks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache


def is_prime(n: int) -> bool:
    """Trial-division primality test; inputs here are desk-scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")


def _canonicalize(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    """Subtract the last coefficient from every entry so coeffs[-1] == 0."""
    last = coeffs[-1]
    if last == 0:
        return coeffs
    return tuple(c - last for c in coeffs)


@dataclass(frozen=True)
class CyclotomicInt:
    """Canonical element of Z[zeta_p]; immutable value type."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.p:
            raise ValueError(
                f"expected {self.p} coefficients, got {len(self.coeffs)}"
            )
        if self.coeffs[-1] != 0:
            raise ValueError("coefficient vector is not canonical")

    @classmethod
    def from_coeffs(cls, p: int, coeffs: tuple[int, ...] | list[int]) -> CyclotomicInt:
        """Build from an arbitrary length-p coefficient vector, canonicalizing."""
        _require_prime(p)
        coeffs = tuple(coeffs)
        if len(coeffs) != p:
            raise ValueError(f"expected {p} coefficients, got {len(coeffs)}")
        return cls(p, _canonicalize(coeffs))

    @classmethod
    def zero(cls, p: int) -> CyclotomicInt:
        _require_prime(p)
        return cls(p, (0,) * p)

    @classmethod
    def from_int(cls, p: int, c: int) -> CyclotomicInt:
        _require_prime(p)
        return cls(p, (c,) + (0,) * (p - 1))

    @classmethod
    def from_root_power(cls, p: int, b: int) -> CyclotomicInt:
        """The root of unity zeta_p^b, 0 <= b < p."""
        _require_prime(p)
        if not 0 <= b < p:
            raise ValueError(f"root exponent {b} out of range for p={p}")
        coeffs = [0] * p
        coeffs[b] = 1
        return cls(p, _canonicalize(tuple(coeffs)))

    def _check_compatible(self, other: CyclotomicInt) -> None:
        if self.p != other.p:
            raise ValueError(f"mixed moduli: {self.p} vs {other.p}")

    def __add__(self, other: CyclotomicInt) -> CyclotomicInt:
        self._check_compatible(other)
        return CyclotomicInt(
            self.p,
            _canonicalize(tuple(a + b for a, b in zip(self.coeffs, other.coeffs))),
        )

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt(self.p, tuple(-c for c in self.coeffs))

    def __sub__(self, other: CyclotomicInt) -> CyclotomicInt:
        return self + (-other)

    def __mul__(self, other: CyclotomicInt) -> CyclotomicInt:
        self._check_compatible(other)
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                out[(i + j) % p] += a * b
        return CyclotomicInt(p, _canonicalize(tuple(out)))

    def conjugate(self) -> CyclotomicInt:
        """Complex conjugation: zeta^j maps to zeta^(p-j)."""
        p = self.p
        out = [0] * p
        for j, c in enumerate(self.coeffs):
            out[(p - j) % p] = c
        return CyclotomicInt(p, _canonicalize(tuple(out)))

    def as_int(self) -> int | None:
        """The rational integer this value equals, or None if it is not one."""
        if any(c != 0 for c in self.coeffs[1:]):
            return None
        return self.coeffs[0]

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_complex(self) -> complex:
        """Floating-point evaluation at exp(2*pi*i/p); for cross-checks only."""
        roots = _float_roots(self.p)
        return sum(c * roots[j] for j, c in enumerate(self.coeffs) if c != 0)

    def __repr__(self) -> str:
        return f"CyclotomicInt(p={self.p}, coeffs={list(self.coeffs)})"


@lru_cache(maxsize=None)
def _float_roots(p: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(2j * math.pi * j / p) for j in range(p))
