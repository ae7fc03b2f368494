"""Integer primitives: gcd, inverses, Euler's totient, divisors, totient numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional

from .errors import BoundTooSmall, NotInvertible


def gcd(a: int, b: int) -> int:
    """Non-negative gcd; gcd(0, 0) == 0."""
    return math.gcd(a, b)


def mod_inverse(a: int, c: int) -> int:
    """Return x in [0, c) with a*x == 1 (mod c)."""
    if c < 1:
        raise ValueError(f"modulus must be >= 1, got {c}")
    if math.gcd(a, c) != 1:
        raise NotInvertible(f"{a} is not invertible modulo {c}")
    return pow(a, -1, c)


@lru_cache(maxsize=4096)
def totient(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient is defined for n >= 1, got {n}")
    result = n
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def divisors(n: int) -> List[int]:
    if n < 1:
        raise ValueError(f"divisors are defined for n >= 1, got {n}")
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % p for p in range(2, math.isqrt(n) + 1))


def order(f: int, c: int) -> int:
    """Additive order of f in Z_c."""
    return c // math.gcd(c, f)


def totient_preimage_bound(m: int) -> int:
    """Upper bound on every n with totient(n) == m.

    If p**k divides n exactly then (p - 1) * p**(k - 1) divides totient(n), so
    n is at most the product of p**(v_p(m) + 1) over primes p with (p - 1) | m.
    The classical n <= 2*m*m bound is also valid; the smaller one is returned.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    bound = 1
    for e in divisors(m):
        p = e + 1
        if is_prime(p):
            k, rest = 0, m
            while rest % p == 0:
                rest //= p
                k += 1
            bound *= p ** (k + 1)
    return min(bound, 2 * m * m)


def totient_witness(m: int, search_bound: Optional[int] = None) -> Optional[int]:
    """Smallest n with totient(n) == m, or None when m is a nontotient."""
    limit = totient_preimage_bound(m)
    if search_bound is not None:
        limit = min(limit, search_bound)
    for n in range(1, limit + 1):
        if totient(n) == m:
            return n
    return None


def is_totient_number(m: int, search_bound: Optional[int] = None) -> bool:
    """True iff some n <= search_bound has totient(n) == m.

    A negative answer is only returned when search_bound reaches the certified
    preimage bound, otherwise BoundTooSmall is raised. The default bound is
    2*m*m + 1.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if search_bound is None:
        search_bound = 2 * m * m + 1
    if search_bound < 1:
        raise ValueError("search_bound must be positive")
    if totient_witness(m, search_bound) is not None:
        return True
    cert = totient_preimage_bound(m)
    if search_bound < cert:
        raise BoundTooSmall(
            f"no witness for {m} below {search_bound}, "
            f"but a preimage could be as large as {cert}"
        )
    return False


@dataclass(frozen=True)
class TotientTable:
    """Sieved totients of 1..bound."""

    bound: int
    phi_values: Dict[int, int] = field(repr=False)

    @classmethod
    def build(cls, bound: int) -> "TotientTable":
        if bound < 1:
            raise ValueError(f"bound must be >= 1, got {bound}")
        phi = list(range(bound + 1))
        for p in range(2, bound + 1):
            if phi[p] == p:  # untouched, so p is prime
                for k in range(p, bound + 1, p):
                    phi[k] -= phi[k] // p
        return cls(bound, {n: phi[n] for n in range(1, bound + 1)})

    def __getitem__(self, n: int) -> int:
        return self.phi_values[n]

    def __len__(self) -> int:
        return self.bound

    def values(self) -> set:
        """The image of totient over 1..bound."""
        return set(self.phi_values.values())
