"""Discrete Fourier transform of scales and generator recovery from it.

F_A(t) = sum over k in A of exp(-2 i pi k t / c), evaluated directly (c is
small). Roots of unity come from a table built so that the entry for c - j
is the exact conjugate of the entry for j, which makes the spectrum exactly
conjugate-symmetric in floating point.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, Tuple

from .errors import HypothesisViolated
from .numtheory import mod_inverse
from .scale import Scale

TOLERANCE = 1e-9


@lru_cache(maxsize=256)
def _roots(c: int) -> Tuple[complex, ...]:
    table = [0j] * c
    for j in range(c // 2 + 1):
        w = cmath.exp(-2j * math.pi * j / c)
        table[j] = w
        table[(c - j) % c] = w.conjugate()
    table[0] = 1 + 0j
    if c % 2 == 0:
        table[c // 2] = -1 + 0j
    return tuple(table)


@dataclass(frozen=True)
class Spectrum:
    c: int
    coeffs: Tuple[complex, ...]

    @property
    def magnitudes(self) -> Tuple[float, ...]:
        return tuple(abs(z) for z in self.coeffs)

    def to_pairs(self) -> list:
        return [[z.real, z.imag] for z in self.coeffs]


def dft(s: Scale) -> Spectrum:
    c = s.c
    w = _roots(c)
    coeffs = tuple(sum((w[(k * t) % c] for k in s.pcs), 0j) for t in range(c))
    return Spectrum(c, coeffs)


def closed_form_magnitude(c: int, f: int, d: int, t: int) -> float:
    """|F_A(t)| for A = {f, 2f, ..., df}: |sin(pi d t f / c)| / |sin(pi t f / c)|.

    Exactly d when t*f == 0 mod c. Arguments are reduced mod c first; |sin|
    has period pi so this loses nothing and keeps the angles small.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    j = (t * f) % c
    if j == 0:
        return float(d)
    num = abs(math.sin(math.pi * ((d * j) % c) / c))
    return num / abs(math.sin(math.pi * j / c))


def units(c: int) -> Tuple[int, ...]:
    return tuple(t for t in range(1, c) if math.gcd(t, c) == 1) if c > 1 else ()


def seminorm(s: Scale, tolerance: float = TOLERANCE) -> Tuple[float, FrozenSet[int]]:
    """Largest |F_s(t)| over t coprime with c, and every t within tolerance*d of it."""
    if s.c < 2:
        raise ValueError("seminorm needs c >= 2")
    mags = dft(s).magnitudes
    ts = units(s.c)
    best = max(mags[t] for t in ts)
    slack = tolerance * max(len(s), 1)
    return best, frozenset(t for t in ts if mags[t] >= best - slack)


def steps_from_indices(c: int, indices: Iterable[int]) -> FrozenSet[int]:
    """{t^-1, -t^-1} for every index t (all must be units mod c)."""
    out = set()
    for t in indices:
        inv = mod_inverse(t, c)
        out.add(inv)
        out.add((-inv) % c)
    return frozenset(out)


def recover_generators_via_dft(s: Scale, tolerance: float = TOLERANCE) -> FrozenSet[int]:
    """Generator steps read off the coprime indices where |F_s| peaks.

    Only defined for gcd(c, d) == 1 and 1 < d < c-1. On a scale that is not
    generated by a unit the answer is just whatever the peaks point at and
    need not generate anything.
    """
    c, d = s.c, len(s)
    if math.gcd(c, d) != 1:
        raise HypothesisViolated(f"needs gcd(c, d) == 1, got c={c}, d={d}")
    if not 1 < d < c - 1:
        raise HypothesisViolated(f"needs 1 < d < c-1, got c={c}, d={d}")
    _, argmax = seminorm(s, tolerance)
    return steps_from_indices(c, argmax)
