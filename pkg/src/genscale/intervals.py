"""Oriented interval vectors and the polygon tests built on them.

``V_A(k)`` counts ordered pairs ``(x, y)`` of A with ``y - x == k (mod c)``.
The vector has length c (oriented), not the c/2 unordered vector usual in
pc-set theory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import PreconditionViolated
from .numtheory import divisors
from .scale import Scale, translate


@dataclass(frozen=True)
class IntervalVector:
    c: int
    v: Tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.v[k % self.c]

    def __len__(self) -> int:
        return self.c

    def __str__(self) -> str:
        return "[" + ", ".join(str(x) for x in self.v) + "]"

    def to_list(self) -> list:
        return list(self.v)


def interval_vector(s: Scale) -> IntervalVector:
    c = s.c
    v = [0] * c
    for x in s.pcs:
        for y in s.pcs:
            v[(y - x) % c] += 1
    return IntervalVector(c, tuple(v))


def cluster_vector(c: int, d: int) -> IntervalVector:
    """Closed-form interval vector of the chromatic cluster {0, ..., d-1}.

    For 1 <= k <= c/2 the pairs spanning k are the d-k "direct" ones plus the
    d-c+k that wrap around the origin; the vector is completed by symmetry.
    """
    if not 1 < d < c - 1:
        raise PreconditionViolated(f"cluster_vector needs 1 < d < c-1, got c={c}, d={d}")
    lo, hi = min(d, c - d), max(d, c - d)
    v = [0] * c
    v[0] = d
    for k in range(1, c // 2 + 1):
        if k <= lo:
            n = d - k
        elif c - d < k <= d:
            n = 2 * d - c
        elif k >= hi:
            n = d - c + k
        else:
            # d <= k < c-d: no pair of the cluster spans k
            n = 0
        v[k] = n
        v[c - k] = n
    return IntervalVector(c, tuple(v))


def is_union_of_polygons(s: Scale, f: int) -> bool:
    """True iff s is a union of orbits of x -> x + f.

    Checked twice, as V_s(f) == |s| and as s + f == s.
    """
    if f % s.c == 0:
        raise ValueError("f must be non-zero mod c")
    by_vector = interval_vector(s)[f] == len(s)
    by_translation = translate(s, f) == s
    if by_vector != by_translation:
        raise AssertionError(f"interval-vector and translation tests disagree on {s}, f={f}")
    return by_vector


def is_regular_polygon(s: Scale) -> Optional[int]:
    """Smallest divisor f of c such that s is a single orbit of x -> x + f."""
    if len(s) == 0:
        raise ValueError("empty scale")
    d = len(s)
    iv = interval_vector(s)
    for f in divisors(s.c):
        if iv[f] == d and s.c // f == d:
            return f
    return None


def difference_group(s: Scale) -> int:
    """Step m with <s - s> = m Z_c; returns c for a singleton (trivial group)."""
    if len(s) == 0:
        raise ValueError("empty scale")
    m = s.c
    x0 = s.pcs[0]
    for x in s.pcs[1:]:
        m = math.gcd(m, x - x0)
    return m
