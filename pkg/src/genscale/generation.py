"""Generated scales: construction, brute-force generator search, classification.

A scale A with d notes is generated by a step f when, for some start a in A,
the d terms a, a+f, ..., a+(d-1)f are pairwise distinct mod c and make up A.
``enumerate_generators`` finds every such (f, a) by exhaustion and is the
reference the rest of the package is checked against. ``classify`` reaches
the same counts structurally, from difference groups and interval vectors,
without ever searching for generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Optional, Tuple

from .errors import EmptyScale
from .intervals import difference_group, interval_vector
from .numtheory import mod_inverse, totient
from .scale import Scale


@dataclass(frozen=True)
class GenSpec:
    c: int
    a: int
    f: int
    d: int

    def __post_init__(self) -> None:
        if self.c < 1:
            raise ValueError(f"modulus must be >= 1, got {self.c}")
        if not 1 <= self.d <= self.c:
            raise ValueError(f"length must satisfy 1 <= d <= c, got d={self.d}, c={self.c}")
        object.__setattr__(self, "a", self.a % self.c)
        object.__setattr__(self, "f", self.f % self.c)

    def terms(self) -> Tuple[int, ...]:
        return tuple((self.a + k * self.f) % self.c for k in range(self.d))

    @property
    def is_injective(self) -> bool:
        return len(set(self.terms())) == self.d


def generate(spec: GenSpec) -> Scale:
    """Support of the arithmetic sequence; may have fewer than d notes."""
    return Scale.from_residues(spec.c, spec.terms())


def geometric_support(c: int, ratio: int, seed: int, length: int) -> Scale:
    """Support of seed * ratio**k mod c for 0 <= k < length."""
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    return Scale.from_residues(c, (seed * pow(ratio, k, c) for k in range(length)))


@dataclass(frozen=True)
class GeneratorReport:
    scale: Scale
    generators: Dict[int, FrozenSet[int]]

    @property
    def count(self) -> int:
        """Number of distinct steps (not (step, start) pairs)."""
        return len(self.generators)

    @property
    def steps(self) -> Tuple[int, ...]:
        return tuple(sorted(self.generators))

    def starts(self, f: int) -> Tuple[int, ...]:
        return tuple(sorted(self.generators.get(f % self.scale.c, ())))


def enumerate_generators(s: Scale) -> GeneratorReport:
    d = len(s)
    if d == 0:
        raise EmptyScale("the empty scale has no generators")
    c = s.c
    members = s.as_set()
    found: Dict[int, FrozenSet[int]] = {}
    for f in range(c):
        starts = []
        for a in s.pcs:
            seen = {a}
            x = a
            for _ in range(d - 1):
                x = (x + f) % c
                if x not in members or x in seen:
                    break
                seen.add(x)
            else:
                starts.append(a)
        if starts:
            found[f] = frozenset(starts)
    return GeneratorReport(s, found)


class Kind(str, Enum):
    ONE_NOTE = "OneNote"
    TRITONE = "Tritone"
    TWO_GENERATOR = "TwoGenerator"
    REGULAR_POLYGON = "RegularPolygon"
    INCOMPLETE_POLYGON = "IncompletePolygon"
    FULL_AGGREGATE = "FullAggregate"
    ALMOST_FULL = "AlmostFull"
    NOT_GENERATED = "NotGenerated"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Classification:
    kind: Kind
    m: Optional[int]
    predicted_count: int

    @property
    def generated(self) -> bool:
        return self.kind is not Kind.NOT_GENERATED


def _is_unit_image_of_cluster(r: Scale) -> bool:
    # A unit-step scale with 1 < d < c-1 has V(u) == d-1 exactly at u = +-step,
    # so those are the only candidates worth unwinding back to a cluster.
    c, d = r.c, len(r)
    iv = interval_vector(r)
    for k in range(1, c):
        if iv[k] != d - 1 or math.gcd(k, c) != 1:
            continue
        inv = mod_inverse(k, c)
        image = {(inv * x) % c for x in r.pcs}
        gaps = sum(1 for x in image if (x + 1) % c not in image)
        if gaps == 1:
            return True
    return False


def classify(s: Scale) -> Classification:
    """Place s in the generated-scale taxonomy and predict its generator count."""
    d = len(s)
    if d == 0:
        raise EmptyScale("cannot classify the empty scale")
    c = s.c
    if d == 1:
        # every step, 0 included, "generates" a single note
        return Classification(Kind.ONE_NOTE, c, c)
    if d == c:
        return Classification(Kind.FULL_AGGREGATE, 1, totient(c))
    if d == 2 and c % 2 == 0 and s.pcs[1] - s.pcs[0] == c // 2:
        return Classification(Kind.TRITONE, c // 2, 1)

    # every generator f of s has gcd(c, f) == m, and s sits in one coset of m Z_c
    m = difference_group(s)
    sub = c // m
    if d == sub:
        return Classification(Kind.REGULAR_POLYGON, m, totient(d))
    if d == sub - 1:
        kind = Kind.ALMOST_FULL if m == 1 else Kind.INCOMPLETE_POLYGON
        return Classification(kind, m, totient(sub))

    x0 = s.pcs[0]
    reduced = Scale(sub, tuple((x - x0) // m for x in s.pcs))
    if _is_unit_image_of_cluster(reduced):
        return Classification(Kind.TWO_GENERATOR, m, 2)
    return Classification(Kind.NOT_GENERATED, None, 0)


def theorem_count(c: int, f: int, d: int) -> int:
    """Generator count of generate(GenSpec(c, 0, f, d)) read off the theorems.

    Requires d <= order of f (the d terms must be distinct). Depends only on
    (c, gcd(c, f), d), never on the scale itself.
    """
    sub = c // math.gcd(c, f)
    if not 1 <= d <= sub:
        raise ValueError(f"step {f} has order {sub} in Z_{c}; cannot take {d} distinct terms")
    if d == 1:
        return c
    if d == sub:
        return totient(d)
    if d == sub - 1:
        return totient(sub)
    return 2
