"""Scales (pc-sets) over Z_c, affine maps, and the "c:p1,p2,..." text encoding."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Tuple

from .errors import ParseError
from .numtheory import mod_inverse


@dataclass(frozen=True)
class Scale:
    """A subset of Z_c stored as a strictly ascending tuple of residues.

    The constructor is strict: residues must already lie in 0..c-1 and be
    distinct (order does not matter). Use ``Scale.from_residues`` to reduce
    arbitrary integers mod c and drop repeats.
    """

    c: int
    pcs: Tuple[int, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.c, int) or self.c < 1:
            raise ValueError(f"modulus must be an integer >= 1, got {self.c!r}")
        pcs = tuple(sorted(self.pcs))
        for x in pcs:
            if not 0 <= x < self.c:
                raise ValueError(f"residue {x} out of range for Z_{self.c}")
        if len(set(pcs)) != len(pcs):
            raise ValueError(f"duplicate residues in {pcs}")
        object.__setattr__(self, "pcs", pcs)
        object.__setattr__(self, "_members", frozenset(pcs))

    @classmethod
    def from_residues(cls, c: int, values: Iterable[int]) -> "Scale":
        return cls(c, tuple({v % c for v in values}))

    @classmethod
    def full(cls, c: int) -> "Scale":
        return cls(c, tuple(range(c)))

    def __len__(self) -> int:
        return len(self.pcs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.pcs)

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and x % self.c in self._members

    def as_set(self) -> frozenset:
        return self._members

    def __str__(self) -> str:
        return format_scale(self)


@dataclass(frozen=True)
class AffineMap:
    """x -> multiplier * x + offset (mod c)."""

    c: int
    multiplier: int
    offset: int = 0

    def __post_init__(self) -> None:
        if self.c < 1:
            raise ValueError(f"modulus must be >= 1, got {self.c}")
        object.__setattr__(self, "multiplier", self.multiplier % self.c)
        object.__setattr__(self, "offset", self.offset % self.c)

    def __call__(self, x: int) -> int:
        return (self.multiplier * x + self.offset) % self.c

    @property
    def is_bijective(self) -> bool:
        return math.gcd(self.multiplier, self.c) == 1

    def inverse(self) -> "AffineMap":
        inv = mod_inverse(self.multiplier, self.c)
        return AffineMap(self.c, inv, -inv * self.offset)


def translate(s: Scale, t: int) -> Scale:
    return Scale(s.c, tuple((x + t) % s.c for x in s.pcs))


def apply_affine(s: Scale, m: AffineMap) -> Scale:
    if m.c != s.c:
        raise ValueError(f"map acts on Z_{m.c}, scale lives in Z_{s.c}")
    return Scale.from_residues(s.c, (m(x) for x in s.pcs))


def complement(s: Scale) -> Scale:
    members = s.as_set()
    return Scale(s.c, tuple(x for x in range(s.c) if x not in members))


_SCALE_RE = re.compile(r"^\s*(\d+)\s*:\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)$")


def parse_scale(text: str) -> Scale:
    """Parse "c:p1,p2,..." (any order, no repeats, every p < c)."""
    m = _SCALE_RE.match(text)
    if m is None:
        raise ParseError(f"malformed scale {text!r}; expected 'c:p1,p2,...'")
    c = int(m.group(1))
    if c < 1:
        raise ParseError(f"modulus must be >= 1 in {text!r}")
    body = m.group(2).strip()
    pcs = [int(p) for p in body.split(",")] if body else []
    bad = [p for p in pcs if p >= c]
    if bad:
        raise ParseError(f"residue {bad[0]} out of range for modulus {c}")
    if len(set(pcs)) != len(pcs):
        raise ParseError(f"duplicate residue in {text!r}")
    return Scale(c, tuple(pcs))


def format_scale(s: Scale) -> str:
    return f"{s.c}:" + ",".join(str(x) for x in s.pcs)
