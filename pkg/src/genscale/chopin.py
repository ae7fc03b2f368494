"""Complementary generated scales: shared generators and translated embeddings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from .errors import TrivialScale
from .generation import enumerate_generators
from .scale import Scale, complement, format_scale, translate

A_INTO_B = "scale_into_complement"
B_INTO_A = "complement_into_scale"


@dataclass(frozen=True)
class ChopinReport:
    scale: Scale
    complement: Scale
    both_generated: bool
    scale_steps: FrozenSet[int]
    complement_steps: FrozenSet[int]
    shared_steps: FrozenSet[int]
    # (direction, tau): translate(smaller, tau) is contained in the larger one
    embedding: Optional[Tuple[str, int]]

    @property
    def holds(self) -> bool:
        """Whether the complementation theorem's conclusion is met (vacuous if not both generated)."""
        return not self.both_generated or (bool(self.shared_steps) and self.embedding is not None)

    def to_dict(self) -> dict:
        emb = None
        if self.embedding is not None:
            emb = {"direction": self.embedding[0], "tau": self.embedding[1]}
        return {
            "scale": format_scale(self.scale),
            "complement": format_scale(self.complement),
            "both_generated": self.both_generated,
            "scale_steps": sorted(self.scale_steps),
            "complement_steps": sorted(self.complement_steps),
            "shared_steps": sorted(self.shared_steps),
            "embedding": emb,
        }


def find_embedding(small: Scale, large: Scale) -> Optional[int]:
    """Smallest tau with translate(small, tau) a subset of large."""
    target = large.as_set()
    for tau in range(small.c):
        if translate(small, tau).as_set() <= target:
            return tau
    return None


def chopin_check(a: Scale) -> ChopinReport:
    c, d = a.c, len(a)
    if not 2 <= d <= c - 2:
        raise TrivialScale(f"scale and complement both need >= 2 notes (c={c}, |A|={d})")
    b = complement(a)
    steps_a = frozenset(enumerate_generators(a).generators)
    steps_b = frozenset(enumerate_generators(b).generators)
    both = bool(steps_a) and bool(steps_b)
    if not both:
        return ChopinReport(a, b, False, steps_a, steps_b, frozenset(), None)

    embedding = None
    if len(a) <= len(b):
        tau = find_embedding(a, b)
        if tau is not None:
            embedding = (A_INTO_B, tau)
    if embedding is None and len(b) <= len(a):
        tau = find_embedding(b, a)
        if tau is not None:
            embedding = (B_INTO_A, tau)
    return ChopinReport(a, b, True, steps_a, steps_b, steps_a & steps_b, embedding)
