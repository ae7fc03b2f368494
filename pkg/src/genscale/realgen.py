"""Non-integer generation: J_alpha sets in Z_c and P_x sets on the circle R/Z.

Everything here is exact. Rationals are ``fractions.Fraction``; a floating
floor or mod-1 comparison would be wrong right at the breakpoints, which is
exactly where these results live.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import FrozenSet, Iterable, Tuple, Union

from .errors import HypothesisViolated, ParseError
from .scale import Scale

Rational = Union[int, Fraction]


def as_fraction(value) -> Fraction:
    """Coerce int, Fraction, RationalPoint or a "p/q" string; floats are refused."""
    if isinstance(value, RationalPoint):
        return value.value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational required, got {value!r}")
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational 'p/q': {text!r}") from exc
    if "." in text or "e" in text.lower():
        raise ParseError(f"write rationals as 'p/q', not decimals: {text!r}")
    return value


@total_ordering
@dataclass(frozen=True)
class RationalPoint:
    """A point of R/Z held as an exact fraction in [0, 1)."""

    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", as_fraction(self.value) % 1)

    @classmethod
    def of(cls, numerator: int, denominator: int = 1) -> "RationalPoint":
        return cls(Fraction(numerator, denominator))

    @classmethod
    def parse(cls, text: str) -> "RationalPoint":
        return cls(parse_rational(text))

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __lt__(self, other: "RationalPoint") -> bool:
        return self.value < other.value

    def __add__(self, other: "RationalPoint") -> "RationalPoint":
        return RationalPoint(self.value + other.value)

    def __sub__(self, other: "RationalPoint") -> "RationalPoint":
        return RationalPoint(self.value - other.value)

    def __neg__(self) -> "RationalPoint":
        return RationalPoint(-self.value)

    def __mul__(self, k: int) -> "RationalPoint":
        return RationalPoint(self.value * k)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def format_rational(value: Rational) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


# -- J_alpha sets ------------------------------------------------------------


def j_sequence(alpha, c: int, d: int) -> Tuple[int, ...]:
    """(floor(k * alpha) mod c for k = 0..d-1), in order."""
    alpha = as_fraction(alpha)
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    return tuple(math.floor(k * alpha) % c for k in range(d))


def j_set(alpha, c: int, d: int) -> Scale:
    alpha = as_fraction(alpha)
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    return Scale.from_residues(c, j_sequence(alpha, c, d))


def alpha_stability_interval(alpha, c: int, d: int) -> Tuple[Fraction, Fraction]:
    """Half-open [alpha, alpha') on which the J sequence does not move.

    alpha' is the first breakpoint to the right, min over k of
    (floor(k * alpha) + 1) / k. At alpha' some term gains 1, so for c >= 2 the
    sequence mod c changes there and the interval cannot be extended.
    """
    alpha = as_fraction(alpha)
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    right = min(Fraction(math.floor(k * alpha) + 1, k) for k in range(1, d))
    return alpha, right


# -- P_x sets ----------------------------------------------------------------


@dataclass(frozen=True)
class PSet:
    x: RationalPoint
    d: int
    points: Tuple[RationalPoint, ...]

    def __len__(self) -> int:
        return len(self.points)


def p_set(x, d: int) -> PSet:
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    x = x if isinstance(x, RationalPoint) else RationalPoint(as_fraction(x))
    points = tuple(sorted({x * k for k in range(d)}))
    return PSet(x, d, points)


def _grid(points: Iterable[RationalPoint]) -> Tuple[int, FrozenSet[int]]:
    points = list(points)
    q = 1
    for p in points:
        q = q * p.denominator // math.gcd(q, p.denominator)
    return q, frozenset(p.numerator * (q // p.denominator) for p in points)


def generators_of_points(points: Iterable[RationalPoint]) -> FrozenSet[RationalPoint]:
    """Every y such that some translate of {0, y, ..., (d-1)y} is the given set.

    The points need not contain 0. Search runs over the common grid 1/q of the
    points (any such y is a difference of two points, so it lies on the grid)
    and every translate that sends 0 onto a point.
    """
    points = list(points)
    d = len(points)
    if d < 2:
        raise HypothesisViolated("need at least two points")
    q, grid = _grid(points)
    if q <= 2 * (d - 1):
        raise HypothesisViolated(
            f"denominator {q} too small for {d} points: need q > 2(d-1) for the "
            "finite set to behave like an irrational one"
        )
    if len(grid) != d:
        raise ValueError("points must be distinct")
    found = set()
    for k in range(q):
        for tau in grid:
            seen = set()
            x = tau
            for _ in range(d):
                if x not in grid or x in seen:
                    break
                seen.add(x)
                x = (x + k) % q
            else:
                found.add(RationalPoint.of(k, q))
                break
    return frozenset(found)


def p_generators_finite(s: PSet) -> FrozenSet[RationalPoint]:
    if s.d < 2:
        raise HypothesisViolated(f"need d >= 2, got {s.d}")
    q = s.x.denominator
    if q <= 2 * (s.d - 1):
        raise HypothesisViolated(f"need den(x) > 2(d-1), got den={q}, d={s.d}")
    return generators_of_points(s.points)


def p_infinite_generators(x) -> FrozenSet[RationalPoint]:
    """Generators of the cyclic group {k x mod 1 : k in Z} for rational x = a/b.

    That group is generated by 1/b, so its generators are the k/b with k
    coprime to b; for b == 1 the group is {0}.
    """
    b = as_fraction(x).denominator
    if b == 1:
        return frozenset({RationalPoint.of(0)})
    return frozenset(RationalPoint.of(k, b) for k in range(1, b) if math.gcd(k, b) == 1)


def cyclic_closure(x) -> FrozenSet[RationalPoint]:
    """{k x mod 1 : k >= 0}, found by repeated addition until it cycles."""
    x = x if isinstance(x, RationalPoint) else RationalPoint(as_fraction(x))
    out = {RationalPoint.of(0)}
    p = x
    while p not in out:
        out.add(p)
        p = p + x
    return frozenset(out)


def difference_set(points: Iterable[RationalPoint]) -> FrozenSet[RationalPoint]:
    points = list(points)
    return frozenset(p - r for p in points for r in points)
