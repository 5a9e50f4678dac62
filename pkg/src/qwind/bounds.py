"""Lower-bound formulas for partition counts, evaluated exactly.

sierksma_bound is the conjectured minimum ((q-1)!)^d of Tverberg
partitions.  For prime powers q = p^r there is a proved bound
(1/(q-1)!) * (q/(r+1))^ceil((d+1)(q-1)/2) on Tverberg partitions, and
dividing its d=3 value by (q-1)! bounds the number of winding
partitions of any drawing of K_{3q-2}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import QwindError


class NotPrimePower(QwindError):
    """The bound formula only applies to prime powers q."""


def sierksma_bound(d: int, q: int) -> int:
    """((q-1)!)^d, the conjectured minimal number of Tverberg partitions."""
    if d < 1 or q < 2:
        raise ValueError(f"need d >= 1 and q >= 2, got d={d}, q={q}")
    return math.factorial(q - 1) ** d


def prime_power(q: int) -> Optional[tuple[int, int]]:
    """The unique (p, r) with q = p^r and p prime, or None."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    p = q
    for cand in range(2, q + 1):
        if cand * cand > q:
            break
        if q % cand == 0:
            p = cand
            break
    r = 0
    m = q
    while m % p == 0:
        m //= p
        r += 1
    return (p, r) if m == 1 else None


def hell_bound(d: int, q: int) -> Fraction:
    """Proved lower bound on Tverberg partitions for prime-power q."""
    pp = prime_power(q)
    if pp is None:
        raise NotPrimePower(f"{q} is not a prime power")
    _, r = pp
    exponent = -(-(d + 1) * (q - 1) // 2)  # ceil((d+1)(q-1)/2)
    return Fraction(1, math.factorial(q - 1)) * Fraction(q, r + 1) ** exponent


def d2_winding_bound(q: int) -> Fraction:
    """Lower bound on winding partitions of any drawing of K_{3q-2}."""
    pp = prime_power(q)
    if pp is None:
        raise NotPrimePower(f"{q} is not a prime power")
    _, r = pp
    f = math.factorial(q - 1)
    return Fraction(1, f * f) * Fraction(q, r + 1) ** (2 * (q - 1))


@dataclass(frozen=True)
class BoundReport:
    """Evaluated formulas next to an observed count, JSON-friendly."""

    d: int
    q: int
    sierksma: int
    prime_power: Optional[tuple[int, int]]
    hell_bound: Optional[Fraction]
    d2_winding_bound: Optional[Fraction]
    observed: Optional[int] = None

    def meets_hell_bound(self) -> Optional[bool]:
        if self.observed is None or self.hell_bound is None:
            return None
        return self.observed >= math.ceil(self.hell_bound)

    def to_obj(self) -> dict:
        return {
            "d": self.d,
            "q": self.q,
            "sierksma": self.sierksma,
            "prime_power": list(self.prime_power) if self.prime_power else None,
            "hell_bound": str(self.hell_bound) if self.hell_bound is not None else None,
            "d2_winding_bound": (
                str(self.d2_winding_bound) if self.d2_winding_bound is not None else None
            ),
            "observed": self.observed,
            "meets_hell_bound": self.meets_hell_bound(),
        }


def bound_report(d: int, q: int, observed: Optional[int] = None) -> BoundReport:
    pp = prime_power(q)
    return BoundReport(
        d=d,
        q=q,
        sierksma=sierksma_bound(d, q),
        prime_power=pp,
        hell_bound=hell_bound(d, q) if pp else None,
        d2_winding_bound=d2_winding_bound(q) if pp and d == 2 else None,
        observed=observed,
    )
