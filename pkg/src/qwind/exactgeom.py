"""Exact rational plane-geometry kernel.

Everything downstream (drawings, partition certificates, hull
intersections) reduces to the predicates in this module.  All
coordinates are `fractions.Fraction`, so every decision is exact; there
is no floating point on any decision path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from .errors import QwindError


class PointOnCurve(QwindError):
    """The winding number is undefined for a point on the curve."""


Rational = Union[Fraction, int, str]


def rat(value: Rational) -> Fraction:
    """Coerce ints, 'p/q' strings and Fractions to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True, slots=True)
class Rational2:
    """A point of the rational plane."""

    x: Fraction
    y: Fraction

    @staticmethod
    def of(x: Rational, y: Rational) -> "Rational2":
        return Rational2(rat(x), rat(y))

    def __add__(self, other: "Rational2") -> "Rational2":
        return Rational2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Rational2") -> "Rational2":
        return Rational2(self.x - other.x, self.y - other.y)

    def scale(self, s: Rational) -> "Rational2":
        s = rat(s)
        return Rational2(self.x * s, self.y * s)

    def cross(self, other: "Rational2") -> Fraction:
        return self.x * other.y - self.y * other.x

    def key(self) -> tuple[Fraction, Fraction]:
        """Sort key; Fractions order exactly."""
        return (self.x, self.y)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def orient(p: Rational2, q: Rational2, r: Rational2) -> int:
    """Sign of det(q-p, r-p): +1 for a left turn, -1 right, 0 collinear."""
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


@dataclass(frozen=True, slots=True)
class Segment:
    """A closed segment with distinct endpoints."""

    a: Rational2
    b: Rational2

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError(f"degenerate segment at {self.a}")

    def midpoint(self) -> Rational2:
        return Rational2((self.a.x + self.b.x) / 2, (self.a.y + self.b.y) / 2)


def point_on_segment(p: Rational2, s: Segment) -> bool:
    """True iff p lies on the closed segment s (endpoints included)."""
    if orient(s.a, s.b, p) != 0:
        return False
    return (
        min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x)
        and min(s.a.y, s.b.y) <= p.y <= max(s.a.y, s.b.y)
    )


@dataclass(frozen=True, slots=True)
class IntersectionResult:
    """Classification of how two segments meet.

    kind is one of "empty", "point", "overlap-segment"; the witness is a
    point, the maximal common subsegment, or None respectively.
    """

    kind: str
    witness: Optional[Union[Rational2, Segment]] = None


def _line_crossing(s: Segment, t: Segment) -> Rational2:
    # Intersection of the two supporting lines; caller guarantees they cross.
    d = (s.b - s.a).cross(t.b - t.a)
    u = (t.a - s.a).cross(t.b - t.a) / d
    return s.a + (s.b - s.a).scale(u)


def segment_intersect(s: Segment, t: Segment) -> IntersectionResult:
    """Exact intersection of two closed segments.

    Shared endpoints count as point intersections; collinear overlaps are
    reported with the maximal common subsegment as witness.
    """
    o1 = orient(s.a, s.b, t.a)
    o2 = orient(s.a, s.b, t.b)
    o3 = orient(t.a, t.b, s.a)
    o4 = orient(t.a, t.b, s.b)

    if o1 == 0 and o2 == 0 and o3 == 0 and o4 == 0:
        # All four endpoints on one line: intersect as 1-d intervals.
        axis = (lambda p: p.x) if s.a.x != s.b.x else (lambda p: p.y)
        lo_s, hi_s = sorted((s.a, s.b), key=lambda p: (axis(p),))
        lo_t, hi_t = sorted((t.a, t.b), key=lambda p: (axis(p),))
        lo = max(lo_s, lo_t, key=axis)
        hi = min(hi_s, hi_t, key=axis)
        if axis(lo) > axis(hi):
            return IntersectionResult("empty")
        if lo == hi:
            return IntersectionResult("point", lo)
        return IntersectionResult("overlap-segment", Segment(lo, hi))

    if o1 * o2 < 0 and o3 * o4 < 0:
        return IntersectionResult("point", _line_crossing(s, t))

    for p, seg in ((t.a, s), (t.b, s), (s.a, t), (s.b, t)):
        if point_on_segment(p, seg):
            return IntersectionResult("point", p)
    return IntersectionResult("empty")


@dataclass(frozen=True, slots=True)
class ClosedPLCurve:
    """A closed piecewise-linear curve, given by its cyclic vertex list."""

    points: tuple[Rational2, ...]

    def __post_init__(self) -> None:
        if len(self.points) < 3:
            raise ValueError("closed curve needs at least 3 points")
        for i, p in enumerate(self.points):
            if p == self.points[(i + 1) % len(self.points)]:
                raise ValueError(f"repeated consecutive point {p}")

    def segments(self) -> Iterator[Segment]:
        pts = self.points
        for i in range(len(pts)):
            yield Segment(pts[i], pts[(i + 1) % len(pts)])

    def reversed(self) -> "ClosedPLCurve":
        return ClosedPLCurve(tuple(reversed(self.points)))


def point_on_curve(p: Rational2, c: ClosedPLCurve) -> bool:
    """True iff p lies on some segment of c."""
    return any(point_on_segment(p, s) for s in c.segments())


def winding_number(c: ClosedPLCurve, p: Rational2) -> int:
    """Signed number of times c travels around p, counterclockwise positive.

    Uses the horizontal-ray crossing rule with the half-open vertex
    convention: segment (a, b) contributes when p.y lies in
    [min(a.y, b.y), max(a.y, b.y)) and the crossing is right of p.  That
    makes the count total and exact without any perturbation.
    """
    if point_on_curve(p, c):
        raise PointOnCurve(f"winding number undefined: {p} lies on the curve")
    w = 0
    for s in c.segments():
        a, b = s.a, s.b
        if a.y <= p.y:
            if b.y > p.y and orient(a, b, p) > 0:
                w += 1
        else:
            if b.y <= p.y and orient(a, b, p) < 0:
                w -= 1
    return w


def in_W_neq0(c: ClosedPLCurve, p: Rational2) -> bool:
    """Membership in the closed set: curve image plus nonzero-winding points."""
    if point_on_curve(p, c):
        return True
    return winding_number(c, p) != 0
