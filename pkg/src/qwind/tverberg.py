"""Tverberg partitions of exact point configurations in dimension 1 and 2.

The decision core is hull intersection over a finite candidate set: a
nonempty intersection of convex polygons is a convex set whose extreme
points are polygon vertices or crossings of two polygon edges, so
checking those candidates is complete and needs no LP.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .complexes import Face, FaceFamily, admissible_shapes, enumerate_face_families
from .drawings import ParseError
from .errors import QwindError
from .exactgeom import Rational2, Segment, orient, point_on_segment, segment_intersect


class SizeMismatch(QwindError):
    """Point count does not match (d+1)(q-1)+1 for the declared q."""


Point1 = Fraction
Block = Sequence[Union[Point1, Rational2]]


@dataclass(frozen=True)
class PointConfig:
    """(d+1)(q-1)+1 labelled points in R^d, the input of the enumeration."""

    d: int
    q: int
    points: tuple

    def __post_init__(self) -> None:
        if self.d not in (1, 2):
            raise ValueError(f"d must be 1 or 2, got {self.d}")
        expected = (self.d + 1) * (self.q - 1) + 1
        if len(self.points) != expected:
            raise SizeMismatch(
                f"d={self.d}, q={self.q} needs {expected} points, got {len(self.points)}"
            )


@dataclass(frozen=True)
class TverbergCertificate:
    """A certified partition: the face family plus one common hull point."""

    family: FaceFamily
    witness: Union[Point1, Rational2]


def convex_hull(points: Sequence[Rational2]) -> list[Rational2]:
    """Hull vertices in counterclockwise order (monotone chain, exact).

    Degenerate inputs yield a single point or the two endpoints of a
    segment; collinear interior points are dropped.
    """
    pts = sorted(set(points), key=Rational2.key)
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain: list[Rational2] = []
        for p in seq:
            while len(chain) >= 2 and orient(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:  # all points collinear
        return [pts[0], pts[-1]]
    return hull


def point_in_hull(p: Rational2, hull: list[Rational2]) -> bool:
    """Closed membership in a hull as returned by convex_hull."""
    if len(hull) == 1:
        return p == hull[0]
    if len(hull) == 2:
        return point_on_segment(p, Segment(hull[0], hull[1]))
    return all(
        orient(hull[i], hull[(i + 1) % len(hull)], p) >= 0 for i in range(len(hull))
    )


def _hull_edges(hull: list[Rational2]) -> list[Segment]:
    if len(hull) == 1:
        return []
    if len(hull) == 2:
        return [Segment(hull[0], hull[1])]
    return [Segment(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]


def hulls_intersect(blocks: Sequence[Block], d: int) -> Optional[Union[Point1, Rational2]]:
    """Some exact point common to the convex hulls of all blocks, if any.

    d=1 intersects intervals; d=2 scans the finite candidate set of all
    hull vertices and pairwise hull-edge crossings and returns the
    smallest candidate lying in every hull.
    """
    if any(len(b) == 0 for b in blocks):
        raise ValueError("blocks must be nonempty")
    if d == 1:
        lo = max(min(b) for b in blocks)
        hi = min(max(b) for b in blocks)
        return lo if lo <= hi else None
    if d != 2:
        raise ValueError(f"d must be 1 or 2, got {d}")

    hulls = [convex_hull(list(b)) for b in blocks]
    candidates: set[tuple[Fraction, Fraction]] = set()
    for hull in hulls:
        for p in hull:
            candidates.add(p.key())
    edge_lists = [_hull_edges(hull) for hull in hulls]
    for (ei, ej) in itertools.combinations(edge_lists, 2):
        for se in ei:
            for sf in ej:
                res = segment_intersect(se, sf)
                if res.kind == "point":
                    candidates.add(res.witness.key())
                elif res.kind == "overlap-segment":
                    candidates.add(res.witness.a.key())
                    candidates.add(res.witness.b.key())
    for key in sorted(candidates):
        p = Rational2(*key)
        if all(point_in_hull(p, hull) for hull in hulls):
            return p
    return None


def _blocks_for(config: PointConfig, family: FaceFamily) -> list[Block]:
    return [[config.points[v] for v in face.vertices] for face in family.faces]


def enumerate_tverberg(config: PointConfig, q: int) -> list[TverbergCertificate]:
    """All covering face families whose blocks' hulls share a point.

    Families run over every admissible shape for (d, q); each certified
    family carries one witness.  Output is sorted by family encoding.
    """
    if q != config.q:
        raise SizeMismatch(f"config declares q={config.q}, asked for q={q}")
    N = len(config.points) - 1
    found: list[TverbergCertificate] = []
    for shape in admissible_shapes(config.d, q):
        for family in enumerate_face_families(N, q, shape):
            witness = hulls_intersect(_blocks_for(config, family), config.d)
            if witness is not None:
                found.append(TverbergCertificate(family, witness))
    found.sort(key=lambda cert: cert.family)
    return found


def count_tverberg(config: PointConfig, q: int) -> int:
    return len(enumerate_tverberg(config, q))


def points_in_general_position(points: Sequence, d: int) -> bool:
    """Distinct points, and for d=2 no three collinear."""
    if len(set(points)) != len(points):
        return False
    if d == 2:
        for a, b, c in itertools.combinations(points, 3):
            if orient(a, b, c) == 0:
                return False
    return True


# --- JSON config file: {"d": int, "q": int, "points": [["x","y"], ...]} ---


def config_to_obj(config: PointConfig) -> dict:
    if config.d == 1:
        pts = [[str(x)] for x in config.points]
    else:
        pts = [[str(p.x), str(p.y)] for p in config.points]
    return {"d": config.d, "q": config.q, "points": pts}


def write_config(config: PointConfig) -> bytes:
    return json.dumps(config_to_obj(config), sort_keys=True, indent=1).encode("utf-8")


def config_from_obj(obj) -> PointConfig:
    if not isinstance(obj, dict):
        raise ParseError("point config must be a JSON object")
    d, q = obj.get("d"), obj.get("q")
    if d not in (1, 2) or not isinstance(q, int):
        raise ParseError("fields 'd' (1 or 2) and 'q' (int) are required")
    raw = obj.get("points")
    if not isinstance(raw, list):
        raise ParseError("field 'points': expected a list")
    points = []
    for i, entry in enumerate(raw):
        where = f"points[{i}]"
        if not isinstance(entry, list) or len(entry) != d:
            raise ParseError(f"{where}: expected {d} coordinate(s)")
        try:
            coords = [Fraction(str(c)) for c in entry]
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{where}: invalid rational ({exc})") from None
        points.append(coords[0] if d == 1 else Rational2(coords[0], coords[1]))
    try:
        return PointConfig(d, q, tuple(points))
    except SizeMismatch:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def read_config(data: Union[bytes, str]) -> PointConfig:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    return config_from_obj(obj)
