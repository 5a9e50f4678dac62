"""Drawings: piecewise-linear maps of graphs into the rational plane.

A Drawing is a graph plus exact vertex positions and per-edge bend
chains.  This module provides the canonical generators (the alternating
linear drawing of K_n and the tight-cluster configuration), the general
position check, exact perturbation, and the JSON serialization that
doubles as the service wire format.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import QwindError
from .exactgeom import (
    Rational,
    Rational2,
    Segment,
    point_on_segment,
    rat,
    segment_intersect,
)


class ParseError(QwindError):
    """A drawing/graph/config file violates the schema."""


class RetriesExhausted(QwindError):
    """Perturbation or random placement failed to reach general position."""


Edge = tuple[int, int]


def edge_of(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop edge at {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, slots=True)
class Graph:
    """A simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")

    @staticmethod
    def of(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(n, frozenset(edge_of(u, v) for u, v in edges))

    @staticmethod
    def complete(n: int) -> "Graph":
        return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))

    def has_edge(self, u: int, v: int) -> bool:
        return edge_of(u, v) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> list[int]:
        return sorted(u + w - v for u, w in self.edges if v in (u, w))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class Drawing:
    """A PL drawing: vertex positions plus an optional bend chain per edge."""

    graph: Graph
    positions: tuple[Rational2, ...]
    bends: dict[Edge, tuple[Rational2, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if len(self.positions) != self.graph.n:
            raise ValueError("one position per vertex required")
        for e in self.bends:
            if e not in self.graph.edges:
                raise ValueError(f"bend chain for absent edge {e}")
        for e in self.graph.edges:
            pts = self.arc(e)
            for a, b in zip(pts, pts[1:]):
                if a == b:
                    raise ValueError(f"zero-length segment on edge {e} at {a}")

    def position(self, v: int) -> Rational2:
        return self.positions[v]

    def arc(self, e: Edge) -> list[Rational2]:
        """The polyline of edge e, from the smaller to the larger endpoint."""
        u, v = e
        return [self.positions[u], *self.bends.get(e, ()), self.positions[v]]

    def arc_segments(self, e: Edge) -> list[Segment]:
        pts = self.arc(e)
        return [Segment(a, b) for a, b in zip(pts, pts[1:])]

    def with_position(self, v: int, p: Rational2) -> "Drawing":
        positions = tuple(p if i == v else q for i, q in enumerate(self.positions))
        return Drawing(self.graph, positions, dict(self.bends))


@dataclass(frozen=True)
class GPViolation:
    """One way a drawing fails general position.

    kind: coincident-vertices | vertex-on-disjoint-edge |
          disjoint-edges-overlap | triple-point-of-disjoint-edges
    involved: the face identifiers (vertex as (v,), edge as (u, v))
    location: the offending point or overlap segment
    """

    kind: str
    involved: tuple[tuple[int, ...], ...]
    location: Union[Rational2, Segment]


def _disjoint(e: Edge, f: Edge) -> bool:
    return not set(e) & set(f)


def general_position_check(dr: Drawing) -> list[GPViolation]:
    """All general-position violations among pairwise disjoint faces.

    Finitely many transversal crossings of two disjoint edges are
    allowed; coincident vertices, a vertex on a disjoint edge's arc, a
    collinear overlap of disjoint arcs, and a common point of three
    pairwise disjoint edges are reported.  Empty list means ok.
    """
    violations: list[GPViolation] = []
    n = dr.graph.n
    for u in range(n):
        for v in range(u + 1, n):
            if dr.positions[u] == dr.positions[v]:
                violations.append(
                    GPViolation("coincident-vertices", ((u,), (v,)), dr.positions[u])
                )

    edges = dr.graph.sorted_edges()
    for v in range(n):
        for e in edges:
            if v in e:
                continue
            for seg in dr.arc_segments(e):
                if point_on_segment(dr.positions[v], seg):
                    violations.append(
                        GPViolation("vertex-on-disjoint-edge", ((v,), e), dr.positions[v])
                    )
                    break

    # Pairwise crossings of disjoint edges; collect them to detect triples.
    crossings: dict[tuple[Fraction, Fraction], set[Edge]] = {}
    for i, e in enumerate(edges):
        segs_e = dr.arc_segments(e)
        for f in edges[i + 1 :]:
            if not _disjoint(e, f):
                continue
            overlap_reported = False
            for se in segs_e:
                for sf in dr.arc_segments(f):
                    res = segment_intersect(se, sf)
                    if res.kind == "overlap-segment" and not overlap_reported:
                        violations.append(
                            GPViolation("disjoint-edges-overlap", (e, f), res.witness)
                        )
                        overlap_reported = True
                    elif res.kind == "point":
                        crossings.setdefault(res.witness.key(), set()).update((e, f))

    for key, through in sorted(crossings.items()):
        if len(through) < 3:
            continue
        ordered = sorted(through)
        for a in range(len(ordered)):
            for b in range(a + 1, len(ordered)):
                for c in range(b + 1, len(ordered)):
                    trip = (ordered[a], ordered[b], ordered[c])
                    if all(
                        _disjoint(x, y)
                        for x, y in ((trip[0], trip[1]), (trip[0], trip[2]), (trip[1], trip[2]))
                    ):
                        violations.append(
                            GPViolation(
                                "triple-point-of-disjoint-edges",
                                trip,
                                Rational2(*key),
                            )
                        )
    return violations


def gp_report_obj(violations: list[GPViolation]) -> dict:
    """JSON-friendly general-position report shared by CLI and service."""

    def loc(entry: GPViolation):
        if isinstance(entry.location, Segment):
            seg = entry.location
            return [[str(seg.a.x), str(seg.a.y)], [str(seg.b.x), str(seg.b.y)]]
        return [str(entry.location.x), str(entry.location.y)]

    return {
        "ok": not violations,
        "violations": [
            {"kind": v.kind, "involved": [list(f) for f in v.involved], "location": loc(v)}
            for v in violations
        ],
    }


def alternating_linear_drawing(n: int) -> Drawing:
    """The alternating linear drawing of K_n.

    Vertex v sits at (v+1, 0).  Writing i < j for the 1-indexed
    endpoints of an edge, the edge is a flat arch through
    (i, 0), (i + 1/4, h), (j - 1/4, h), (j, 0) of height
    |h| = (j - i) + i/n^2, drawn above the line when i is odd and below
    when i is even.  The i/n^2 term keeps same-span arches at distinct
    heights, so the drawing is in general position.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    graph = Graph.complete(n)
    positions = tuple(Rational2.of(v + 1, 0) for v in range(n))
    bends: dict[Edge, tuple[Rational2, ...]] = {}
    quarter = Fraction(1, 4)
    for u, v in graph.sorted_edges():
        i, j = u + 1, v + 1
        height = (j - i) + Fraction(i, n * n)
        if i % 2 == 0:
            height = -height
        bends[(u, v)] = (
            Rational2(i + quarter, height),
            Rational2(j - quarter, height),
        )
    return Drawing(graph, positions, bends)


# Rational stand-in for an equilateral triangle: side AB has length 1 and
# the apex height 6/7 approximates sqrt(3)/2.
_SIERKSMA_CORNERS = (
    Rational2.of(0, 0),
    Rational2.of(1, 0),
    Rational2.of(Fraction(1, 2), Fraction(6, 7)),
)
_SIERKSMA_CENTER = Rational2.of(Fraction(1, 2), Fraction(2, 7))


def sierksma_configuration(
    d: int, q: int, spread: Rational = Fraction(1, 1000)
) -> Union[list[Fraction], list[Rational2]]:
    """Tight clusters of q-1 points at simplex corners plus the barycenter.

    The k-th point of a cluster is pushed outward from the barycenter by
    roughly spread*k/(q-1) and sheared sideways by a quadratic term, so
    cluster points lie on a parabola arc: no three points of the
    configuration are collinear.  Cluster order: corner by corner, then
    the center point last.
    """
    spread = rat(spread)
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if not 0 < spread < Fraction(1, 100):
        raise ValueError("spread must be positive and below 1/100 of the edge length")
    if d == 1:
        left = [spread * k / (q - 1) for k in range(1, q)]
        right = [1 - spread * k * Fraction(6, 7) / (q - 1) for k in range(1, q)]
        return left + right + [Fraction(1, 2)]
    if d != 2:
        raise ValueError(f"d must be 1 or 2, got {d}")
    points: list[Rational2] = []
    for corner in _SIERKSMA_CORNERS:
        out = corner - _SIERKSMA_CENTER
        side = Rational2(-out.y, out.x)
        for k in range(1, q):
            radial = Fraction(k, q - 1)
            shear = Fraction(k * k, 9 * (q - 1) * (q - 1))
            points.append(corner + out.scale(spread * radial) + side.scale(spread * shear))
    points.append(_SIERKSMA_CENTER)
    return points


_GRID = 97  # placement grid denominator; prime to dodge accidental incidences


def random_drawing(graph: Graph, seed: int, box: Rational = 100) -> Drawing:
    """A straight-line drawing with grid positions in [-box, box]^2.

    Positions come from a deterministic seeded stream and are re-drawn
    (bounded retries) until the drawing passes general_position_check.
    """
    box = rat(box)
    rng = random.Random(seed)
    span = int(box * _GRID)
    if span < 1:
        raise ValueError("box too small for the placement grid")
    for _ in range(64):
        positions = tuple(
            Rational2(
                Fraction(rng.randint(-span, span), _GRID),
                Fraction(rng.randint(-span, span), _GRID),
            )
            for _ in range(graph.n)
        )
        try:
            dr = Drawing(graph, positions, {})
        except ValueError:  # coincident endpoints give a zero-length edge
            continue
        if not general_position_check(dr):
            return dr
    raise RetriesExhausted(f"no general-position drawing after 64 tries (seed {seed})")


def perturb(dr: Drawing, seed: int, magnitude: Rational) -> Drawing:
    """Move every position and bend by an independent offset of norm <= magnitude.

    Retries with halved magnitude until the result passes
    general_position_check.  Deterministic in (drawing, seed, magnitude);
    magnitude 0 on an ok drawing is the identity.
    """
    magnitude = rat(magnitude)
    if magnitude < 0:
        raise ValueError("magnitude must be >= 0")
    rng = random.Random(seed)

    def offset(m: Fraction) -> Rational2:
        # Components in [-m/2, m/2] keep the euclidean norm below m.
        return Rational2(
            m * Fraction(rng.randint(-_GRID, _GRID), 2 * _GRID),
            m * Fraction(rng.randint(-_GRID, _GRID), 2 * _GRID),
        )

    m = magnitude
    for _ in range(32):
        positions = tuple(p + offset(m) for p in dr.positions)
        bends = {
            e: tuple(b + offset(m) for b in chain) for e, chain in sorted(dr.bends.items())
        }
        try:
            candidate = Drawing(dr.graph, positions, bends)
        except ValueError:
            m = m / 2
            continue
        if not general_position_check(candidate):
            return candidate
        m = m / 2
    raise RetriesExhausted(f"perturbation failed to reach general position (seed {seed})")


# ---------------------------------------------------------------------------
# Serialization.  UTF-8 JSON with sorted keys; rationals as "p/q" strings.


def _fmt(x: Fraction) -> str:
    return str(x)


def _parse_fraction(text, where: str) -> Fraction:
    if not isinstance(text, (str, int)):
        raise ParseError(f"{where}: expected a rational string, got {text!r}")
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: invalid rational {text!r} ({exc})") from None


def _parse_point(obj, where: str) -> Rational2:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise ParseError(f"{where}: expected [x, y]")
    return Rational2(_parse_fraction(obj[0], where + ".x"), _parse_fraction(obj[1], where + ".y"))


def drawing_to_obj(dr: Drawing) -> dict:
    return {
        "n": dr.graph.n,
        "edges": [[u, v] for u, v in dr.graph.sorted_edges()],
        "positions": {
            str(v): [_fmt(p.x), _fmt(p.y)] for v, p in enumerate(dr.positions)
        },
        "bends": {
            f"{u}-{v}": [[_fmt(b.x), _fmt(b.y)] for b in chain]
            for (u, v), chain in sorted(dr.bends.items())
            if chain
        },
    }


def write_drawing(dr: Drawing) -> bytes:
    return json.dumps(drawing_to_obj(dr), sort_keys=True, indent=1).encode("utf-8")


def drawing_from_obj(obj) -> Drawing:
    if not isinstance(obj, dict):
        raise ParseError("drawing must be a JSON object")
    n = obj.get("n")
    if not isinstance(n, int) or n < 1:
        raise ParseError(f"field 'n': expected a positive integer, got {n!r}")
    raw_edges = obj.get("edges")
    if not isinstance(raw_edges, list):
        raise ParseError("field 'edges': expected a list of [u, v] pairs")
    edges = []
    for idx, pair in enumerate(raw_edges):
        if not isinstance(pair, list) or len(pair) != 2 or not all(isinstance(x, int) for x in pair):
            raise ParseError(f"edges[{idx}]: expected [u, v] with integers")
        edges.append(pair)
    try:
        graph = Graph.of(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None

    raw_pos = obj.get("positions")
    if not isinstance(raw_pos, dict):
        raise ParseError("field 'positions': expected an object keyed by vertex")
    positions = []
    for v in range(n):
        key = str(v)
        if key not in raw_pos:
            raise ParseError(f"positions: missing vertex {v}")
        positions.append(_parse_point(raw_pos[key], f"positions[{key}]"))
    extra = set(raw_pos) - {str(v) for v in range(n)}
    if extra:
        raise ParseError(f"positions: unknown vertex keys {sorted(extra)}")

    bends: dict[Edge, tuple[Rational2, ...]] = {}
    raw_bends = obj.get("bends", {})
    if not isinstance(raw_bends, dict):
        raise ParseError("field 'bends': expected an object keyed by 'u-v'")
    for key, chain in raw_bends.items():
        try:
            u, v = (int(part) for part in key.split("-"))
        except ValueError:
            raise ParseError(f"bends: bad edge key {key!r}") from None
        e = edge_of(u, v)
        if e not in graph.edges:
            raise ParseError(f"bends: edge {key!r} not in graph")
        if not isinstance(chain, list):
            raise ParseError(f"bends[{key}]: expected a list of points")
        pts = tuple(_parse_point(p, f"bends[{key}][{i}]") for i, p in enumerate(chain))
        if pts:
            bends[e] = pts
    try:
        return Drawing(graph, tuple(positions), bends)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def read_drawing(data: Union[bytes, str]) -> Drawing:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    return drawing_from_obj(obj)


def graph_to_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.sorted_edges()]}


def graph_from_obj(obj) -> Graph:
    if not isinstance(obj, dict) or not isinstance(obj.get("n"), int):
        raise ParseError("graph must be a JSON object with integer 'n'")
    raw_edges = obj.get("edges")
    if not isinstance(raw_edges, list):
        raise ParseError("field 'edges': expected a list")
    try:
        return Graph.of(obj["n"], [tuple(e) for e in raw_edges])
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None


def read_graph(data: Union[bytes, str]) -> Graph:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    return graph_from_obj(obj)
