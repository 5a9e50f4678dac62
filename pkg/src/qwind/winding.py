"""Winding partitions of drawings: decision, enumeration, counting, search.

The witness search runs over a finite candidate set (vertex images,
bend points, pairwise arc crossings, overlap midpoints).  Any nonempty
intersection of the per-face constraint sets is bounded by drawn
segments, so it contains one of these points; candidate completeness is
additionally pinned by a brute-force oracle in the test suite rather
than assumed.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .complexes import Face, FaceFamily
from .drawings import Drawing, Edge, Graph, edge_of, random_drawing
from .errors import QwindError
from .exactgeom import (
    ClosedPLCurve,
    Rational2,
    point_on_curve,
    point_on_segment,
    segment_intersect,
    winding_number,
)


class MissingEdge(QwindError):
    """A face references an edge the drawn graph does not have."""


class WrongGraph(QwindError):
    """enumerate_winding needs the complete graph K_{3q-2}."""


class SizeMismatch(QwindError):
    """Wrong number of values for the requested q."""


class TiedMedian(QwindError):
    """1-d values with ties have no unique median; no convention is picked."""


@dataclass(frozen=True)
class CandidatePoint:
    point: Rational2
    tags: frozenset[str]


@dataclass(frozen=True)
class CandidateSet:
    """The finite witness search space of a drawing."""

    points: tuple[CandidatePoint, ...]

    def sorted_points(self) -> list[Rational2]:
        return [c.point for c in self.points]


@dataclass(frozen=True)
class FaceEvidence:
    """Why one face admits the witness.

    kind: vertex-hit | on-edge-arc | on-cycle-image | winding
    winding: the nonzero winding number, present only for kind "winding".
    """

    kind: str
    winding: Optional[int] = None


@dataclass(frozen=True)
class WindingCertificate:
    family: FaceFamily
    witness: Rational2
    evidence: tuple[FaceEvidence, ...]


def candidate_points(dr: Drawing) -> CandidateSet:
    """Vertex images, bend points, pairwise segment crossings, overlap midpoints."""
    tags: dict[tuple[Fraction, Fraction], set[str]] = {}

    def add(p: Rational2, tag: str) -> None:
        tags.setdefault(p.key(), set()).add(tag)

    for p in dr.positions:
        add(p, "vertex-image")
    for chain in dr.bends.values():
        for b in chain:
            add(b, "bend-point")

    segs = []
    for e in dr.graph.sorted_edges():
        for idx, s in enumerate(dr.arc_segments(e)):
            segs.append((e, idx, s))
    for i in range(len(segs)):
        e1, i1, s1 = segs[i]
        for j in range(i + 1, len(segs)):
            e2, i2, s2 = segs[j]
            if e1 == e2 and abs(i1 - i2) == 1:
                continue  # consecutive pieces of one arc only share their bend
            res = segment_intersect(s1, s2)
            if res.kind == "point":
                add(res.witness, "crossing")
            elif res.kind == "overlap-segment":
                add(res.witness.midpoint(), "overlap-midpoint")
                add(res.witness.a, "crossing")
                add(res.witness.b, "crossing")

    points = tuple(
        CandidatePoint(Rational2(*key), frozenset(tags[key])) for key in sorted(tags)
    )
    return CandidateSet(points)


def _check_face_edges(dr: Drawing, family: FaceFamily) -> None:
    for face in family.faces:
        for u, v in itertools.combinations(face.vertices, 2):
            if not dr.graph.has_edge(u, v):
                raise MissingEdge(f"face {face.vertices} needs absent edge ({u}, {v})")
        for v in face.vertices:
            if not 0 <= v < dr.graph.n:
                raise MissingEdge(f"face {face.vertices} references vertex {v}")


def arc_towards(dr: Drawing, u: int, v: int) -> list[Rational2]:
    """The polyline of edge {u, v} traversed from u to v."""
    pts = dr.arc(edge_of(u, v))
    return pts if u < v else list(reversed(pts))


def cycle_curve(dr: Drawing, vertices: Sequence[int]) -> ClosedPLCurve:
    """The closed curve traced by a cycle of vertices in the drawing."""
    points: list[Rational2] = []
    k = len(vertices)
    for i in range(k):
        leg = arc_towards(dr, vertices[i], vertices[(i + 1) % k])
        points.extend(leg[:-1])  # the leg's endpoint starts the next leg
    return ClosedPLCurve(tuple(points))


def point_on_arc(dr: Drawing, e: Edge, p: Rational2) -> bool:
    return any(point_on_segment(p, s) for s in dr.arc_segments(e))


def face_evidence(dr: Drawing, face: Face, p: Rational2) -> Optional[FaceEvidence]:
    """Evidence that p meets the face's constraint set, or None."""
    vs = face.vertices
    if face.dim == 0:
        if dr.positions[vs[0]] == p:
            return FaceEvidence("vertex-hit")
        return None
    if face.dim == 1:
        if point_on_arc(dr, (vs[0], vs[1]), p):
            return FaceEvidence("on-edge-arc")
        return None
    if face.dim == 2:
        curve = cycle_curve(dr, vs)
        if point_on_curve(p, curve):
            return FaceEvidence("on-cycle-image")
        w = winding_number(curve, p)
        if w != 0:
            return FaceEvidence("winding", w)
        return None
    raise ValueError(f"faces of dimension {face.dim} have no winding semantics")


def _certify(dr: Drawing, family: FaceFamily, p: Rational2) -> Optional[WindingCertificate]:
    evidence = []
    for face in family.faces:
        ev = face_evidence(dr, face, p)
        if ev is None:
            return None
        evidence.append(ev)
    return WindingCertificate(family, p, tuple(evidence))


def is_winding_partition(dr: Drawing, family: FaceFamily) -> Optional[WindingCertificate]:
    """First certificate over the sorted candidate set, if the family winds."""
    _check_face_edges(dr, family)
    for p in candidate_points(dr).sorted_points():
        cert = _certify(dr, family, p)
        if cert is not None:
            return cert
    return None


def _triangle_cover(
    vertices: list[int], triangles: list[tuple[int, int, int]]
) -> Iterable[tuple[tuple[int, int, int], ...]]:
    """All partitions of `vertices` into disjoint triangles from the list."""
    by_vertex: dict[int, list[tuple[int, int, int]]] = {v: [] for v in vertices}
    for t in triangles:
        for v in t:
            by_vertex[v].append(t)

    def rec(remaining: frozenset[int], acc: tuple) -> Iterable[tuple]:
        if not remaining:
            yield acc
            return
        v = min(remaining)
        for t in by_vertex[v]:
            if remaining.issuperset(t):
                yield from rec(remaining - set(t), acc + (t,))

    yield from rec(frozenset(vertices), ())


def _winding_triangles(
    dr: Drawing, vertices: list[int], p: Rational2
) -> list[tuple[int, int, int]]:
    """Triangles on `vertices` (all edges drawn) whose W-set contains p."""
    out = []
    for t in itertools.combinations(sorted(vertices), 3):
        if not all(dr.graph.has_edge(u, v) for u, v in itertools.combinations(t, 2)):
            continue
        if face_evidence(dr, Face(t), p) is not None:
            out.append(t)
    return out


def _vertex_rooted_certs(dr: Drawing, q: int) -> dict[FaceFamily, WindingCertificate]:
    """Families of shape (0, 2, ..., 2): the witness must be a vertex image."""
    n = dr.graph.n
    certs: dict[FaceFamily, WindingCertificate] = {}
    for v in range(n):
        p = dr.positions[v]
        others = [u for u in range(n) if u != v]
        tris = _winding_triangles(dr, others, p)
        for cover in _triangle_cover(others, tris):
            family = FaceFamily.of([Face.of(v)] + [Face(t) for t in cover])
            if family not in certs:
                certs[family] = _certify(dr, family, p)
    return certs


def _edge_rooted_scan(
    dr: Drawing, q: int, points: Sequence[Rational2]
) -> list[tuple[int, WindingCertificate]]:
    """Families of shape (1, 1, 2, ..., 2) witnessed at the given points.

    Returns (point index, certificate) pairs so callers can merge scans
    of different chunks deterministically.
    """
    n = dr.graph.n
    edges = dr.graph.sorted_edges()
    out: list[tuple[int, WindingCertificate]] = []
    for idx, p in enumerate(points):
        through = [e for e in edges if point_on_arc(dr, e, p)]
        for e1, e2 in itertools.combinations(through, 2):
            if set(e1) & set(e2):
                continue
            rest = [u for u in range(n) if u not in e1 and u not in e2]
            tris = _winding_triangles(dr, rest, p)
            for cover in _triangle_cover(rest, tris):
                family = FaceFamily.of([Face(e1), Face(e2)] + [Face(t) for t in cover])
                cert = _certify(dr, family, p)
                if cert is not None:
                    out.append((idx, cert))
    return out


def _edge_rooted_chunk(args) -> list[tuple[int, WindingCertificate]]:
    dr, q, points, offset = args
    return [(offset + i, cert) for i, cert in _edge_rooted_scan(dr, q, points)]


def winding_certificates(dr: Drawing, q: int, jobs: int = 1) -> list[WindingCertificate]:
    """All winding partitions of a drawing on 3q-2 vertices (one witness each).

    Works on any graph with that vertex count: faces whose edges are not
    drawn simply never certify.  The search is witness-first: for the
    vertex shape the witness must be the vertex image, for the two-edge
    shape it must lie on both arcs, so only those points are tried.
    The result does not depend on the worker count.
    """
    n = dr.graph.n
    if n != 3 * q - 2:
        raise WrongGraph(f"need 3q-2 = {3 * q - 2} vertices, drawing has {n}")
    certs = _vertex_rooted_certs(dr, q)

    points = candidate_points(dr).sorted_points()
    if jobs <= 1 or len(points) < 2 * jobs:
        pairs = _edge_rooted_scan(dr, q, points)
    else:
        from concurrent.futures import ProcessPoolExecutor

        size = -(-len(points) // jobs)
        chunks = [
            (dr, q, points[i : i + size], i) for i in range(0, len(points), size)
        ]
        pairs = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_edge_rooted_chunk, chunks):
                pairs.extend(part)

    # Keep the certificate at the smallest candidate index per family.
    best: dict[FaceFamily, tuple[int, WindingCertificate]] = {}
    for idx, cert in pairs:
        kept = best.get(cert.family)
        if kept is None or idx < kept[0]:
            best[cert.family] = (idx, cert)
    for family, (_, cert) in best.items():
        certs.setdefault(family, cert)

    return sorted(certs.values(), key=lambda c: c.family)


def enumerate_winding(dr: Drawing, q: int, jobs: int = 1) -> list[WindingCertificate]:
    """All winding partitions of a drawing of K_{3q-2}, deterministic order."""
    n = 3 * q - 2
    if dr.graph.n != n or len(dr.graph.edges) != n * (n - 1) // 2:
        raise WrongGraph(f"drawing must be the complete graph K_{n}")
    return winding_certificates(dr, q, jobs=jobs)


def certificate_to_obj(cert: WindingCertificate) -> dict:
    return {
        "family": [list(f.vertices) for f in cert.family.faces],
        "witness": [str(cert.witness.x), str(cert.witness.y)],
        "evidence": [
            {"kind": ev.kind, **({"winding": ev.winding} if ev.winding is not None else {})}
            for ev in cert.evidence
        ],
    }


def count_winding(dr: Drawing, q: int) -> int:
    return len(enumerate_winding(dr, q))


def winding_partitions_1d(values: Sequence, q: int) -> list[FaceFamily]:
    """All 1-d winding partitions: the median plus q-1 straddling pairs.

    With 2q-1 distinct values sorted as P_1..P_{q-1}, M, Q_1..Q_{q-1},
    the partitions are {M} together with pairs matching each P_i to some
    Q_j; there are (q-1)! of them.
    """
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if len(values) != 2 * q - 1:
        raise SizeMismatch(f"need 2q-1 = {2 * q - 1} values, got {len(values)}")
    if len(set(values)) != len(values):
        raise TiedMedian("values are not distinct; the median is not unique")
    order = sorted(range(len(values)), key=lambda i: values[i])
    lower, median, upper = order[: q - 1], order[q - 1], order[q:]
    partitions = []
    for image in itertools.permutations(upper):
        faces = [Face.of(median)] + [Face.of(a, b) for a, b in zip(lower, image)]
        partitions.append(FaceFamily.of(faces))
    return partitions


@dataclass
class HuntResult:
    best_drawing: Drawing
    best_count: int
    trace: list[dict]


def anneal(
    dr: Drawing,
    q: int,
    seed: int,
    steps: int,
    t0: float = 2.0,
    alpha: float = 0.97,
    pinned: frozenset[int] = frozenset(),
) -> HuntResult:
    """Simulated-annealing walk over vertex positions on the rational grid.

    Objective: number of winding partitions (lower is better; a drawing
    with zero partitions for q = 6 would refute the conjecture).  The
    walk is deterministic for a given seed; the best drawing seen is
    kept even when the walk moves away from it.
    """
    rng = random.Random(seed)
    grid = 97
    movable = [v for v in range(dr.graph.n) if v not in pinned]
    if not movable:
        raise ValueError("all vertices pinned")

    current = dr
    current_count = len(winding_certificates(dr, q))
    best, best_count = current, current_count
    trace: list[dict] = []
    t = t0
    for step in range(steps):
        v = movable[rng.randrange(len(movable))]
        reach = max(1, int(grid * t / t0))
        delta = Rational2(
            Fraction(rng.randint(-reach, reach), grid),
            Fraction(rng.randint(-reach, reach), grid),
        )
        accepted = False
        try:
            proposal = current.with_position(v, current.positions[v] + delta)
            count = len(winding_certificates(proposal, q))
        except ValueError:  # move collapsed an edge to zero length
            count = current_count
            proposal = current
        else:
            worse = count - current_count
            if worse <= 0 or rng.random() < math.exp(-worse / max(t, 1e-9)):
                current, current_count = proposal, count
                accepted = True
            if count < best_count:
                best, best_count = proposal, count
        trace.append(
            {
                "step": step,
                "count": count,
                "best": best_count,
                "accepted": accepted,
                "temperature": t,
            }
        )
        t *= alpha
    return HuntResult(best, best_count, trace)


def hunt(graph: Graph, q: int, seed: int, budget: int) -> HuntResult:
    """Search for low-winding-count drawings of the graph.

    Starts from a random general-position straight-line drawing and
    anneals vertex positions for `budget` steps.
    """
    rng = random.Random(seed)
    start = random_drawing(graph, rng.randint(0, 2**31 - 1), box=2 * graph.n)
    return anneal(start, q, rng.randint(0, 2**31 - 1), budget)
