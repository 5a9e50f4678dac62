"""q-winding partitions of arbitrary graph drawings, and the graph theory
around them: families of disjoint paths/cycles, delta-wye operations,
outerplanarity via forbidden minors, and the named K_7/K_10 subgraphs.

A graph is q-winding when every drawing admits q disjoint paths or
cycles whose images (for paths) and nonzero-winding sets (for cycles)
share a point.  That is universally quantified over drawings, so this
module decides single drawings and refutes exhaustively; it never
claims the universal property from samples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

import networkx as nx

from .complexes import Face
from .drawings import Drawing, Graph, edge_of
from .errors import QwindError
from .exactgeom import ClosedPLCurve, Rational2, in_W_neq0, rat
from .winding import candidate_points, cycle_curve, point_on_arc


class NotATriangle(QwindError):
    """delta_to_y needs the three edges of a triangle."""


class NotDegree3(QwindError):
    """y_to_delta needs a vertex of degree exactly 3."""


class TooLarge(QwindError):
    """The exhaustive minor search is desk-scale: n <= 12."""


class NotOuterplanar(QwindError):
    """convex_position_drawing is only defined for outerplanar graphs."""


@dataclass(frozen=True, slots=True, order=True)
class PathOrCycle:
    """A path (possibly a single vertex) or a cycle, as a vertex sequence.

    Stored canonically: paths read forward or backward, whichever is
    lexicographically smaller; cycles start at their smallest vertex and
    take the smaller of the two directions.
    """

    kind: str
    vertices: tuple[int, ...]

    @staticmethod
    def path(vertices) -> "PathOrCycle":
        vs = tuple(vertices)
        if len(set(vs)) != len(vs) or not vs:
            raise ValueError(f"path vertices must be nonempty and distinct: {vs}")
        return PathOrCycle("path", min(vs, tuple(reversed(vs))))

    @staticmethod
    def cycle(vertices) -> "PathOrCycle":
        vs = tuple(vertices)
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise ValueError(f"cycle needs >= 3 distinct vertices: {vs}")
        i = vs.index(min(vs))
        forward = vs[i:] + vs[:i]
        backward = (forward[0],) + tuple(reversed(forward[1:]))
        return PathOrCycle("cycle", min(forward, backward))

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        if self.kind == "path":
            return [edge_of(a, b) for a, b in zip(vs, vs[1:])]
        return [edge_of(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


@dataclass(frozen=True, slots=True)
class PCFamily:
    """q pairwise vertex-disjoint paths/cycles, members sorted."""

    members: tuple[PathOrCycle, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for m in self.members:
            for v in m.vertices:
                if v in seen:
                    raise ValueError(f"members are not disjoint at vertex {v}")
                seen.add(v)

    @staticmethod
    def of(members) -> "PCFamily":
        return PCFamily(tuple(sorted(members)))


def _all_paths(g: Graph, max_len: int) -> list[PathOrCycle]:
    found: set[PathOrCycle] = set()
    for v in range(g.n):
        found.add(PathOrCycle.path((v,)))

    def extend(seq: list[int]) -> None:
        if len(seq) > 1:
            found.add(PathOrCycle.path(seq))
        if len(seq) == max_len:
            return
        for u in g.neighbors(seq[-1]):
            if u not in seq:
                seq.append(u)
                extend(seq)
                seq.pop()

    if max_len >= 2:
        for v in range(g.n):
            extend([v])
    return sorted(found)


def _all_cycles(g: Graph, max_len: int) -> list[PathOrCycle]:
    found: set[PathOrCycle] = set()

    def extend(seq: list[int]) -> None:
        if len(seq) >= 3 and g.has_edge(seq[-1], seq[0]) and seq[1] < seq[-1]:
            found.add(PathOrCycle.cycle(seq))
        if len(seq) == max_len:
            return
        for u in g.neighbors(seq[-1]):
            if u > seq[0] and u not in seq:
                seq.append(u)
                extend(seq)
                seq.pop()

    if max_len >= 3:
        for v in range(g.n):
            extend([v])
    return sorted(found)


def enumerate_pc_families(g: Graph, q: int, max_len: int) -> Iterator[PCFamily]:
    """All vertex-disjoint families of q paths/cycles with <= max_len vertices.

    Members are deduplicated up to traversal direction and rotation; the
    stream is empty when q exceeds the vertex count.
    """
    members = sorted(_all_paths(g, max_len) + _all_cycles(g, max_len))
    masks = [sum(1 << v for v in m.vertices) for m in members]

    def rec(start: int, used: int, acc: list[PathOrCycle]) -> Iterator[PCFamily]:
        if len(acc) == q:
            yield PCFamily(tuple(acc))
            return
        for i in range(start, len(members)):
            if masks[i] & used:
                continue
            acc.append(members[i])
            yield from rec(i + 1, used | masks[i], acc)
            acc.pop()

    yield from rec(0, 0, [])


def has_q_winding_partition(
    dr: Drawing, q: int, max_len: int = 3
) -> Optional[tuple[PCFamily, Rational2]]:
    """First certified q-winding partition of the drawing, witness included.

    Searches witness-first over the candidate set.  Any path through a
    point p can be shrunk to the single edge (or vertex) of it that
    meets p, so only single vertices, single edges and cycles need to be
    tried; absence over those members is absence over all families.
    Cycle membership in the winding set is evaluated lazily during the
    backtracking, after the vertex-budget prunes, so long cycles are
    rarely touched.
    """
    g = dr.graph
    n = g.n
    # A cycle needs 3 vertices and the q-1 other members at least one each.
    cycle_cap = min(max_len, n - (q - 1))
    cycles = _all_cycles(g, cycle_cap) if cycle_cap >= 3 else []
    cycles.sort(key=lambda c: (len(c.vertices), c.vertices))
    cycle_masks = [sum(1 << v for v in c.vertices) for c in cycles]
    curve_cache: dict[PathOrCycle, ClosedPLCurve] = {}
    edges = g.sorted_edges()

    for cand in candidate_points(dr).points:
        p = cand.point
        paths = [PathOrCycle.path((v,)) for v in range(n) if dr.positions[v] == p]
        if max_len >= 2:
            paths.extend(PathOrCycle.path(e) for e in edges if point_on_arc(dr, e, p))
        paths.sort()
        path_masks = [sum(1 << v for v in m.vertices) for m in paths]
        winds: dict[int, bool] = {}

        def cycle_winds(i: int) -> bool:
            got = winds.get(i)
            if got is None:
                curve = curve_cache.get(cycles[i])
                if curve is None:
                    curve = cycle_curve(dr, cycles[i].vertices)
                    curve_cache[cycles[i]] = curve
                got = in_W_neq0(curve, p)
                winds[i] = got
            return got

        def rec(start: int, used: int, free: int, acc: list) -> Optional[list]:
            k = q - len(acc)
            if k == 0:
                return list(acc)
            if free < k:
                return None
            for i in range(start, len(paths)):
                if path_masks[i] & used:
                    continue
                acc.append(paths[i])
                got = rec(i + 1, used | path_masks[i], free - len(paths[i].vertices), acc)
                if got is not None:
                    return got
                acc.pop()
            base = len(paths)
            for j in range(max(0, start - base), len(cycles)):
                size = len(cycles[j].vertices)
                # everything after this point is a cycle of >= this size
                if size + 3 * (k - 1) > free:
                    break
                if cycle_masks[j] & used or not cycle_winds(j):
                    continue
                acc.append(cycles[j])
                got = rec(base + j + 1, used | cycle_masks[j], free - size, acc)
                if got is not None:
                    return got
                acc.pop()
            return None

        family = rec(0, 0, n, [])
        if family is not None:
            return PCFamily.of(family), p
    return None


def delta_to_y(g: Graph, triangle: tuple[int, int, int]) -> Graph:
    """Replace a triangle's edges by a new vertex joined to its corners."""
    a, b, c = sorted(triangle)
    tri_edges = {edge_of(a, b), edge_of(b, c), edge_of(a, c)}
    if not tri_edges <= g.edges:
        raise NotATriangle(f"{triangle} is not a triangle of the graph")
    new = g.n
    edges = (g.edges - tri_edges) | {edge_of(a, new), edge_of(b, new), edge_of(c, new)}
    return Graph(g.n + 1, frozenset(edges))


def y_to_delta(g: Graph, center: int) -> Graph:
    """Contract a degree-3 vertex into the triangle on its neighbours."""
    if g.degree(center) != 3:
        raise NotDegree3(f"vertex {center} has degree {g.degree(center)}, need 3")
    a, b, c = g.neighbors(center)

    def relabel(v: int) -> int:
        return v if v < center else v - 1

    edges = {
        edge_of(relabel(u), relabel(v))
        for u, v in g.edges
        if center not in (u, v)
    }
    edges |= {
        edge_of(relabel(a), relabel(b)),
        edge_of(relabel(b), relabel(c)),
        edge_of(relabel(a), relabel(c)),
    }
    return Graph(g.n - 1, frozenset(edges))


@dataclass(frozen=True)
class MinorWitness:
    """A minor model: name of the found graph plus its branch sets."""

    name: str
    branch_sets: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class OuterplanarResult:
    outerplanar: bool
    minor: Optional[MinorWitness]


def _k4_model(edges: frozenset, branches: dict) -> Optional[MinorWitness]:
    reps = sorted(branches)
    for quad in itertools.combinations(reps, 4):
        if all(edge_of(u, v) in edges for u, v in itertools.combinations(quad, 2)):
            return MinorWitness("K4", tuple(branches[r] for r in quad))
    return None


def _k23_model(edges: frozenset, branches: dict) -> Optional[MinorWitness]:
    reps = sorted(branches)
    for pair in itertools.combinations(reps, 2):
        rest = [r for r in reps if r not in pair]
        for trip in itertools.combinations(rest, 3):
            if all(edge_of(u, v) in edges for u in pair for v in trip):
                return MinorWitness("K23", tuple(branches[r] for r in pair + trip))
    return None


def is_outerplanar(g: Graph) -> OuterplanarResult:
    """Outerplanarity by exhaustive K_4/K_{2,3} minor search.

    Explores all edge contractions (branch sets keyed by their smallest
    original vertex, which makes the memoization order-independent) and
    tests for the forbidden graphs as subgraphs at every state.  Returns
    the found minor model as the witness when the graph is not
    outerplanar.
    """
    if g.n > 12:
        raise TooLarge(f"minor search is limited to n <= 12, got n={g.n}")
    seen: set[frozenset] = set()

    def search(edges: frozenset, branches: dict) -> Optional[MinorWitness]:
        if edges in seen:
            return None
        seen.add(edges)
        witness = _k4_model(edges, branches) or _k23_model(edges, branches)
        if witness is not None:
            return witness
        for u, v in sorted(edges):
            rep, gone = min(u, v), max(u, v)
            merged = dict(branches)
            merged[rep] = branches[u] | branches[v]
            del merged[gone]
            contracted = set()
            for a, b in edges:
                a2 = rep if a == gone else a
                b2 = rep if b == gone else b
                if a2 != b2:
                    contracted.add(edge_of(a2, b2))
            got = search(frozenset(contracted), merged)
            if got is not None:
                return got
        return None

    branches = {v: frozenset([v]) for v in range(g.n)}
    witness = search(g.edges, branches)
    return OuterplanarResult(witness is None, witness)


def convex_position_drawing(g: Graph) -> Drawing:
    """A straight-line drawing with all vertices on a circle, crossing-free.

    The circular order comes from a planar embedding of the graph plus
    an apex vertex joined to everything: the rotation around the apex is
    an outerplanar order.  Positions are rational points of the unit
    circle via the tangent half-angle parametrization.
    """
    result = is_outerplanar(g)
    if not result.outerplanar:
        raise NotOuterplanar(f"graph has a {result.minor.name} minor")

    if g.n == 1:
        order = [0]
    else:
        aux = nx.Graph()
        aux.add_nodes_from(range(g.n))
        aux.add_edges_from(g.edges)
        apex = g.n
        aux.add_edges_from((apex, v) for v in range(g.n))
        planar, embedding = nx.check_planarity(aux)
        if not planar:  # cannot happen for outerplanar g
            raise NotOuterplanar("apex graph is not planar")
        order = list(embedding.neighbors_cw_order(apex))

    positions: list[Rational2] = [Rational2.of(0, 0)] * g.n
    n = g.n
    for slot, v in enumerate(order):
        t = rat(2 * slot - (n - 1)) / n
        den = 1 + t * t
        positions[v] = Rational2((1 - t * t) / den, 2 * t / den)
    return Drawing(g, tuple(positions), {})


def isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test by backtracking (small graphs only)."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False

    def extend(mapping: dict[int, int], used: set[int]) -> bool:
        v = len(mapping)
        if v == g.n:
            return True
        for w in range(h.n):
            if w in used or g.degree(v) != h.degree(w):
                continue
            if all(
                g.has_edge(v, u) == h.has_edge(w, mapping[u]) for u in mapping
            ):
                mapping[v] = w
                used.add(w)
                if extend(mapping, used):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return extend({}, set())


_X_PRESETS = {
    # q-1 edges meeting at the rightmost vertex, other endpoints 1,3,5,...
    # (1-indexed), matching the refutation drawing for "K_{3q-2} - X".
    "K7_minus_star2": (7, [(0, 6), (2, 6)]),
    "K10_minus_star3": (10, [(0, 9), (2, 9), (4, 9)]),
}


def preset_graph(name: str) -> Graph:
    """Named graphs: K<n>, K7_minus_matching, K7_minus_star2, K10_minus_star3."""
    if name in _X_PRESETS:
        n, removed = _X_PRESETS[name]
        return Graph(n, Graph.complete(n).edges - {edge_of(u, v) for u, v in removed})
    if name == "K7_minus_matching":
        removed = {edge_of(0, 1), edge_of(2, 3), edge_of(4, 5)}
        return Graph(7, Graph.complete(7).edges - removed)
    if name.startswith("K") and name[1:].isdigit():
        return Graph.complete(int(name[1:]))
    raise ValueError(f"unknown preset {name!r}")


def star_removed_edges(q: int) -> list[tuple[int, int]]:
    """The edge set X of the non-q-winding subgraph K_{3q-2} - X."""
    n = 3 * q - 2
    return [(2 * k, n - 1) for k in range(q - 1)]


def face_to_member(face: Face) -> PathOrCycle:
    """Faces of the skeleton as paths/cycles: vertex, edge, or triangle."""
    if face.dim == 0:
        return PathOrCycle.path(face.vertices)
    if face.dim == 1:
        return PathOrCycle.path(face.vertices)
    if face.dim == 2:
        return PathOrCycle.cycle(face.vertices)
    raise ValueError(f"no path/cycle for a face of dimension {face.dim}")
