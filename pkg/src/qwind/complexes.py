"""Combinatorics of simplex skeleta: faces, disjoint families, shapes.

A face is a set of vertex indices of the N-simplex; a family is a set of
q pairwise vertex-disjoint faces.  The shape of a family is the multiset
of its face dimensions; only shapes solving the dimension-count
equations can carry a partition, which is what `admissible_shapes`
enumerates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import QwindError


class UnsupportedDimension(QwindError):
    """Shape enumeration is implemented for ambient dimension 1 and 2 only."""


class ShapeMismatch(QwindError):
    """The requested shape does not fit on the given vertex set."""


@dataclass(frozen=True, slots=True, order=True)
class Face:
    """A face of a simplex, stored as its sorted vertex tuple."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("empty face")
        if tuple(sorted(set(self.vertices))) != self.vertices:
            raise ValueError(f"face vertices must be sorted and distinct: {self.vertices}")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @staticmethod
    def of(*vertices: int) -> "Face":
        return Face(tuple(sorted(vertices)))


@dataclass(frozen=True, slots=True, order=True)
class FaceFamily:
    """q pairwise vertex-disjoint faces, kept sorted for canonical identity."""

    faces: tuple[Face, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for face in self.faces:
            for v in face.vertices:
                if v in seen:
                    raise ValueError(f"faces are not disjoint at vertex {v}")
                seen.add(v)
        if tuple(sorted(self.faces)) != self.faces:
            raise ValueError("faces must be in canonical sorted order")

    @staticmethod
    def of(faces) -> "FaceFamily":
        return FaceFamily(tuple(sorted(faces)))

    @property
    def q(self) -> int:
        return len(self.faces)

    def vertices(self) -> frozenset[int]:
        return frozenset(v for f in self.faces for v in f.vertices)

    def shape(self) -> "PartitionShape":
        return PartitionShape(tuple(sorted(f.dim for f in self.faces)))


@dataclass(frozen=True, slots=True, order=True)
class PartitionShape:
    """Multiset of face dimensions (k_1, ..., k_q), stored sorted."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if tuple(sorted(self.dims)) != self.dims:
            raise ValueError("shape dims must be sorted")

    @property
    def q(self) -> int:
        return len(self.dims)

    def vertex_count(self) -> int:
        return sum(k + 1 for k in self.dims)


def admissible_shapes(d: int, q: int) -> list[PartitionShape]:
    """All dimension multisets a partition can have in general position.

    Solves sum(k_i + 1) = (d+1)(q-1) + 1 with 0 <= k_i <= d over
    multisets of size q.  For d = 2 this yields the two shapes of the
    complete-graph case: q-1 triangles and a vertex, or q-2 triangles
    and two edges.
    """
    if d not in (1, 2):
        raise UnsupportedDimension(f"d must be 1 or 2, got {d}")
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    target = (d + 1) * (q - 1) + 1
    shapes = [
        PartitionShape(dims)
        for dims in itertools.combinations_with_replacement(range(d + 1), q)
        if sum(k + 1 for k in dims) == target
    ]
    return sorted(shapes)


def enumerate_face_families(N: int, q: int, shape: PartitionShape) -> Iterator[FaceFamily]:
    """All vertex-disjoint families on {0..N} with the given shape, each once.

    Families are produced with faces sorted by smallest vertex, in
    lexicographic order of that canonical encoding.  When the shape uses
    exactly N+1 vertices the families cover the whole vertex set.
    """
    if shape.q != q:
        raise ShapeMismatch(f"shape has {shape.q} parts, expected q={q}")
    need = shape.vertex_count()
    if need > N + 1:
        raise ShapeMismatch(f"shape needs {need} vertices but only {N + 1} exist")

    def rec(available: list[int], dims: tuple[int, ...], acc: list[Face]) -> Iterator[FaceFamily]:
        if not dims:
            yield FaceFamily(tuple(acc))
            return
        remaining_need = sum(k + 1 for k in dims)
        v = available[0]
        rest = available[1:]
        # v becomes the smallest vertex of the next face.  Trying each
        # distinct dimension once keeps the enumeration duplicate-free;
        # sorting candidate faces by their vertex tuple makes the whole
        # stream lexicographic in the family encoding.
        candidates = [
            others
            for k in set(dims)
            for others in itertools.combinations(rest, k)
        ]
        for others in sorted(candidates):
            k = len(others)
            i = dims.index(k)
            next_dims = dims[:i] + dims[i + 1 :]
            face = Face((v,) + others)
            remaining = [u for u in rest if u not in others]
            yield from rec(remaining, next_dims, acc + [face])
        # Families that leave v unused sort after all of the above.
        if len(rest) >= remaining_need:
            yield from rec(rest, dims, acc)

    yield from rec(list(range(N + 1)), tuple(sorted(shape.dims)), [])


def family_count(N: int, q: int, shape: PartitionShape) -> int:
    """Cardinality of enumerate_face_families(N, q, shape)."""
    return sum(1 for _ in enumerate_face_families(N, q, shape))
