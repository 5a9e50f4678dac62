import pytest

from oracles import brute_force_families
from qwind.complexes import (
    Face,
    FaceFamily,
    PartitionShape,
    ShapeMismatch,
    UnsupportedDimension,
    admissible_shapes,
    enumerate_face_families,
    family_count,
)


class TestAdmissibleShapes:
    def test_d2_q3(self):
        assert {s.dims for s in admissible_shapes(2, 3)} == {(0, 2, 2), (1, 1, 2)}

    def test_d1_q2(self):
        assert {s.dims for s in admissible_shapes(1, 2)} == {(0, 1)}

    def test_d2_q2(self):
        assert {s.dims for s in admissible_shapes(2, 2)} == {(0, 2), (1, 1)}

    def test_unsupported_dimension(self):
        with pytest.raises(UnsupportedDimension):
            admissible_shapes(3, 2)

    @pytest.mark.parametrize("d,q", [(1, 2), (1, 5), (2, 2), (2, 4), (2, 6)])
    def test_dimension_sum_invariant(self, d, q):
        shapes = admissible_shapes(d, q)
        assert shapes
        for s in shapes:
            assert sum(s.dims) == d * q - d


class TestEnumerateFamilies:
    def test_pairs_of_disjoint_edges(self):
        assert family_count(4, 2, PartitionShape((1, 1))) == 15

    def test_vertex_plus_triangle(self):
        assert family_count(4, 2, PartitionShape((0, 2))) == 20

    def test_single_triangle(self):
        fams = list(enumerate_face_families(2, 1, PartitionShape((2,))))
        assert fams == [FaceFamily.of([Face.of(0, 1, 2)])]

    def test_covering_count(self):
        assert family_count(6, 3, PartitionShape((0, 2, 2))) == 70

    def test_shape_too_big(self):
        with pytest.raises(ShapeMismatch):
            list(enumerate_face_families(3, 2, PartitionShape((2, 2))))

    def test_wrong_q(self):
        with pytest.raises(ShapeMismatch):
            list(enumerate_face_families(6, 2, PartitionShape((0, 2, 2))))

    @pytest.mark.parametrize(
        "N,q,dims",
        [(4, 2, (1, 1)), (4, 2, (0, 2)), (5, 2, (1, 2)), (6, 3, (0, 2, 2)), (6, 3, (1, 1, 2))],
    )
    def test_matches_brute_force(self, N, q, dims):
        got = {
            tuple(f.vertices for f in fam.faces)
            for fam in enumerate_face_families(N, q, PartitionShape(dims))
        }
        assert got == brute_force_families(N, q, dims)

    def test_no_duplicates_and_disjoint(self):
        fams = list(enumerate_face_families(6, 3, PartitionShape((1, 1, 2))))
        assert len(fams) == len(set(fams))
        for fam in fams:
            used = [v for f in fam.faces for v in f.vertices]
            assert len(used) == len(set(used))

    def test_families_cover_when_sizes_match(self):
        for fam in enumerate_face_families(6, 3, PartitionShape((0, 2, 2))):
            assert fam.vertices() == frozenset(range(7))

    def test_deterministic_order(self):
        a = list(enumerate_face_families(5, 2, PartitionShape((1, 2))))
        b = list(enumerate_face_families(5, 2, PartitionShape((1, 2))))
        assert a == b
        assert a == sorted(a)


class TestTypes:
    def test_face_rejects_unsorted(self):
        with pytest.raises(ValueError):
            Face((2, 1))

    def test_family_rejects_overlap(self):
        with pytest.raises(ValueError):
            FaceFamily.of([Face.of(0, 1), Face.of(1, 2)])

    def test_shape_of_family(self):
        fam = FaceFamily.of([Face.of(4), Face.of(0, 1, 6), Face.of(2, 3, 5)])
        assert fam.shape() == PartitionShape((0, 2, 2))
