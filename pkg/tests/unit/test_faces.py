"""Unit tests for faces of the n-cube and their operations"""
import numpy as np
import pytest

from src.exceptions import FaceError, IncompatibleTheoryError
from src.faces import Face, FaceOps, FaceOrder, Vertex, all_faces, ones, origin, whole


def face(word: str) -> Face:
    return Face.from_word(word)


class TestFace:
    """Test face construction and views"""

    def test_word_and_sets(self):
        """Test the word and the coordinate sets"""
        f = face("0h1")
        assert f.word == "0h1"
        assert f.zeros == {1}
        assert f.ones == {3}
        assert f.dimension == 1
        assert not f.is_vertex

    def test_from_sets(self):
        """Test building from A0 and A1"""
        assert Face.from_sets(3, [1], [3]) == face("0h1")
        with pytest.raises(FaceError):
            Face.from_sets(2, [1], [1])
        with pytest.raises(FaceError):
            Face.from_sets(2, [3], [])

    def test_bad_word(self):
        """Test that non-trit characters are rejected"""
        with pytest.raises(FaceError):
            face("0x")

    def test_vertices(self):
        """Test the vertices of an edge"""
        assert [v.coordinates for v in face("0h").vertices()] == [(0, 0), (0, 1)]
        assert len(whole(3).vertices()) == 8

    def test_counts(self):
        """Test there are 3^n faces"""
        assert len(all_faces(3)) == 27
        assert all_faces(1) == [origin(1), whole(1), ones(1)]

    def test_json(self):
        """Test the JSON form"""
        data = face("0h1").to_json()
        assert data == {"n": 3, "A0": [1], "A1": [3], "word": "0h1"}
        assert Face.from_json({"n": 3, "A0": [1], "A1": [3]}) == face("0h1")

    def test_vertex_distance(self):
        """Test edge distance between vertices"""
        assert Vertex((0, 1, 1)).distance(Vertex((1, 1, 0))) == 2


class TestFaceOps:
    """Test the geometric operations"""

    def test_join_is_smallest_common_face(self):
        """Test the join of two vertices is the face spanned by them"""
        assert FaceOps.join(face("00"), face("01")) == face("0h")
        assert FaceOps.join(face("00"), face("11")) == face("hh")

    def test_intersect(self):
        """Test intersection and its undefined case"""
        assert FaceOps.intersect(face("0h"), face("h1")) == face("01")
        assert FaceOps.intersect(face("0h"), face("1h")) is None

    def test_antipodal(self):
        """Test the antipodal of a vertex in the square"""
        assert FaceOps.antipodal(whole(2), face("01")) == face("10")
        assert FaceOps.antipodal(face("0h"), face("01")) == face("00")
        with pytest.raises(FaceError):
            FaceOps.antipodal(face("0h"), face("11"))

    def test_dpar(self):
        """Test the antipodal operation on faces"""
        assert FaceOps.dpar(face("01"), face("00")) == face("01")
        assert FaceOps.dpar(whole(2), origin(2)) == ones(2)

    def test_wedge_is_pointwise_min(self):
        """Test the wedge of two faces"""
        assert FaceOps.wedge(face("01"), face("11")) == face("01")
        assert FaceOps.wedge(face("h1"), face("1h")) == face("hh")

    def test_farthest_vertex(self):
        """Test the vertex farthest from the origin"""
        assert FaceOps.farthest_vertex(whole(2)) == Vertex((1, 1))
        assert FaceOps.farthest_vertex(face("0h")) == Vertex((0, 1))

    def test_subface_and_sharpening(self):
        """Test the two orders on a pair"""
        assert FaceOps.is_subface(face("01"), face("0h"))
        assert not FaceOps.is_subface(face("0h"), face("01"))
        assert FaceOps.sharper_face(face("01"), whole(2))
        assert not FaceOps.sharper_face(whole(2), face("01"))

    def test_compatibility(self):
        """Test the two compatibility criteria"""
        assert FaceOps.compatible_faces(face("0h"), face("h1"))
        assert not FaceOps.compatible_faces(face("0h"), face("1h"))

    def test_cap_curly(self):
        """Test the formula intersection against the set intersection"""
        assert FaceOps.cap_curly(face("0h"), face("h1")) == face("01")
        with pytest.raises(IncompatibleTheoryError):
            FaceOps.cap_curly(face("0h"), face("1h"))

    def test_neg_reflects_through_center(self):
        """Test negation swaps 0 and 1"""
        assert FaceOps.neg(face("0h1")) == face("1h0")

    def test_inclusion_characterizations(self):
        """Test every reading agrees on included and non-included pairs"""
        inside = FaceOps.inclusion_characterizations(face("01"), face("0h"))
        outside = FaceOps.inclusion_characterizations(face("11"), face("0h"))
        assert set(inside.values()) == {True}
        assert set(outside.values()) == {False}
        assert "boolean" in inside

    def test_reflect_vertices(self):
        """Test point reflection through the center of the containing face"""
        assert FaceOps.reflect_vertices(whole(2), face("0h")) == {(1, 0), (1, 1)}

    def test_dimension_mismatch(self):
        """Test that faces of different cubes are rejected"""
        with pytest.raises(FaceError):
            FaceOps.join(face("0"), face("00"))


class TestFaceOrder:
    """Test the order matrices"""

    def test_orders_coincide(self):
        """Test subface and sharpening give the same matrix"""
        for n in (1, 2, 3):
            assert np.array_equal(
                FaceOrder.order_matrix(n, "subface"), FaceOrder.order_matrix(n, "sharper")
            )

    def test_partial_order(self):
        """Test reflexivity, antisymmetry and transitivity"""
        assert FaceOrder.is_partial_order(FaceOrder.order_matrix(2))
        not_antisymmetric = np.ones((2, 2), dtype=bool)
        assert not FaceOrder.is_partial_order(not_antisymmetric)

    def test_minimal_elements_are_vertices(self):
        """Test the minimal faces of the square"""
        leq = FaceOrder.order_matrix(2)
        faces = all_faces(2)
        minimal = [faces[i].word for i in FaceOrder.minimal_elements(leq)]
        assert minimal == ["00", "01", "10", "11"]

    def test_unknown_relation(self):
        """Test the relation name check"""
        with pytest.raises(ValueError):
            FaceOrder.order_matrix(1, "prefix")
