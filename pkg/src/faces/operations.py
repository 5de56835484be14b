"""Face operations - the set-pair constructions on faces and the inclusion and sharpening orders"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple

import numpy as np

from src.exceptions import FaceError, IncompatibleTheoryError, InvariantViolation
from src.faces.face import Face, Vertex, all_faces, ones, origin, whole
from src.trits import Trit, TritOps
from src.trits.operations import JOIN_TABLE

logger = logging.getLogger(__name__)

_JOIN = np.array(JOIN_TABLE, dtype=np.int8)
_SHARPER = np.array([[TritOps.sharper(x, y) for y in Trit] for x in Trit], dtype=bool)


def _same_n(*faces: Face) -> int:
    dims = {face.n for face in faces}
    if len(dims) != 1:
        raise FaceError(f"Dimension mismatch: {sorted(dims)}")
    return dims.pop()


class FaceOps:
    """Operations on faces of a common n-cube"""

    @staticmethod
    def join(a: Face, b: Face) -> Face:
        """Smallest face containing both: (A0 & B0, A1 & B1)"""
        n = _same_n(a, b)
        return Face.from_sets(n, a.zeros & b.zeros, a.ones & b.ones)

    @staticmethod
    def intersect(a: Face, b: Face) -> Optional[Face]:
        """(A0 | B0, A1 | B1) when A0 & B1 and A1 & B0 are empty; None otherwise"""
        n = _same_n(a, b)
        if a.zeros & b.ones or a.ones & b.zeros:
            return None
        return Face.from_sets(n, a.zeros | b.zeros, a.ones | b.ones)

    @staticmethod
    def contains(b: Face, a: Face) -> bool:
        """a is a subface of b: A0 contains B0 and A1 contains B1"""
        _same_n(a, b)
        return a.zeros >= b.zeros and a.ones >= b.ones

    @staticmethod
    def antipodal(b: Face, a: Face) -> Face:
        """
        Antipodal of the subface a inside b: (B0 | (A1 - B1), B1 | (A0 - B0))

        Raises:
            FaceError: If a is not a subface of b
        """
        n = _same_n(a, b)
        if not FaceOps.contains(b, a):
            raise FaceError(f"Antipodal needs {a} inside {b}")
        return Face.from_sets(n, b.zeros | (a.ones - b.ones), b.ones | (a.zeros - b.zeros))

    @staticmethod
    def dpar(x: Face, y: Face) -> Face:
        """Antipodal of y in the join of x and y"""
        return FaceOps.antipodal(FaceOps.join(x, y), y)

    @staticmethod
    def wedge(x: Face, y: Face) -> Face:
        """
        (0 # x) meet (0 # y) meet (x # y), with 0 the origin

        Raises:
            InvariantViolation: If one of the intersections is undefined
        """
        n = _same_n(x, y)
        zero = origin(n)
        result = FaceOps.join(zero, x)
        for face in (FaceOps.join(zero, y), FaceOps.join(x, y)):
            result = FaceOps.intersect(result, face)
            if result is None:
                raise InvariantViolation(f"Wedge intersection undefined for {x}, {y}")
        return result

    @staticmethod
    def neg(a: Face) -> Face:
        return Face(tuple(TritOps.neg(t) for t in a.trits))

    @staticmethod
    def compatible_pointwise(a: Face, b: Face) -> bool:
        """No coordinate where one face is 0 and the other 1"""
        _same_n(a, b)
        return all(TritOps.compatible(x, y) for x, y in zip(a.trits, b.trits))

    @staticmethod
    def compatible_faces(a: Face, b: Face) -> bool:
        """
        Some face c lies in both a and b

        Searched over the vertices of a and cross-checked against the
        pointwise no-clash criterion.
        """
        _same_n(a, b)
        found = any(FaceOps.is_subface(v.as_face(), b) for v in a.vertices())
        if found != FaceOps.compatible_pointwise(a, b):
            raise InvariantViolation(f"Compatibility criteria disagree on {a}, {b}")
        return found

    @staticmethod
    def cap_curly(a: Face, b: Face) -> Face:
        """
        (h & N(a & !a) & N(b & !b)) | !N(!a & !b), pointwise

        Raises:
            IncompatibleTheoryError: If the faces are incompatible
        """
        _same_n(a, b)
        if not FaceOps.compatible_pointwise(a, b):
            raise IncompatibleTheoryError(f"Faces {a} and {b} are incompatible")
        ops = TritOps
        result = []
        for x, y in zip(a.trits, b.trits):
            left = ops.meet(
                ops.meet(Trit.HALF, ops.nabla(ops.meet(x, ops.neg(x)))),
                ops.nabla(ops.meet(y, ops.neg(y))),
            )
            right = ops.neg(ops.nabla(ops.meet(ops.neg(x), ops.neg(y))))
            result.append(ops.vee(left, right))
        return Face(tuple(result))

    @staticmethod
    def is_subface(a: Face, b: Face) -> bool:
        """a # b = b"""
        return FaceOps.join(a, b) == b

    @staticmethod
    def sharper_face(a: Face, b: Face) -> bool:
        """Pointwise a <= b <= 1-b or a >= b >= 1-b"""
        _same_n(a, b)
        return all(TritOps.sharper(x, y) for x, y in zip(a.trits, b.trits))

    @staticmethod
    def farthest_vertex(x: Face) -> Vertex:
        """
        d(x, origin), which is the vertex of x farthest from the origin

        Raises:
            InvariantViolation: If the geometric maximizer disagrees
        """
        zero = origin(x.n)
        face = FaceOps.dpar(x, zero)
        vertex = Vertex(tuple(1 if t is Trit.ONE else 0 for t in face.trits))
        base = Vertex((0,) * x.n)
        best = max(v.distance(base) for v in x.vertices())
        if not face.is_vertex or vertex.distance(base) != best:
            raise InvariantViolation(f"d({x}, origin) is not the farthest vertex")
        return vertex

    @staticmethod
    def inclusion_characterizations(a: Face, b: Face) -> Dict[str, bool]:
        """
        Equivalent readings of a inside b

        join: a # b = b
        vertex_pair: d(a,0) and d(a,1) both inside b
        boolean: !a # b is the whole cube (only for a vertex a)
        negated_pair: !d(a,0) # b and !d(a,1) # b are both the whole cube
        sharpening: a is sharper than b
        """
        n = _same_n(a, b)
        zero, one, cube = origin(n), ones(n), whole(n)
        join = FaceOps.join
        result = {
            "join": FaceOps.is_subface(a, b),
            "vertex_pair": FaceOps.is_subface(FaceOps.dpar(a, zero), b)
            and FaceOps.is_subface(FaceOps.dpar(a, one), b),
            "negated_pair": join(FaceOps.neg(FaceOps.dpar(a, zero)), b) == cube
            and join(FaceOps.neg(FaceOps.dpar(a, one)), b) == cube,
            "sharpening": FaceOps.sharper_face(a, b),
        }
        if a.is_vertex:
            result["boolean"] = join(FaceOps.neg(a), b) == cube
        return result

    @staticmethod
    def reflect_vertices(b: Face, a: Face) -> Set[Tuple[int, ...]]:
        """
        Point reflection of the vertices of a through the center of b

        Raises:
            FaceError: If a is not a subface of b
        """
        if not FaceOps.contains(b, a):
            raise FaceError(f"Reflection needs {a} inside {b}")
        center = b.center()
        reflected = set()
        for vertex in a.vertices():
            point = tuple(2 * c - Fraction(p) for c, p in zip(center, vertex.coordinates))
            if any(q.denominator != 1 for q in point):
                raise InvariantViolation(f"Reflection of {vertex} through {b} is not a lattice point")
            reflected.add(tuple(int(q) for q in point))
        return reflected


class FaceOrder:
    """Order relations over all faces of the n-cube as boolean matrices"""

    RELATIONS = ("subface", "sharper")

    @staticmethod
    def codes(faces: List[Face]) -> np.ndarray:
        return np.array([[int(t) for t in face.trits] for face in faces], dtype=np.int8).reshape(
            len(faces), -1
        )

    @staticmethod
    def order_matrix(n: int, relation: str = "subface") -> np.ndarray:
        """
        leq[i, j] for the faces in word-index order

        Args:
            n: Cube dimension
            relation: "subface" (a # b = b) or "sharper" (pointwise sharpening)

        Returns:
            Read-only boolean matrix of shape (3^n, 3^n)
        """
        if relation not in FaceOrder.RELATIONS:
            raise ValueError(f"Unknown relation {relation!r}")
        codes = FaceOrder.codes(all_faces(n))
        left, right = codes[:, None, :], codes[None, :, :]
        if relation == "subface":
            pointwise = _JOIN[left, right] == right
        else:
            pointwise = _SHARPER[left, right]
        leq = pointwise.all(axis=2)
        leq.setflags(write=False)
        logger.debug(f"Order matrix {relation} for n={n}: {leq.sum()} related pairs")
        return leq

    @staticmethod
    def is_partial_order(leq: np.ndarray) -> bool:
        """Reflexive, antisymmetric and transitive"""
        reflexive = bool(np.all(np.diag(leq)))
        off_diagonal = leq & leq.T & ~np.eye(len(leq), dtype=bool)
        antisymmetric = not off_diagonal.any()
        composed = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
        transitive = not (composed & ~leq).any()
        return reflexive and antisymmetric and transitive

    @staticmethod
    def minimal_elements(leq: np.ndarray) -> List[int]:
        """Indices with nothing strictly below them"""
        strictly_below = leq & ~np.eye(len(leq), dtype=bool)
        return [int(i) for i in np.flatnonzero(~strictly_below.any(axis=0))]
