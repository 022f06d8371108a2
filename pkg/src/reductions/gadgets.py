# src/reductions/gadgets.py
"""Small fixed matrices shared by the sum / zero-product constructions."""
from src.arith.field import FieldTag
from src.linalg.matrix import Matrix

Q = FieldTag.rational()


def u_matrix(x, tag: FieldTag = Q) -> Matrix:
    """U_x = [[1, x], [0, 1]]; U_x U_y = U_{x+y}."""
    return Matrix.from_rows(tag, [[1, x], [0, 1]])


def x_matrix(tag: FieldTag = Q) -> Matrix:
    """X = [[0, 0], [-1, 1]], idempotent, and X U_r X = (1 - r) X."""
    return Matrix.from_rows(tag, [[0, 0], [-1, 1]])


def ab_gadget(tag: FieldTag = Q):
    """3x3 A, B with AB = 0 but BA, AA, BB nonzero; used to pin which matrix comes first."""
    a = Matrix.from_rows(tag, [[0, 0, 0], [0, 1, 0], [0, 0, 0]])
    b = Matrix.from_rows(tag, [[0, 1, 0], [0, 0, 0], [0, 0, 1]])
    return a, b
