# src/linalg/rowrestricted.py
from dataclasses import dataclass

from src.arith.field import FieldTag
from src.errors import ShapeError
from src.linalg.matrix import Matrix, mat_mul


@dataclass(frozen=True)
class RowRestrictedMatrix:
    """A d x d matrix whose rows p..d-1 are zero, kept as A|B with A p x p and B p x (d-p)."""
    tag: FieldTag
    d: int
    p: int
    a: Matrix
    b: Matrix

    def __post_init__(self):
        if not 0 <= self.p <= self.d:
            raise ShapeError(f"need 0 <= p <= d, got p={self.p}, d={self.d}")
        if (self.a.rows, self.a.cols) != (self.p, self.p):
            raise ShapeError(f"A must be {self.p}x{self.p}")
        if (self.b.rows, self.b.cols) != (self.p, self.d - self.p):
            raise ShapeError(f"B must be {self.p}x{self.d - self.p}")

    @classmethod
    def from_matrix(cls, m: Matrix, p: int) -> "RowRestrictedMatrix":
        if not m.is_square:
            raise ShapeError("A|B form needs a square matrix")
        d = m.rows
        if not 0 <= p <= d:
            raise ShapeError(f"need 0 <= p <= d, got p={p}, d={d}")
        if any(x != 0 for x in m.entries[p * d:]):
            raise ShapeError(f"matrix has nonzero entries below row {p}")
        a = Matrix(m.tag, p, p, tuple(x for i in range(p) for x in m.row(i)[:p]))
        b = Matrix(m.tag, p, d - p, tuple(x for i in range(p) for x in m.row(i)[p:]))
        return cls(m.tag, d, p, a, b)

    def embed(self) -> Matrix:
        zero = self.tag.zero()
        entries = []
        for i in range(self.p):
            entries.extend(self.a.row(i))
            entries.extend(self.b.row(i))
        entries.extend([zero] * ((self.d - self.p) * self.d))
        return Matrix(self.tag, self.d, self.d, tuple(entries))


def rr_mul(t1: RowRestrictedMatrix, t2: RowRestrictedMatrix) -> RowRestrictedMatrix:
    """(A1|B1)(A2|B2) = (A1 A2)|(A1 B2)."""
    if (t1.d, t1.p) != (t2.d, t2.p):
        raise ShapeError(f"A|B shapes differ: (d={t1.d}, p={t1.p}) vs (d={t2.d}, p={t2.p})")
    return RowRestrictedMatrix(t1.tag, t1.d, t1.p, mat_mul(t1.a, t2.a), mat_mul(t1.a, t2.b))


def nonzero_row_bound(m: Matrix) -> int:
    """Smallest p such that every row from p on is zero."""
    for i in range(m.rows - 1, -1, -1):
        if any(x != 0 for x in m.row(i)):
            return i + 1
    return 0
