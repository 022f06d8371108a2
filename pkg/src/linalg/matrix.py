# src/linalg/matrix.py
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from src.arith.field import FieldTag, RawValue
from src.arith.scalar import Scalar
from src.errors import MixedFieldError, ShapeError


@dataclass(frozen=True)
class Matrix:
    """Dense h x d matrix over a FieldTag, row-major, entries already canonical."""
    tag: FieldTag
    rows: int
    cols: int
    entries: Tuple[RawValue, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(f"{self.rows}x{self.cols} matrix given {len(self.entries)} entries")

    @classmethod
    def from_rows(cls, tag: FieldTag, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise ShapeError("ragged rows")
        return cls(tag, len(rows), width, tuple(tag.coerce(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, tag: FieldTag, rows: int, cols: int) -> "Matrix":
        return cls(tag, rows, cols, (tag.zero(),) * (rows * cols))

    @classmethod
    def identity(cls, tag: FieldTag, n: int) -> "Matrix":
        zero, one = tag.zero(), tag.one()
        return cls(tag, n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, tag: FieldTag, values: Sequence) -> "Matrix":
        n = len(values)
        zero = tag.zero()
        diag = [tag.coerce(x) for x in values]
        return cls(tag, n, n, tuple(diag[i] if i == j else zero for i in range(n) for j in range(n)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def get(self, i: int, j: int) -> RawValue:
        return self.entries[i * self.cols + j]

    def scalar(self, i: int, j: int) -> Scalar:
        return Scalar(self.tag, self.get(i, j))

    def row(self, i: int) -> Tuple[RawValue, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[RawValue, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> List[List[RawValue]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def encode(self) -> bytes:
        """Canonical byte form: field tag, dimensions, then row-major entries."""
        body = ",".join(self.tag.encode(x) for x in self.entries)
        return f"{self.tag}|{self.rows}x{self.cols}|{body}".encode("ascii")

    def to_json(self) -> List[List[str]]:
        return [[self.tag.encode(x) for x in self.row(i)] for i in range(self.rows)]

    def __matmul__(self, other):
        if isinstance(other, Vector):
            return apply(self, other)
        return mat_mul(self, other)

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(self.tag.encode(x) for x in self.row(i)) + "]"
                               for i in range(self.rows)) + "]"


@dataclass(frozen=True)
class Vector:
    tag: FieldTag
    entries: Tuple[RawValue, ...]

    @classmethod
    def of(cls, tag: FieldTag, values: Iterable) -> "Vector":
        return cls(tag, tuple(tag.coerce(x) for x in values))

    @classmethod
    def zeros(cls, tag: FieldTag, dim: int) -> "Vector":
        return cls(tag, (tag.zero(),) * dim)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def to_json(self) -> List[str]:
        return [self.tag.encode(x) for x in self.entries]


def _same_tag(*items):
    tags = {item.tag for item in items}
    if len(tags) > 1:
        raise MixedFieldError(f"operands over different fields: {sorted(map(str, tags))}")


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    _same_tag(x, y)
    if x.cols != y.rows:
        raise ShapeError(f"cannot multiply {x.rows}x{x.cols} by {y.rows}x{y.cols}")
    tag = x.tag
    columns = [y.column(j) for j in range(y.cols)]
    entries = tuple(tag.dot(x.row(i), c) for i in range(x.rows) for c in columns)
    return Matrix(tag, x.rows, y.cols, entries)


def mat_product(matrices: Sequence[Matrix]) -> Matrix:
    """Left-to-right product M_1 M_2 ... M_n. Empty input is not allowed, there is no size to pick."""
    if not matrices:
        raise ShapeError("empty product has no dimension")
    result = matrices[0]
    for m in matrices[1:]:
        result = mat_mul(result, m)
    return result


def apply(m: Matrix, x: Vector) -> Vector:
    _same_tag(m, x)
    if m.cols != x.dim:
        raise ShapeError(f"cannot apply {m.rows}x{m.cols} matrix to a vector of dimension {x.dim}")
    return Vector(m.tag, tuple(m.tag.dot(m.row(i), x.entries) for i in range(m.rows)))


def is_zero(m: Matrix) -> bool:
    return all(x == 0 for x in m.entries)


def is_identity(m: Matrix) -> bool:
    if not m.is_square:
        return False
    n = m.rows
    return all(m.entries[i * n + j] == (1 if i == j else 0) for i in range(n) for j in range(n))


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    if not blocks:
        # no tag to inherit, an empty matrix over Q is the neutral choice
        return Matrix(FieldTag.rational(), 0, 0, ())
    _same_tag(*blocks)
    if any(not b.is_square for b in blocks):
        raise ShapeError("block_diag takes square blocks")
    tag = blocks[0].tag
    n = sum(b.rows for b in blocks)
    entries = [tag.zero()] * (n * n)
    offset = 0
    for b in blocks:
        for i in range(b.rows):
            row_start = (offset + i) * n + offset
            entries[row_start:row_start + b.cols] = b.row(i)
        offset += b.rows
    return Matrix(tag, n, n, tuple(entries))


def pad(m: Matrix, rows: int, cols: int) -> Matrix:
    """Zero-pads m on the bottom and right up to rows x cols."""
    if rows < m.rows or cols < m.cols:
        raise ShapeError(f"cannot pad {m.rows}x{m.cols} down to {rows}x{cols}")
    zero = m.tag.zero()
    entries = []
    for i in range(rows):
        row = list(m.row(i)) if i < m.rows else []
        entries.extend(row + [zero] * (cols - len(row)))
    return Matrix(m.tag, rows, cols, tuple(entries))


def first_column(tag: FieldTag, x: Vector) -> Matrix:
    """The square matrix holding x in its first column and zeros elsewhere."""
    n = x.dim
    zero = tag.zero()
    return Matrix(tag, n, n, tuple(x.entries[i] if j == 0 else zero for i in range(n) for j in range(n)))
