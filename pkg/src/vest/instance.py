# src/vest/instance.py
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from src.arith.field import FieldTag
from src.errors import MixedFieldError, ShapeError, VariantError
from src.linalg.matrix import Matrix, Vector, apply, is_identity, is_zero, mat_mul


class TargetVariant(Enum):
    VECTOR_ZERO = "vector_zero"
    MATRIX_ZERO = "matrix_zero"
    MATRIX_IDENTITY = "matrix_identity"


@dataclass(frozen=True)
class VestInstance:
    """Transforms T_1..T_m, optional S and v, and what the product has to hit.

    A sequence (i_1, ..., i_k) is counted when S T_{i_k} ... T_{i_1} v = 0 (VECTOR_ZERO), or when
    T_{i_k} ... T_{i_1} is the zero / identity matrix. A missing S means S = I.
    """
    tag: FieldTag
    d: int
    transforms: Tuple[Matrix, ...]
    s: Optional[Matrix] = None
    v: Optional[Vector] = None
    target: TargetVariant = TargetVariant.VECTOR_ZERO

    def __post_init__(self):
        object.__setattr__(self, "transforms", tuple(self.transforms))
        for t in self.transforms:
            if t.tag != self.tag:
                raise MixedFieldError(f"transform over {t.tag} in an instance over {self.tag}")
            if (t.rows, t.cols) != (self.d, self.d):
                raise ShapeError(f"transform is {t.rows}x{t.cols}, expected {self.d}x{self.d}")
        if self.target is TargetVariant.VECTOR_ZERO:
            if self.v is None:
                raise VariantError("vector_zero needs v")
            if self.v.tag != self.tag:
                raise MixedFieldError("v lives over another field")
            if self.v.dim != self.d:
                raise ShapeError(f"v has dimension {self.v.dim}, expected {self.d}")
            if self.s is not None:
                if self.s.tag != self.tag:
                    raise MixedFieldError("S lives over another field")
                if self.s.cols != self.d:
                    raise ShapeError(f"S has {self.s.cols} columns, expected {self.d}")
        elif self.s is not None or self.v is not None:
            raise VariantError(f"{self.target.value} takes neither S nor v")

    @property
    def m(self) -> int:
        return len(self.transforms)

    @property
    def effective_s(self) -> Matrix:
        return self.s if self.s is not None else Matrix.identity(self.tag, self.d)

    def accepts_vector(self, x: Vector) -> bool:
        """x is the already transformed vector T_{i_k} ... T_{i_1} v."""
        if self.s is None:
            return x.is_zero()
        return apply(self.s, x).is_zero()

    def accepts(self, product: Matrix) -> bool:
        if self.target is TargetVariant.VECTOR_ZERO:
            return self.accepts_vector(apply(product, self.v))
        if self.target is TargetVariant.MATRIX_ZERO:
            return is_zero(product)
        return is_identity(product)

    def empty_product_accepted(self) -> bool:
        """M_0 convention: the empty product is the identity."""
        return self.accepts(Matrix.identity(self.tag, self.d))

    def with_transforms(self, transforms) -> "VestInstance":
        return VestInstance(self.tag, self.d, tuple(transforms), self.s, self.v, self.target)

    def sequence_product(self, sequence) -> Matrix:
        """T_{i_k} ... T_{i_1} for a 0-based index sequence (i_1, ..., i_k)."""
        result = Matrix.identity(self.tag, self.d)
        for i in sequence:
            result = mat_mul(self.transforms[i], result)
        return result

    def describe(self) -> str:
        s_shape = "I" if self.s is None else f"{self.s.rows}x{self.s.cols}"
        return f"{self.target.value} instance over {self.tag}: d={self.d}, m={self.m}, S={s_shape}"
