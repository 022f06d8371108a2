# src/arith/scalar.py
from dataclasses import dataclass
from typing import List

from src.arith.field import FieldTag, RawValue
from src.errors import MixedFieldError


@dataclass(frozen=True)
class Scalar:
    tag: FieldTag
    value: RawValue

    def __post_init__(self):
        # canonical at construction: reduced fraction with positive denominator, or residue in [0, p)
        object.__setattr__(self, "value", self.tag.coerce(self.value))

    @classmethod
    def of(cls, tag: FieldTag, x) -> "Scalar":
        return cls(tag, x)

    def _check(self, other: "Scalar"):
        if not isinstance(other, Scalar):
            raise TypeError(f"expected a Scalar, got {type(other).__name__}")
        if other.tag != self.tag:
            raise MixedFieldError(f"cannot combine {self.tag} with {other.tag}")

    def __add__(self, other):
        return scalar_add(self, other)

    def __sub__(self, other):
        return scalar_add(self, scalar_neg(other))

    def __mul__(self, other):
        return scalar_mul(self, other)

    def __truediv__(self, other):
        return scalar_mul(self, scalar_inv(other))

    def __neg__(self):
        return scalar_neg(self)

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self):
        return self.tag.encode(self.value)


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    a._check(b)
    return Scalar(a.tag, a.tag.add(a.value, b.value))


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    a._check(b)
    return Scalar(a.tag, a.tag.mul(a.value, b.value))


def scalar_neg(a: Scalar) -> Scalar:
    return Scalar(a.tag, a.tag.neg(a.value))


def scalar_inv(a: Scalar) -> Scalar:
    return Scalar(a.tag, a.tag.inv(a.value))


def enumerate_field(tag: FieldTag) -> List[Scalar]:
    """All p elements of Z_p in the order 0, 1, ..., p-1."""
    return [Scalar(tag, x) for x in tag.elements()]
