# src/arith/field.py
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from src.errors import DivisionByZero, InfiniteFieldError, MalformedInputError, NotPrimeError

RATIONAL = "rational"
PRIME = "prime"

RawValue = Union[Fraction, int]


def is_prime(n: int) -> bool:
    """Deterministic trial division, fine for the moduli used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class FieldTag:
    """Q or Z_p. Matrices keep raw values (Fraction / int residue) and do their
    arithmetic through the tag, Scalar wraps a raw value together with its tag."""
    kind: str
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == RATIONAL:
            if self.p is not None:
                raise MalformedInputError("the rational field takes no modulus")
        elif self.kind == PRIME:
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise NotPrimeError(f"Z_p needs a prime modulus, got {self.p!r}")
        else:
            raise MalformedInputError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> "FieldTag":
        return cls(RATIONAL)

    @classmethod
    def prime(cls, p: int) -> "FieldTag":
        return cls(PRIME, p)

    @property
    def is_finite(self) -> bool:
        return self.kind == PRIME

    @property
    def size(self) -> int:
        if not self.is_finite:
            raise InfiniteFieldError("Q has no finite size")
        return self.p

    def __str__(self):
        return "Q" if self.kind == RATIONAL else f"Z_{self.p}"

    # --- raw arithmetic, canonical in and out ---

    def coerce(self, x) -> RawValue:
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, str):
            x = parse_number(x)
        if self.kind == RATIONAL:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise MalformedInputError(f"cannot read {x!r} as a rational")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise DivisionByZero(f"{x} has no value mod {self.p}")
            return (x.numerator * pow(den, -1, self.p)) % self.p
        raise MalformedInputError(f"cannot read {x!r} as an element of {self}")

    def zero(self) -> RawValue:
        return Fraction(0) if self.kind == RATIONAL else 0

    def one(self) -> RawValue:
        return Fraction(1) if self.kind == RATIONAL else 1

    def add(self, a: RawValue, b: RawValue) -> RawValue:
        return a + b if self.kind == RATIONAL else (a + b) % self.p

    def mul(self, a: RawValue, b: RawValue) -> RawValue:
        return a * b if self.kind == RATIONAL else (a * b) % self.p

    def neg(self, a: RawValue) -> RawValue:
        return -a if self.kind == RATIONAL else (-a) % self.p

    def inv(self, a: RawValue) -> RawValue:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self}")
        return 1 / a if self.kind == RATIONAL else pow(a, -1, self.p)

    def dot(self, xs, ys) -> RawValue:
        # gadget matrices are mostly zeros
        total = sum((x * y for x, y in zip(xs, ys) if x and y), self.zero())
        return total if self.kind == RATIONAL else total % self.p

    def encode(self, a: RawValue) -> str:
        if self.kind == RATIONAL:
            return f"{a.numerator}/{a.denominator}"
        return str(a)

    def elements(self) -> List[RawValue]:
        if not self.is_finite:
            raise InfiniteFieldError("Q cannot be enumerated")
        return list(range(self.p))

    def to_json(self) -> dict:
        return {"kind": RATIONAL} if self.kind == RATIONAL else {"kind": PRIME, "p": self.p}

    @classmethod
    def from_json(cls, data) -> "FieldTag":
        if not isinstance(data, dict) or "kind" not in data:
            raise MalformedInputError(f"bad field descriptor: {data!r}")
        if data["kind"] == RATIONAL:
            return cls.rational()
        if data["kind"] == PRIME:
            return cls.prime(data.get("p"))
        raise MalformedInputError(f"unknown field kind {data['kind']!r}")


def parse_number(text: str) -> Fraction:
    """Reads "a/b" or the integer shorthand "a"."""
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            if int(den) == 0:
                raise DivisionByZero(f"zero denominator in {text!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except ValueError:
        raise MalformedInputError(f"not an exact number: {text!r}") from None
