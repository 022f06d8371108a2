import itertools
import random

import pytest

from src.arith.field import FieldTag
from src.linalg.matrix import Matrix, Vector
from src.vest.instance import TargetVariant, VestInstance

Z2 = FieldTag.prime(2)
Z3 = FieldTag.prime(3)


def scalar_instance(tag: FieldTag, values, s=1, v=1) -> VestInstance:
    """d = 1 vector_zero instance with 1x1 transforms."""
    return VestInstance(tag, 1, tuple(Matrix.from_rows(tag, [[x]]) for x in values),
                        Matrix.from_rows(tag, [[s]]), Vector.of(tag, [v]), TargetVariant.VECTOR_ZERO)


def random_instance(rng: random.Random, tag: FieldTag, d: int, m: int, h: int = None,
                    zero_below: int = None) -> VestInstance:
    """Random vector_zero instance; rows at index >= zero_below are zero in every transform."""
    q = tag.p
    h = d if h is None else h
    limit = d if zero_below is None else zero_below

    def transform():
        return Matrix.from_rows(tag, [[rng.randrange(q) if i < limit else 0 for _ in range(d)] for i in range(d)])

    s = Matrix.from_rows(tag, [[rng.randrange(q) for _ in range(d)] for _ in range(h)])
    v = Vector.of(tag, [rng.randrange(q) for _ in range(d)])
    return VestInstance(tag, d, tuple(transform() for _ in range(m)), s, v, TargetVariant.VECTOR_ZERO)


def all_z2_instances(d: int, m: int):
    """Every Z_2 vector_zero instance of the given size up to transform order, with S = I or the all-ones row."""
    cells = [list(c) for c in itertools.product((0, 1), repeat=d * d)]
    shapes = [Matrix.identity(Z2, d), Matrix.from_rows(Z2, [[1] * d])]
    for chosen in itertools.combinations_with_replacement(range(len(cells)), m):
        transforms = tuple(Matrix.from_rows(Z2, [cells[c][i * d:(i + 1) * d] for i in range(d)]) for c in chosen)
        for s in shapes:
            for v in itertools.product((0, 1), repeat=d):
                if any(v):
                    yield VestInstance(Z2, d, transforms, s, Vector.of(Z2, v))


@pytest.fixture
def rng():
    return random.Random(20240101)
