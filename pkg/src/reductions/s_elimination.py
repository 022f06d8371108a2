# src/reductions/s_elimination.py
import itertools
import logging
import random
from typing import Iterator, Tuple

from src.arith.field import FieldTag
from src.errors import FieldError, VariantError
from src.linalg.matrix import Matrix, Vector, block_diag, pad
from src.reductions.interface import Generated, Reduction, ReductionCertificate, TrialResult
from src.vest.bruteforce import decide
from src.vest.codec import instance_to_json, load_instance
from src.vest.instance import TargetVariant, VestInstance

logger = logging.getLogger(__name__)

Q = FieldTag.rational()
COUNTER_BLOCK = [[1, -1], [0, 1]]
# S' scales the counter coordinate by 10 and clears the constant one
SELECT_BLOCK = [[10, 0], [0, 0]]

SMALL_2X2 = ([[0, 1], [0, 0]], [[1, 0], [0, 0]], [[1, 0], [0, 1]], [[0, 1], [1, 0]])


def require_s_and_v(inst: VestInstance):
    if inst.target is not TargetVariant.VECTOR_ZERO or inst.s is None or inst.v is None:
        raise VariantError(f"expected a vector_zero instance with explicit S and v, got {inst.describe()}")


def check_counter_field(tag: FieldTag, k: int):
    """The counter block needs 10 (k - j) != 0 for 0 <= j < k."""
    if tag.is_finite and (tag.p <= k or tag.p in (2, 5)):
        raise FieldError(f"S elimination with k={k} is not sound over {tag}: needs p > k and p not in (2, 5)")


def square_up(inst: VestInstance) -> VestInstance:
    """Zero-pads so that S is square: extra zero rows of S when h < d, otherwise grows T_i, v and S's columns."""
    require_s_and_v(inst)
    h, d = inst.s.rows, inst.d
    if h <= d:
        return VestInstance(inst.tag, d, inst.transforms, pad(inst.s, d, d), inst.v, inst.target)
    zero = inst.tag.zero()
    v = Vector(inst.tag, inst.v.entries + (zero,) * (h - d))
    return VestInstance(inst.tag, h, tuple(pad(t, h, h) for t in inst.transforms), pad(inst.s, h, h), v,
                        inst.target)


def eliminate_s(inst: VestInstance, k: int) -> Tuple[VestInstance, int, ReductionCertificate]:
    """VEST with S to VEST with S = I; S' joins the transforms and a counter forces it to come last.

    v' = (v, k, 1), T'_i = T_i (+) [[1, -1], [0, 1]], S' = S (+) [[10, 0], [0, 0]].
    """
    require_s_and_v(inst)
    if k < 1:
        raise ValueError("k must be at least 1")
    tag = inst.tag
    check_counter_field(tag, k)
    squared = square_up(inst)
    counter, select = Matrix.from_rows(tag, COUNTER_BLOCK), Matrix.from_rows(tag, SELECT_BLOCK)
    transforms = tuple(block_diag([t, counter]) for t in squared.transforms)
    s_prime = block_diag([squared.s, select])
    v_prime = Vector.of(tag, list(squared.v.entries) + [k, 1])
    d = squared.d + 2
    out = VestInstance(tag, d, transforms + (s_prime,), Matrix.identity(tag, d), v_prime, TargetVariant.VECTOR_ZERO)
    logger.debug(f"Eliminated S: {inst.describe()} -> {out.describe()}")
    cert = ReductionCertificate("eliminate-s", "VEST with S to VEST with S = I", instance_to_json(inst, k),
                                k, k + 1, "M_k(source) > 0 iff M_{k+1}(output) > 0",
                                notes=("the last transform of the output is S'",))
    return out, k + 1, cert


def small_vest_instances(max_size: int) -> Iterator[VestInstance]:
    """Deterministic family of small vector_zero instances over Q, d <= 2, with S wider, square and taller than d."""
    scalars = (-1, 0, 1, 2)
    for size in range(1, min(max_size, 2) + 1):
        for values in itertools.combinations_with_replacement(scalars, size):
            transforms = tuple(Matrix.from_rows(Q, [[x]]) for x in values)
            yield VestInstance(Q, 1, transforms, Matrix.from_rows(Q, [[1]]), Vector.of(Q, [1]))
            yield VestInstance(Q, 1, transforms, Matrix.from_rows(Q, [[1], [2]]), Vector.of(Q, [1]))
    for size in range(1, min(max_size, 2) + 1):
        for chosen in itertools.combinations_with_replacement(SMALL_2X2, size):
            transforms = tuple(Matrix.from_rows(Q, rows) for rows in chosen)
            yield VestInstance(Q, 2, transforms, Matrix.from_rows(Q, [[1, 0]]), Vector.of(Q, [0, 1]))


def random_vest_instance(rng: random.Random, tag: FieldTag = Q) -> VestInstance:
    d, m, h = rng.randint(1, 2), rng.randint(1, 2), rng.randint(1, 3)

    def entries(rows, cols):
        return [[rng.randint(-2, 2) for _ in range(cols)] for _ in range(rows)]

    transforms = tuple(Matrix.from_rows(tag, entries(d, d)) for _ in range(m))
    v = [rng.randint(-2, 2) for _ in range(d)]
    if all(x == 0 for x in v):
        v[0] = 1
    return VestInstance(tag, d, transforms, Matrix.from_rows(tag, entries(h, d)), Vector.of(tag, v))


class _VestSource(Reduction):
    def load_source(self, path: str) -> VestInstance:
        inst, _ = load_instance(path)
        require_s_and_v(inst)
        return inst

    def describe_source(self, source: VestInstance) -> str:
        return f"{source.describe()} T={[t.to_json() for t in source.transforms]}"


class EliminateSReduction(_VestSource):
    NAME = "eliminate-s"

    def generate(self, source: VestInstance, k: int, **options) -> Generated:
        out, k_prime, cert = eliminate_s(source, k)
        return Generated(out, instance_to_json(out, k_prime), cert)

    def small_sources(self, max_size: int):
        for inst in small_vest_instances(max_size):
            for k in range(1, min(max_size, 3) + 1):
                yield inst, k

    def random_source(self, rng: random.Random, max_size: int):
        tag = rng.choice([Q, FieldTag.prime(7)])
        return random_vest_instance(rng, tag), rng.randint(1, min(max_size, 3))

    def check(self, source: VestInstance, k: int) -> TrialResult:
        out, k_prime, _ = eliminate_s(source, k)
        return TrialResult(self.NAME, self.describe_source(source), k, decide(source, k), decide(out, k_prime))
