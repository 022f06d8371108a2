# src/reductions/sum_gadgets.py
import itertools
import random
from typing import List, Sequence, Tuple

from src.arith.field import FieldTag
from src.errors import MalformedInputError
from src.linalg.matrix import Matrix, Vector
from src.oracles import ZERO, at_most_k_sum_target1_exists, matrix_product_target_exists
from src.problems import parse_numbers, read_json
from src.reductions.gadgets import u_matrix, x_matrix
from src.reductions.interface import Generated, Reduction, ReductionCertificate, TrialResult
from src.vest.bruteforce import decide
from src.vest.codec import instance_to_json
from src.vest.instance import TargetVariant, VestInstance

Q = FieldTag.rational()
SMALL_RANGE = range(-4, 5)


def _integers(numbers: Sequence) -> List[int]:
    out = []
    for x in numbers:
        if int(x) != x:
            raise MalformedInputError(f"{x} is not an integer")
        if int(x) not in out:
            out.append(int(x))
    return out


def _source(numbers: Sequence[int]) -> dict:
    return {"kind": "integers", "numbers": list(numbers)}


def sum_to_zero_matrix_product(numbers: Sequence[int], k: int) -> Tuple[List[Matrix], int, ReductionCertificate]:
    """{U_a : a in A} plus X; X (U_{a_1} ... U_{a_l}) X = X U_1 X = 0 exactly when the a_i sum to 1."""
    if k < 1:
        raise ValueError("k must be at least 1")
    numbers = _integers(numbers)
    mats = [u_matrix(a) for a in numbers] + [x_matrix()]
    cert = ReductionCertificate("zero-matrix-product", "at-most-k-sum to matrix k-product resulting in zero",
                                _source(numbers), k, k + 2,
                                "at most k picks sum to 1 iff some k+2 matrices multiply to the 2x2 zero matrix")
    return mats, k + 2, cert


def sum_to_vest_identity_s(numbers: Sequence[int], k: int) -> Tuple[VestInstance, int, ReductionCertificate]:
    """Same U_a and X with v = (0, 1)^T and S = I; X v = v, X U_1 v = 0."""
    if k < 1:
        raise ValueError("k must be at least 1")
    numbers = _integers(numbers)
    transforms = tuple(u_matrix(a) for a in numbers) + (x_matrix(),)
    inst = VestInstance(Q, 2, transforms, Matrix.identity(Q, 2), Vector.of(Q, [0, 1]), TargetVariant.VECTOR_ZERO)
    cert = ReductionCertificate("vest-identity-s", "at-most-k-sum to 2x2 VEST with S = I",
                                _source(numbers), k, k + 1,
                                "at most k picks sum to 1 iff M_{k+1} > 0")
    return inst, k + 1, cert


class _IntegerSetSource(Reduction):
    def load_source(self, path: str) -> List[int]:
        return _integers(parse_numbers(read_json(path)))

    def describe_source(self, source) -> str:
        return str(sorted(source))

    def small_sources(self, max_size: int):
        for size in range(0, min(max_size, 4) + 1):
            for numbers in itertools.combinations(SMALL_RANGE, size):
                for k in range(1, min(max_size, 3) + 1):
                    yield list(numbers), k

    def random_source(self, rng: random.Random, max_size: int):
        size = rng.randint(1, 4)
        return rng.sample(list(SMALL_RANGE), size), rng.randint(1, 3)


class ZeroMatrixProductReduction(_IntegerSetSource):
    NAME = "zero-matrix-product"

    def generate(self, source, k: int, **options) -> Generated:
        mats, k_prime, cert = sum_to_zero_matrix_product(source, k)
        inst = VestInstance(Q, 2, tuple(mats), target=TargetVariant.MATRIX_ZERO)
        return Generated(mats, instance_to_json(inst, k_prime), cert)

    def check(self, source, k: int) -> TrialResult:
        mats, k_prime, _ = sum_to_zero_matrix_product(source, k)
        expected = at_most_k_sum_target1_exists(source, k)
        by_solver = decide(VestInstance(Q, 2, tuple(mats), target=TargetVariant.MATRIX_ZERO), k_prime)
        by_oracle = matrix_product_target_exists(mats, k_prime, ZERO)
        return TrialResult(self.NAME, self.describe_source(source), k, (expected, expected), (by_solver, by_oracle))


class VestIdentitySReduction(_IntegerSetSource):
    NAME = "vest-identity-s"

    def generate(self, source, k: int, **options) -> Generated:
        inst, k_prime, cert = sum_to_vest_identity_s(source, k)
        return Generated(inst, instance_to_json(inst, k_prime), cert)

    def check(self, source, k: int) -> TrialResult:
        inst, k_prime, _ = sum_to_vest_identity_s(source, k)
        expected = at_most_k_sum_target1_exists(source, k)
        return TrialResult(self.NAME, self.describe_source(source), k, expected, decide(inst, k_prime))
