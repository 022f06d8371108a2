# src/reductions/zero_product.py
import itertools
import logging
import random
from typing import List, Sequence, Tuple

from src.arith.field import FieldTag
from src.errors import FieldError, ShapeError, VariantError
from src.linalg.matrix import Matrix, Vector, block_diag, first_column
from src.oracles import ZERO, matrix_product_target_exists
from src.reductions.gadgets import ab_gadget, u_matrix, x_matrix
from src.reductions.interface import Generated, Reduction, ReductionCertificate, TrialResult
from src.reductions.s_elimination import (SMALL_2X2, _VestSource, eliminate_s, random_vest_instance,
                                          small_vest_instances)
from src.vest.bruteforce import decide
from src.vest.codec import instance_to_json, load_instance
from src.vest.instance import TargetVariant, VestInstance

logger = logging.getLogger(__name__)

Q = FieldTag.rational()


def _zero_product_payload(mats: Sequence[Matrix], k: int) -> dict:
    inst = VestInstance(mats[0].tag, mats[0].rows, tuple(mats), target=TargetVariant.MATRIX_ZERO)
    return instance_to_json(inst, k)


def zero_product_to_vest(mats: Sequence[Matrix], k: int) -> Tuple[VestInstance, ReductionCertificate]:
    """Each T_i becomes d diagonal copies of itself, v stacks e_1..e_d and S = I.

    S T'_{i_k} ... T'_{i_1} v then stacks the columns of T_{i_k} ... T_{i_1}.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not mats:
        raise ShapeError("need at least one matrix")
    tag, d = mats[0].tag, mats[0].rows
    for t in mats:
        if (t.rows, t.cols) != (d, d) or t.tag != tag:
            raise ShapeError("matrices must share one square shape and one field")
    transforms = tuple(block_diag([t] * d) for t in mats)
    stacked = [1 if i == j else 0 for j in range(d) for i in range(d)]
    out = VestInstance(tag, d * d, transforms, Matrix.identity(tag, d * d), Vector.of(tag, stacked),
                       TargetVariant.VECTOR_ZERO)
    cert = ReductionCertificate("zero-product-to-vest", "matrix k-product resulting in zero to VEST",
                                _zero_product_payload(mats, k), k, k,
                                "some k matrices multiply to zero iff M_k(output) > 0",
                                notes=("T'_i is block diagonal with d copies of T_i",))
    return out, cert


def vest_to_zero_product(inst: VestInstance, k: int) -> Tuple[List[Matrix], int, ReductionCertificate]:
    """VEST to zero matrix product with k+3 factors, through S elimination.

    Returned order is [T''_1, ..., T''_m, S'', T'_v, H]; a zero product reads H S'' T''...T'' T'_v.
    """
    if inst.tag.is_finite:
        raise FieldError(f"the U_x counting blocks need characteristic 0, got {inst.tag}")
    eliminated, _, _ = eliminate_s(inst, k)
    n = eliminated.d
    ts, s_prime = eliminated.transforms[:-1], eliminated.transforms[-1]
    a, b = ab_gadget(Q)
    i3, x = Matrix.identity(Q, 3), x_matrix(Q)
    step = u_matrix(-2, Q)
    out = [block_diag([t, i3, step]) for t in ts]
    out.append(block_diag([s_prime, i3, u_matrix(2 * k + 1, Q)]))
    out.append(block_diag([first_column(Q, eliminated.v), b, x]))
    out.append(block_diag([Matrix.identity(Q, n), a, x]))
    logger.debug(f"VEST to zero product: {len(out)} matrices of size {out[0].rows}.")
    cert = ReductionCertificate("vest-to-zero-product", "VEST to matrix k-product resulting in zero",
                                instance_to_json(inst, k), k, k + 3,
                                "M_k(source) > 0 iff some k+3 output matrices multiply to zero",
                                notes=("order: T''_1..T''_m, S'', T'_v, H",))
    return out, k + 3, cert


def small_matrix_lists(max_size: int):
    for size in range(1, min(max_size, 2) + 1):
        for values in itertools.combinations_with_replacement((-1, 0, 1, 2), size):
            yield [Matrix.from_rows(Q, [[x]]) for x in values]
        for chosen in itertools.combinations_with_replacement(SMALL_2X2 + ([[1, 1], [0, 1]],), size):
            yield [Matrix.from_rows(Q, rows) for rows in chosen]


class ZeroProductToVestReduction(Reduction):
    NAME = "zero-product-to-vest"

    def load_source(self, path: str) -> List[Matrix]:
        inst, _ = load_instance(path)
        if inst.target is not TargetVariant.MATRIX_ZERO:
            raise VariantError(f"expected a matrix_zero instance, got {inst.target.value}")
        return list(inst.transforms)

    def describe_source(self, source: List[Matrix]) -> str:
        return str([t.to_json() for t in source])

    def generate(self, source: List[Matrix], k: int, **options) -> Generated:
        out, cert = zero_product_to_vest(source, k)
        return Generated(out, instance_to_json(out, k), cert)

    def small_sources(self, max_size: int):
        for mats in small_matrix_lists(max_size):
            for k in range(1, min(max_size, 3) + 1):
                yield mats, k

    def random_source(self, rng: random.Random, max_size: int):
        d = rng.randint(1, 2)
        mats = [Matrix.from_rows(Q, [[rng.randint(-1, 1) for _ in range(d)] for _ in range(d)])
                for _ in range(rng.randint(1, 3))]
        return mats, rng.randint(1, min(max_size, 3))

    def check(self, source: List[Matrix], k: int) -> TrialResult:
        out, _ = zero_product_to_vest(source, k)
        return TrialResult(self.NAME, self.describe_source(source), k,
                           matrix_product_target_exists(source, k, ZERO), decide(out, k))


class VestToZeroProductReduction(_VestSource):
    NAME = "vest-to-zero-product"

    def generate(self, source: VestInstance, k: int, **options) -> Generated:
        mats, k_prime, cert = vest_to_zero_product(source, k)
        return Generated(mats, _zero_product_payload(mats, k_prime), cert)

    def small_sources(self, max_size: int):
        for inst in small_vest_instances(max_size):
            for k in range(1, min(max_size, 2) + 1):
                yield inst, k

    def random_source(self, rng: random.Random, max_size: int):
        inst = random_vest_instance(rng)
        return inst.with_transforms(inst.transforms[:1]), rng.randint(1, min(max_size, 2))

    def check(self, source: VestInstance, k: int) -> TrialResult:
        mats, k_prime, _ = vest_to_zero_product(source, k)
        return TrialResult(self.NAME, self.describe_source(source), k,
                           decide(source, k), matrix_product_target_exists(mats, k_prime, ZERO))
