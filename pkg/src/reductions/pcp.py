# src/reductions/pcp.py
import dataclasses
import itertools
import logging
import random
from typing import List, Sequence, Tuple

from src.arith.field import FieldTag
from src.linalg.matrix import Matrix, Vector, apply, block_diag
from src.oracles import pcp_bounded_search
from src.problems import PcpInstance, parse_pcp, read_json
from src.reductions.interface import Generated, Reduction, ReductionCertificate, TrialResult
from src.reductions.words import binary_value, word_matrix
from src.vest.bruteforce import decide
from src.vest.codec import instance_to_json
from src.vest.instance import TargetVariant, VestInstance

logger = logging.getLogger(__name__)

Q = FieldTag.rational()
START = (0, 1, 0, 1)
SELECT = (1, 0, -1, 0)
SHORT_WORDS = ("0", "1", "00", "01", "10", "11")


def pcp_to_vest(pcp: PcpInstance) -> Tuple[VestInstance, ReductionCertificate]:
    """T_(v,w) = T_v (+) T_w, v = (0,1,0,1), S = (1,0,-1,0).

    S T_(v_{i_k}, w_{i_k}) ... T_(v_{i_1}, w_{i_1}) v = (v_{i_1}...v_{i_k})_2 - (w_{i_1}...w_{i_k})_2.
    """
    if not pcp.pairs:
        raise ValueError("PCP instance has no pairs")
    transforms = tuple(block_diag([word_matrix(top, Q), word_matrix(bottom, Q)]) for top, bottom in pcp.pairs)
    inst = VestInstance(Q, 4, transforms, Matrix.from_rows(Q, [list(SELECT)]), Vector.of(Q, START),
                        TargetVariant.VECTOR_ZERO)
    cert = ReductionCertificate(
        "pcp", "binary PCP to VEST", pcp.describe(), 0, 0,
        "a PCP solution of length k gives M_k > 0",
        notes=("S T...T v compares binary values, so concatenations that differ only by leading zeros "
               "(for example ('0', '00')) are accepted too; M_k > 0 does not imply a solution",))
    return inst, cert


def concatenations(pcp: PcpInstance, sequence: Sequence[int]) -> Tuple[str, str]:
    """Top and bottom strings for a 0-based index sequence."""
    return "".join(pcp.pairs[i][0] for i in sequence), "".join(pcp.pairs[i][1] for i in sequence)


def string_value(pcp: PcpInstance, sequence: Sequence[int]) -> int:
    top, bottom = concatenations(pcp, sequence)
    return binary_value(top) - binary_value(bottom)


def matrix_value(inst: VestInstance, sequence: Sequence[int]):
    x = apply(inst.sequence_product(sequence), inst.v)
    return apply(inst.s, x).entries[0]


def random_pcp(rng: random.Random, pairs: int, max_len: int = 3) -> PcpInstance:
    def word():
        return "".join(rng.choice("01") for _ in range(rng.randint(1, max_len)))
    return PcpInstance.of([(word(), word()) for _ in range(pairs)])


class PcpReduction(Reduction):
    """Here k is the search bound: every sequence up to length k is evaluated both ways."""
    NAME = "pcp"

    def load_source(self, path: str) -> PcpInstance:
        return parse_pcp(read_json(path))

    def generate(self, source: PcpInstance, k: int, **options) -> Generated:
        inst, cert = pcp_to_vest(source)
        cert = dataclasses.replace(cert, k=k, k_prime=k)
        return Generated(inst, instance_to_json(inst, k), cert)

    def small_sources(self, max_size: int):
        pairs = list(itertools.product(SHORT_WORDS, repeat=2))
        bound = min(max_size, 3)
        for size in range(1, min(max_size, 2) + 1):
            for chosen in itertools.combinations(pairs, size):
                yield PcpInstance.of(chosen), bound

    def random_source(self, rng: random.Random, max_size: int):
        return random_pcp(rng, rng.randint(1, 3)), rng.randint(1, min(max_size, 3))

    def check(self, source: PcpInstance, k: int) -> TrialResult:
        inst, _ = pcp_to_vest(source)
        sequences: List[Tuple[int, ...]] = [seq for length in range(1, k + 1)
                                            for seq in itertools.product(range(len(source.pairs)), repeat=length)]
        by_strings = [string_value(source, seq) for seq in sequences]
        by_matrices = [int(matrix_value(inst, seq)) for seq in sequences]
        witness = pcp_bounded_search(source, k)
        witness_accepted = witness is None or decide(inst, len(witness))
        return TrialResult(self.NAME, self.describe_source(source), k, (by_strings, True),
                           (by_matrices, witness_accepted), details={"witness": witness})
