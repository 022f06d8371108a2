# src/reductions/exact_cover.py
import itertools
import logging
import random
from fractions import Fraction
from math import prod
from typing import Iterator, List, Tuple

from src.arith.field import FieldTag
from src.arith.scalar import Scalar
from src.linalg.matrix import Matrix
from src.oracles import at_most_k_sum_target1_exists, exact_cover_exists, k_product_target1_exists
from src.problems import SetSystem, parse_set_system, read_json
from src.reductions.interface import Generated, Reduction, ReductionCertificate, TrialResult
from src.reductions.primes import sieve_primes
from src.vest.bruteforce import decide
from src.vest.codec import instance_to_json
from src.vest.instance import TargetVariant, VestInstance

logger = logging.getLogger(__name__)

Q = FieldTag.rational()


def _dedup(values):
    seen, out = set(), []
    for x in values:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out


def exact_cover_to_k_product(sys: SetSystem, k: int) -> Tuple[List[Scalar], int, ReductionCertificate]:
    """Element u gets the u-th prime p_u, p is the next prime; i_C = p * prod(p_c), s = 1 / (p^k * prod(p_u))."""
    if k < 1:
        raise ValueError("k must be at least 1")
    primes = sieve_primes(sys.universe + 1)
    element_prime = {u: primes[u - 1] for u in range(1, sys.universe + 1)}
    p = primes[sys.universe]
    numbers = [Fraction(p * prod(element_prime[c] for c in sorted(cset))) for cset in sys.sets]
    s = Fraction(1, p ** k * prod(element_prime.values()))
    values = [Scalar(Q, x) for x in _dedup(numbers + [s])]
    logger.debug(f"k-product gadget: element primes {element_prime}, p = {p}, s = {s}.")
    cert = ReductionCertificate("k-product", "exact cover to k-product with repetitions and target 1",
                                sys.describe(), k, k + 1,
                                "exact cover by k sets exists iff some k+1 numbers (with repetition) multiply to 1")
    return values, k + 1, cert


def k_product_to_identity_instance(values: List[Scalar]) -> VestInstance:
    """The 1x1 matrix-product-to-identity instance, which is the k-product problem verbatim."""
    return VestInstance(Q, 1, tuple(Matrix.from_rows(Q, [[x.value]]) for x in values),
                        target=TargetVariant.MATRIX_IDENTITY)


def exact_cover_to_at_most_k_sum(sys: SetSystem, k: int) -> Tuple[List[int], int, ReductionCertificate]:
    """Sets become negated base-(k+2) characteristic numbers; y = k x^{m+1} + sum_{j=0}^{m} x^j."""
    if k < 1:
        raise ValueError("k must be at least 1")
    m, x = sys.universe, k + 2
    numbers = [-(x ** (m + 1) + sum(x ** j for j in sorted(cset))) for cset in sys.sets]
    y = k * x ** (m + 1) + sum(x ** j for j in range(m + 1))
    cert = ReductionCertificate("at-most-k-sum", "exact cover to at-most-k-sum with repetitions and target 1",
                                sys.describe(), k, k + 1,
                                "exact cover by k sets exists iff at most k+1 numbers (with repetition) sum to 1")
    return _dedup(numbers + [y]), k + 1, cert


def set_system_classes(universe: int, max_sets: int) -> Iterator[SetSystem]:
    """One system of distinct nonempty sets per class under relabelling the universe, up to max_sets sets.

    Grown a set at a time from the previous representatives; sets are bitmasks, bit i for element i + 1.
    """
    relabel = [[sum(1 << perm[i] for i in range(universe) if mask >> i & 1) for mask in range(1 << universe)]
               for perm in itertools.permutations(range(universe))]
    level = [()]
    for _ in range(max_sets):
        grown = {}
        for chosen in level:
            for mask in range(1, 1 << universe):
                if mask in chosen:
                    continue
                candidate = chosen + (mask,)
                key = min(tuple(sorted(table[x] for x in candidate)) for table in relabel)
                grown.setdefault(key, candidate)
        level = list(grown.values())
        for chosen in level:
            yield SetSystem.of(universe, [[i + 1 for i in range(universe) if mask >> i & 1] for mask in chosen])


def random_set_system(rng: random.Random, universe: int, count: int) -> SetSystem:
    sets = []
    for _ in range(count):
        members = [u for u in range(1, universe + 1) if rng.random() < 0.4]
        sets.append(members or [rng.randint(1, universe)])
    return SetSystem.of(universe, sets)


class _ExactCoverSource(Reduction):
    def load_source(self, path: str) -> SetSystem:
        return parse_set_system(read_json(path))

    def small_sources(self, max_size: int):
        bound = min(max_size, 5)
        for universe in range(1, bound + 1):
            for sys in set_system_classes(universe, bound):
                for k in range(1, min(max_size, 3) + 1):
                    yield sys, k

    def random_source(self, rng: random.Random, max_size: int):
        universe = rng.randint(1, min(max_size + 2, 5))
        return random_set_system(rng, universe, rng.randint(1, 5)), rng.randint(1, 3)


class KProductReduction(_ExactCoverSource):
    NAME = "k-product"

    def generate(self, source: SetSystem, k: int, **options) -> Generated:
        values, k_prime, cert = exact_cover_to_k_product(source, k)
        inst = k_product_to_identity_instance(values)
        payload = instance_to_json(inst, k_prime)
        payload["numbers"] = [str(v) for v in values]
        return Generated(values, payload, cert)

    def check(self, source: SetSystem, k: int) -> TrialResult:
        values, k_prime, _ = exact_cover_to_k_product(source, k)
        expected = exact_cover_exists(source, k)
        by_oracle = k_product_target1_exists([v.value for v in values], k_prime)
        by_solver = decide(k_product_to_identity_instance(values), k_prime)
        return TrialResult(self.NAME, self.describe_source(source), k, (expected, expected), (by_oracle, by_solver))


class AtMostKSumReduction(_ExactCoverSource):
    NAME = "at-most-k-sum"

    def generate(self, source: SetSystem, k: int, **options) -> Generated:
        numbers, k_prime, cert = exact_cover_to_at_most_k_sum(source, k)
        return Generated(numbers, {"kind": "at_most_k_sum", "numbers": numbers, "k": k_prime}, cert)

    def check(self, source: SetSystem, k: int) -> TrialResult:
        numbers, k_prime, _ = exact_cover_to_at_most_k_sum(source, k)
        expected = exact_cover_exists(source, k)
        observed = at_most_k_sum_target1_exists(numbers, k_prime)
        return TrialResult(self.NAME, self.describe_source(source), k, expected, observed)
