# src/reductions/dominating_set.py
import itertools
import logging
import random
from math import factorial
from typing import Iterator, Tuple

from src.arith.field import FieldTag
from src.linalg.matrix import Matrix, Vector
from src.oracles import count_dominating_sets
from src.problems import Graph, parse_edge_list
from src.reductions.interface import Generated, Reduction, ReductionCertificate, TrialResult
from src.vest.bruteforce import decide, mk_bruteforce
from src.vest.codec import instance_to_json
from src.vest.instance import TargetVariant, VestInstance

logger = logging.getLogger(__name__)

COUNTING = "counting"
DECISION = "decision"

# per vertex u the coordinates u_1..u_4 sit at 4u..4u+3
U1, U2, U3, U4 = range(4)
VERTEX_BLOCK = [[0, 0, 0, 0],
                [0, 0, 1, 0],
                [0, 0, 0, 1],
                [0, 0, 0, 1]]


def _counting_transform(g: Graph, u: int, tag: FieldTag) -> Matrix:
    d = 4 * g.n
    rows = [[0] * d for _ in range(d)]
    for i in range(d):
        rows[i][i] = 1
    for w in g.closed_neighborhood(u):
        rows[4 * w + U1][4 * w + U1] = 0  # u dominates w
    base = 4 * u
    for i in range(4):
        for j in range(4):
            rows[base + i][base + j] = VERTEX_BLOCK[i][j]
    return Matrix.from_rows(tag, rows)


def _counting_instance(g: Graph, tag: FieldTag) -> VestInstance:
    d = 4 * g.n
    v = [0] * d
    s_diag = [0] * d
    for u in range(g.n):
        v[4 * u + U1] = 1
        v[4 * u + U4] = 1
        s_diag[4 * u + U1] = 1
        s_diag[4 * u + U2] = 1
    transforms = tuple(_counting_transform(g, u, tag) for u in range(g.n))
    return VestInstance(tag, d, transforms, Matrix.diagonal(tag, s_diag), Vector.of(tag, v),
                        TargetVariant.VECTOR_ZERO)


def _decision_instance(g: Graph, tag: FieldTag) -> VestInstance:
    transforms = []
    for u in range(g.n):
        nbrs = g.closed_neighborhood(u)
        transforms.append(Matrix.diagonal(tag, [0 if w in nbrs else 1 for w in range(g.n)]))
    return VestInstance(tag, g.n, tuple(transforms), Matrix.identity(tag, g.n), Vector.of(tag, [1] * g.n),
                        TargetVariant.VECTOR_ZERO)


def dominating_set_to_vest(g: Graph, k: int, style: str = COUNTING,
                           tag: FieldTag = FieldTag.rational()) -> Tuple[VestInstance, ReductionCertificate]:
    """One transform per vertex. Counting style gives M_k = k! D_k, decision style only M_k > 0 iff D_k > 0."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if tag.is_finite and tag.p != 2:
        logger.info(f"Dominating-set gadget built over {tag}; it only needs 0/1 entries.")
    if style == COUNTING:
        inst = _counting_instance(g, tag)
        claim = "M_k = k! * D_k (D_k = number of dominating sets of size k)"
    elif style == DECISION:
        inst = _decision_instance(g, tag)
        claim = "M_k > 0 iff a dominating set of size k exists"
    else:
        raise ValueError(f"unknown style {style!r}")
    cert = ReductionCertificate("dominating-set", f"dominating set to VEST ({style} gadget)", g.describe(),
                                k, k, claim)
    return inst, cert


def all_graphs(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.of(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def random_graph(rng: random.Random, n: int, density: float = 0.5) -> Graph:
    return Graph.of(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < density])


class DominatingSetReduction(Reduction):
    NAME = "dominating-set"

    def load_source(self, path: str) -> Graph:
        with open(path, 'r', encoding='utf-8') as f:
            return parse_edge_list(f.read())

    def generate(self, source: Graph, k: int, style: str = COUNTING, field: FieldTag = FieldTag.rational(),
                 **options) -> Generated:
        inst, cert = dominating_set_to_vest(source, k, style, field)
        return Generated(inst, instance_to_json(inst, k), cert)

    def small_sources(self, max_size: int):
        for n in range(1, min(max_size, 4) + 1):
            for g in all_graphs(n):
                for k in range(1, min(n, 3) + 1):
                    yield g, k

    def random_source(self, rng: random.Random, max_size: int):
        n = rng.randint(1, min(max_size + 2, 6))
        return random_graph(rng, n, rng.choice([0.3, 0.5, 0.8])), rng.randint(1, min(n, 3))

    def check(self, source: Graph, k: int) -> TrialResult:
        d_k = count_dominating_sets(source, k)
        counting, _ = dominating_set_to_vest(source, k, COUNTING, FieldTag.rational())
        decision, _ = dominating_set_to_vest(source, k, DECISION, FieldTag.prime(2))
        expected = (factorial(k) * d_k, d_k > 0)
        observed = (mk_bruteforce(counting, k), decide(decision, k))
        return TrialResult(self.NAME, self.describe_source(source), k, expected, observed)
