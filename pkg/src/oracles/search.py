# src/oracles/search.py
"""Plain exhaustive solvers for the source problems.

Kept deliberately naive and free of the solver and reduction code paths (they only share the
problem records and field tags), so that agreement with them means something.
"""
import logging
from collections import deque
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb, prod
from typing import List, Optional, Sequence

from src.config.config import DEFAULT_BUDGET
from src.errors import BudgetExceeded
from src.problems import Graph, PcpInstance, SetSystem

logger = logging.getLogger(__name__)

ZERO = "zero"
IDENTITY = "identity"


def _spend(needed: int, budget: int, what: str):
    if needed > budget:
        logger.warning(f"Oracle {what} needs {needed} steps, budget is {budget}.")
        raise BudgetExceeded(needed, budget, what=what)


def count_dominating_sets(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> int:
    if not 0 <= k <= g.n:
        return 0
    _spend(comb(g.n, k), budget, "dominating set count")
    adjacency = {u: {u} for u in range(g.n)}
    for u, v in g.edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    everyone = set(range(g.n))
    count = 0
    for chosen in combinations(range(g.n), k):
        covered = set()
        for u in chosen:
            covered |= adjacency[u]
        if covered == everyone:
            count += 1
    return count


def exact_cover_exists(sys: SetSystem, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Some k members of the collection are pairwise disjoint and cover the universe."""
    if k < 0:
        return False
    _spend(comb(len(sys.sets), k), budget, "exact cover search")
    universe = set(range(1, sys.universe + 1))
    for picked in combinations(sys.sets, k):
        if sum(len(s) for s in picked) == len(universe) and set().union(*picked) == universe:
            return True
    return False


def at_most_k_sum_target1_exists(numbers: Sequence, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """At most k picks from numbers, repetition allowed, summing to 1."""
    values = sorted(set(Fraction(x) for x in numbers))
    needed = sum(comb(len(values) + size - 1, size) for size in range(0, k + 1))
    _spend(needed, budget, "at-most-k sum search")
    for size in range(1, k + 1):
        for picks in combinations_with_replacement(values, size):
            if sum(picks) == 1:
                return True
    return False


def k_product_target1_exists(numbers: Sequence, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Exactly k picks from numbers, repetition allowed, multiplying to 1."""
    values = sorted(set(Fraction(x) for x in numbers))
    if k == 0:
        return True
    _spend(comb(len(values) + k - 1, k), budget, "k-product search")
    return any(prod(picks) == 1 for picks in combinations_with_replacement(values, k))


def _multiply(a: List[List], b: List[List], p: Optional[int]) -> List[List]:
    n, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[sum(a[i][t] * b[t][j] for t in range(inner)) for j in range(cols)] for i in range(n)]
    if p is not None:
        out = [[x % p for x in row] for row in out]
    return out


def matrix_product_target_exists(mats: Sequence, k: int, target: str = ZERO,
                                 budget: int = DEFAULT_BUDGET) -> bool:
    """Do some k of the matrices (repetition allowed, any order) multiply to the zero / identity matrix?

    Partial products are deduplicated per length, which is exact: only the value of a prefix matters.
    """
    if not mats:
        return False
    n = mats[0].rows
    p = mats[0].tag.p
    plain = [[list(m.row(i)) for i in range(m.rows)] for m in mats]
    identity = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def hits(x) -> bool:
        if target == ZERO:
            return all(v == 0 for row in x for v in row)
        return x == identity

    if k == 0:
        return hits(identity)
    level = {tuple(map(tuple, identity))}
    spent = 0
    for _ in range(k):
        spent += len(level) * len(plain)
        _spend(spent, budget, "matrix product search")
        level = {tuple(map(tuple, _multiply([list(r) for r in x], m, p))) for x in level for m in plain}
    return any(hits([list(r) for r in x]) for x in level)


def pcp_bounded_search(pcp: PcpInstance, kmax: int, budget: int = DEFAULT_BUDGET) -> Optional[List[int]]:
    """Shortest 1-based index sequence of length <= kmax whose top and bottom concatenations agree.

    Breadth-first over index sequences, compared as strings, so the first hit is a shortest one and
    ties go to the lexicographically smallest sequence.
    """
    queue = deque([((), "", "")])
    spent = 0
    while queue:
        seq, top, bottom = queue.popleft()
        if len(seq) == kmax:
            continue
        for i, (v, w) in enumerate(pcp.pairs, start=1):
            spent += 1
            _spend(spent, budget, "PCP search")
            nseq, ntop, nbottom = seq + (i,), top + v, bottom + w
            if ntop == nbottom:
                return list(nseq)
            queue.append((nseq, ntop, nbottom))
    return None
