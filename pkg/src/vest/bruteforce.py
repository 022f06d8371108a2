# src/vest/bruteforce.py
import logging
from typing import List, Optional, Sequence

from src.config.config import DEFAULT_BUDGET
from src.errors import BudgetExceeded
from src.linalg.matrix import Matrix, apply, mat_mul
from src.utils.partition import run_partitioned
from src.vest.instance import TargetVariant, VestInstance

logger = logging.getLogger(__name__)


def _check_budget(inst: VestInstance, k: int, budget: int):
    needed = inst.m ** k
    if needed > budget:
        logger.warning(f"Brute force over {inst.m}^{k} sequences exceeds the budget of {budget}.")
        raise BudgetExceeded(needed, budget, what=f"brute force at k={k}")


def _start_state(inst: VestInstance):
    if inst.target is TargetVariant.VECTOR_ZERO:
        return inst.v
    return Matrix.identity(inst.tag, inst.d)


def _step(inst: VestInstance, state, i: int):
    # the next transform multiplies from the left: T_{i_j} (T_{i_{j-1}} ... T_{i_1} v)
    if inst.target is TargetVariant.VECTOR_ZERO:
        return apply(inst.transforms[i], state)
    return mat_mul(inst.transforms[i], state)


def _accepted(inst: VestInstance, state) -> bool:
    if inst.target is TargetVariant.VECTOR_ZERO:
        return inst.accepts_vector(state)
    return inst.accepts(state)


def _count_from(inst: VestInstance, state, remaining: int) -> int:
    if remaining == 0:
        return 1 if _accepted(inst, state) else 0
    return sum(_count_from(inst, _step(inst, state, i), remaining - 1) for i in range(inst.m))


def _witness_from(inst: VestInstance, state, remaining: int, prefix: List[int]) -> Optional[List[int]]:
    if remaining == 0:
        return prefix if _accepted(inst, state) else None
    for i in range(inst.m):
        found = _witness_from(inst, _step(inst, state, i), remaining - 1, prefix + [i])
        if found is not None:
            return found
    return None


def mk_bruteforce(inst: VestInstance, k: int, budget: int = DEFAULT_BUDGET, threads: int = 1) -> int:
    """M_k by walking all m^k index sequences in lexicographic order of (i_1, ..., i_k)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 1 if inst.empty_product_accepted() else 0
    _check_budget(inst, k, budget)
    start = _start_state(inst)

    def count_block(first_indices: Sequence[int]) -> int:
        return sum(_count_from(inst, _step(inst, start, i), k - 1) for i in first_indices)

    # partial counts come back in index order and are added, same as the sequential walk
    total = sum(run_partitioned(list(range(inst.m)), count_block, threads))
    logger.debug(f"Brute force M_{k} = {total} over {inst.m ** k} sequences.")
    return total


def find_witness(inst: VestInstance, k: int, budget: int = DEFAULT_BUDGET) -> Optional[List[int]]:
    """First accepted sequence (0-based indices) in lexicographic order, or None."""
    if k == 0:
        return [] if inst.empty_product_accepted() else None
    _check_budget(inst, k, budget)
    return _witness_from(inst, _start_state(inst), k, [])


def decide(inst: VestInstance, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    return find_witness(inst, k, budget) is not None


def exists_up_to(inst: VestInstance, kmax: int, budget: int = DEFAULT_BUDGET) -> Optional[int]:
    """Smallest 1 <= k <= kmax with M_k > 0, or None. The empty product is never a witness here.

    Walks the exact set of values reachable after k steps (vectors T...T v for vector_zero, products for
    the matrix targets), level by level. Sequences reaching the same value are merged, so long bounds
    stay cheap over finite fields; the work is still charged against the budget.
    """
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    level = {_start_state(inst)}
    spent = 0
    for k in range(1, kmax + 1):
        spent += len(level) * inst.m
        if spent > budget:
            raise BudgetExceeded(spent, budget, what=f"bounded search at k={k}")
        level = {_step(inst, state, i) for state in level for i in range(inst.m)}
        if any(_accepted(inst, state) for state in level):
            return k
        if not level:
            break
    return None
