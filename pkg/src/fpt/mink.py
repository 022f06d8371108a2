# src/fpt/mink.py
import logging
from dataclasses import dataclass
from typing import Callable, Optional, Set

from src.fpt.dp import ProductStates, require_finite
from src.fpt.rows import final_step_test, restrict
from src.linalg.matrix import Matrix
from src.vest.instance import VestInstance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinKResult:
    k: Optional[int]
    levels: int  # DP levels materialized before the answer was known
    bound: int  # |F|^{p^2}, the most levels the search can ever take


def _search(states: ProductStates, frontier: Set[bytes], first_level: int, good: Callable[[bytes], bool],
            offset: int, bound: int) -> MinKResult:
    """Breadth-first over products, each value visited once.

    A value that shows up again at a later level cannot produce anything new, so when a level adds no
    unseen value no later level will either and the answer is none.
    """
    seen = set(frontier)
    level = first_level
    while True:
        logger.trace(f"min-k level {level}: {len(frontier)} new values, {len(seen)} seen")
        if any(good(key) for key in sorted(frontier)):
            return MinKResult(level + offset, level - first_level + 1, bound)
        fresh = set()
        for key in sorted(frontier):
            for q in range(len(states.factors)):
                nxt = states.step(key, q)
                if nxt not in seen:
                    fresh.add(nxt)
        if not fresh:
            logger.debug(f"No new product value at level {level + 1}, no k exists.")
            return MinKResult(None, level - first_level + 2, bound)
        seen |= fresh
        frontier = fresh
        level += 1


def search_min_k(inst: VestInstance, p_rows: Optional[int] = None) -> MinKResult:
    """Smallest k >= 1 with M_k > 0, or None when no length works."""
    require_finite(inst)
    if inst.m == 0:
        return MinKResult(None, 0, 1)
    q = inst.tag.size

    if p_rows is None:
        states = ProductStates(list(inst.transforms))
        frontier = {states.intern(t) for t in inst.transforms}
        return _search(states, frontier, 1, lambda key: inst.accepts(states.matrices[key]),
                       offset=0, bound=q ** (inst.d * inst.d))

    blocks = restrict(inst, p_rows)
    accept = final_step_test(inst, blocks)
    states = ProductStates([b.a for b in blocks])
    frontier = {states.intern(Matrix.identity(inst.tag, p_rows))}

    def good(key: bytes) -> bool:
        x = states.matrices[key]
        return any(accept(x, j) for j in range(len(blocks)))

    # a product of A blocks of length i plus one last transform gives a sequence of length i + 1
    return _search(states, frontier, 0, good, offset=1, bound=q ** (p_rows * p_rows))


def min_k(inst: VestInstance, p_rows: Optional[int] = None) -> Optional[int]:
    return search_min_k(inst, p_rows).k
