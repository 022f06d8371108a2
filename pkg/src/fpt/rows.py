# src/fpt/rows.py
import logging
from typing import Callable, List, Optional, Tuple

from src.errors import ShapeError
from src.fpt.dp import TraceFn, product_levels, require_finite
from src.linalg.matrix import Matrix, Vector, apply, mat_mul
from src.linalg.rowrestricted import RowRestrictedMatrix, nonzero_row_bound
from src.vest.instance import TargetVariant, VestInstance

logger = logging.getLogger(__name__)


def restrict(inst: VestInstance, p: int) -> List[RowRestrictedMatrix]:
    if not 0 <= p <= inst.d:
        raise ShapeError(f"p must lie in [0, {inst.d}], got {p}")
    return [RowRestrictedMatrix.from_matrix(t, p) for t in inst.transforms]


def smallest_row_bound(inst: VestInstance) -> int:
    return max((nonzero_row_bound(t) for t in inst.transforms), default=0)


def final_step_test(inst: VestInstance, blocks: List[RowRestrictedMatrix]) -> Callable[[Matrix, int], bool]:
    """Returns accept(X, j): does (X A_j)|(X B_j) meet the target?"""
    p = blocks[0].p if blocks else 0
    if inst.target is TargetVariant.VECTOR_ZERO:
        # S (X A_j | X B_j) v = S[:, :p] X w_j with w_j the top p entries of T_j v
        s = inst.effective_s
        s_left = Matrix(inst.tag, s.rows, p, tuple(x for i in range(s.rows) for x in s.row(i)[:p]))
        ws = []
        for block in blocks:
            top = apply(block.embed(), inst.v).entries[:p]
            ws.append(Vector(inst.tag, top))

        def accept(x: Matrix, j: int) -> bool:
            return apply(s_left, apply(x, ws[j])).is_zero()
        return accept

    def accept(x: Matrix, j: int) -> bool:
        full = RowRestrictedMatrix(inst.tag, inst.d, p, mat_mul(x, blocks[j].a), mat_mul(x, blocks[j].b))
        return inst.accepts(full.embed())
    return accept


def count_mk_dp_rows(inst: VestInstance, p: int, k: int, threads: int = 1,
                     trace: Optional[TraceFn] = None) -> int:
    """M_k when every transform is zero below row p; the DP runs over p x p products of the A blocks only."""
    require_finite(inst)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 1 if inst.empty_product_accepted() else 0
    blocks = restrict(inst, p)
    if not blocks:
        return 0
    accept = final_step_test(inst, blocks)

    last = None
    for last in product_levels([b.a for b in blocks], k - 1, start=Matrix.identity(inst.tag, p),
                               threads=threads, trace=trace):
        pass
    table, states = last

    b = [0] * len(blocks)
    for key in table.sorted_keys():
        x = states.matrices[key]
        for j in range(len(blocks)):
            if accept(x, j):
                b[j] += table.counts[key]
    logger.debug(f"Row-restricted DP (p={p}) M_{k} = {sum(b)}, per last transform {b}.")
    return sum(b)
