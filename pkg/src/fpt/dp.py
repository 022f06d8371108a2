# src/fpt/dp.py
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from src.errors import InfiniteFieldError
from src.linalg.matrix import Matrix, mat_mul
from src.utils.partition import run_partitioned
from src.vest.instance import VestInstance

logger = logging.getLogger(__name__)

TraceFn = Callable[[int, int, int], None]


@dataclass
class DpTable:
    """Level i of the product DP: canonical matrix encoding -> number of length-i sequences with that product.

    Only reachable products are stored, an absent key means a count of 0.
    """
    level: int
    counts: Dict[bytes, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def sorted_keys(self) -> List[bytes]:
        return sorted(self.counts)


class ProductStates:
    """Interns product matrices by their canonical encoding and memoizes right-multiplication by the inputs."""

    def __init__(self, factors: List[Matrix]):
        self.factors = factors
        self.matrices: Dict[bytes, Matrix] = {}
        self._next: Dict[Tuple[bytes, int], bytes] = {}

    def intern(self, m: Matrix) -> bytes:
        key = m.encode()
        self.matrices.setdefault(key, m)
        return key

    def step(self, key: bytes, q: int) -> bytes:
        nxt = self._next.get((key, q))
        if nxt is None:
            nxt = self.intern(mat_mul(self.matrices[key], self.factors[q]))
            self._next[(key, q)] = nxt
        return nxt

    def prepare(self, keys: List[bytes]):
        # fill the transition memo up front so worker threads only read it
        for key in keys:
            for q in range(len(self.factors)):
                self.step(key, q)


def require_finite(inst: VestInstance):
    if not inst.tag.is_finite:
        raise InfiniteFieldError(f"the product DP needs a finite field, got {inst.tag}")


def _advance(states: ProductStates, table: DpTable, threads: int) -> DpTable:
    keys = table.sorted_keys()
    states.prepare(keys)

    def partial(chunk) -> Counter:
        out = Counter()
        for key in chunk:
            count = table.counts[key]
            for q in range(len(states.factors)):
                # a_{X T_q}^{i+1} += a_X^i
                out[states.step(key, q)] += count
        return out

    merged = Counter()
    for part in run_partitioned(keys, partial, threads):
        merged.update(part)
    return DpTable(table.level + 1, dict(merged))


def _report(table: DpTable, trace: Optional[TraceFn]):
    total = table.total
    logger.trace(f"level {table.level}: states={len(table.counts)}, total={total}")
    if trace is not None:
        trace(table.level, len(table.counts), total)


def product_levels(factors: List[Matrix], k: int, start: Optional[Matrix] = None,
                   threads: int = 1, trace: Optional[TraceFn] = None) -> Iterator[Tuple[DpTable, ProductStates]]:
    """Yields the DP tables for levels 1..k (or 0..k when a start matrix is given)."""
    states = ProductStates(factors)
    if start is not None:
        table = DpTable(0, {states.intern(start): 1})
    else:
        table = DpTable(1, dict(Counter(states.intern(f) for f in factors)))
    _report(table, trace)
    yield table, states
    while table.level < k:
        table = _advance(states, table, threads)
        _report(table, trace)
        yield table, states


def dp_tables(inst: VestInstance, k: int, threads: int = 1) -> List[DpTable]:
    require_finite(inst)
    return [table for table, _ in product_levels(list(inst.transforms), k, threads=threads)]


def count_mk_dp(inst: VestInstance, k: int, threads: int = 1, trace: Optional[TraceFn] = None) -> int:
    """M_k as the sum of a_X^k over the products X that meet the target."""
    require_finite(inst)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 1 if inst.empty_product_accepted() else 0
    if inst.m == 0:
        return 0

    last = None
    for last in product_levels(list(inst.transforms), k, threads=threads, trace=trace):
        pass
    table, states = last
    total = 0
    for key in table.sorted_keys():
        if inst.accepts(states.matrices[key]):
            total += table.counts[key]
    logger.debug(f"DP M_{k} = {total} from {len(table.counts)} reachable products.")
    return total
