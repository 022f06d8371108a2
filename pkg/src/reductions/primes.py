# src/reductions/primes.py
import logging
from typing import List

logger = logging.getLogger(__name__)


def sieve_primes(n: int) -> List[int]:
    """The first n primes, ascending. Sieves up to max(4, n^2), which holds them since p_n <= n^2 for n >= 2."""
    if n < 1:
        return []
    limit = max(4, n * n)
    is_composite = bytearray(limit + 1)
    primes = []
    for candidate in range(2, limit + 1):
        if is_composite[candidate]:
            continue
        primes.append(candidate)
        if len(primes) == n:
            break
        is_composite[candidate * candidate::candidate] = b"\x01" * len(range(candidate * candidate, limit + 1, candidate))
    logger.trace(f"Sieved {len(primes)} primes up to {limit}.")
    return primes
