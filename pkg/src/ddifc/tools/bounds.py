from math import log2
from typing import List

from src.errors import BoundViolation
from src.schemas import Codebook


def sumset_bound(C: Codebook, i: int) -> int:
    """Lower bound on |S_i| from the sizes of the interfering codebooks."""
    others: List[int] = [size for j, size in enumerate(C.sizes) if j != i]
    return sum(others) - C.K + 2


def sum_log_sizes(C: Codebook) -> float:
    return sum(log2(size) for size in C.sizes)


def check_efficiency_bound(efficiency: float, K: int) -> None:
    """
    Decodable scalar codes never reach K/2 for K >= 3; for K = 2 the value 1 is attained
    (a = 1, h = 2), so only values beyond K/2 are rejected.
    """
    if efficiency > K / 2 + 1e-12:
        raise BoundViolation(f"efficiency {efficiency:.6f} exceeds K/2 = {K / 2}")
