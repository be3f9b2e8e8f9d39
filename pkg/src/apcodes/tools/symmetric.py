from math import gcd, log2
from typing import Tuple

from src.errors import NotCoprime
from src.schemas import ChannelMatrix


def symmetric_matrix(K: int, a: int, h: int) -> ChannelMatrix:
    """a on the diagonal, h everywhere else."""
    return ChannelMatrix(entries=[[a if i == j else h for j in range(K)] for i in range(K)])


def symmetric_terms(K: int, a: int, h: int) -> Tuple[int, int]:
    """
    Exact log arguments of the symmetric efficiency: (h^K, W) so that
    efficiency = log2(h^K) / log2(W).
    """
    if K < 2 or h < 2:
        raise ValueError(f"need K >= 2 and h >= 2, got K={K}, h={h}")
    if a < 1:
        raise ValueError(f"diagonal gain must be positive, got {a}")
    if gcd(a, h) != 1:
        raise NotCoprime(f"gcd({a}, {h}) = {gcd(a, h)}")
    return h ** K, h * (a + (K - 1) * (h - 1)) + 1 - a


def symmetric_efficiency(K: int, a: int, h: int) -> float:
    numerator, w = symmetric_terms(K, a, h)
    return log2(numerator) / log2(w)
