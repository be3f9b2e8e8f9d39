"""
Parametric channels with a known transform whose progression code beats efficiency 1.
"""
from itertools import combinations
from math import gcd
from typing import Sequence, Tuple

from src.errors import NotCoprime
from src.schemas import ChannelMatrix, EquivalenceTransform


def _require_pairwise_coprime(values: Sequence[int]) -> None:
    for x, y in combinations(values, 2):
        if gcd(x, y) != 1:
            raise NotCoprime(f"parameters {tuple(values)} are not pairwise coprime: gcd({x}, {y}) = {gcd(x, y)}")


def pairwise_coprime_family(a: int, b: int, c: int) -> Tuple[ChannelMatrix, EquivalenceTransform]:
    """
    H = [[1,a,b],[a,1,c],[b,c,1]] with r = (c, b, a).
    The unit-step code on H * D(r) has s = (ab, ac, bc).
    """
    if min(a, b, c) < 2:
        raise ValueError("parameters must be at least 2")
    _require_pairwise_coprime((a, b, c))
    H = ChannelMatrix(entries=[[1, a, b], [a, 1, c], [b, c, 1]])
    return H, EquivalenceTransform(r=[c, b, a], d=[1, 1, 1])


def six_parameter_family(a1: int, a2: int, a3: int, a4: int, a5: int, a6: int) -> Tuple[ChannelMatrix, EquivalenceTransform]:
    """
    H = [[1,a1,a2],[a3,1,a4],[a5,a6,1]] with r = (a4 a6, a2 a5, a1 a3).
    The unit-step code on H * D(r) has s = (a1 a2, a3 a4, a5 a6).
    """
    params = (a1, a2, a3, a4, a5, a6)
    if min(params) < 2:
        raise ValueError("parameters must be at least 2")
    _require_pairwise_coprime(params)
    H = ChannelMatrix(entries=[[1, a1, a2], [a3, 1, a4], [a5, a6, 1]])
    return H, EquivalenceTransform(r=[a4 * a6, a2 * a5, a1 * a3], d=[1, 1, 1])
