from math import log2, prod
from typing import Sequence

from src.exactmath import gcd_all
from src.schemas import ChannelMatrix, RowGcdProfile


def row_gcd_profile(H: ChannelMatrix) -> RowGcdProfile:
    """Per-row gcds that fix the progression lengths of the unit-step code."""
    g, g_hat, s = [], [], []
    for i in range(H.K):
        full = gcd_all(H.row(i))
        off = gcd_all(H.off_diagonal(i))
        g.append(full)
        g_hat.append(off)
        s.append(off // full)
    return RowGcdProfile(g=g, g_hat=g_hat, s=s)


def ap_w_max(H: ChannelMatrix, s: Sequence[int]) -> int:
    """Closed-form W_max of the unit-step code with lengths s."""
    return 1 + max(sum(gain * (size - 1) for gain, size in zip(row, s)) for row in H.entries)


def ap_efficiency(H: ChannelMatrix, s: Sequence[int]) -> float:
    """Efficiency of the unit-step code from its closed-form W_max."""
    bits = log2(prod(s))
    return bits / log2(ap_w_max(H, s)) if bits > 0 else 0.0
