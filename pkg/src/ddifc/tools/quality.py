from math import log2

from src.ddifc.tools.bounds import sum_log_sizes
from src.schemas import Codebook


def log_ratio(C: Codebook, W: int) -> float:
    """sum_i log2|C_i| / log2(W); zero for an all-singleton code."""
    bits = sum_log_sizes(C)
    return bits / log2(W) if bits > 0 else 0.0


def is_good_code(C: Codebook, W: int, threshold: float = 1.0) -> bool:
    """A code is good when its layered limit beats time sharing (efficiency 1)."""
    return log_ratio(C, W) > threshold
