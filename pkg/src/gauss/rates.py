from math import floor, inf, log2, sqrt
from typing import List, Sequence

from src.schemas import RealChannelMatrix


def theoretical_sum_rate(P: float, Z: float, eff: float) -> float:
    """Achievable sum rate 1/2 log2(P/Z) times the code efficiency, in bits per channel use."""
    if Z == 0:
        return inf if eff > 0 else 0.0
    return 0.5 * log2(P / Z) * eff


def h_diff(H: RealChannelMatrix) -> List[List[float]]:
    return [[value - floor(value) for value in row] for row in H.entries]


def h_dmax(H: RealChannelMatrix) -> float:
    """Largest row energy of the fractional part H - floor(H)."""
    return max(sum(value ** 2 for value in row) for row in h_diff(H))


def z_add(H: RealChannelMatrix, P: float, Z: float) -> float:
    """Noise budget after floor quantization: P * H_dmax + Z."""
    return P * h_dmax(H) + Z


def normalize_channel(H: Sequence[Sequence[float]], powers: Sequence[float], noises: Sequence[float],
                      P: float, N: float) -> List[List[float]]:
    """
    Equal-power, equal-noise equivalent of a channel with per-user powers and
    per-receiver noise: H(i,j) * sqrt(P / P_j) / sqrt(N_i / N).
    """
    if min(powers) <= 0 or min(noises) <= 0 or P <= 0 or N <= 0:
        raise ValueError("powers and noise variances must be positive")
    K = len(H)
    if len(powers) != K or len(noises) != K:
        raise ValueError("need one power and one noise variance per user")
    return [
        [H[i][j] * sqrt(P / powers[j]) / sqrt(noises[i] / N) for j in range(K)]
        for i in range(K)
    ]
