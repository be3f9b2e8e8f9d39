from math import inf, log2
from typing import NamedTuple, Optional

from src.config import config
from src.errors import InfeasibleDepth
from src.exactmath import next_prime
from src.layered import max_output, transferred_code
from src.schemas import ChannelMatrix, ClassSearchResult, LayeredCode


class DepthChoice(NamedTuple):
    l: int
    code: LayeredCode
    w_tilde: int


class ModulusChoice(NamedTuple):
    q: int
    cond_q_holds: bool
    goodness: bool
    modulus_adjusted: bool


def _fits(w_tilde: int, P: float, Z: float, n: int) -> bool:
    """2 W~ < (P/Z)^(n/2), compared in logs so huge W~ never overflows a float."""
    if Z == 0:
        return True
    return 1 + log2(w_tilde) < (n / 2) * log2(P / Z)


def choose_depth(H: ChannelMatrix, result: ClassSearchResult, P: float, Z: float, n: int,
                 forced: Optional[int] = None) -> DepthChoice:
    """
    Largest number of layers whose largest output keeps 2 W~ below (P/Z)^(n/2) and
    the modulus inside the configured bit budget. A forced depth only has to meet the budget.
    """
    bits = config["max_modulus_bits"]
    depths = [forced] if forced is not None else range(1, config["max_depth"] + 1)

    chosen = None
    for l in depths:
        code = transferred_code(result, l)
        w_tilde = max_output(H, code)
        if w_tilde.bit_length() >= bits:
            break
        if forced is None and not _fits(w_tilde, P, Z, n):
            break
        chosen = DepthChoice(l=l, code=code, w_tilde=w_tilde)

    if chosen is None:
        snr = inf if Z == 0 else P / Z
        raise InfeasibleDepth(f"no layer count fits P/Z={snr:.4g} at n={n} within {bits}-bit moduli")
    return chosen


def choose_modulus(choice: DepthChoice, P: float, Z: float, n: int) -> ModulusChoice:
    """
    Smallest prime above W~. W~ is the true largest output plus one, so every digit
    sum u_i stays below q; `modulus_adjusted` marks codes whose outputs pass W^l.
    """
    w_tilde = choice.w_tilde
    q = next_prime(max(w_tilde, 2))
    goodness = True if Z == 0 else (2 / n) * log2(q) <= log2(P / Z)
    return ModulusChoice(
        q=q,
        cond_q_holds=w_tilde < q < 2 * w_tilde,
        goodness=goodness,
        modulus_adjusted=w_tilde > choice.code.bin_size ** choice.l,
    )
